#pragma once

#include "satsemi/errors.hpp"
#include "satsemi/extremal.hpp"
#include "satsemi/format.hpp"
#include "satsemi/oracle.hpp"
#include "satsemi/rank_enum.hpp"
#include "satsemi/sat_generators.hpp"
#include "satsemi/sat_tree.hpp"
#include "satsemi/semigroup.hpp"
