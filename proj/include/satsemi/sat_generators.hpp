#pragma once

#include <span>
#include <vector>

#include "satsemi/semigroup.hpp"

namespace satsemi {

  // A subset of {1, ..., F-1} contained in some member of Sat(F).
  struct SatFSet {
    Element              frobenius = 0;
    std::vector<Element> elements;  // strictly ascending

    friend bool operator==(SatFSet const&, SatFSet const&) = default;
  };

  // X ⊆ {1, ..., F-1} and (X empty or gcd(X) does not divide F). If gcd(X)
  // divides F, any saturated S ⊇ X with conductor F+1 reaches F from max X
  // in steps of d_S(max X), which divides gcd(X).
  bool is_sat_set(Element frobenius, std::span<Element const> xs);

  // Sat(F)[X], the least member of Sat(F) containing X, assembled from
  // arithmetic progressions: with n_1 < ... < n_p and d_i = gcd(n_1..n_i),
  // the members below F are n_j, n_j + d_j, ... up to (not reaching)
  // n_{j+1}, and for j = p up to (not reaching) F. Throws NotASatFSet.
  NumericalSemigroup closure(Element frobenius, std::span<Element const> xs);

  // The unique minimal Sat(F)-system of generators: positive members x < F
  // at which d_S jumps. Throws NotSaturated.
  SatFSet minimal_system(NumericalSemigroup const& s);
  // Same, additionally requiring F(S) = frobenius (WrongFrobenius).
  SatFSet minimal_system(Element frobenius, NumericalSemigroup const& s);

  // For a Sat(F)-set X: X is the minimal system of Sat(F)[X] iff the
  // prefix gcds strictly decrease. The empty set is the minimal system of
  // Delta(F+1). Throws NotASatFSet.
  bool is_minimal_system(Element frobenius, std::span<Element const> xs);

  std::size_t rank(NumericalSemigroup const& s);

}  // namespace satsemi
