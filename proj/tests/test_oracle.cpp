#include <algorithm>
#include <map>
#include <vector>

#include "catch_amalgamated.hpp"

#include "satsemi/errors.hpp"
#include "satsemi/oracle.hpp"
#include "support/brute.hpp"
#include "support/corpus.hpp"

using satsemi::Element;
namespace oracle = satsemi::oracle;

TEST_CASE("brute-force counts of Sat(F)", "[oracle]") {
  // independently recomputed by a separate exhaustive search
  std::map<Element, std::size_t> const frozen{
      {1, 1},  {2, 1},  {3, 2},   {4, 2},   {5, 4},   {6, 3},   {7, 7},   {8, 5},
      {9, 9},  {10, 8}, {11, 16}, {12, 7},  {13, 21}, {14, 14}, {15, 25}, {16, 18},
  };
  for (auto const& [f, count] : frozen) {
    CHECK(oracle::brute_force_sat(f).size() == count);
  }
}

TEST_CASE("numbers of numerical semigroups by Frobenius number", "[oracle]") {
  // OEIS A124506
  std::vector<std::size_t> const known{1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51, 40, 106, 103, 200, 205};
  for (std::size_t i = 0; i < known.size(); ++i) {
    CHECK(oracle::brute_force_semigroups(static_cast<Element>(i + 1)).size() == known[i]);
  }
}

TEST_CASE("mask saturation agrees with the definition", "[oracle][property]") {
  for (Element f = 1; f <= 14; ++f) {
    auto masks = oracle::brute_force_semigroups(f);
    auto all   = corpus::all_with_frobenius(f);
    REQUIRE(masks.size() == all.size());
    for (std::size_t i = 0; i < masks.size(); ++i) {
      CHECK(oracle::mask_is_saturated(f, masks[i]) == brute::is_saturated(all[i]));
    }
  }
}

TEST_CASE("brute-force output is duplicate-free and valid", "[oracle]") {
  for (Element f = 1; f <= 16; ++f) {
    auto sat = oracle::brute_force_sat(f);
    CHECK(std::adjacent_find(sat.begin(), sat.end()) == sat.end());
    for (auto const& s : sat) {
      CHECK(s.frobenius() == f);
      CHECK(satsemi::NumericalSemigroup::from_small_elements(f, s.small_elements()) == s);
    }
  }
}

TEST_CASE("parallel brute force is deterministic", "[oracle]") {
  CHECK(oracle::brute_force_semigroups(15, 3) == oracle::brute_force_semigroups(15, 1));
  CHECK(oracle::brute_force_sat(15, 4) == oracle::brute_force_sat(15, 1));
}

TEST_CASE("oracle size limit", "[oracle]") {
  try {
    oracle::brute_force_semigroups(21);
    FAIL("expected TooLarge");
  } catch (satsemi::Error const& e) {
    CHECK(e.code() == satsemi::ErrorCode::TooLarge);
  }
}

TEST_CASE("check_all finds no discrepancies", "[oracle]") {
  for (Element f : {1, 2, 7, 12, 16}) {
    auto report = oracle::check_all(f, 2);
    INFO(oracle::to_text(report));
    CHECK(report.ok());
    CHECK(report.checks > 0);
    CHECK(report.brute_count == oracle::brute_force_sat(f).size());
  }
  auto text = oracle::to_text(oracle::check_all(7));
  CHECK(text.rfind("F=7 sat=7 ", 0) == 0);
  CHECK(text.find("ok") != std::string::npos);
}
