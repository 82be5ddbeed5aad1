#include "satsemi/sat_generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace satsemi {

  namespace {

    std::vector<Element> normalized(std::span<Element const> xs) {
      std::vector<Element> result(xs.begin(), xs.end());
      std::sort(result.begin(), result.end());
      result.erase(std::unique(result.begin(), result.end()), result.end());
      return result;
    }

    std::vector<Element> checked(Element frobenius, std::span<Element const> xs) {
      if (!is_sat_set(frobenius, xs)) {
        throw Error(ErrorCode::NotASatFSet,
                    "the set is not a Sat(" + std::to_string(frobenius) + ")-set");
      }
      return normalized(xs);
    }

  }  // namespace

  bool is_sat_set(Element frobenius, std::span<Element const> xs) {
    if (frobenius < 1) {
      return false;
    }
    for (auto x : xs) {
      if (x <= 0 || x >= frobenius) {
        return false;
      }
    }
    return xs.empty() || frobenius % gcd(xs) != 0;
  }

  NumericalSemigroup closure(Element frobenius, std::span<Element const> xs) {
    auto const           n = checked(frobenius, xs);
    std::vector<Element> small;
    Element              d = 0;
    for (std::size_t j = 0; j < n.size(); ++j) {
      d                  = std::gcd(d, n[j]);
      Element const next = j + 1 < n.size() ? n[j + 1] : frobenius;
      for (Element x = n[j]; x < next; x += d) {
        small.push_back(x);
      }
    }
    return NumericalSemigroup::from_small_elements(frobenius, small);
  }

  SatFSet minimal_system(NumericalSemigroup const& s) {
    if (!is_saturated(s)) {
      throw Error(ErrorCode::NotSaturated, "minimal Sat(F)-systems need a saturated semigroup");
    }
    SatFSet result{s.frobenius(), {}};
    Element d = 0;
    for (auto x : s.small_elements()) {
      auto next = std::gcd(d, x);
      if (next != d) {
        result.elements.push_back(x);
      }
      d = next;
    }
    return result;
  }

  SatFSet minimal_system(Element frobenius, NumericalSemigroup const& s) {
    if (s.frobenius() != frobenius) {
      throw Error(ErrorCode::WrongFrobenius,
                  "expected Frobenius number " + std::to_string(frobenius) + ", found "
                      + std::to_string(s.frobenius()));
    }
    return minimal_system(s);
  }

  bool is_minimal_system(Element frobenius, std::span<Element const> xs) {
    auto const n = checked(frobenius, xs);
    Element    d = 0;
    for (auto x : n) {
      auto next = std::gcd(d, x);
      if (next == d) {
        return false;
      }
      d = next;
    }
    return true;
  }

  std::size_t rank(NumericalSemigroup const& s) {
    return minimal_system(s).elements.size();
  }

}  // namespace satsemi
