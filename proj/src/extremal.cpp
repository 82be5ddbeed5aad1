#include "satsemi/extremal.hpp"

#include <algorithm>
#include <string>

namespace satsemi {

  NumericalSemigroup tooth(Element a, Element b) {
    if (a < 1 || b < 1) {
      throw Error(ErrorCode::OutOfRange, "T(a, b) needs positive a and b");
    }
    if (a == 1 || b == 1) {
      throw Error(ErrorCode::NotRepresentable,
                  "T(" + std::to_string(a) + ", " + std::to_string(b) + ") is N");
    }
    // b - 1 and b - 2 cannot both be multiples of a >= 2
    Element const        frobenius = (b - 1) % a != 0 ? b - 1 : b - 2;
    std::vector<Element> small;
    for (Element x = a; x < frobenius; x += a) {
      small.push_back(x);
    }
    return NumericalSemigroup::from_small_elements(frobenius, small);
  }

  std::vector<Element> non_divisors(Element n) {
    std::vector<Element> result;
    for (Element x = 1; x <= n; ++x) {
      if (n % x != 0) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::vector<Element> minimal_non_divisors(Element n) {
    auto const           a = non_divisors(n);
    std::vector<Element> result;
    for (auto x : a) {
      bool minimal = std::none_of(
          a.begin(), a.end(), [x](Element y) { return y != x && x % y == 0; });
      if (minimal) {
        result.push_back(x);
      }
    }
    return result;
  }

  Element smallest_non_divisor(Element n) {
    Element p = 2;
    while (n % p == 0) {
      ++p;
    }
    return p;
  }

  std::vector<NumericalSemigroup> maximal_elements(Element frobenius) {
    if (frobenius < 1) {
      throw Error(ErrorCode::OutOfRange, "the Frobenius number must be positive");
    }
    std::vector<NumericalSemigroup> result;
    for (auto x : minimal_non_divisors(frobenius)) {
      result.push_back(tooth(x, frobenius + 1));
    }
    if (result.empty()) {
      result.push_back(NumericalSemigroup::ordinary(frobenius));
    }
    return result;
  }

  Element min_genus(Element frobenius) {
    if (frobenius < 1) {
      throw Error(ErrorCode::OutOfRange, "the Frobenius number must be positive");
    }
    return frobenius - frobenius / smallest_non_divisor(frobenius);
  }

}  // namespace satsemi
