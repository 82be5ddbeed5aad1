#pragma once

#include <vector>

#include "satsemi/semigroup.hpp"

namespace satsemi {

  // T(a, b) = <a> ∪ {b, ->}. Throws NotRepresentable when the result is N
  // (a = 1 or b = 1).
  NumericalSemigroup tooth(Element a, Element b);

  // A(n): the x in {1, ..., n} that do not divide n.
  std::vector<Element> non_divisors(Element n);

  // B(n): the elements of A(n) not divisible by any other element of A(n).
  std::vector<Element> minimal_non_divisors(Element n);

  // Least positive integer that does not divide n.
  Element smallest_non_divisor(Element n);

  // Inclusion-maximal members of Sat(F): T(x, F+1) for x in B(F), or
  // Delta(F+1) alone when B(F) is empty (F = 1, 2).
  std::vector<NumericalSemigroup> maximal_elements(Element frobenius);

  // min { g(S) : S in Sat(F) } = F - floor(F / p), p the least non-divisor.
  Element min_genus(Element frobenius);

}  // namespace satsemi
