#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "satsemi/semigroup.hpp"

namespace satsemi::oracle {

  inline constexpr Element max_frobenius = 20;

  // Membership mask of {0, ..., F+1}; everything above F+1 is a member.
  using Mask = std::uint64_t;

  // Every numerical semigroup with Frobenius number F, found by scanning
  // all subsets of {1, ..., F-1}. Throws TooLarge for F > 20.
  std::vector<Mask> brute_force_semigroups(Element frobenius, unsigned jobs = 1);

  // Saturation checked literally in each of the three equivalent forms
  // (definition, a + d_A(a), a + k d_A(a)); throws std::logic_error if they
  // ever disagree.
  bool mask_is_saturated(Element frobenius, Mask members);

  // Sat(F) by exhaustive subset search, canonical order.
  std::vector<NumericalSemigroup> brute_force_sat(Element frobenius, unsigned jobs = 1);

  struct Report {
    Element                  frobenius   = 0;
    std::size_t              brute_count = 0;
    std::size_t              checks      = 0;
    std::vector<std::string> discrepancies;
    double                   seconds = 0.0;

    bool ok() const noexcept {
      return discrepancies.empty();
    }
  };

  // Cross-validate the tree enumeration, genus slices, maximal elements,
  // minimum genus, Sat(F)-closure and minimal systems, and the rank
  // partition against brute_force_sat(F).
  Report check_all(Element frobenius, unsigned jobs = 1);

  std::string to_text(Report const& report);
  std::string to_json(std::vector<Report> const& reports);

}  // namespace satsemi::oracle
