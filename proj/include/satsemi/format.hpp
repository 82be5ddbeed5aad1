#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satsemi/semigroup.hpp"

namespace satsemi {

  // Everything the command-line tool reports about one semigroup.
  // sat_msg and rank are present only for saturated semigroups.
  struct OutputRecord {
    Element                             frobenius = 0;
    std::vector<Element>                small_elements;
    std::vector<Element>                gaps;
    std::vector<Element>                msg;
    std::optional<std::vector<Element>> sat_msg;
    std::size_t                         genus               = 0;
    Element                             multiplicity        = 0;
    std::size_t                         embedding_dimension = 0;
    std::optional<std::size_t>          rank;

    friend bool operator==(OutputRecord const&, OutputRecord const&) = default;
  };

  OutputRecord make_record(NumericalSemigroup const& s);

  // "⟨8,9,10⟩ | F=7"
  std::string canonical_text(NumericalSemigroup const& s);

  // "0,a,b,…,F+1→ | msg=⟨…⟩ | g=… | rank=…"
  std::string to_text_line(OutputRecord const& r, bool color = false);

  // Minimal object: frobenius, small_elements, msg, genus, multiplicity.
  std::string to_json(NumericalSemigroup const& s);
  // Full record; single line, keys in fixed order.
  std::string to_json(OutputRecord const& r);
  std::string to_json(std::vector<OutputRecord> const& rs);

  std::string csv_header();
  std::string to_csv_row(OutputRecord const& r);

  // Rebuild the semigroup described by a JSON record (only frobenius and
  // small_elements are read).
  NumericalSemigroup semigroup_from_json(std::string const& text);

}  // namespace satsemi
