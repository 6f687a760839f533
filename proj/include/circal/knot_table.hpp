#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circal/decomposition.hpp"

namespace circal {

// Catalogued knot invariants: minimal Seifert genus, fiberedness and,
// when known, the handle number.
struct KnotRecord {
  std::string name;
  int genus = 0;
  bool fibered = false;
  std::optional<int> handle_number;

  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

// CSV with header "name,genus,fibered,handle_number"; '#' comment lines and
// blank lines are skipped; the handle_number field may be empty. Duplicate
// names, negative genus, and fibered records with a nonzero handle number
// are rejected with the offending line number.
std::vector<KnotRecord> parse_knot_table(std::string_view csv);

// The circular decomposition the invariants determine: the fibered form on
// a genus-g Seifert surface, or for a handle-number-one knot the one-stage
// form with thick genus one above thin genus. Anything else is unsupported.
CircularDecomposition canonical_decomposition(const KnotRecord& record);

}  // namespace circal
