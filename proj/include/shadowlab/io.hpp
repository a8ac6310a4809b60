#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "shadowlab/family.hpp"

namespace shadowlab {

// Family text format: one set per line, elements in ascending base-10
// separated by single spaces. Lines starting with '#' and blank lines are
// skipped. Throws ParseError (with the 1-based line number) on malformed
// lines, unsorted or out-of-range elements, and mixed cardinalities.
//
// An input with no sets yields an empty family with k = expected_k
// (or 0 when not given).
Family parse_family(std::istream& in, std::optional<int> expected_k = std::nullopt);
Family read_family_file(const std::string& path, std::optional<int> expected_k = std::nullopt);

void write_family(std::ostream& out, const Family& f);

}  // namespace shadowlab
