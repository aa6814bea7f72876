#pragma once

#include <string>
#include <string_view>

#include "bdg/graph.hpp"

namespace bdg {

/// Text format, LF line endings, '#'-prefixed comment lines ignored:
///
///   bdg 1
///   <a> <b>
///   a rows of b characters '0'/'1'   (row i, column j: arc x_i -> y_j)
///   b rows of a characters '0'/'1'   (row j, column i: arc y_j -> x_i)
///
/// Errors carry the 1-based physical line number.
BipartiteDigraph parse_bdg(std::string_view text);

/// Canonical form: no comments, exactly the lines above, each ending in LF.
std::string serialize_bdg(const BipartiteDigraph& d);

/// Canonical lines joined by '/' instead of LF (results-file form).
std::string to_single_line(const BipartiteDigraph& d);
BipartiteDigraph parse_single_line(std::string_view line);

}  // namespace bdg
