#pragma once

#include <string>
#include <string_view>

#include "mced/edits.hpp"
#include "mced/graph.hpp"

namespace mced {

/// Parses the edge-list format: a header line "n m" followed by m lines
/// "u v". Blank lines and lines starting with '#' are skipped. Throws
/// ParseError naming the offending line.
Graph parse_graph(std::string_view text);

/// Canonical form: "n m" then one "u v" line per edge, u < v, sorted.
std::string serialize_graph(const Graph &g);

/// One edit per line, "+ u v" or "- u v"; '#' comments allowed.
EditSet parse_edit_set(std::string_view text);

std::string serialize_edit_set(const EditSet &f);

} // namespace mced
