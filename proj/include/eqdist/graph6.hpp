#pragma once

#include <string>
#include <string_view>

#include "eqdist/graph.hpp"

namespace eqdist {

/// Decodes one graph6 string. A leading ">>graph6<<" header and a trailing
/// newline are accepted. Throws ParseError with the offending byte offset.
Graph parse_graph6(std::string_view text);

/// graph6 encoding under the graph's own labeling (no canonical relabeling).
std::string encode_graph6(const Graph& g);

}  // namespace eqdist
