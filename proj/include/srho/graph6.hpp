#pragma once

#include <string>
#include <string_view>

#include "srho/graph.hpp"

namespace srho {

/// graph6 encoding (short form for n <= 62, '~' long forms above). No header.
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing whitespace.
/// Throws ParseError on malformed input.
Graph from_graph6(std::string_view text);

}  // namespace srho
