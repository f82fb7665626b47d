#pragma once

#include <iosfwd>
#include <string>

#include "zzlab/core.hpp"

namespace zzlab {

// "rotgraph-v1" JSON: {"format","degree","vertices","rot"} with each
// unordered dart pair listed exactly once as [v,h,w,k] (0-based vertex,
// 1-based port). The writer is canonical: sorted keys, pairs ordered by the
// smaller dart, no floats; writing a loaded graph reproduces the bytes.
std::string to_rotgraph_json(const RotationGraph& g);
RotationGraph from_rotgraph_json(const std::string& text);

void write_rotgraph(std::ostream& out, const RotationGraph& g);
RotationGraph read_rotgraph(std::istream& in);

// Undirected DOT with quoted vertex names; each edge labelled "h:k" with the
// port labels at its two endpoints.
std::string to_dot(const RotationGraph& g);

}  // namespace zzlab
