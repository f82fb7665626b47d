#pragma once

#include <optional>
#include <vector>

#include "zzlab/core.hpp"

namespace zzlab {

// Unlabeled multigraph as a symmetric multiplicity matrix; a loop contributes
// 2 on the diagonal, matching the adjacency convention of RotationGraph.
struct Multigraph {
  IntMatrix adj;

  Multigraph() = default;
  explicit Multigraph(IntMatrix m) : adj(std::move(m)) {}

  int size() const { return adj.rows(); }
  static Multigraph from_rotation(const RotationGraph& g) { return Multigraph(g.adjacency_matrix()); }
  static Multigraph induced(const IntMatrix& adj, const std::vector<int>& vertices);
};

struct IsoCertificate {
  std::vector<int> mapping;  // vertex of a -> vertex of b
  bool verified = false;     // re-checked edge by edge, multiplicities included
};

// Colour refinement (degree + multiset of neighbour colours, loop counts in
// the initial colour) followed by individualisation backtracking. All
// tie-breaking is deterministic: smallest non-singleton colour class first,
// lowest vertex index first.
std::optional<IsoCertificate> is_isomorphic(const Multigraph& a, const Multigraph& b);

// n such that g is isomorphic to the double cycle of length n, if any.
std::optional<int> recognize_double_cycle(const Multigraph& g);

}  // namespace zzlab
