#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "zzlab/error.hpp"
#include "zzlab/matrix.hpp"

namespace zzlab {

// A dart is a half-edge: a vertex together with the port label the edge
// carries next to that vertex. Vertices are 0-based, ports 1-based.
struct Dart {
  int vertex = 0;
  int port = 1;

  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

using DartPair = std::pair<Dart, Dart>;

// d-regular bi-labelled multigraph encoded by its rotation map: a
// fixed-point-free involution on the darts. Immutable after construction,
// so values can be freely shared across threads.
class RotationGraph {
 public:
  // Validates totality, involution and fixed-point-freeness; every dart must
  // appear in exactly one pair.
  static RotationGraph build(int degree, std::vector<std::string> vertex_names,
                             const std::vector<DartPair>& pairs);

  int degree() const { return degree_; }
  int vertex_count() const { return static_cast<int>(names_.size()); }
  int dart_count() const { return static_cast<int>(rot_.size()); }

  const std::string& vertex_name(int v) const { return names_[v]; }
  const std::vector<std::string>& vertex_names() const { return names_; }

  int dart_id(Dart d) const { return d.vertex * degree_ + (d.port - 1); }
  Dart dart(int id) const { return {id / degree_, id % degree_ + 1}; }

  Dart rot(Dart d) const { return dart(rot_[dart_id(d)]); }
  int rot_id(int id) const { return rot_[id]; }

  // Every unordered dart pair exactly once, ordered by the smaller dart id.
  std::vector<DartPair> dart_pairs() const;

  // Symmetric, constant row sum = degree; a loop adds 2 on the diagonal.
  IntMatrix adjacency_matrix() const;

  // Partition of the vertex indices; parts sorted, listed by smallest member.
  std::vector<std::vector<int>> connected_components() const;
  bool is_connected() const;

  // Sorted multiset of the opposite endpoints of v's darts.
  std::vector<int> neighbors(int v) const;

 private:
  RotationGraph() = default;

  int degree_ = 0;
  std::vector<std::string> names_;
  std::vector<int> rot_;  // dart id -> partner dart id
};

}  // namespace zzlab
