#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zzlab/core.hpp"
#include "zzlab/iso.hpp"

namespace zzlab {

// Role of a vertex inside a parity block: reachable with even departure
// labels, odd ones, or both ("odden", full degree in the block).
enum class Parity { Even, Odd, Odden };

const char* parity_name(Parity p);

struct ParityBlock {
  int id = 0;
  std::vector<std::pair<int, Parity>> members;  // sorted by vertex index
  std::vector<int> darts;                       // sorted dart ids of the host graph

  bool contains(int v) const;
  Parity parity_of(int v) const;  // precondition: contains(v)
  int size() const { return static_cast<int>(members.size()); }
  int odden_count() const;
};

struct ParityDecomposition {
  int half_degree = 0;          // d, for a 2d-regular graph
  std::vector<ParityBlock> blocks;
  std::vector<int> dart_block;  // dart id -> block id
};

// Connected components of the parity-state graph on (vertex, parity) states:
// a dart (v,h) with parity(h) = p leads from state (v,p) to (w, parity(k))
// where rot(v,h) = (w,k). A vertex is odden in a block iff both its states
// fall in it. Blocks are listed by smallest contained state, even before odd.
ParityDecomposition parity_decomposition(const RotationGraph& g);

// Certified bijection between the parity blocks of g and the connected
// components of g (z) C_{2d}: the component of a block holds exactly the
// cloud vertices (v,j) with j of the parity opposite to v's departure labels
// (both parities when v is odden).
struct BlockComponentEntry {
  int block_id = 0;
  int component_index = 0;
  std::vector<int> product_vertices;  // sorted product vertex ids
};
struct BlockComponentCorrespondence {
  RotationGraph product;
  std::vector<BlockComponentEntry> entries;
};
BlockComponentCorrespondence block_component_correspondence(const RotationGraph& g);

// The reduced graph standing in for a block: each non-odden vertex becomes a
// d-cycle on its label class (a doubled edge when d = 2), odden vertices
// contribute both cycles, and every block edge becomes a crossing edge.
struct PseudoReplacement {
  std::vector<std::pair<int, int>> vertices;  // (host vertex, port label), sorted
  Multigraph graph;

  int index_of(int v, int label) const;
};
PseudoReplacement pseudo_replacement(const RotationGraph& g, const ParityBlock& block);

// Closed parity-respecting Eulerian circuit through a block of a 4-regular
// graph: consecutive arrival and departure labels share parity, odden
// vertices appear twice, the length is half the block's dart count.
std::vector<int> spanning_path(const RotationGraph& g, const ParityBlock& block);

// Feasibility of a parity-block profile in the complete graph K_{2d+1}:
// p vertices of which i have full degree 2d. Follows the regular-subgraph
// existence argument: for 0 < i <= d a (d-i)-regular graph on 2d+1-i
// vertices must exist; i = 2d+1 (all odden) is feasible; for i = 0 a
// d-regular graph on p vertices must exist.
bool block_profile_feasible(int d, int i, int p);
// The weaker congruence (i-1)(d-1) = 0 mod 2 instead, kept for comparison.
bool block_profile_feasible_stated(int d, int i, int p);

// Element of the dihedral group D_d acting on one of the two label-class
// cycles; positions are 0..d-1 along the cycle 1,3,5,... or 2,4,6,...
struct CycleAutomorphism {
  int shift = 0;
  bool reflect = false;

  int apply_position(int t, int d) const;
  // compose: first inner, then this
  CycleAutomorphism after(const CycleAutomorphism& inner, int d) const;
  friend bool operator==(const CycleAutomorphism&, const CycleAutomorphism&) = default;
};

// Assignment for the explicit pseudo-replacement isomorphism: a vertex
// bijection f between two blocks, one cycle automorphism per non-odden
// vertex, a pair (even, odd) per odden vertex, and per-odden swap flags.
struct IsoclassAssignment {
  std::map<int, int> f;
  std::map<int, CycleAutomorphism> g_single;
  std::map<int, std::pair<CycleAutomorphism, CycleAutomorphism>> g_odden;  // (even, odd)
  std::map<int, bool> eps_swap;  // default false
};

struct IsoclassFailure {
  int condition = 0;  // 1: both non-odden, 2: mixed, 3: both odden
  Dart dart;
};

struct IsoclassResult {
  bool ok = false;
  // R-vertex (v,label) of the first block -> R-vertex of the second.
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> mapping;
  IsoclassFailure failure;  // meaningful when !ok
};

// Checks the three compatibility conditions on every block dart and, on
// success, returns the induced map verified to be an isomorphism of the two
// pseudo-replacement graphs.
IsoclassResult isoclass_build(const RotationGraph& g_first, const ParityBlock& first,
                              const RotationGraph& g_second, const ParityBlock& second,
                              const IsoclassAssignment& assignment);

}  // namespace zzlab
