#pragma once

#include <vector>

#include "zzlab/core.hpp"

namespace zzlab {

// One vertex per vertex h of g2, standing for the neighbour set N_h; an edge
// {h,k} whenever h != k and N_h, N_k intersect. Neighbour sets deduplicate
// multi-edges, and a loop puts h into N_h.
struct NeighborhoodGraph {
  std::vector<std::vector<int>> neighbor_sets;  // N_h, sorted and unique
  std::vector<std::vector<int>> adjacency;      // sorted, no self entry
  std::vector<std::vector<int>> components;     // sorted, by smallest member

  bool connected() const { return components.size() <= 1; }
};

NeighborhoodGraph neighborhood_graph(const RotationGraph& g2);

// Connectedness of the neighbourhood graph is sufficient (not necessary) for
// every zig-zag product with a connected first factor to be connected.
bool zigzag_connected_sufficient(const RotationGraph& g2);

}  // namespace zzlab
