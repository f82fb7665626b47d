#include "zzlab/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace zzlab {

NeighborhoodGraph neighborhood_graph(const RotationGraph& g2) {
  const int n = g2.vertex_count();
  NeighborhoodGraph ng;
  ng.neighbor_sets.resize(n);
  for (int h = 0; h < n; ++h) {
    std::vector<int> nh = g2.neighbors(h);
    nh.erase(std::unique(nh.begin(), nh.end()), nh.end());
    ng.neighbor_sets[h] = std::move(nh);
  }

  auto intersect = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      (a[i] < b[j]) ? ++i : ++j;
    }
    return false;
  };

  ng.adjacency.resize(n);
  for (int h = 0; h < n; ++h)
    for (int k = h + 1; k < n; ++k)
      if (intersect(ng.neighbor_sets[h], ng.neighbor_sets[k])) {
        ng.adjacency[h].push_back(k);
        ng.adjacency[k].push_back(h);
      }

  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : ng.adjacency[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    ng.components.push_back(std::move(comp));
  }
  return ng;
}

bool zigzag_connected_sufficient(const RotationGraph& g2) {
  return neighborhood_graph(g2).connected();
}

}  // namespace zzlab
