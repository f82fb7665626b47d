#pragma once

// Shared fixture lists for the unit and acceptance suites.

#include <string>
#include <vector>

#include "zzlab/basilica.hpp"
#include "zzlab/generators.hpp"

namespace fixtures {

struct Named {
  std::string name;
  zzlab::RotationGraph graph;
};

// K_n with some valid bi-labelling: the good labelling for odd n, a
// round-robin 1-factorisation (equal port at both ends) for even n.
inline zzlab::RotationGraph complete_any(int n) {
  if (n % 2 == 1) return zzlab::complete_good((n - 1) / 2);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<zzlab::DartPair> pairs;
  const int m = n - 1;
  for (int r = 0; r < m; ++r) {
    pairs.push_back({{n - 1, r + 1}, {r, r + 1}});
    for (int k = 1; k <= n / 2 - 1; ++k) {
      int a = (r + k) % m, b = ((r - k) % m + m) % m;
      pairs.push_back({{a, r + 1}, {b, r + 1}});
    }
  }
  return zzlab::RotationGraph::build(n - 1, std::move(names), pairs);
}

inline zzlab::RotationGraph k5_example42() {
  return zzlab::complete_graph(zzlab::LabellingScheme::CompleteExample42);
}
inline zzlab::RotationGraph k5_example53() {
  return zzlab::complete_graph(zzlab::LabellingScheme::CompleteExample53);
}
inline zzlab::RotationGraph k5_example56() {
  return zzlab::complete_graph(zzlab::LabellingScheme::CompleteExample56);
}

// Everything desk-sized, for blanket invariants (validation, spectra, IO).
inline std::vector<Named> small_fixtures() {
  std::vector<Named> out;
  out.push_back({"c3", zzlab::cycle_graph(3)});
  out.push_back({"c4", zzlab::cycle_graph(4)});
  out.push_back({"c5", zzlab::cycle_graph(5)});
  out.push_back({"c2", zzlab::cycle_graph(2)});
  out.push_back({"k5-good", zzlab::complete_good(2)});
  out.push_back({"k7-good", zzlab::complete_good(3)});
  out.push_back({"k9-good", zzlab::complete_good(4)});
  out.push_back({"k5-example42", k5_example42()});
  out.push_back({"k5-example53", k5_example53()});
  out.push_back({"k5-example56", k5_example56()});
  out.push_back({"cube3", zzlab::hamming_cube(3)});
  out.push_back({"cube1", zzlab::hamming_cube(1)});
  out.push_back({"dc3", zzlab::double_cycle(3)});
  out.push_back({"dc4", zzlab::double_cycle(4)});
  out.push_back({"dc16", zzlab::double_cycle(16)});
  out.push_back({"gamma1", zzlab::schreier_graph(1)});
  out.push_back({"gamma2", zzlab::schreier_graph(2)});
  out.push_back({"gamma3", zzlab::schreier_graph(3)});
  out.push_back({"c4-generators", zzlab::c4_generator_labelled()});
  out.push_back({"random-4", zzlab::random_regular_graph(7, 4, 11)});
  out.push_back({"random-6", zzlab::random_regular_graph(8, 6, 12)});
  return out;
}

// 4-regular fixtures for the double-cycle and block machinery.
inline std::vector<Named> regular4_fixtures() {
  std::vector<Named> out;
  out.push_back({"k5-good", zzlab::complete_good(2)});
  out.push_back({"k5-example42", k5_example42()});
  out.push_back({"k5-example53", k5_example53()});
  out.push_back({"k5-example56", k5_example56()});
  out.push_back({"gamma1", zzlab::schreier_graph(1)});
  out.push_back({"gamma2", zzlab::schreier_graph(2)});
  out.push_back({"gamma3", zzlab::schreier_graph(3)});
  out.push_back({"dc3", zzlab::double_cycle(3)});
  out.push_back({"dc4", zzlab::double_cycle(4)});
  out.push_back({"dc5", zzlab::double_cycle(5)});
  return out;
}

inline std::vector<Named> regular6_fixtures() {
  std::vector<Named> out;
  out.push_back({"k7-good", zzlab::complete_good(3)});
  out.push_back({"random-6a", zzlab::random_regular_graph(7, 6, 1)});
  out.push_back({"random-6b", zzlab::random_regular_graph(8, 6, 2)});
  return out;
}

// Seeded random even-regular graphs for the block/component properties:
// ten 4-regular and ten 6-regular, all connected, at most 12 vertices.
inline std::vector<Named> random_even_regular() {
  std::vector<Named> out;
  for (int seed = 1; seed <= 10; ++seed) {
    int n = 5 + (seed % 8);
    out.push_back({"rand4-" + std::to_string(seed), zzlab::random_regular_graph(n, 4, seed)});
  }
  for (int seed = 11; seed <= 20; ++seed) {
    int n = 7 + (seed % 6);
    out.push_back({"rand6-" + std::to_string(seed), zzlab::random_regular_graph(n, 6, seed)});
  }
  return out;
}

// Valid (g1, g2) pairs for product tests.
inline std::vector<std::pair<Named, Named>> product_pairs() {
  std::vector<std::pair<Named, Named>> out;
  out.push_back({{"cube3", zzlab::hamming_cube(3)}, {"c3", zzlab::cycle_graph(3)}});
  out.push_back({{"k5-good", zzlab::complete_good(2)}, {"c4", zzlab::cycle_graph(4)}});
  out.push_back({{"k5-example56", k5_example56()}, {"c4", zzlab::cycle_graph(4)}});
  out.push_back({{"k7-good", zzlab::complete_good(3)}, {"c6", zzlab::cycle_graph(6)}});
  out.push_back({{"gamma2", zzlab::schreier_graph(2)}, {"c4", zzlab::cycle_graph(4)}});
  out.push_back({{"gamma3", zzlab::schreier_graph(3)}, {"k4", complete_any(4)}});
  return out;
}

}  // namespace fixtures
