#include <doctest.h>

#include "fixtures.hpp"
#include "zzlab/connectivity.hpp"
#include "zzlab/generators.hpp"
#include "zzlab/iso.hpp"
#include "zzlab/products.hpp"

using namespace zzlab;

TEST_SUITE_BEGIN("connectivity");

TEST_CASE("neighborhood graph of C4 splits into {N1,N3} and {N2,N4}") {
  NeighborhoodGraph ng = neighborhood_graph(cycle_graph(4));
  CHECK(ng.components == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK_FALSE(ng.connected());
  CHECK_FALSE(zigzag_connected_sufficient(cycle_graph(4)));
}

TEST_CASE("neighborhood graph of C5 is again a 5-cycle") {
  NeighborhoodGraph ng = neighborhood_graph(cycle_graph(5));
  for (int h = 0; h < 5; ++h) {
    std::vector<int> want{(h + 2) % 5, (h + 3) % 5};
    std::sort(want.begin(), want.end());
    CHECK(ng.adjacency[h] == want);
  }
  CHECK(ng.connected());
}

TEST_CASE("neighborhood graph of K4 is K4") {
  NeighborhoodGraph ng = neighborhood_graph(fixtures::complete_any(4));
  for (int h = 0; h < 4; ++h) CHECK(ng.adjacency[h].size() == 3);
  CHECK(ng.connected());
}

TEST_CASE("sufficient condition over complete graphs and odd cycles") {
  for (int d = 3; d <= 8; ++d) CHECK(zigzag_connected_sufficient(fixtures::complete_any(d)));
  for (int d = 3; d <= 9; d += 2) CHECK(zigzag_connected_sufficient(cycle_graph(d)));
}

TEST_CASE("loops put a vertex into its own neighbour set") {
  RotationGraph gamma1 = schreier_graph(1);
  NeighborhoodGraph ng = neighborhood_graph(gamma1);
  CHECK(ng.neighbor_sets[0] == std::vector<int>{0, 1});
  CHECK(ng.connected());
}

TEST_CASE("soundness: a connected neighborhood graph forces connected zig-zags") {
  std::vector<std::pair<RotationGraph, RotationGraph>> pairs;
  pairs.push_back({hamming_cube(3), cycle_graph(3)});                  // odd cycle
  pairs.push_back({fixtures::complete_any(4), cycle_graph(3)});        // K4 is 3-regular
  pairs.push_back({schreier_graph(3), fixtures::complete_any(4)});     // K4 as second factor
  pairs.push_back({random_regular_graph(6, 5, 3), cycle_graph(5)});
  pairs.push_back({cycle_graph(2), schreier_graph(1)});                // gamma1 as second factor
  for (const auto& [g1, g2] : pairs) {
    REQUIRE(zigzag_connected_sufficient(g2));
    CHECK(zigzag_product(g1, g2).is_connected());
  }
}

TEST_CASE("the condition is not necessary: C4 fails it, yet gamma2 (z) C4 is connected") {
  CHECK_FALSE(zigzag_connected_sufficient(cycle_graph(4)));
  CHECK(zigzag_product(schreier_graph(2), cycle_graph(4)).is_connected());
}

TEST_SUITE_END();
