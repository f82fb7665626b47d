#include <doctest.h>

#include "fixtures.hpp"
#include "zzlab/generators.hpp"
#include "zzlab/iso.hpp"

using namespace zzlab;

TEST_SUITE_BEGIN("generators");

TEST_CASE("cycle graph rotation map") {
  RotationGraph c3 = cycle_graph(3);
  for (int u = 0; u < 3; ++u) {
    CHECK(c3.rot({u, 1}) == Dart{(u + 1) % 3, 2});
    CHECK(c3.rot({u, 2}) == Dart{(u + 2) % 3, 1});
  }
  CHECK(c3.vertex_name(0) == "1");

  RotationGraph c2 = cycle_graph(2);
  CHECK(c2.adjacency_matrix()(0, 1) == 2);  // doubled edge

  CHECK_THROWS_AS(cycle_graph(1), Error);
}

TEST_CASE("complete-good involution holds exhaustively up to d = 6") {
  for (int d = 1; d <= 6; ++d) {
    RotationGraph k = complete_good(d);
    const int n = 2 * d + 1;
    CHECK(k.vertex_count() == n);
    CHECK(k.degree() == 2 * d);
    for (int i = 0; i < n; ++i)
      for (int j = 1; j <= 2 * d; ++j) {
        Dart t = k.rot({i, j});
        CHECK(t == Dart{(i + j) % n, 2 * d - j + 1});
        CHECK(k.rot(t) == Dart{i, j});
      }
    // complete: every other vertex exactly once
    for (int i = 0; i < n; ++i) {
      std::vector<int> nb = k.neighbors(i);
      for (int x = 0, j = 0; x < n; ++x) {
        if (x == i) continue;
        CHECK(nb[j++] == x);
      }
    }
  }
}

TEST_CASE("k5 fixtures validate and are complete graphs") {
  for (auto variant : {LabellingScheme::CompleteExample42, LabellingScheme::CompleteExample53,
                       LabellingScheme::CompleteExample56}) {
    RotationGraph k = complete_graph(variant);
    CHECK(k.vertex_count() == 5);
    CHECK(k.degree() == 4);
    IntMatrix a = k.adjacency_matrix();
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) CHECK(a(i, j) == (i == j ? 0 : 1));
  }
  CHECK_THROWS_AS(complete_graph(LabellingScheme::CycleCayley), Error);
}

TEST_CASE("hamming cube") {
  RotationGraph q3 = hamming_cube(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.degree() == 3);
  CHECK(q3.is_connected());
  CHECK(q3.vertex_name(6) == "110");
  // same label at both ends, flipping letter i-1
  for (int v = 0; v < 8; ++v)
    for (int i = 1; i <= 3; ++i) {
      Dart t = q3.rot({v, i});
      CHECK(t.port == i);
      CHECK((t.vertex ^ v) == (1 << (3 - i)));
    }

  RotationGraph q1 = hamming_cube(1);
  CHECK(q1.vertex_count() == 2);
  CHECK(q1.rot({0, 1}) == Dart{1, 1});
}

TEST_CASE("double cycle structure") {
  RotationGraph dc16 = double_cycle(16);
  CHECK(dc16.vertex_count() == 32);
  CHECK(dc16.degree() == 4);
  CHECK(dc16.is_connected());

  RotationGraph dc2 = double_cycle(2);
  CHECK(dc2.vertex_count() == 4);
  for (std::int64_t s : dc2.adjacency_matrix().row_sums()) CHECK(s == 4);

  CHECK_THROWS_AS(double_cycle(1), Error);
}

TEST_CASE("every vertex of a double cycle sits in exactly two papillons") {
  const int n = 6;
  RotationGraph dc = double_cycle(n);
  IntMatrix a = dc.adjacency_matrix();
  // papillon i: complete bipartite between {outer_i, inner_i} and
  // {outer_{i+1}, inner_{i+1}}; these 4n edges are the whole graph.
  std::int64_t covered = 0;
  for (int i = 0; i < n; ++i) {
    int o0 = i, i0 = n + i, o1 = (i + 1) % n, i1 = n + (i + 1) % n;
    for (int x : {o0, i0})
      for (int y : {o1, i1}) {
        CHECK(a(x, y) >= 1);
        covered += 1;
      }
  }
  std::int64_t total = 0;
  for (std::int64_t s : a.row_sums()) total += s;
  CHECK(covered == total / 2);
}

TEST_CASE("double cycle is vertex-transitive under rotation") {
  const int n = 5;
  RotationGraph dc = double_cycle(n);
  auto shift = [&](int v) { return v < n ? (v + 1) % n : n + (v - n + 1) % n; };
  // the induced dart relabelling preserves the rotation map
  for (int v = 0; v < dc.vertex_count(); ++v)
    for (int p = 1; p <= 4; ++p) {
      Dart t = dc.rot({v, p});
      CHECK(dc.rot({shift(v), p}) == Dart{shift(t.vertex), t.port});
    }
}

TEST_CASE("random regular graphs are connected, regular and reproducible") {
  RotationGraph a = random_regular_graph(9, 4, 7);
  RotationGraph b = random_regular_graph(9, 4, 7);
  CHECK(a.is_connected());
  for (int id = 0; id < a.dart_count(); ++id) CHECK(a.rot_id(id) == b.rot_id(id));
  RotationGraph c = random_regular_graph(9, 4, 8);
  bool same = true;
  for (int id = 0; id < a.dart_count(); ++id) same = same && a.rot_id(id) == c.rot_id(id);
  CHECK_FALSE(same);
  CHECK_THROWS_AS(random_regular_graph(3, 3, 1), Error);  // odd dart total
}

TEST_CASE("labelling scheme names round-trip") {
  for (auto s : {LabellingScheme::CycleCayley, LabellingScheme::CompleteGood,
                 LabellingScheme::CompleteExample42, LabellingScheme::CompleteExample53,
                 LabellingScheme::CompleteExample56, LabellingScheme::HammingCube,
                 LabellingScheme::DoubleCycle})
    CHECK(parse_labelling_scheme(labelling_scheme_name(s)) == s);
  CHECK_THROWS_AS(parse_labelling_scheme("nope"), Error);
}

TEST_SUITE_END();
