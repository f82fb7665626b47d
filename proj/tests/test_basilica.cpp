#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "zzlab/basilica.hpp"
#include "zzlab/generators.hpp"
#include "zzlab/iso.hpp"
#include "zzlab/products.hpp"
#include "zzlab/spectral.hpp"

using namespace zzlab;

TEST_SUITE_BEGIN("basilica");

TEST_CASE("automaton action on words") {
  CHECK(basilica_act(BasilicaGen::B, "000") == "101");
  CHECK(basilica_act(BasilicaGen::A, "1011") == "1011");  // a fixes 1w
  CHECK(basilica_act(BasilicaGen::A, "0011") == "0111");  // a(0w) = 0 b(w)
  CHECK(basilica_act(BasilicaGen::B, "") == "");
}

TEST_CASE("generators invert each other on all words up to length 10") {
  for (int n = 1; n <= 10; ++n)
    for (int i = 0; i < (1 << n); ++i) {
      std::string w(n, '0');
      for (int b = 0; b < n; ++b)
        if (i & (1 << b)) w[b] = '1';
      for (BasilicaGen s : {BasilicaGen::A, BasilicaGen::AInv, BasilicaGen::B, BasilicaGen::BInv})
        CHECK(basilica_act(basilica_inverse(s), basilica_act(s, w)) == w);
    }
}

TEST_CASE("gamma1: a-loops at both vertices and a doubled b-edge") {
  RotationGraph g = schreier_graph(1);
  CHECK(g.vertex_count() == 2);
  CHECK(g.rot({0, 1}) == Dart{0, 2});  // a-loop at 0
  CHECK(g.rot({1, 1}) == Dart{1, 2});  // a-loop at 1
  CHECK(g.rot({0, 3}) == Dart{1, 4});  // b
  CHECK(g.rot({0, 4}) == Dart{1, 3});  // b^-1
  CHECK(g.adjacency_matrix()(0, 1) == 2);
}

TEST_CASE("gamma3 has the b-edge between 000 and 101") {
  RotationGraph g = schreier_graph(3);
  const int v000 = 0, v101 = 5;
  CHECK(g.vertex_name(v000) == "000");
  CHECK(g.vertex_name(v101) == "101");
  CHECK(g.rot({v000, 3}) == Dart{v101, 4});
}

TEST_CASE("schreier graphs are 4-regular, connected, of size 2^n") {
  for (int n = 1; n <= 10; ++n) {
    RotationGraph g = schreier_graph(n);
    CHECK(g.vertex_count() == (1 << n));
    CHECK(g.degree() == 4);
    CHECK(g.is_connected());
  }
}

TEST_CASE("order of a b^-1 doubles with the level") {
  CHECK(ab_inverse_order(1) == 2);
  CHECK(ab_inverse_order(2) == 4);
  CHECK(ab_inverse_order(3) == 8);
  CHECK(ab_inverse_order(10) == 1024);
  for (int n = 1; n <= 12; ++n) CHECK(ab_inverse_order(n) == (1u << n));
}

TEST_CASE("zig-zag with C4 gives the doubled cycles") {
  for (int n = 1; n <= 5; ++n) {
    BasilicaZigzagReport rep = basilica_zigzag_check(n);
    CHECK(rep.connected);
    CHECK(rep.dc_length == (1 << (n + 1)));
    CHECK(rep.ok);
  }
  CHECK_THROWS_AS(basilica_zigzag_check(0), Error);
}

TEST_CASE("the generator-labelled C4 yields the same unlabeled product") {
  RotationGraph alt = c4_generator_labelled();
  CHECK(alt.vertex_count() == 4);
  CHECK(alt.degree() == 2);
  for (int n = 1; n <= 4; ++n) {
    RotationGraph gamma = schreier_graph(n);
    CHECK(zigzag_product(gamma, alt).adjacency_matrix() ==
          zigzag_product(gamma, cycle_graph(4)).adjacency_matrix());
  }
}

TEST_CASE("spectrum checks pass with tight tolerances") {
  for (int n = 1; n <= 5; ++n) {
    BasilicaSpectrumReport rep = basilica_spectrum_check(n);
    CAPTURE(n);
    CHECK(rep.tensor_ok);
    CHECK(rep.spectrum_ok);
    CHECK(rep.max_spectrum_diff <= 1e-9);
    CHECK(rep.residual_ok);
    CHECK(rep.max_residual < 1e-8);
    CHECK(rep.ok);
  }
}

TEST_CASE("the kernel has dimension 2^{n+1} + 2") {
  // 2^{n+1} zeros from the (1,-1) tensor factor plus the two vanishing
  // cosines; checked on the unordered adjacency, independent of the
  // reordering logic.
  for (int n = 1; n <= 4; ++n) {
    RotationGraph zz = zigzag_product(schreier_graph(n), cycle_graph(4));
    SpectrumReport rep = eigenvalues_symmetric(zz.adjacency_matrix());
    int zeros = 0;
    for (double v : rep.eigenvalues)
      if (std::abs(v) <= 1e-8) ++zeros;
    CHECK(zeros == (1 << (n + 1)) + 2);
  }
}

TEST_SUITE_END();
