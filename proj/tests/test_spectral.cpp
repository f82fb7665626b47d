#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "zzlab/generators.hpp"
#include "zzlab/products.hpp"
#include "zzlab/spectral.hpp"

using namespace zzlab;

TEST_SUITE_BEGIN("spectral");

namespace {

void check_spectra_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= tol);
}

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

TEST_CASE("classical spectra") {
  check_spectra_close(eigenvalues_symmetric(cycle_graph(4).adjacency_matrix()).eigenvalues,
                      {2, 0, 0, -2}, 1e-9);
  check_spectra_close(eigenvalues_symmetric(complete_good(2).adjacency_matrix()).eigenvalues,
                      {4, -1, -1, -1, -1}, 1e-9);
  check_spectra_close(eigenvalues_symmetric(double_cycle(4).adjacency_matrix()).eigenvalues,
                      {4, 0, 0, 0, 0, 0, 0, -4}, 1e-9);
}

TEST_CASE("non-symmetric input is rejected") {
  CHECK_THROWS_AS(eigenvalues_symmetric(2, {0, 1, 0, 0}), Error);
}

TEST_CASE("circulant eigenvalues") {
  SUBCASE("two-neighbour row gives 2cos(2 pi j / n)") {
    for (int n : {4, 5, 8}) {
      std::vector<double> row(n, 0.0);
      row[1] = row[n - 1] = 1.0;
      auto ev = circulant_eigenvalues(row);
      for (int j = 0; j < n; ++j) {
        CHECK(std::abs(ev[j].imag()) < 1e-9);
        CHECK(std::abs(ev[j].real() - 2 * std::cos(2 * std::numbers::pi * j / n)) < 1e-9);
      }
    }
  }
  SUBCASE("zero row") {
    for (const auto& z : circulant_eigenvalues({0, 0, 0})) CHECK(std::abs(z) == 0);
  }
  SUBCASE("complete-graph row") {
    auto ev = circulant_eigenvalues({0, 1, 1, 1, 1});
    CHECK(std::abs(ev[0].real() - 4) < 1e-9);
    for (int j = 1; j < 5; ++j) CHECK(std::abs(ev[j].real() + 1) < 1e-9);
  }
}

TEST_CASE("circulant formula agrees with the numeric solver on circulant fixtures") {
  std::vector<IntMatrix> mats{cycle_graph(5).adjacency_matrix(), cycle_graph(8).adjacency_matrix(),
                              complete_good(2).adjacency_matrix(),
                              complete_good(3).adjacency_matrix()};
  for (const auto& m : mats) {
    REQUIRE(is_circulant(m));
    std::vector<double> row(m.cols());
    for (int c = 0; c < m.cols(); ++c) row[c] = static_cast<double>(m(0, c));
    std::vector<double> formula;
    for (const auto& z : circulant_eigenvalues(row)) {
      CHECK(std::abs(z.imag()) < 1e-9);
      formula.push_back(z.real());
    }
    check_spectra_close(sorted_desc(formula), eigenvalues_symmetric(m).eigenvalues, 1e-9);
  }
  IntMatrix skew = cycle_graph(4).adjacency_matrix();
  skew(0, 1) = 0;
  CHECK_FALSE(is_circulant(skew));
}

TEST_CASE("circulant eigenvectors satisfy C v = lambda v") {
  std::vector<double> row{0, 1, 0, 0, 0, 0, 0, 1};
  const int n = 8;
  auto ev = circulant_eigenvalues(row);
  for (int j = 0; j < n; ++j) {
    auto v = circulant_eigenvector(n, j);
    for (int r = 0; r < n; ++r) {
      std::complex<double> acc = 0;
      for (int c = 0; c < n; ++c) acc += row[((c - r) % n + n) % n] * v[c];
      CHECK(std::abs(acc - ev[j] * v[r]) < 1e-9);
    }
  }
}

TEST_CASE("dc spectrum formula is verified numerically up to length 64") {
  for (int n = 2; n <= 64; n == 2 ? n = 3 : n *= 2) {
    SpectrumReport formula = dc_spectrum(n);
    SpectrumReport numeric = eigenvalues_symmetric(double_cycle(std::max(n, 2)).adjacency_matrix());
    check_spectra_close(formula.eigenvalues, numeric.eigenvalues, 1e-9);
  }
  SpectrumReport dc4 = dc_spectrum(4);
  check_spectra_close(dc4.eigenvalues, {4, 0, 0, 0, 0, 0, 0, -4}, 1e-12);
}

TEST_CASE("spectral component count matches BFS") {
  CHECK(component_count_spectral(
            zigzag_product(fixtures::k5_example56(), cycle_graph(4), {true})) == 2);
  CHECK(component_count_spectral(double_cycle(8)) == 1);
  RotationGraph two_triangles = RotationGraph::build(
      2, {"a", "b", "c", "d", "e", "f"},
      {{{0, 1}, {1, 2}}, {{1, 1}, {2, 2}}, {{2, 1}, {0, 2}},
       {{3, 1}, {4, 2}}, {{4, 1}, {5, 2}}, {{5, 1}, {3, 2}}});
  CHECK(component_count_spectral(two_triangles) == 2);
}

TEST_CASE("spectral count agrees with BFS on every fixture") {
  for (const auto& [name, g] : fixtures::small_fixtures()) {
    CAPTURE(name);
    CHECK(component_count_spectral(g) ==
          static_cast<int>(g.connected_components().size()));
  }
}

TEST_CASE("normalized eigenvalues live in [-1,1] with top multiplicity = components") {
  for (const auto& [name, g] : fixtures::small_fixtures()) {
    CAPTURE(name);
    IntMatrix a = g.adjacency_matrix();
    const int n = a.rows();
    std::vector<double> scaled(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        scaled[static_cast<std::size_t>(r) * n + c] = static_cast<double>(a(r, c)) / g.degree();
    SpectrumReport rep = eigenvalues_symmetric(n, scaled);
    for (double v : rep.eigenvalues) CHECK(std::abs(v) <= 1 + 1e-9);
    int top = 0;
    for (double v : rep.eigenvalues)
      if (std::abs(v - 1.0) <= 1e-6) ++top;
    CHECK(top == static_cast<int>(g.connected_components().size()));
  }
}

TEST_CASE("good-labelled zig-zags have block-circulant adjacency") {
  for (int d = 1; d <= 4; ++d) {
    RotationGraph z = zigzag_product(complete_good(d), cycle_graph(2 * d));
    IntMatrix a = z.adjacency_matrix();
    const int block = 2 * d, n = 2 * d + 1;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        for (int x = 0; x < block; ++x)
          for (int y = 0; y < block; ++y)
            CHECK(a(r * block + x, c * block + y) ==
                  a(0 * block + x, (((c - r) % n + n) % n) * block + y));
  }
}

TEST_CASE("multiplicity grouping") {
  SpectrumReport rep = group_multiplicities({1.0, 1.0 + 1e-8, 0.5, -1.0}, SpectrumSource::Numeric);
  REQUIRE(rep.multiplicities.size() == 3);
  CHECK(rep.multiplicities[0].second == 2);
  CHECK(rep.eigenvalues.front() >= rep.eigenvalues.back());
}

TEST_SUITE_END();
