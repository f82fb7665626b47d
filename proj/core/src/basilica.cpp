#include "zzlab/basilica.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "zzlab/generators.hpp"
#include "zzlab/iso.hpp"
#include "zzlab/products.hpp"
#include "zzlab/spectral.hpp"

namespace zzlab {

namespace {

constexpr int kMaxLevel = 10;  // keeps the products within the engines' size limits

void check_level(int n) {
  if (n < 1) fail(Errc::SizeTooSmall, "level must be >= 1");
  if (n > kMaxLevel) fail(Errc::SizeLimitExceeded, "level capped at " + std::to_string(kMaxLevel));
}

int word_index(const std::string& w) {
  int idx = 0;
  for (char c : w) idx = idx * 2 + (c - '0');
  return idx;
}

std::string index_word(int idx, int n) {
  std::string w(n, '0');
  for (int b = n - 1; b >= 0; --b, idx /= 2) w[b] = static_cast<char>('0' + idx % 2);
  return w;
}

}  // namespace

BasilicaGen basilica_inverse(BasilicaGen s) {
  switch (s) {
    case BasilicaGen::A: return BasilicaGen::AInv;
    case BasilicaGen::AInv: return BasilicaGen::A;
    case BasilicaGen::B: return BasilicaGen::BInv;
    case BasilicaGen::BInv: return BasilicaGen::B;
  }
  fail(Errc::UnknownVariant, "bad generator");
}

const char* basilica_gen_name(BasilicaGen s) {
  switch (s) {
    case BasilicaGen::A: return "a";
    case BasilicaGen::AInv: return "a^-1";
    case BasilicaGen::B: return "b";
    case BasilicaGen::BInv: return "b^-1";
  }
  return "?";
}

std::string basilica_act(BasilicaGen s, const std::string& w) {
  std::string out = w;
  enum class St { A, AInv, B, BInv, Id } st;
  switch (s) {
    case BasilicaGen::A: st = St::A; break;
    case BasilicaGen::AInv: st = St::AInv; break;
    case BasilicaGen::B: st = St::B; break;
    case BasilicaGen::BInv: st = St::BInv; break;
  }
  for (std::size_t i = 0; i < out.size() && st != St::Id; ++i) {
    const bool one = out[i] == '1';
    switch (st) {
      case St::A:
        st = one ? St::Id : St::B;
        break;
      case St::AInv:
        st = one ? St::Id : St::BInv;
        break;
      case St::B:
        out[i] = one ? '0' : '1';
        st = one ? St::Id : St::A;
        break;
      case St::BInv:
        out[i] = one ? '0' : '1';
        st = one ? St::AInv : St::Id;
        break;
      case St::Id:
        break;
    }
  }
  return out;
}

RotationGraph schreier_graph(int n) {
  check_level(n);
  const int size = 1 << n;
  std::vector<std::string> names(size);
  for (int i = 0; i < size; ++i) names[i] = index_word(i, n);

  // Iterating a and b alone lists every pair exactly once: ports 2 and 4
  // only ever appear on the target side.
  std::vector<DartPair> pairs;
  for (int i = 0; i < size; ++i)
    for (BasilicaGen s : {BasilicaGen::A, BasilicaGen::B}) {
      Dart from{i, static_cast<int>(s)};
      Dart to{word_index(basilica_act(s, names[i])), static_cast<int>(basilica_inverse(s))};
      pairs.push_back({from, to});
    }
  return RotationGraph::build(4, std::move(names), pairs);
}

std::uint64_t ab_inverse_order(int n) {
  if (n < 1) fail(Errc::SizeTooSmall, "level must be >= 1");
  if (n > 20) fail(Errc::SizeLimitExceeded, "level capped at 20");
  const int size = 1 << n;
  std::vector<int> perm(size);
  for (int i = 0; i < size; ++i)
    perm[i] = word_index(basilica_act(BasilicaGen::A, basilica_act(BasilicaGen::BInv, index_word(i, n))));

  std::uint64_t order = 1;
  std::vector<char> seen(size, 0);
  for (int i = 0; i < size; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

RotationGraph c4_generator_labelled() {
  return RotationGraph::build(2, {"a", "a^-1", "b", "b^-1"},
                              {{{0, 1}, {1, 1}}, {{1, 2}, {2, 2}}, {{2, 1}, {3, 1}}, {{3, 2}, {0, 2}}});
}

BasilicaZigzagReport basilica_zigzag_check(int n) {
  check_level(n);
  RotationGraph zz = zigzag_product(schreier_graph(n), cycle_graph(4));

  BasilicaZigzagReport rep;
  rep.level = n;
  rep.product_vertices = zz.vertex_count();
  rep.connected = zz.is_connected();
  rep.expected_length = 1 << (n + 1);
  if (auto len = recognize_double_cycle(Multigraph::from_rotation(zz))) rep.dc_length = *len;
  rep.ok = rep.connected && rep.dc_length == rep.expected_length;
  return rep;
}

BasilicaSpectrumReport basilica_spectrum_check(int n) {
  check_level(n);
  RotationGraph gamma = schreier_graph(n);
  RotationGraph zz = zigzag_product(gamma, cycle_graph(4));
  const int half = 1 << (n + 1);   // length of each of the two cycles
  const int total = 2 * half;      // product vertex count

  // Orbit of 0^n under alternating b^-1, a.
  std::vector<std::string> words(half);
  words[0] = std::string(n, '0');
  for (int t = 1; t < half; ++t)
    words[t] = basilica_act(t % 2 == 1 ? BasilicaGen::BInv : BasilicaGen::A, words[t - 1]);

  // Every word must show up once at an even and once at an odd position.
  std::vector<std::array<int, 2>> hits(1 << n, {0, 0});
  for (int t = 0; t < half; ++t) hits[word_index(words[t])][t % 2]++;
  for (const auto& h : hits)
    if (h[0] != 1 || h[1] != 1)
      fail(Errc::OrderingMismatch, "the alternating orbit does not cover every word twice");

  // Inner cycle rides a / a^-1 (ports 1,2), outer cycle b / b^-1 (ports 3,4).
  std::vector<int> perm(total);
  for (int t = 0; t < half; ++t) {
    const int w = word_index(words[t]);
    perm[t] = w * 4 + (t % 2 == 0 ? 0 : 1);
    perm[half + t] = w * 4 + (t % 2 == 0 ? 2 : 3);
  }

  IntMatrix adj = zz.adjacency_matrix();
  IntMatrix m(total, total);
  for (int s = 0; s < total; ++s)
    for (int t = 0; t < total; ++t) m(s, t) = adj(perm[s], perm[t]);

  BasilicaSpectrumReport rep;
  rep.level = n;

  rep.tensor_ok = true;
  for (int s = 0; s < total && rep.tensor_ok; ++s)
    for (int t = 0; t < total; ++t) {
      const int p = s % half, q = t % half;
      const int diff = ((p - q) % half + half) % half;
      const std::int64_t want = (diff == 1 || diff == half - 1) ? 1 : 0;
      if (m(s, t) != want) {
        rep.tensor_ok = false;
        break;
      }
    }

  // Closed-form spectrum vs the numeric solver.
  std::vector<double> expected(half, 0.0);
  expected.reserve(total);
  for (int j = 0; j < half; ++j)
    expected.push_back(4.0 * std::cos(std::numbers::pi * j / (1 << n)));
  std::sort(expected.begin(), expected.end(), std::greater<>());
  SpectrumReport numeric = eigenvalues_symmetric(adj);
  rep.max_spectrum_diff = 0;
  for (int i = 0; i < total; ++i)
    rep.max_spectrum_diff = std::max(rep.max_spectrum_diff, std::abs(numeric.eigenvalues[i] - expected[i]));
  rep.spectrum_ok = rep.max_spectrum_diff <= 1e-9;

  // Tensor eigenvectors u_i (x) v_j act on the reordered matrix.
  std::vector<std::vector<int>> rows(total);
  for (int s = 0; s < total; ++s)
    for (int t = 0; t < total; ++t)
      for (std::int64_t c = 0; c < m(s, t); ++c) rows[s].push_back(t);

  rep.max_residual = 0;
  for (int block = 0; block < 2; ++block) {
    const double u[2] = {1.0, block == 0 ? -1.0 : 1.0};
    for (int j = 0; j < half; ++j) {
      const double lambda = block == 0 ? 0.0 : 4.0 * std::cos(std::numbers::pi * j / (1 << n));
      std::vector<std::complex<double>> x(total);
      for (int s = 0; s < total; ++s) {
        const double angle = 2.0 * std::numbers::pi * j * (s % half) / half;
        x[s] = u[s / half] * std::complex<double>(std::cos(angle), std::sin(angle));
      }
      for (int s = 0; s < total; ++s) {
        std::complex<double> acc = -lambda * x[s];
        for (int t : rows[s]) acc += x[t];
        rep.max_residual = std::max(rep.max_residual, std::abs(acc));
      }
    }
  }
  rep.residual_ok = rep.max_residual < 1e-8;

  rep.ok = rep.tensor_ok && rep.spectrum_ok && rep.residual_ok;
  return rep;
}

}  // namespace zzlab
