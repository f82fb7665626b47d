#include "zzlab/generators.hpp"

#include <array>
#include <limits>
#include <random>

namespace zzlab {

LabellingScheme parse_labelling_scheme(const std::string& name) {
  if (name == "cycle-cayley" || name == "cycle") return LabellingScheme::CycleCayley;
  if (name == "complete-good") return LabellingScheme::CompleteGood;
  if (name == "complete-example42") return LabellingScheme::CompleteExample42;
  if (name == "complete-example53") return LabellingScheme::CompleteExample53;
  if (name == "complete-example56") return LabellingScheme::CompleteExample56;
  if (name == "hamming-cube" || name == "cube") return LabellingScheme::HammingCube;
  if (name == "double-cycle") return LabellingScheme::DoubleCycle;
  fail(Errc::UnknownVariant, "unknown labelling scheme \"" + name + "\"");
}

const char* labelling_scheme_name(LabellingScheme s) {
  switch (s) {
    case LabellingScheme::CycleCayley: return "cycle-cayley";
    case LabellingScheme::CompleteGood: return "complete-good";
    case LabellingScheme::CompleteExample42: return "complete-example42";
    case LabellingScheme::CompleteExample53: return "complete-example53";
    case LabellingScheme::CompleteExample56: return "complete-example56";
    case LabellingScheme::HammingCube: return "hamming-cube";
    case LabellingScheme::DoubleCycle: return "double-cycle";
  }
  return "?";
}

RotationGraph cycle_graph(int n) {
  if (n < 2) fail(Errc::SizeTooSmall, "cycle graph needs at least 2 vertices");
  std::vector<std::string> names;
  names.reserve(n);
  for (int u = 0; u < n; ++u) names.push_back(std::to_string(u + 1));
  std::vector<DartPair> pairs;
  for (int u = 0; u < n; ++u) pairs.push_back({{u, 1}, {(u + 1) % n, 2}});
  return RotationGraph::build(2, std::move(names), pairs);
}

RotationGraph complete_good(int d) {
  if (d < 1) fail(Errc::SizeTooSmall, "complete-good needs d >= 1");
  const int n = 2 * d + 1;
  const int deg = 2 * d;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<DartPair> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= deg; ++j) {
      Dart a{i, j};
      Dart b{(i + j) % n, deg - j + 1};
      if (i * deg + (j - 1) < b.vertex * deg + (b.port - 1)) pairs.push_back({a, b});
    }
  return RotationGraph::build(deg, std::move(names), pairs);
}

// The three K_5 fixtures below are transcriptions of hand-labelled graphs;
// each row is one edge (v,h)-(w,k). They are data, not derived.
static RotationGraph k5_fixture(const std::array<std::array<int, 4>, 10>& rows) {
  std::vector<DartPair> pairs;
  for (const auto& r : rows) pairs.push_back({{r[0], r[1]}, {r[2], r[3]}});
  return RotationGraph::build(4, {"0", "1", "2", "3", "4"}, pairs);
}

RotationGraph complete_graph(LabellingScheme variant, int parameter) {
  // K_5 whose parity decomposition has two blocks: vertex 0 odden and
  // vertices 1,2 odd, 3,4 even in the first block.
  static const std::array<std::array<int, 4>, 10> two_block = {{
      {0, 1, 3, 4},
      {0, 2, 1, 1},
      {0, 3, 2, 1},
      {0, 4, 4, 4},
      {1, 2, 4, 1},
      {1, 3, 3, 2},
      {1, 4, 2, 2},
      {2, 3, 4, 2},
      {2, 4, 3, 3},
      {3, 1, 4, 3},
  }};
  // K_5 with a single parity block in which all five vertices are odden.
  static const std::array<std::array<int, 4>, 10> one_block = {{
      {0, 1, 1, 4},
      {0, 2, 2, 4},
      {0, 3, 3, 1},
      {0, 4, 4, 4},
      {1, 1, 4, 2},
      {1, 2, 2, 2},
      {1, 3, 3, 2},
      {2, 1, 4, 1},
      {2, 3, 3, 3},
      {3, 4, 4, 3},
  }};
  switch (variant) {
    case LabellingScheme::CompleteGood:
      return complete_good(parameter);
    case LabellingScheme::CompleteExample42:
      return k5_fixture(two_block);
    case LabellingScheme::CompleteExample53:
      return k5_fixture(one_block);
    case LabellingScheme::CompleteExample56:
      // Same bi-labelling as the two-block fixture; kept as a distinct name
      // because it is the canonical input for the DC_6/DC_4 decomposition.
      return k5_fixture(two_block);
    default:
      fail(Errc::UnknownVariant, "not a complete-graph labelling scheme");
  }
}

RotationGraph hamming_cube(int k) {
  if (k < 1) fail(Errc::SizeTooSmall, "hamming cube needs k >= 1");
  const int n = 1 << k;
  std::vector<std::string> names;
  names.reserve(n);
  for (int v = 0; v < n; ++v) {
    std::string w(k, '0');
    for (int b = 0; b < k; ++b)
      if (v & (1 << (k - 1 - b))) w[b] = '1';
    names.push_back(w);
  }
  std::vector<DartPair> pairs;
  for (int v = 0; v < n; ++v)
    for (int i = 1; i <= k; ++i) {
      int w = v ^ (1 << (k - i));  // flip letter i-1 (counting from the left)
      if (v < w) pairs.push_back({{v, i}, {w, i}});
    }
  return RotationGraph::build(k, std::move(names), pairs);
}

namespace detail {

RotationGraph double_cycle_any(int n) {
  const int N = 2 * n;
  std::vector<std::string> names;
  names.reserve(N);
  for (int i = 0; i < n; ++i) names.push_back("outer_" + std::to_string(i));
  for (int i = 0; i < n; ++i) names.push_back("inner_" + std::to_string(i));
  auto outer = [&](int i) { return (i % n + n) % n; };
  auto inner = [&](int i) { return n + (i % n + n) % n; };
  std::vector<DartPair> pairs;
  for (int i = 0; i < n; ++i) {
    pairs.push_back({{outer(i), 1}, {outer(i + 1), 2}});
    pairs.push_back({{inner(i), 1}, {inner(i + 1), 2}});
    pairs.push_back({{outer(i), 3}, {inner(i + 1), 4}});
    pairs.push_back({{inner(i), 3}, {outer(i + 1), 4}});
  }
  return RotationGraph::build(4, std::move(names), pairs);
}

}  // namespace detail

RotationGraph double_cycle(int n) {
  if (n < 2) fail(Errc::SizeTooSmall, "double cycle needs length >= 2");
  return detail::double_cycle_any(n);
}

namespace {

// Bounded uniform draw on top of the (standardised) mt19937_64 stream, so
// generated graphs are reproducible across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace

RotationGraph random_regular_graph(int n, int degree, std::uint64_t seed) {
  if (n < 1) fail(Errc::SizeTooSmall, "need at least one vertex");
  if (degree < 1) fail(Errc::SizeTooSmall, "degree must be positive");
  if ((static_cast<std::int64_t>(n) * degree) % 2 != 0)
    fail(Errc::SizeTooSmall, "n*degree must be even");

  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back(std::to_string(v));

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> darts(static_cast<std::size_t>(n) * degree);
    for (std::size_t i = 0; i < darts.size(); ++i) darts[i] = static_cast<int>(i);
    for (std::size_t i = darts.size() - 1; i > 0; --i)
      std::swap(darts[i], darts[draw_below(rng, i + 1)]);

    std::vector<DartPair> pairs;
    pairs.reserve(darts.size() / 2);
    auto dart_of = [&](int id) { return Dart{id / degree, id % degree + 1}; };
    for (std::size_t i = 0; i + 1 < darts.size(); i += 2)
      pairs.push_back({dart_of(darts[i]), dart_of(darts[i + 1])});

    RotationGraph g = RotationGraph::build(degree, names, pairs);
    if (g.is_connected()) return g;
  }
  fail(Errc::DisconnectedFactor, "no connected matching found after 1000 draws");
}

}  // namespace zzlab
