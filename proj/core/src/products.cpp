#include "zzlab/products.hpp"

#include <algorithm>
#include <map>

namespace zzlab {

namespace {

void check_factors(const RotationGraph& g1, const RotationGraph& g2, ProductOptions opt) {
  if (g2.vertex_count() != g1.degree())
    fail(Errc::DegreeMismatch, "second factor must have exactly d1 = " + std::to_string(g1.degree()) +
                                   " vertices, got " + std::to_string(g2.vertex_count()));
  if (!opt.allow_disconnected) {
    if (!g1.is_connected()) fail(Errc::DisconnectedFactor, "first factor is not connected");
    if (!g2.is_connected()) fail(Errc::DisconnectedFactor, "second factor is not connected");
  }
}

std::vector<std::string> product_names(const RotationGraph& g1, const RotationGraph& g2) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(g1.vertex_count()) * g2.vertex_count());
  for (int v = 0; v < g1.vertex_count(); ++v)
    for (int m = 0; m < g2.vertex_count(); ++m)
      names.push_back("(" + g1.vertex_name(v) + "," + g2.vertex_name(m) + ")");
  return names;
}

}  // namespace

int product_vertex(const RotationGraph& g1, int cloud, int inner) {
  return cloud * g1.degree() + inner;
}

int zigzag_port(int i, int j, int d2) { return (i - 1) * d2 + j; }

std::pair<int, int> zigzag_port_split(int port, int d2) {
  return {(port - 1) / d2 + 1, (port - 1) % d2 + 1};
}

RotationGraph replacement_product(const RotationGraph& g1, const RotationGraph& g2, ProductOptions opt) {
  check_factors(g1, g2, opt);
  const int d1 = g1.degree();
  const int d2 = g2.degree();
  const int deg = d2 + 1;

  std::vector<DartPair> pairs;
  for (int v = 0; v < g1.vertex_count(); ++v)
    for (int k = 1; k <= d1; ++k) {
      const int pv = product_vertex(g1, v, k - 1);
      for (int i = 1; i <= deg; ++i) {
        Dart from{pv, i};
        Dart to;
        if (i <= d2) {
          Dart t = g2.rot({k - 1, i});
          to = {product_vertex(g1, v, t.vertex), t.port};
        } else {
          Dart t = g1.rot({v, k});
          to = {product_vertex(g1, t.vertex, t.port - 1), deg};
        }
        if (from.vertex * deg + (from.port - 1) < to.vertex * deg + (to.port - 1))
          pairs.push_back({from, to});
      }
    }
  return RotationGraph::build(deg, product_names(g1, g2), pairs);
}

namespace {

// One application of the zig/jump/zag rule to the product dart
// ((v,k),(i,j)); returns the partner dart.
Dart zigzag_step(const RotationGraph& g1, const RotationGraph& g2, int v, int k, int i, int j) {
  const int d2 = g2.degree();
  Dart zig = g2.rot({k - 1, i});        // (k'-1, i')
  const int kp = zig.vertex + 1;
  Dart jump = g1.rot({v, kp});          // (w, l')
  Dart zag = g2.rot({jump.port - 1, j});  // (l-1, j')
  const int pw = product_vertex(g1, jump.vertex, zag.vertex);
  return {pw, zigzag_port(zag.port, zig.port, d2)};
}

}  // namespace

RotationGraph zigzag_product(const RotationGraph& g1, const RotationGraph& g2, ProductOptions opt) {
  check_factors(g1, g2, opt);
  const int d1 = g1.degree();
  const int d2 = g2.degree();
  const int deg = d2 * d2;

  std::vector<DartPair> pairs;
  for (int v = 0; v < g1.vertex_count(); ++v)
    for (int k = 1; k <= d1; ++k) {
      const int pv = product_vertex(g1, v, k - 1);
      for (int i = 1; i <= d2; ++i)
        for (int j = 1; j <= d2; ++j) {
          Dart from{pv, zigzag_port(i, j, d2)};
          Dart to = zigzag_step(g1, g2, v, k, i, j);
          if (from.vertex * deg + (from.port - 1) < to.vertex * deg + (to.port - 1))
            pairs.push_back({from, to});
        }
    }
  return RotationGraph::build(deg, product_names(g1, g2), pairs);
}

PapillonBlock papillon_blocks(const RotationGraph& g1, const RotationGraph& g2, Dart g1_dart) {
  if (g1_dart.vertex < 0 || g1_dart.vertex >= g1.vertex_count() || g1_dart.port < 1 ||
      g1_dart.port > g1.degree())
    fail(Errc::NotAnEdge, "dart does not name an edge of the first factor");
  check_factors(g1, g2, {true});

  const int d2 = g2.degree();
  const Dart other = g1.rot(g1_dart);
  const int v = g1_dart.vertex, k = g1_dart.port;
  const int w = other.vertex, l = other.port;

  PapillonBlock block;
  block.g1_dart = g1_dart;
  for (int p = 1; p <= d2; ++p) {
    block.side_v.push_back(product_vertex(g1, v, g2.rot({k - 1, p}).vertex));
    block.side_w.push_back(product_vertex(g1, w, g2.rot({l - 1, p}).vertex));
  }
  std::sort(block.side_v.begin(), block.side_v.end());
  std::sort(block.side_w.begin(), block.side_w.end());

  // Expected complete bipartite multiset.
  std::map<std::pair<int, int>, int> expected;
  for (int a : block.side_v)
    for (int b : block.side_w) expected[std::minmax(a, b)]++;

  // Product edges whose jump step rides exactly this g1 edge, read off the
  // three-step rule.
  std::map<std::pair<int, int>, int> actual;
  for (int i = 1; i <= d2; ++i) {
    Dart zig_source = g2.rot({k - 1, i});  // dart (kappa, iota) with zig landing on k
    const int pa = product_vertex(g1, v, zig_source.vertex);
    for (int j = 1; j <= d2; ++j) {
      Dart lands = zigzag_step(g1, g2, v, zig_source.vertex + 1, zig_source.port, j);
      actual[std::minmax(pa, lands.vertex)]++;
      block.product_edges.push_back(std::minmax(pa, lands.vertex));
    }
  }
  std::sort(block.product_edges.begin(), block.product_edges.end());

  if (expected != actual)
    fail(Errc::CorrespondenceViolated,
         "edge does not span a complete bipartite K_{d2,d2} in the product");

  // The attributed edges must all be present in the built product.
  IntMatrix adj = zigzag_product(g1, g2, {true}).adjacency_matrix();
  for (const auto& [edge, count] : actual) {
    std::int64_t have = adj(edge.first, edge.second);
    if (edge.first == edge.second) have /= 2;
    if (have < count)
      fail(Errc::CorrespondenceViolated, "attributed product edges exceed the product's multiplicity");
  }
  return block;
}

MatrixIdentityReport zz_matrix_identity(const RotationGraph& g1, const RotationGraph& g2) {
  check_factors(g1, g2, {true});
  const int d1 = g1.degree();
  const int n = g1.vertex_count() * d1;

  IntMatrix azz = zigzag_product(g1, g2, {true}).adjacency_matrix();

  IntMatrix perm(n, n);
  for (int v = 0; v < g1.vertex_count(); ++v)
    for (int k = 1; k <= d1; ++k) {
      Dart t = g1.rot({v, k});
      perm(product_vertex(g1, v, k - 1), product_vertex(g1, t.vertex, t.port - 1)) = 1;
    }

  IntMatrix blow = IntMatrix::kronecker(IntMatrix::identity(g1.vertex_count()), g2.adjacency_matrix());
  IntMatrix rhs = blow * perm * blow;

  MatrixIdentityReport rep;
  rep.holds = true;
  for (int r = 0; r < n && rep.holds; ++r)
    for (int c = 0; c < n; ++c)
      if (azz(r, c) != rhs(r, c)) {
        rep.holds = false;
        rep.row = r;
        rep.col = c;
        rep.lhs = azz(r, c);
        rep.rhs = rhs(r, c);
        break;
      }
  return rep;
}

ResidualDecomposition residual_decomposition(const RotationGraph& g1, const RotationGraph& g2) {
  check_factors(g1, g2, {true});
  const int d2 = g2.degree();
  const std::int64_t denom = static_cast<std::int64_t>(d2 + 1) * (d2 + 1) * (d2 + 1) - static_cast<std::int64_t>(d2) * d2;

  IntMatrix ar = replacement_product(g1, g2, {true}).adjacency_matrix();
  IntMatrix azz = zigzag_product(g1, g2, {true}).adjacency_matrix();
  IntMatrix cube = ar * ar * ar;
  IntMatrix d = cube - azz;

  for (int r = 0; r < d.rows(); ++r)
    for (int c = 0; c < d.cols(); ++c)
      if (d(r, c) < 0)
        fail(Errc::NegativeResidual, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                         ") of A_r^3 - A_zz is negative");
  if (!d.is_symmetric()) fail(Errc::NegativeResidual, "residual is not symmetric");
  for (std::int64_t s : d.row_sums())
    if (s != denom)
      fail(Errc::NegativeResidual,
           "residual row sum " + std::to_string(s) + " != " + std::to_string(denom));

  return {std::move(d), denom};
}

}  // namespace zzlab
