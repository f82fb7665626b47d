#include "zzlab/iso.hpp"

#include <algorithm>
#include <map>

#include "zzlab/generators.hpp"

namespace zzlab {

Multigraph Multigraph::induced(const IntMatrix& adj, const std::vector<int>& vertices) {
  const int n = static_cast<int>(vertices.size());
  IntMatrix sub(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sub(i, j) = adj(vertices[i], vertices[j]);
  return Multigraph(std::move(sub));
}

namespace {

constexpr int kSizeLimit = 4096;

using AdjList = std::vector<std::vector<std::pair<int, std::int64_t>>>;  // (neighbour, multiplicity)

AdjList adjacency_list(const IntMatrix& m) {
  AdjList out(m.rows());
  for (int v = 0; v < m.rows(); ++v)
    for (int u = 0; u < m.cols(); ++u)
      if (u != v && m(v, u) != 0) out[v].push_back({u, m(v, u)});
  return out;
}

struct Coloring {
  std::vector<int> a, b;  // colour per vertex
  int colors = 0;
};

// One synchronized refinement pass over both graphs. Signatures are compared
// structurally (no hashing) so colour ids are stable across platforms.
// Returns false as soon as the two graphs disagree on a colour class size.
bool refine(const AdjList& A, const AdjList& B, Coloring& c) {
  const int n = static_cast<int>(A.size());
  using Sig = std::pair<int, std::vector<std::pair<int, std::int64_t>>>;
  for (;;) {
    auto signature = [](const AdjList& adj, const std::vector<int>& col, int v) {
      Sig s{col[v], {}};
      s.second.reserve(adj[v].size());
      for (const auto& [u, mult] : adj[v]) s.second.push_back({col[u], mult});
      std::sort(s.second.begin(), s.second.end());
      return s;
    };

    std::vector<Sig> sa(n), sb(n);
    for (int v = 0; v < n; ++v) sa[v] = signature(A, c.a, v);
    for (int v = 0; v < n; ++v) sb[v] = signature(B, c.b, v);
    std::map<Sig, int> ids;
    for (int v = 0; v < n; ++v) ids.emplace(sa[v], 0);
    for (int v = 0; v < n; ++v) ids.emplace(sb[v], 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;

    std::vector<int> na(n), nb(n);
    std::vector<int> count_a(next, 0), count_b(next, 0);
    for (int v = 0; v < n; ++v) count_a[na[v] = ids[sa[v]]]++;
    for (int v = 0; v < n; ++v) count_b[nb[v] = ids[sb[v]]]++;
    if (count_a != count_b) return false;

    bool stable = next == c.colors;
    c.a = std::move(na);
    c.b = std::move(nb);
    c.colors = next;
    if (stable) return true;
  }
}

bool verified_mapping(const IntMatrix& A, const IntMatrix& B, const std::vector<int>& map) {
  const int n = A.rows();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (A(u, v) != B(map[u], map[v])) return false;
  return true;
}

bool search(const IntMatrix& MA, const IntMatrix& MB, const AdjList& A, const AdjList& B, Coloring c,
            std::vector<int>& out) {
  if (!refine(A, B, c)) return false;
  const int n = static_cast<int>(A.size());

  // Smallest non-singleton class, lowest colour id breaking ties.
  std::vector<int> class_size(c.colors, 0);
  for (int v = 0; v < n; ++v) class_size[c.a[v]]++;
  int target = -1;
  for (int col = 0; col < c.colors; ++col)
    if (class_size[col] > 1 && (target == -1 || class_size[col] < class_size[target])) target = col;

  if (target == -1) {
    // Discrete colouring: pair the singletons.
    std::vector<int> map(n, -1), where(c.colors, -1);
    for (int v = 0; v < n; ++v) where[c.b[v]] = v;
    for (int v = 0; v < n; ++v) map[v] = where[c.a[v]];
    if (!verified_mapping(MA, MB, map)) return false;
    out = std::move(map);
    return true;
  }

  int u = -1;
  for (int v = 0; v < n; ++v)
    if (c.a[v] == target) {
      u = v;
      break;
    }
  for (int v = 0; v < n; ++v) {
    if (c.b[v] != target) continue;
    Coloring next = c;
    next.a[u] = next.colors;
    next.b[v] = next.colors;
    next.colors++;
    if (search(MA, MB, A, B, std::move(next), out)) return true;
  }
  return false;
}

}  // namespace

std::optional<IsoCertificate> is_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.size() > kSizeLimit || b.size() > kSizeLimit)
    fail(Errc::SizeLimitExceeded, "isomorphism engine is limited to " + std::to_string(kSizeLimit) + " vertices");
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  if (n == 0) return IsoCertificate{{}, true};

  // Initial colours: loop entry on the diagonal.
  std::map<std::int64_t, int> diag_ids;
  for (int v = 0; v < n; ++v) diag_ids.emplace(a.adj(v, v), 0);
  for (int v = 0; v < n; ++v) diag_ids.emplace(b.adj(v, v), 0);
  int next = 0;
  for (auto& [d, id] : diag_ids) id = next++;

  Coloring c;
  c.a.resize(n);
  c.b.resize(n);
  c.colors = next;
  for (int v = 0; v < n; ++v) c.a[v] = diag_ids[a.adj(v, v)];
  for (int v = 0; v < n; ++v) c.b[v] = diag_ids[b.adj(v, v)];

  AdjList la = adjacency_list(a.adj), lb = adjacency_list(b.adj);
  std::vector<int> mapping;
  if (!search(a.adj, b.adj, la, lb, std::move(c), mapping)) return std::nullopt;

  IsoCertificate cert;
  cert.mapping = std::move(mapping);
  cert.verified = verified_mapping(a.adj, b.adj, cert.mapping);
  if (!cert.verified) return std::nullopt;  // unreachable; the leaf already verified
  return cert;
}

std::optional<int> recognize_double_cycle(const Multigraph& g) {
  const int size = g.size();
  if (size < 2 || size % 2 != 0) return std::nullopt;
  for (int v = 0; v < size; ++v) {
    std::int64_t deg = 0;
    for (int u = 0; u < size; ++u) deg += g.adj(v, u);
    if (deg != 4) return std::nullopt;
  }
  const int n = size / 2;
  Multigraph dc = Multigraph::from_rotation(detail::double_cycle_any(n));
  if (is_isomorphic(g, dc)) return n;
  return std::nullopt;
}

}  // namespace zzlab
