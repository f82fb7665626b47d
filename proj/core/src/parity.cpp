#include "zzlab/parity.hpp"

#include <algorithm>
#include <queue>

#include "zzlab/generators.hpp"
#include "zzlab/products.hpp"

namespace zzlab {

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Odden: return "odden";
  }
  return "?";
}

bool ParityBlock::contains(int v) const {
  return std::any_of(members.begin(), members.end(), [v](const auto& m) { return m.first == v; });
}

Parity ParityBlock::parity_of(int v) const {
  for (const auto& [u, p] : members)
    if (u == v) return p;
  fail(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " is not a member of block " + std::to_string(id));
}

int ParityBlock::odden_count() const {
  return static_cast<int>(
      std::count_if(members.begin(), members.end(), [](const auto& m) { return m.second == Parity::Odden; }));
}

namespace {

// State encoding: 2v for even departures, 2v+1 for odd ones.
inline int state_of_dart(const Dart& d) { return 2 * d.vertex + d.port % 2; }

}  // namespace

ParityDecomposition parity_decomposition(const RotationGraph& g) {
  if (g.degree() % 2 != 0)
    fail(Errc::OddDegree, "parity decomposition needs an even degree, got " + std::to_string(g.degree()));

  const int n_states = 2 * g.vertex_count();
  std::vector<std::vector<int>> adj(n_states);
  for (const auto& [x, y] : g.dart_pairs()) {
    adj[state_of_dart(x)].push_back(state_of_dart(y));
    adj[state_of_dart(y)].push_back(state_of_dart(x));
  }

  std::vector<int> state_block(n_states, -1);
  int n_blocks = 0;
  for (int s = 0; s < n_states; ++s) {
    if (state_block[s] != -1) continue;
    std::queue<int> q;
    q.push(s);
    state_block[s] = n_blocks;
    while (!q.empty()) {
      int t = q.front();
      q.pop();
      for (int u : adj[t])
        if (state_block[u] == -1) {
          state_block[u] = n_blocks;
          q.push(u);
        }
    }
    ++n_blocks;
  }

  ParityDecomposition dec;
  dec.half_degree = g.degree() / 2;
  dec.blocks.resize(n_blocks);
  for (int b = 0; b < n_blocks; ++b) dec.blocks[b].id = b;

  for (int v = 0; v < g.vertex_count(); ++v) {
    int be = state_block[2 * v];      // even-departure state
    int bo = state_block[2 * v + 1];  // odd-departure state
    if (be == bo) {
      dec.blocks[be].members.push_back({v, Parity::Odden});
    } else {
      dec.blocks[be].members.push_back({v, Parity::Even});
      dec.blocks[bo].members.push_back({v, Parity::Odd});
    }
  }

  dec.dart_block.resize(g.dart_count());
  for (int id = 0; id < g.dart_count(); ++id) {
    int b = state_block[state_of_dart(g.dart(id))];
    dec.dart_block[id] = b;
    dec.blocks[b].darts.push_back(id);
  }
  return dec;
}

BlockComponentCorrespondence block_component_correspondence(const RotationGraph& g) {
  if (g.degree() % 2 != 0) fail(Errc::OddDegree, "even degree required");
  if (g.degree() < 4) fail(Errc::SizeTooSmall, "degree must be at least 4");
  const int deg = g.degree();

  ParityDecomposition dec = parity_decomposition(g);
  RotationGraph product = zigzag_product(g, cycle_graph(deg), {.allow_disconnected = true});
  std::vector<std::vector<int>> comps = product.connected_components();

  std::vector<int> comp_of(product.vertex_count(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);

  if (comps.size() != dec.blocks.size())
    fail(Errc::CorrespondenceViolated,
         std::to_string(dec.blocks.size()) + " blocks vs " + std::to_string(comps.size()) + " components");

  BlockComponentCorrespondence out{std::move(product), {}};
  std::vector<char> claimed(comps.size(), 0);
  for (const ParityBlock& block : dec.blocks) {
    std::vector<int> expected;
    for (const auto& [v, tag] : block.members)
      for (int j = 1; j <= deg; ++j) {
        bool take = tag == Parity::Odden || (tag == Parity::Even && j % 2 == 1) ||
                    (tag == Parity::Odd && j % 2 == 0);
        if (take) expected.push_back(v * deg + (j - 1));
      }
    std::sort(expected.begin(), expected.end());
    if (expected.empty()) fail(Errc::CorrespondenceViolated, "empty block expectation");
    int c = comp_of[expected.front()];
    if (claimed[c] || comps[c] != expected)
      fail(Errc::CorrespondenceViolated, "block " + std::to_string(block.id) +
                                             " does not match a product component exactly");
    claimed[c] = 1;
    out.entries.push_back({block.id, c, std::move(expected)});
  }
  return out;
}

int PseudoReplacement::index_of(int v, int label) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), std::make_pair(v, label));
  if (it == vertices.end() || *it != std::make_pair(v, label))
    fail(Errc::VertexOutOfRange, "no pseudo-replacement vertex (" + std::to_string(v) + "," + std::to_string(label) + ")");
  return static_cast<int>(it - vertices.begin());
}

PseudoReplacement pseudo_replacement(const RotationGraph& g, const ParityBlock& block) {
  if (g.degree() % 2 != 0) fail(Errc::OddDegree, "even degree required");
  if (g.degree() < 4) fail(Errc::SizeTooSmall, "pseudo-replacement needs degree >= 4");
  const int deg = g.degree();
  const int d = deg / 2;

  PseudoReplacement out;
  for (const auto& [v, tag] : block.members)
    for (int j = 1; j <= deg; ++j) {
      bool take = tag == Parity::Odden || (tag == Parity::Even && j % 2 == 0) ||
                  (tag == Parity::Odd && j % 2 == 1);
      if (take) out.vertices.push_back({v, j});
    }
  std::sort(out.vertices.begin(), out.vertices.end());

  IntMatrix adj(static_cast<int>(out.vertices.size()), static_cast<int>(out.vertices.size()));

  // Cycle edges inside each label class: j adjacent to j +- 2, wrapping; for
  // d = 2 both directions collapse onto the same pair, giving a doubled edge.
  for (const auto& [v, tag] : block.members) {
    std::vector<int> classes;
    if (tag == Parity::Even || tag == Parity::Odden) classes.push_back(2);
    if (tag == Parity::Odd || tag == Parity::Odden) classes.push_back(1);
    for (int start : classes)
      for (int t = 0; t < d; ++t) {
        int a = out.index_of(v, start + 2 * t);
        int b = out.index_of(v, start + 2 * ((t + 1) % d));
        adj(a, b) += 1;
        adj(b, a) += 1;
      }
  }

  // Crossing edges: one per block edge.
  for (int id : block.darts) {
    int pid = g.rot_id(id);
    if (pid < id) continue;
    Dart x = g.dart(id), y = g.dart(pid);
    int a = out.index_of(x.vertex, x.port);
    int b = out.index_of(y.vertex, y.port);
    adj(a, b) += 1;
    adj(b, a) += 1;
  }

  out.graph = Multigraph(std::move(adj));
  return out;
}

std::vector<int> spanning_path(const RotationGraph& g, const ParityBlock& block) {
  if (g.degree() != 4) fail(Errc::DegreeNot4, "spanning paths are defined for 4-regular graphs");
  if (block.darts.empty()) fail(Errc::SizeTooSmall, "empty block");

  auto sibling = [](int port) { return port <= 2 ? port + 2 : port - 2; };

  const Dart first = g.dart(block.darts.front());
  std::vector<int> vertices;
  Dart depart = first;
  do {
    vertices.push_back(depart.vertex);
    Dart arrive = g.rot(depart);
    depart = {arrive.vertex, sibling(arrive.port)};
  } while (depart != first);

  if (vertices.size() * 2 != block.darts.size())
    fail(Errc::CorrespondenceViolated, "spanning walk did not cover the block");
  return vertices;
}

bool block_profile_feasible(int d, int i, int p) {
  if (i > 0) {
    if (p != 2 * d + 1) return false;
    if (i == 2 * d + 1) return true;
    return i <= d && ((2 * d + 1 - i) * (d - i)) % 2 == 0;
  }
  return p >= d + 1 && (p * d) % 2 == 0;
}

bool block_profile_feasible_stated(int d, int i, int p) {
  if (i > 0) return p == 2 * d + 1 && ((i - 1) * (d - 1)) % 2 == 0;
  return p >= d + 1 && (p * d) % 2 == 0;
}

int CycleAutomorphism::apply_position(int t, int d) const {
  int r = reflect ? shift - t : shift + t;
  return ((r % d) + d) % d;
}

CycleAutomorphism CycleAutomorphism::after(const CycleAutomorphism& inner, int d) const {
  CycleAutomorphism out;
  out.reflect = reflect != inner.reflect;
  int s = reflect ? shift - inner.shift : shift + inner.shift;
  out.shift = ((s % d) + d) % d;
  return out;
}

namespace {

// label <-> position along the class cycle 1,3,5,... (odd) or 2,4,6,... (even)
inline int label_position(int label) { return (label - 1) / 2; }
inline int position_label(int t, bool odd_class) { return 2 * t + (odd_class ? 1 : 2); }
inline bool is_odd_label(int label) { return label % 2 == 1; }

}  // namespace

IsoclassResult isoclass_build(const RotationGraph& g_first, const ParityBlock& first,
                              const RotationGraph& g_second, const ParityBlock& second,
                              const IsoclassAssignment& assignment) {
  if (g_first.degree() != g_second.degree()) fail(Errc::DegreeMismatch, "blocks come from graphs of equal degree");
  const int d = g_first.degree() / 2;
  if (g_first.degree() % 2 != 0 || d < 1) fail(Errc::OddDegree, "even degree required");

  // f must map the block members bijectively, odden to odden and non-odden to
  // non-odden.
  if (first.members.size() != second.members.size())
    fail(Errc::NotPartitionPreserving, "blocks have different sizes");
  if (assignment.f.size() != first.members.size())
    fail(Errc::NotPartitionPreserving, "f must assign every member of the first block");
  std::vector<int> image;
  for (const auto& [v, tag] : first.members) {
    auto it = assignment.f.find(v);
    if (it == assignment.f.end()) fail(Errc::NotPartitionPreserving, "f misses vertex " + std::to_string(v));
    if (!second.contains(it->second))
      fail(Errc::NotPartitionPreserving, "f maps outside the second block");
    bool odden_src = tag == Parity::Odden;
    bool odden_dst = second.parity_of(it->second) == Parity::Odden;
    if (odden_src != odden_dst)
      fail(Errc::NotPartitionPreserving, "f must map full-degree vertices to full-degree vertices");
    image.push_back(it->second);
  }
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end())
    fail(Errc::NotPartitionPreserving, "f is not injective");

  // Effective label map at vertex u for a label of class i: a dihedral
  // position map plus the class the image lands in.
  struct Eff {
    CycleAutomorphism pos;
    bool target_odd;
  };
  auto effective = [&](int u, bool odd_class) -> Eff {
    Parity tag = first.parity_of(u);
    if (tag == Parity::Odden) {
      auto git = assignment.g_odden.find(u);
      if (git == assignment.g_odden.end())
        fail(Errc::UsageError, "missing cycle automorphism pair for odden vertex " + std::to_string(u));
      bool swap = false;
      if (auto eit = assignment.eps_swap.find(u); eit != assignment.eps_swap.end()) swap = eit->second;
      bool target_odd = swap ? !odd_class : odd_class;
      const CycleAutomorphism& phi = target_odd ? git->second.second : git->second.first;
      return {phi, target_odd};
    }
    auto git = assignment.g_single.find(u);
    if (git == assignment.g_single.end())
      fail(Errc::UsageError, "missing cycle automorphism for vertex " + std::to_string(u));
    Parity dst = second.parity_of(assignment.f.at(u));
    bool target_odd = dst == Parity::Odd;
    return {git->second, target_odd};
  };

  auto apply = [&](int u, int label) -> std::pair<int, int> {
    Eff e = effective(u, is_odd_label(label));
    int t = e.pos.apply_position(label_position(label), d);
    return {assignment.f.at(u), position_label(t, e.target_odd)};
  };

  IsoclassResult result;
  for (int id : first.darts) {
    int pid = g_first.rot_id(id);
    if (pid < id) continue;
    Dart x = g_first.dart(id), y = g_first.dart(pid);
    auto [fu, fh] = apply(x.vertex, x.port);
    auto [fv, fk] = apply(y.vertex, y.port);
    Dart mapped = g_second.rot({fu, fh});
    if (mapped != Dart{fv, fk}) {
      bool x_odden = first.parity_of(x.vertex) == Parity::Odden;
      bool y_odden = first.parity_of(y.vertex) == Parity::Odden;
      result.ok = false;
      result.failure.condition = x_odden && y_odden ? 3 : (x_odden || y_odden ? 2 : 1);
      result.failure.dart = x;
      return result;
    }
  }

  // Conditions hold; assemble the map and verify it is an isomorphism of the
  // two pseudo-replacement graphs.
  PseudoReplacement r1 = pseudo_replacement(g_first, first);
  PseudoReplacement r2 = pseudo_replacement(g_second, second);
  std::vector<int> perm(r1.vertices.size());
  for (std::size_t idx = 0; idx < r1.vertices.size(); ++idx) {
    auto [v, label] = r1.vertices[idx];
    auto [fv, flabel] = apply(v, label);
    perm[idx] = r2.index_of(fv, flabel);
    result.mapping.push_back({{v, label}, {fv, flabel}});
  }
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = 0; b < perm.size(); ++b)
      if (r1.graph.adj(static_cast<int>(a), static_cast<int>(b)) !=
          r2.graph.adj(perm[a], perm[b]))
        fail(Errc::CorrespondenceViolated, "conditions hold but the induced map is not an isomorphism");
  result.ok = true;
  return result;
}

}  // namespace zzlab
