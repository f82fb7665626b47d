#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zzlab/core.hpp"

namespace zzlab {

struct ProductOptions {
  // Both factors must normally be connected; analyses on disconnected inputs
  // can opt out.
  bool allow_disconnected = false;
};

// Vertices of either product are pairs (cloud, inner) with cloud a vertex of
// g1 and inner a vertex of g2 identified with a port of g1. Cloud-major
// (lexicographic) order: index = cloud * d1 + inner.
int product_vertex(const RotationGraph& g1, int cloud, int inner);

// Degree d2+1: ports 1..d2 follow g2 inside the cloud, port d2+1 jumps along
// the g1 edge keeping its port.
RotationGraph replacement_product(const RotationGraph& g1, const RotationGraph& g2,
                                  ProductOptions opt = {});

// Degree d2^2: the dart ((v,k),(i,j)) steps inside the cloud via
// Rot_g2(k,i)=(k',i'), jumps via Rot_g1(v,k')=(w,l'), steps again via
// Rot_g2(l',j)=(l,j'), landing on ((w,l),(j',i')).
RotationGraph zigzag_product(const RotationGraph& g1, const RotationGraph& g2,
                             ProductOptions opt = {});

// Flattening of the zig-zag port pair (i,j) in [d2]^2 to (i-1)*d2 + j.
int zigzag_port(int i, int j, int d2);
std::pair<int, int> zigzag_port_split(int port, int d2);

// The complete bipartite K_{d2,d2} that one g1 edge spawns in the zig-zag
// product: sides are the product vertices over the g2-neighbour multisets of
// the edge's two ports. Construction is certified against the product's
// rotation map (exactly d2^2 edges, multiplicities included).
struct PapillonBlock {
  Dart g1_dart;                 // (v,k); the edge is (v,k)-(w,l)
  std::vector<int> side_v;      // product vertex ids (v, k_1..k_{d2})
  std::vector<int> side_w;      // product vertex ids (w, l_1..l_{d2})
  std::vector<std::pair<int, int>> product_edges;  // the d2^2 certified edges
};
PapillonBlock papillon_blocks(const RotationGraph& g1, const RotationGraph& g2, Dart g1_dart);

// Integer identity A_zz = (I (x) A2) * P1 * (I (x) A2) with P1 the
// permutation matrix of g1's rotation map on V1 x [d1].
struct MatrixIdentityReport {
  bool holds = false;
  int row = -1, col = -1;  // first mismatching entry when !holds
  std::int64_t lhs = 0, rhs = 0;
};
MatrixIdentityReport zz_matrix_identity(const RotationGraph& g1, const RotationGraph& g2);

// D = A_r^3 - A_zz is entrywise nonnegative, symmetric, with constant row
// sum (d2+1)^3 - d2^2; C = D / ((d2+1)^3 - d2^2) is the normalized adjacency
// matrix of a regular graph. Returned exactly as numerator/denominator.
struct ResidualDecomposition {
  IntMatrix numerator;
  std::int64_t denominator = 0;
};
ResidualDecomposition residual_decomposition(const RotationGraph& g1, const RotationGraph& g2);

}  // namespace zzlab
