#pragma once

#include <cstdint>
#include <string>

#include "zzlab/core.hpp"

namespace zzlab {

// Generators of the basilica automaton group and their inverses, with the
// fixed port convention a=1, a^-1=2, b=3, b^-1=4 (so {a,b} ride odd ports).
enum class BasilicaGen : int { A = 1, AInv = 2, B = 3, BInv = 4 };

BasilicaGen basilica_inverse(BasilicaGen s);
const char* basilica_gen_name(BasilicaGen s);

// Action on binary words ('0'/'1' strings):
//   a(0w)=0 b(w)   a(1w)=1w   b(0w)=1 a(w)   b(1w)=0w
// and the derived inverse rules. The empty word is fixed.
std::string basilica_act(BasilicaGen s, const std::string& w);

// Level-n Schreier graph: vertices {0,1}^n, rot(v, port(s)) = (s(v), port(s^-1)).
// 4-regular and connected on 2^n vertices.
RotationGraph schreier_graph(int n);

// Order of the permutation w -> a(b^-1(w)) on {0,1}^n.
std::uint64_t ab_inverse_order(int n);

// The length-4 cycle on {a, a^-1, b, b^-1} with matching labels at both ends
// of every edge; an alternative second factor whose unlabeled zig-zag
// products agree with cycle_graph(4)'s.
RotationGraph c4_generator_labelled();

struct BasilicaZigzagReport {
  int level = 0;
  int product_vertices = 0;
  bool connected = false;
  int dc_length = 0;  // 0 when not recognized
  int expected_length = 0;
  bool ok = false;
};
// Gamma_n (z) C_4 is connected and the double cycle of length 2^{n+1}.
BasilicaZigzagReport basilica_zigzag_check(int n);

struct BasilicaSpectrumReport {
  int level = 0;
  bool tensor_ok = false;        // reordered adjacency equals U (x) M~ exactly
  double max_spectrum_diff = 0;  // numeric eigenvalues vs the closed form
  bool spectrum_ok = false;
  double max_residual = 0;       // ||Mx - lambda x||_inf over u_i (x) v_j
  bool residual_ok = false;
  bool ok = false;
};
// Reorders the product along the alternating (b^-1, a) orbit of 0^n, checks
// the U (x) circulant form, the closed-form spectrum (1e-9) and the tensor
// eigenvectors (residuals below 1e-8).
BasilicaSpectrumReport basilica_spectrum_check(int n);

}  // namespace zzlab
