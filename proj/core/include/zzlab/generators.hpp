#pragma once

#include <cstdint>
#include <string>

#include "zzlab/core.hpp"

namespace zzlab {

// Closed set of named constructions reachable from the CLI.
enum class LabellingScheme {
  CycleCayley,        // cycle with Rot(u,1)=(u+1,2)
  CompleteGood,       // K_{2d+1} with Rot(i,j)=(i+j, 2d-j+1)
  CompleteExample42,  // K_5, two parity blocks (sizes 5 and 4)
  CompleteExample53,  // K_5, one parity block, all vertices odden
  CompleteExample56,  // K_5, components DC_6 and DC_4 under (z) C_4
  HammingCube,
  DoubleCycle,
};

LabellingScheme parse_labelling_scheme(const std::string& name);
const char* labelling_scheme_name(LabellingScheme s);

// C_n: degree 2, vertices "1".."n", Rot(u,1)=(u+1,2), Rot(u,2)=(u-1,1)
// cyclically. n = 2 yields a doubled edge.
RotationGraph cycle_graph(int n);

// K_{2d+1} with the labelling Rot(i,j) = (i+j mod 2d+1, 2d-j+1); a single
// all-odden parity block, so the zig-zag with C_{2d} is connected.
RotationGraph complete_good(int d);

// Dispatch over the complete-graph labellings (parameter is d for
// CompleteGood, ignored for the fixed K_5 fixtures).
RotationGraph complete_graph(LabellingScheme variant, int parameter = 0);

// {0,1}^k with Rot(v,i) = (v xor e_i, i); port i flips letter i-1.
RotationGraph hamming_cube(int k);

// 4-regular graph on 2n vertices outer_0..outer_{n-1}, inner_0..inner_{n-1}:
// ring edges outer_i-outer_{i+1}, inner_i-inner_{i+1} and crossings
// outer_i-inner_{i+1}, inner_i-outer_{i+1}. Forward darts ride ports 1
// (same ring) and 3 (crossing); backward darts ports 2 and 4.
RotationGraph double_cycle(int n);

// Connected bi-labelled regular multigraph from a seeded uniform perfect
// matching of the n*degree darts, redrawn until connected. Deterministic for
// a fixed (n, degree, seed) across platforms.
RotationGraph random_regular_graph(int n, int degree, std::uint64_t seed);

namespace detail {
// double_cycle without the n >= 2 guard; n = 1 degenerates to a loop on each
// ring vertex plus a doubled crossing. Used by double-cycle recognition.
RotationGraph double_cycle_any(int n);
}  // namespace detail

}  // namespace zzlab
