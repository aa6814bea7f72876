#pragma once

#include <cstdint>
#include <string_view>

#include "bdg/graph.hpp"

namespace bdg {

/// All arcs in both directions between the classes.
BipartiteDigraph complete_bipartite(int a, int b);

/// Parameters of the two-block sharpness family: the disjoint union of the
/// complete bipartite digraphs on (1, k + 2) and (a - 1, b - k - 2).
/// Requires a >= 2, k >= 0 and b >= a + 2k + 2.
struct TwoBlockParams {
  int a{2};
  int b{4};
  int k{0};
};

/// First block: x0 with y0 .. y_{k+1}; second block: x1 .. x_{a-1} with
/// y_{k+2} .. y_{b-1}.  Every non-adjacent opposite-class pair has degree sum
/// a + k + 1 or b - k - 1, and no cycle passes through all of X.
BipartiteDigraph two_block_family(TwoBlockParams params);

/// The least balanced 3 + 3 instance (in enumeration-code order) in which
/// every vertex has out- and in-degree exactly 2 yet no spanning cycle
/// exists.  Found once by exhaustive search and cached.
const BipartiteDigraph& regular_nonhamiltonian_example();

/// Generator "bdg-rand v1": std::mt19937_64 seeded with `seed`, one 64-bit
/// draw per arc slot in canonical order (X->Y matrix row-major, then Y->X
/// row-major); the arc is present iff (draw >> 11) < floor(p * 2^53).
/// Identical (a, b, p, seed) give the identical digraph on any platform.
BipartiteDigraph random_digraph(int a, int b, double arc_probability, std::uint64_t seed);

inline constexpr std::string_view random_generator_name = "bdg-rand-v1";

/// Balanced random instance satisfying the two-orientation pair condition at
/// level k.  Rejection-samples bdg-rand draws from the schedule
/// p_t = (0.9, 0.95, 0.85)[t mod 3] on one seeded stream; after 100000
/// rejections the last sample is repaired by adding, for each violating pair
/// (u, v) in scan order, arcs from u to its least-index non-out-neighbours
/// until the pair is adjacent or meets the bound, re-checking until the
/// condition holds.
BipartiteDigraph random_satisfying(int a, int k, std::uint64_t seed);

}  // namespace bdg
