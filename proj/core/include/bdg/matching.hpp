#pragma once

#include <variant>
#include <vector>

#include "bdg/graph.hpp"

namespace bdg {

/// Injective assignment x -> y; every bound pair must be backed by a present
/// X->Y arc of the digraph it was built for.
class Matching {
public:
  Matching() = default;
  Matching(int a, int b);

  int host_a() const { return static_cast<int>(to_y_.size()); }
  int host_b() const { return static_cast<int>(to_x_.size()); }

  bool complete() const;  // every x matched
  int pair_count() const;

  int y_of(int x) const;  // -1 when unmatched
  int x_of(int y) const;

  void bind(int x, int y);  // x and y must both be free

  friend bool operator==(const Matching&, const Matching&) = default;

private:
  std::vector<int> to_y_, to_x_;
};

/// Certificate that no complete X->Y matching exists: a set S of X-indices
/// whose joint out-neighbourhood is smaller than S.  Both lists ascending.
struct HallViolator {
  std::vector<int> members;       // X indices
  std::vector<int> neighborhood;  // Y indices, exactly the out-neighbourhood of members
};

/// Deterministic augmenting-path search: X processed in ascending order, each
/// augmentation first tries the least free neighbour, then alternating paths
/// in ascending Y order.  Requires a <= b.  On failure, the returned violator
/// is the alternating tree of the first x that cannot be matched.
std::variant<Matching, HallViolator> complete_matching(const BipartiteDigraph& d);

struct WitnessPair {
  Vertex u, v;
  int sum{0};
};

/// Converts a Hall violator of a balanced digraph into the lexicographically
/// least non-adjacent pair (x in S, y outside the neighbourhood); the degree
/// sum of such a pair is at most a - 1.  Throws not_a_violator when the
/// certificate does not check out against d.
WitnessPair hall_to_witness(const BipartiteDigraph& d, const HallViolator& viol);

}  // namespace bdg
