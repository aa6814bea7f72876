#pragma once

#include <string>
#include <vector>

#include "bdg/graph.hpp"

namespace bdg {

/// Exact threshold value; den is 1 or 2 after normalization.
struct Rational {
  long long num{0};
  long long den{1};

  Rational() = default;
  Rational(long long n, long long d);

  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& r);

enum class ConditionKind { ak_star, ak, strict_half_sum, dirac_bipartite };

const char* condition_name(ConditionKind kind);

struct ConditionSpec {
  ConditionKind kind{ConditionKind::ak_star};
  int k{0};

  static ConditionSpec ak_star(int k) { return {ConditionKind::ak_star, k}; }
  static ConditionSpec ak(int k) { return {ConditionKind::ak, k}; }
  static ConditionSpec strict_half_sum() { return {ConditionKind::strict_half_sum, 0}; }
  static ConditionSpec dirac_bipartite() { return {ConditionKind::dirac_bipartite, 0}; }
};

/// For pair conditions: ordered pair (u, v), u -> v absent, sum = d+(u) + d-(v).
/// For the minimum-degree condition: u == v and sum is the deficient degree.
struct Violation {
  Vertex u, v;
  int sum{0};

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ConditionReport {
  bool holds{true};
  std::vector<Violation> violations;  // ascending scan order, see check()
  Rational threshold;
};

/// Degree-condition evaluation with every listed violation.  All comparisons
/// use exact integer arithmetic.
///
/// ak_star          requires a == b; pairs are ordered opposite-class
///                  non-adjacent pairs, both orientations, bound a + k.
/// ak               requires a <= b; additionally quantifies over ordered
///                  same-class pairs (always non-adjacent), bound a + k.
/// strict_half_sum  requires a <= b; opposite-class non-adjacent ordered
///                  pairs must satisfy sum > (a + b + 2) / 2.
/// dirac_bipartite  requires a <= b; every vertex needs out- and in-degree
///                  >= (a + 2) / 2.
///
/// Scan order of violations: X->Y pairs, then Y->X, each lexicographic by
/// index; for ak then X->X and Y->Y pairs; for dirac_bipartite out-degree
/// deficiencies (X then Y ascending) followed by in-degree deficiencies.
ConditionReport check(const BipartiteDigraph& d, ConditionSpec spec);

}  // namespace bdg
