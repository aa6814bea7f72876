#include "bdg/generators.hpp"

#include <random>

#include "bdg/conditions.hpp"
#include "bdg/oracle.hpp"

namespace bdg {

namespace {

void check_sizes(int a, int b) {
  if (a < 1 || b < 1) raise(Errc::invalid_params, "class sizes must be at least 1");
}

void add_block(BipartiteDigraph& d, int x_lo, int x_hi, int y_lo, int y_hi) {
  for (int i = x_lo; i < x_hi; ++i)
    for (int j = y_lo; j < y_hi; ++j) {
      d.add_arc(vx(i), vy(j));
      d.add_arc(vy(j), vx(i));
    }
}

// One bdg-rand-v1 sample off an already running stream.
BipartiteDigraph draw_one(int a, int b, double p, std::mt19937_64& rng) {
  const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
  BipartiteDigraph d(a, b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (rng() >> 11 < threshold) d.add_arc(vx(i), vy(j));
  for (int j = 0; j < b; ++j)
    for (int i = 0; i < a; ++i)
      if (rng() >> 11 < threshold) d.add_arc(vy(j), vx(i));
  return d;
}

}  // namespace

BipartiteDigraph complete_bipartite(int a, int b) {
  check_sizes(a, b);
  BipartiteDigraph d(a, b);
  add_block(d, 0, a, 0, b);
  return d;
}

BipartiteDigraph two_block_family(TwoBlockParams params) {
  const auto [a, b, k] = params;
  if (a < 2 || k < 0 || b < a + 2 * k + 2)
    raise(Errc::invalid_params, "two-block family needs a >= 2, k >= 0, b >= a + 2k + 2");
  BipartiteDigraph d(a, b);
  add_block(d, 0, 1, 0, k + 2);
  add_block(d, 1, a, k + 2, b);
  return d;
}

const BipartiteDigraph& regular_nonhamiltonian_example() {
  static const BipartiteDigraph cached = [] {
    for (const auto& [code, d] : DigraphEnumeration(3, 3)) {
      bool regular = true;
      for (int i = 0; i < 3 && regular; ++i) {
        const DegreePair dx = d.degrees(vx(i)), dy = d.degrees(vy(i));
        regular = dx.out == 2 && dx.in == 2 && dy.out == 2 && dy.in == 2;
      }
      if (regular && !brute_cycle(d, 6)) return d;
    }
    raise(Errc::search_failed, "no 2-regular non-spanning 3+3 instance found");
  }();
  return cached;
}

BipartiteDigraph random_digraph(int a, int b, double arc_probability,
                                std::uint64_t seed) {
  check_sizes(a, b);
  if (!(arc_probability >= 0.0 && arc_probability <= 1.0))
    raise(Errc::invalid_params, "arc probability outside [0, 1]");
  std::mt19937_64 rng(seed);
  return draw_one(a, b, arc_probability, rng);
}

BipartiteDigraph random_satisfying(int a, int k, std::uint64_t seed) {
  if (a < 2) raise(Errc::invalid_params, "needs a >= 2");
  if (k < 0) raise(Errc::invalid_params, "negative k");
  const ConditionSpec spec = ConditionSpec::ak_star(k);
  constexpr double schedule[] = {0.9, 0.95, 0.85};
  std::mt19937_64 rng(seed);
  BipartiteDigraph d;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    d = draw_one(a, a, schedule[attempt % 3], rng);
    if (check(d, spec).holds) return d;
  }
  for (;;) {
    const ConditionReport report = check(d, spec);
    if (report.holds) return d;
    for (const Violation& pair : report.violations) {
      while (!d.arc(pair.u, pair.v) &&
             d.degrees(pair.u).out + d.degrees(pair.v).in < a + k) {
        const int fan = d.side_size(opposite(pair.u.side));
        for (int w = 0; w < fan; ++w) {
          const Vertex to{opposite(pair.u.side), w};
          if (!d.arc(pair.u, to)) {
            d.add_arc(pair.u, to);
            break;
          }
        }
      }
    }
  }
}

}  // namespace bdg
