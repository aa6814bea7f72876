// Acceptance gate: one line per criterion, exit 0 only when all pass.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bdg/codec.hpp"
#include "bdg/compatible.hpp"
#include "bdg/conditions.hpp"
#include "bdg/error.hpp"
#include "bdg/generators.hpp"
#include "bdg/graph.hpp"
#include "bdg/hamilton.hpp"
#include "bdg/matching.hpp"
#include "bdg/oracle.hpp"

using namespace bdg;

namespace {

struct Result {
  bool ok{true};
  std::vector<std::string> notes;
};

void expect(Result& r, bool cond, const std::string& what) {
  if (!cond) {
    r.ok = false;
    if (r.notes.size() < 8) r.notes.push_back("unmet: " + what);
  }
}

void note(Result& r, const std::string& text) { r.notes.push_back(text); }

// Every balanced instance of the given size: each level-2 satisfier must give
// a verified engine cycle confirmed by the oracle, witnesses appear only when
// the hypothesis fails, and nothing raises.
Result exhaustive_certification(int a) {
  Result r;
  const std::uint64_t n = enumeration_count(a, a);
  std::uint64_t engine_cycles = 0, oracle_cycles = 0, satisfiers = 0;
  for (std::uint64_t code = 0; code < n; ++code) {
    BipartiteDigraph d = digraph_from_code(code, a, a);
    Outcome out;
    try {
      out = find_hamiltonian(d, EngineMode::full);
    } catch (const Error& e) {
      expect(r, false, "engine raised on code " + std::to_string(code) + ": " + e.what());
      continue;
    }
    const bool sat = check(d, ConditionSpec::ak_star(2)).holds;
    const bool oracle_ham = brute_cycle(d, 2 * a).has_value();
    satisfiers += sat;
    oracle_cycles += oracle_ham;
    if (out.is_cycle()) {
      ++engine_cycles;
      expect(r, verify_hamiltonian_cycle(d, out.cycle()),
             "unverifiable cycle on code " + std::to_string(code));
      expect(r, oracle_ham, "oracle disagrees on code " + std::to_string(code));
    } else {
      expect(r, !sat, "witness on a satisfier, code " + std::to_string(code));
    }
    if (sat)
      expect(r, out.is_cycle(), "satisfier without a cycle, code " + std::to_string(code));
  }
  auto stats = exhaustive_verify(a, 2, EngineMode::full);
  VerificationStats want{n, satisfiers, satisfiers, {}, {}};
  expect(r, stats == want, "sweep census diverges from the instance loop");
  note(r, "satisfiers " + std::to_string(satisfiers) + ", engine cycles " +
              std::to_string(engine_cycles) + ", spanning-cycle instances " +
              std::to_string(oracle_cycles));
  return r;
}

Result criterion_a2() { return exhaustive_certification(2); }

Result criterion_a3() {
  Result r = exhaustive_certification(3);
  // partitioned sweeps must merge to the single-worker census
  VerificationStats whole = exhaustive_verify(3, 2, EngineMode::full);
  VerificationStats merged;
  for (int part = 0; part < 4; ++part) {
    IndexRange range{part * 65536ull, (part + 1) * 65536ull};
    merged = merge(merged, exhaustive_verify(3, 2, EngineMode::full, range));
  }
  expect(r, merged == whole, "partitioned sweep stats diverge after merging");
  return r;
}

Result criterion_sharpness() {
  Result r;
  auto level1 = sharpness_search(3, 1);
  expect(r, !level1.empty(), "no level-1 satisfier without a spanning cycle");
  const BipartiteDigraph& f = regular_nonhamiltonian_example();
  for (int i = 0; i < 3; ++i) {
    expect(r, f.degrees(vx(i)) == DegreePair{2, 2}, "reference degrees off in X");
    expect(r, f.degrees(vy(i)) == DegreePair{2, 2}, "reference degrees off in Y");
  }
  expect(r, check(f, ConditionSpec::ak_star(1)).holds, "reference misses level 1");
  expect(r, count_cycles(f, 6) == 0, "reference has a spanning cycle");
  expect(r, sharpness_search(3, 2).empty(), "level-2 sharpness instance at a = 3");
  expect(r, sharpness_search(2, 2).empty(), "level-2 sharpness instance at a = 2");
  note(r, "level-1 instances at a = 3: " + std::to_string(level1.size()));
  return r;
}

Result criterion_two_block() {
  Result r;
  for (auto [a, b, k] : {std::array{3, 7, 1}, std::array{2, 4, 0}}) {
    BipartiteDigraph g = two_block_family({a, b, k});
    const std::string shape =
        " in family (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(k) + ")";
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        for (auto [u, v] : {std::pair{vx(i), vy(j)}, std::pair{vy(j), vx(i)}}) {
          if (g.arc(u, v)) continue;
          int sum = g.degrees(u).out + g.degrees(v).in;
          expect(r, sum == a + k + 1 || sum == b - k - 1,
                 "non-adjacent pair sum " + std::to_string(sum) + shape);
        }
    expect(r, !brute_cycle(g, 2 * a).has_value(), "cycle through all of X" + shape);
  }
  return r;
}

Result criterion_cut_bound() {
  Result r;
  const VertexSet nothing(3, 3);
  std::array<long, 3> fired{}, fired_sat{};
  for (std::uint64_t code = 0; code < enumeration_count(3, 3); ++code) {
    BipartiteDigraph d = digraph_from_code(code, 3, 3);
    auto matched = complete_matching(d);
    if (!std::holds_alternative<Matching>(matched)) continue;
    const Matching& m = std::get<Matching>(matched);
    auto grown = grow_maximal_path(d, m, nothing);
    if (!std::holds_alternative<CompatiblePath>(grown)) continue;
    const CompatiblePath& p = std::get<CompatiblePath>(grown);
    for (int k = 1; k <= 2; ++k) {
      auto cut = cut_long_cycle(d, m, p, k);
      if (!cut) continue;
      ++fired[k];
      fired_sat[k] += check(d, ConditionSpec::ak_star(k)).holds;
      expect(r, cut->first.length() >= 3 + k,
             "short cut cycle on code " + std::to_string(code) + " at level " + std::to_string(k));
      expect(r, verify(d, m, cut->first.vertices, true),
             "incompatible cut cycle on code " + std::to_string(code));
    }
  }
  note(r, "cut executions at level 1: " + std::to_string(fired[1]) + " (" +
              std::to_string(fired_sat[1]) + " on satisfiers), at level 2: " +
              std::to_string(fired[2]));
  return r;
}

Result criterion_attachment_bound() {
  Result r;
  long configurations = 0;
  std::vector<int> base{0, 1, 2};
  for (std::uint64_t code = 0; code < enumeration_count(3, 3); ++code) {
    BipartiteDigraph d = digraph_from_code(code, 3, 3);
    std::vector<int> perm = base;
    do {
      bool arcs_present = true;
      for (int i = 0; i < 3 && arcs_present; ++i) arcs_present = d.arc(vx(i), vy(perm[i]));
      if (!arcs_present) continue;
      Matching m(3, 3);
      for (int i = 0; i < 3; ++i) m.bind(i, perm[i]);
      // pair-contracted arcs: the pair of x_i can be followed by the pair of x_j
      auto carc = [&](int i, int j) { return d.arc(vy(m.y_of(i)), vx(j)); };

      // longest compatible cycles, as pair-index sequences
      std::vector<std::vector<int>> cycles;
      for (int i = 0; i < 3; ++i)
        if (carc(i, i)) cycles.push_back({i});
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (carc(i, j) && carc(j, i)) cycles.push_back({i, j});
      for (auto& order : {std::vector{0, 1, 2}, std::vector{0, 2, 1}})
        if (carc(order[0], order[1]) && carc(order[1], order[2]) && carc(order[2], order[0]))
          cycles.push_back(order);
      if (cycles.empty()) continue;
      std::size_t longest = 0;
      for (const auto& c : cycles) longest = std::max(longest, c.size());

      for (const auto& cnodes : cycles) {
        if (cnodes.size() != longest) continue;
        CompatibleCycle cyc;
        for (int npair : cnodes) {
          cyc.vertices.push_back(vx(npair));
          cyc.vertices.push_back(vy(m.y_of(npair)));
        }
        std::vector<int> rest;
        for (int i = 0; i < 3; ++i)
          if (std::find(cnodes.begin(), cnodes.end(), i) == cnodes.end()) rest.push_back(i);
        if (rest.empty()) continue;

        // maximal pair paths in the region outside the cycle
        std::vector<std::vector<int>> paths;
        for (unsigned mask = 1; mask < (1u << rest.size()); ++mask) {
          std::vector<int> chosen;
          for (std::size_t t = 0; t < rest.size(); ++t)
            if (mask & (1u << t)) chosen.push_back(rest[t]);
          std::sort(chosen.begin(), chosen.end());
          do {
            bool chained = true;
            for (std::size_t t = 0; t + 1 < chosen.size() && chained; ++t)
              chained = carc(chosen[t], chosen[t + 1]);
            if (chained) paths.push_back(chosen);
          } while (std::next_permutation(chosen.begin(), chosen.end()));
        }
        for (const auto& pnodes : paths) {
          bool extendable = false;
          for (int free : rest) {
            if (std::find(pnodes.begin(), pnodes.end(), free) != pnodes.end()) continue;
            if (carc(pnodes.back(), free) || carc(free, pnodes.front())) extendable = true;
          }
          if (extendable) continue;
          CompatiblePath path;
          for (int npair : pnodes) {
            path.vertices.push_back(vx(npair));
            path.vertices.push_back(vy(m.y_of(npair)));
          }
          MergeBound mb = merge_degree_bound(d, m, cyc, path);
          if (!mb.premises_hold) continue;
          ++configurations;
          expect(r, mb.lhs <= mb.rhs, "bound violated on code " + std::to_string(code));
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  note(r, "premise-positive configurations: " + std::to_string(configurations));
  return r;
}

Result criterion_one_sided() {
  Result r;
  for (int a : {2, 3}) {
    auto fwd = exhaustive_verify(a, 2, EngineMode::one_sided_forward);
    auto rev = exhaustive_verify(a, 2, EngineMode::one_sided_reverse);
    for (const auto* s : {&fwd, &rev}) {
      expect(r, s->counterexamples.empty(), "one-sided counterexample at a = " + std::to_string(a));
      expect(r, s->engine_failures.empty(), "one-sided engine failure at a = " + std::to_string(a));
      expect(r, s->hamiltonian_among_satisfying == s->satisfying,
             "one-sided satisfier without a cycle at a = " + std::to_string(a));
    }
    // arc reversal is a bijection of the space swapping the two modes
    expect(r, fwd.satisfying == rev.satisfying, "mode satisfier counts differ at a = " + std::to_string(a));
    note(r, "a = " + std::to_string(a) + ": " + std::to_string(fwd.satisfying) +
                " satisfiers per orientation");
  }
  return r;
}

Result criterion_randomized() {
  Result r;
  for (int a = 4; a <= 8; ++a)
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      BipartiteDigraph d = random_satisfying(a, 2, seed);
      Outcome out;
      try {
        out = find_hamiltonian(d, EngineMode::full);
      } catch (const Error& e) {
        expect(r, false, std::string("engine raised: ") + e.what());
        continue;
      }
      expect(r, out.is_cycle() && verify_hamiltonian_cycle(d, out.cycle()),
             "no verified cycle, a " + std::to_string(a) + " seed " + std::to_string(seed));
    }
  note(r, "5000 sampled satisfiers certified");
  return r;
}

Result criterion_conjecture() {
  Result r;
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    auto found = conjecture_search(a, b);
    if (a == b && a == 2)
      expect(r, found.empty(), "strict half-sum satisfier without a full cycle at (2, 2)");
    note(r, "(" + std::to_string(a) + ", " + std::to_string(b) + "): " +
                std::to_string(found.size()) + " found");
  }
  return r;
}

Result criterion_metamorphic() {
  Result r;
  std::mt19937_64 rng(20260822);
  long checks = 0;
  while (checks < 10000) {
    int a = 1 + static_cast<int>(rng() % 4);
    int b = a + static_cast<int>(rng() % 3);
    double p = std::array{0.3, 0.5, 0.7}[rng() % 3];
    BipartiteDigraph d = random_digraph(a, b, p, rng());

    expect(r, serialize_bdg(parse_bdg(serialize_bdg(d))) == serialize_bdg(d), "block round trip");
    expect(r, to_single_line(parse_single_line(to_single_line(d))) == to_single_line(d),
           "single-line round trip");
    checks += 2;

    std::vector<ConditionSpec> specs{ConditionSpec::strict_half_sum(),
                                     ConditionSpec::dirac_bipartite(),
                                     ConditionSpec::ak(static_cast<int>(rng() % 3))};
    if (a == b) specs.push_back(ConditionSpec::ak_star(static_cast<int>(rng() % 3)));
    std::vector<int> xp(a), yp(b);
    std::iota(xp.begin(), xp.end(), 0);
    std::iota(yp.begin(), yp.end(), 0);
    std::shuffle(xp.begin(), xp.end(), rng);
    std::shuffle(yp.begin(), yp.end(), rng);
    BipartiteDigraph rd = reverse_arcs(d);
    BipartiteDigraph ld = relabel(d, xp, yp);
    for (ConditionSpec spec : specs) {
      bool holds = check(d, spec).holds;
      expect(r, check(rd, spec).holds == holds, "verdict not reversal invariant");
      expect(r, check(ld, spec).holds == holds, "verdict not relabeling invariant");
      checks += 2;
    }

    if (a != b) continue;
    Outcome out;
    try {
      out = find_hamiltonian(d, EngineMode::full);
    } catch (const Error& e) {
      expect(r, false, std::string("engine raised: ") + e.what());
      continue;
    }
    if (out.is_cycle()) {
      expect(r, verify_hamiltonian_cycle(d, out.cycle()), "cycle fails verification");
    } else {
      const Witness& w = out.witness();
      expect(r, !d.arc(w.u, w.v), "witness pair is adjacent");
      expect(r, w.sum == d.degrees(w.u).out + d.degrees(w.v).in, "witness sum off");
      expect(r, w.sum < w.bound, "witness sum meets its own bound");
      expect(r, w.bound == (w.kind == WitnessKind::hall_pair ? a : a + 2), "witness bound off");
    }
    ++checks;
  }
  note(r, std::to_string(checks) + " checks, zero failures required");
  return r;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    Result (*fn)();
    double budget_seconds;  // 0 = unlimited
  };
  const Entry entries[] = {
      {"exhaustive certification, a = 2", criterion_a2, 1.0},
      {"exhaustive certification, a = 3", criterion_a3, 300.0},
      {"threshold sharpness instances", criterion_sharpness, 0},
      {"two-block extremal family", criterion_two_block, 0},
      {"cut yields a long cycle", criterion_cut_bound, 0},
      {"attachment bound at stable cycles", criterion_attachment_bound, 0},
      {"one-sided mode certification", criterion_one_sided, 0},
      {"randomized satisfier runs", criterion_randomized, 60.0},
      {"unbalanced search exploration", criterion_conjecture, 600.0},
      {"metamorphic certificate checks", criterion_metamorphic, 0},
  };

  int id = 0, passed = 0;
  for (const Entry& entry : entries) {
    ++id;
    auto t0 = std::chrono::steady_clock::now();
    Result r = entry.fn();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (entry.budget_seconds > 0 && secs >= entry.budget_seconds) {
      r.ok = false;
      r.notes.push_back("over the " + std::to_string(entry.budget_seconds) + " s budget");
    }
    std::printf("criterion %2d: %s  (%7.2f s)  %s\n", id, r.ok ? "PASS" : "FAIL", secs,
                entry.label);
    for (const std::string& n : r.notes) std::printf("              %s\n", n.c_str());
    passed += r.ok;
  }
  std::printf("%d/10 criteria passed\n", passed);
  return passed == 10 ? 0 : 1;
}
