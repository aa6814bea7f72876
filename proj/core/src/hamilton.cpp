#include "bdg/hamilton.hpp"

#include <algorithm>

#include "bdg/conditions.hpp"

namespace bdg {

const char* engine_mode_name(EngineMode m) {
  switch (m) {
    case EngineMode::full: return "full";
    case EngineMode::one_sided_forward: return "one-sided-forward";
    case EngineMode::one_sided_reverse: return "one-sided-reverse";
  }
  return "?";
}

namespace {

struct DegreeTable {
  std::vector<int> x_out, x_in, y_out, y_in;

  explicit DegreeTable(const BipartiteDigraph& d)
      : x_out(d.a(), 0), x_in(d.a(), 0), y_out(d.b(), 0), y_in(d.b(), 0) {
    for (int i = 0; i < d.a(); ++i)
      for (int j = 0; j < d.b(); ++j) {
        if (d.xy(i, j)) {
          ++x_out[i];
          ++y_in[j];
        }
        if (d.yx(j, i)) {
          ++y_out[j];
          ++x_in[i];
        }
      }
  }
};

VertexSet set_of(const BipartiteDigraph& d, const std::vector<Vertex>& seq) {
  VertexSet s(d.a(), d.b());
  for (const Vertex& v : seq) s.add(v);
  return s;
}

/// The cycle read as a path starting at pair r; the dropped arc is the one
/// into pair r, so the sequence stays compatible.
CompatiblePath rotation_path(const CompatibleCycle& c, int r) {
  const int mm = c.half_length();
  std::vector<Vertex> seq;
  seq.reserve(c.vertices.size());
  for (int t = 0; t < mm; ++t) {
    const int p = (r + t) % mm;
    seq.push_back(c.vertices[2 * p]);
    seq.push_back(c.vertices[2 * p + 1]);
  }
  return CompatiblePath{std::move(seq)};
}

/// Grows the region structure until neither reopening (an outside y entering
/// a wrapped cycle) nor exiting (a cycle y reaching an unused x, after which
/// the rotated path extends past it) applies.  Each round strictly enlarges
/// the structure, so this terminates.  The result is an open maximal path or
/// a cycle no single arc connects to the rest of the region.
std::variant<CompatiblePath, CompatibleCycle> build_maximal_region(
    const BipartiteDigraph& d, const Matching& m, const VertexSet& forbidden) {
  auto cur = grow_maximal_path(d, m, forbidden);
  for (;;) {
    if (std::holds_alternative<CompatiblePath>(cur)) return cur;
    const CompatibleCycle& c = std::get<CompatibleCycle>(cur);
    if (auto reopened = reopen_cycle(d, m, c, forbidden)) {
      cur = extend_to_maximal(d, m, std::move(*reopened), forbidden);
      continue;
    }
    const int mm = c.half_length();
    std::vector<char> on_cycle(d.a(), 0);
    for (int t = 0; t < mm; ++t) on_cycle[c.vertices[2 * t].index] = 1;
    int rot = -1;
    for (int t = 0; t < mm && rot < 0; ++t) {
      const int yj = c.vertices[2 * t + 1].index;
      for (int x = 0; x < d.a(); ++x) {
        if (!d.yx(yj, x) || on_cycle[x] || forbidden.contains(vx(x))) continue;
        rot = t;
        break;
      }
    }
    if (rot < 0) return cur;
    cur = extend_to_maximal(d, m, rotation_path(c, (rot + 1) % mm), forbidden);
  }
}

std::vector<Vertex> normalize_cycle(std::vector<Vertex> seq) {
  const auto it = std::find(seq.begin(), seq.end(), vx(0));
  std::rotate(seq.begin(), it, seq.end());
  return seq;
}

/// P' of the residual region R = V \ (C + outside); only insertion is tried
/// with it.
std::optional<std::pair<CompatibleCycle, MoveRecord>> residual_insert(
    const BipartiteDigraph& d, const Matching& m, const CompatibleCycle& cyc,
    const std::vector<Vertex>& outside) {
  VertexSet forb = set_of(d, cyc.vertices);
  for (const Vertex& v : outside) forb.add(v);
  if (forb.side_count(Side::X) == d.a()) return std::nullopt;
  auto s2 = build_maximal_region(d, m, forb);
  if (const auto* p2 = std::get_if<CompatiblePath>(&s2))
    return insert_segment(d, m, cyc, *p2);
  const CompatibleCycle& q = std::get<CompatibleCycle>(s2);
  for (int r = 0; r < q.half_length(); ++r)
    if (auto res = insert_segment(d, m, cyc, rotation_path(q, r))) return res;
  return std::nullopt;
}

std::optional<std::pair<CompatibleCycle, MoveRecord>> next_move(
    const BipartiteDigraph& d, const Matching& m, const CompatibleCycle& cyc,
    const std::variant<CompatiblePath, CompatibleCycle>& outside) {
  if (const auto* p = std::get_if<CompatiblePath>(&outside)) {
    // An open maximal path never closes (growth would have wrapped it), so
    // only insertion applies to it directly.
    if (auto res = insert_segment(d, m, cyc, *p)) return res;
    return residual_insert(d, m, cyc, p->vertices);
  }
  const CompatibleCycle& q = std::get<CompatibleCycle>(outside);
  for (int r = 0; r < q.half_length(); ++r)
    if (auto res = insert_segment(d, m, cyc, rotation_path(q, r))) return res;
  for (int r = 0; r < q.half_length(); ++r)
    if (auto res = cross_merge(d, m, cyc, rotation_path(q, r))) return res;
  return residual_insert(d, m, cyc, q.vertices);
}

EngineRun stall_outcome(const BipartiteDigraph& d, EngineMode mode, EngineRun run) {
  if (auto w = scan_witness(d, mode)) {
    run.outcome.value = *w;
    return run;
  }
  raise(Errc::theorem_violation,
        "move system stalled below a spanning cycle yet every pair meets the bound");
}

EngineRun run_forward(const BipartiteDigraph& d, EngineMode mode) {
  EngineRun run;
  auto matched = complete_matching(d);
  if (const auto* viol = std::get_if<HallViolator>(&matched)) {
    if (mode != EngineMode::full)
      raise(Errc::matching_absent, "no complete matching in the assumed direction");
    const WitnessPair wp = hall_to_witness(d, *viol);
    run.outcome.value = Witness{WitnessKind::hall_pair, wp.u, wp.v, wp.sum, d.a()};
    return run;
  }
  const Matching m = std::get<Matching>(std::move(matched));
  run.matching = m;
  const int a = d.a();

  CompatibleCycle cyc;
  auto s0 = build_maximal_region(d, m, VertexSet(a, d.b()));
  if (auto* p0 = std::get_if<CompatiblePath>(&s0)) {
    auto cut = cut_long_cycle(d, m, *p0, 2);
    if (!cut) {
      run.stalled_outside = std::move(s0);
      return stall_outcome(d, mode, std::move(run));
    }
    run.trace.push_back(cut->second);
    cyc = std::move(cut->first);
  } else {
    cyc = std::get<CompatibleCycle>(std::move(s0));
  }

  while (cyc.half_length() < a) {
    auto outside = build_maximal_region(d, m, set_of(d, cyc.vertices));
    auto step = next_move(d, m, cyc, outside);
    if (!step) {
      run.stalled_cycle = std::move(cyc);
      run.stalled_outside = std::move(outside);
      return stall_outcome(d, mode, std::move(run));
    }
    run.trace.push_back(step->second);
    cyc = std::move(step->first);
  }

  std::vector<Vertex> seq = normalize_cycle(std::move(cyc.vertices));
  if (!verify_hamiltonian_cycle(d, seq))
    raise(Errc::internal_error, "engine produced an invalid spanning cycle");
  run.outcome.value = std::move(seq);
  return run;
}

}  // namespace

EngineRun run_engine(const BipartiteDigraph& d, EngineMode mode) {
  if (!d.balanced()) raise(Errc::unbalanced_input, "engine requires |X| = |Y|");
  if (mode != EngineMode::one_sided_reverse) return run_forward(d, mode);
  // The reverse mode runs forward on the arc-reversed digraph; matching,
  // trace, and stalled structures stay in that frame, the outcome is mapped.
  EngineRun run = run_forward(reverse_arcs(d), EngineMode::one_sided_forward);
  if (run.outcome.is_cycle()) {
    std::vector<Vertex> seq = run.outcome.cycle();
    std::reverse(seq.begin(), seq.end());
    seq = normalize_cycle(std::move(seq));
    if (!verify_hamiltonian_cycle(d, seq))
      raise(Errc::internal_error, "reverse run mapped to an invalid cycle");
    run.outcome.value = std::move(seq);
  } else {
    Witness w = run.outcome.witness();
    std::swap(w.u, w.v);
    run.outcome.value = w;
  }
  return run;
}

Outcome find_hamiltonian(const BipartiteDigraph& d, EngineMode mode) {
  return run_engine(d, mode).outcome;
}

std::optional<Witness> scan_witness(const BipartiteDigraph& d, EngineMode mode) {
  if (!d.balanced()) raise(Errc::unbalanced_input, "witness scan requires |X| = |Y|");
  const DegreeTable deg(d);
  const int a = d.a();
  const auto xy_pair = [&](int i, int j) -> std::optional<Witness> {
    if (d.xy(i, j)) return std::nullopt;
    const int sum = deg.x_out[i] + deg.y_in[j];
    if (sum > a + 1) return std::nullopt;
    return Witness{WitnessKind::degree_pair, vx(i), vy(j), sum, a + 2};
  };
  const auto yx_pair = [&](int j, int i) -> std::optional<Witness> {
    if (d.yx(j, i)) return std::nullopt;
    const int sum = deg.y_out[j] + deg.x_in[i];
    if (sum > a + 1) return std::nullopt;
    return Witness{WitnessKind::degree_pair, vy(j), vx(i), sum, a + 2};
  };
  if (mode == EngineMode::full)
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < a; ++j)
        if (auto w = xy_pair(i, j)) return w;
  if (mode == EngineMode::full || mode == EngineMode::one_sided_forward)
    for (int j = 0; j < a; ++j)
      for (int i = 0; i < a; ++i)
        if (auto w = yx_pair(j, i)) return w;
  if (mode == EngineMode::one_sided_reverse)
    // Transpose order: this is the forward scan of the reversed digraph
    // mapped back, keeping the reverse engine's witness reproducible.
    for (int j = 0; j < a; ++j)
      for (int i = 0; i < a; ++i)
        if (auto w = xy_pair(i, j)) return w;
  return std::nullopt;
}

bool mode_hypothesis_holds(const BipartiteDigraph& d, int k, EngineMode mode) {
  if (!d.balanced()) raise(Errc::unbalanced_input, "hypothesis requires |X| = |Y|");
  if (k < 0) raise(Errc::invalid_params, "negative k");
  if (mode == EngineMode::full) return check(d, ConditionSpec::ak_star(k)).holds;
  const BipartiteDigraph* host = &d;
  BipartiteDigraph reversed;
  if (mode == EngineMode::one_sided_reverse) {
    reversed = reverse_arcs(d);
    host = &reversed;
  }
  if (std::holds_alternative<HallViolator>(complete_matching(*host))) return false;
  const DegreeTable deg(*host);
  const int a = host->a();
  for (int j = 0; j < a; ++j)
    for (int i = 0; i < a; ++i)
      if (!host->yx(j, i) && deg.y_out[j] + deg.x_in[i] < a + k) return false;
  return true;
}

bool verify_hamiltonian_cycle(const BipartiteDigraph& d, std::span<const Vertex> seq) {
  if (!d.balanced()) return false;
  const int a = d.a();
  if (static_cast<int>(seq.size()) != 2 * a || a == 0) return false;
  std::vector<char> seen_x(a, 0), seen_y(a, 0);
  for (const Vertex& v : seq) {
    if (v.index < 0 || v.index >= a) return false;
    std::vector<char>& seen = v.side == Side::X ? seen_x : seen_y;
    if (seen[v.index]) return false;
    seen[v.index] = 1;
  }
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const Vertex from = seq[t], to = seq[(t + 1) % seq.size()];
    if (from.side == to.side || !d.arc(from, to)) return false;
  }
  // 2a distinct vertices with indices < a in each class cover V(D).
  return true;
}

}  // namespace bdg
