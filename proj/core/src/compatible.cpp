#include "bdg/compatible.hpp"

#include <algorithm>

namespace bdg {

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::reopen: return "reopen";
    case MoveKind::cut: return "cut";
    case MoveKind::insert_segment: return "insert-segment";
    case MoveKind::cross_merge: return "cross-merge";
  }
  return "?";
}

namespace {

void check_shapes(const BipartiteDigraph& d, const Matching& m) {
  if (m.host_a() != d.a() || m.host_b() != d.b())
    raise(Errc::precondition_violated, "matching built for a different digraph shape");
}

void check_shapes(const BipartiteDigraph& d, const VertexSet& s) {
  if (s.host_a() != d.a() || s.host_b() != d.b())
    raise(Errc::precondition_violated, "vertex set built for a different digraph shape");
}

// Pair t of an alternating sequence: (seq[2t], seq[2t+1]).
Vertex pair_x(const std::vector<Vertex>& seq, int t) { return seq[2 * t]; }
Vertex pair_y(const std::vector<Vertex>& seq, int t) { return seq[2 * t + 1]; }

struct Membership {
  std::vector<char> x, y;

  Membership(const BipartiteDigraph& d, const std::vector<Vertex>& seq)
      : x(d.a(), 0), y(d.b(), 0) {
    for (const Vertex& v : seq)
      (v.side == Side::X ? x : y)[v.index] = 1;
  }
};

// Pairs from `from` to `to` inclusive, walking the cycle forward.
void append_pairs(const std::vector<Vertex>& cyc, int m, int from, int to,
                  std::vector<Vertex>& out) {
  for (int t = from;; t = (t + 1) % m) {
    out.push_back(pair_x(cyc, t));
    out.push_back(pair_y(cyc, t));
    if (t == to) break;
  }
}

void self_check(const BipartiteDigraph& d, const Matching& m,
                const std::vector<Vertex>& seq, bool closed) {
  if (verify_sequence(d, m, seq, closed) != SeqVerdict::ok)
    raise(Errc::internal_error, "move produced an incompatible sequence");
}

// Tail-then-head exhaustion shared by grow_maximal_path and extend_to_maximal.
// Head extension cannot re-enable the tail (the trailing y never changes), so
// one pass in each direction reaches a maximal sequence.
std::variant<CompatiblePath, CompatibleCycle> exhaust(const BipartiteDigraph& d,
                                                      const Matching& m,
                                                      std::vector<Vertex> seq,
                                                      const VertexSet& forbidden) {
  Membership in(d, seq);
  for (;;) {
    const int ty = seq.back().index;
    int pick = -1;
    for (int x = 0; x < d.a(); ++x) {
      if (!d.yx(ty, x) || in.x[x] || forbidden.contains(vx(x))) continue;
      pick = x;
      break;
    }
    if (pick < 0) break;
    const int py = m.y_of(pick);
    if (py < 0 || in.y[py] || forbidden.contains(vy(py)))
      raise(Errc::precondition_violated, "matching not complete on the region");
    seq.push_back(vx(pick));
    seq.push_back(vy(py));
    in.x[pick] = in.y[py] = 1;
  }
  for (;;) {
    const int hx = seq.front().index;
    int pick = -1;
    for (int y = 0; y < d.b(); ++y) {
      if (!d.yx(y, hx) || in.y[y] || forbidden.contains(vy(y))) continue;
      if (m.x_of(y) < 0) continue;
      pick = y;
      break;
    }
    if (pick < 0) break;
    const int px = m.x_of(pick);
    if (in.x[px] || forbidden.contains(vx(px)))
      raise(Errc::precondition_violated, "matching pair straddles the region");
    seq.insert(seq.begin(), {vx(px), vy(pick)});
    in.x[px] = in.y[pick] = 1;
  }
  if (d.yx(seq.back().index, seq.front().index)) {
    self_check(d, m, seq, true);
    return CompatibleCycle{std::move(seq)};
  }
  self_check(d, m, seq, false);
  return CompatiblePath{std::move(seq)};
}

}  // namespace

SeqVerdict verify_sequence(const BipartiteDigraph& d, const Matching& m,
                           std::span<const Vertex> seq, bool closed) {
  check_shapes(d, m);
  if (seq.empty()) return SeqVerdict::empty;
  if (seq.size() % 2 != 0) return SeqVerdict::odd_length;
  for (std::size_t p = 0; p < seq.size(); ++p) {
    const Vertex v = seq[p];
    if (v.index < 0 || v.index >= d.side_size(v.side)) return SeqVerdict::out_of_range;
    if (v.side != (p % 2 == 0 ? Side::X : Side::Y)) return SeqVerdict::wrong_side;
  }
  std::vector<char> seen_x(d.a(), 0), seen_y(d.b(), 0);
  for (const Vertex& v : seq) {
    std::vector<char>& seen = v.side == Side::X ? seen_x : seen_y;
    if (seen[v.index]) return SeqVerdict::repeated_vertex;
    seen[v.index] = 1;
  }
  const int half = static_cast<int>(seq.size()) / 2;
  for (int t = 0; t < half; ++t)
    if (m.y_of(seq[2 * t].index) != seq[2 * t + 1].index)
      return SeqVerdict::not_matching_pair;
  for (int t = 0; t + 1 < half; ++t)
    if (!d.yx(seq[2 * t + 1].index, seq[2 * t + 2].index)) return SeqVerdict::missing_arc;
  if (closed && !d.yx(seq.back().index, seq.front().index)) return SeqVerdict::missing_arc;
  return SeqVerdict::ok;
}

bool verify(const BipartiteDigraph& d, const Matching& m,
            std::span<const Vertex> seq, bool closed) {
  return verify_sequence(d, m, seq, closed) == SeqVerdict::ok;
}

std::variant<CompatiblePath, CompatibleCycle> grow_maximal_path(
    const BipartiteDigraph& d, const Matching& m, const VertexSet& forbidden) {
  check_shapes(d, m);
  check_shapes(d, forbidden);
  int seed = -1;
  for (int x = 0; x < d.a(); ++x) {
    if (forbidden.contains(vx(x))) continue;
    seed = x;
    break;
  }
  if (seed < 0) raise(Errc::empty_region, "no X vertex outside forbidden");
  const int y = m.y_of(seed);
  if (y < 0 || forbidden.contains(vy(y)))
    raise(Errc::precondition_violated, "matching not complete on the region");
  return exhaust(d, m, {vx(seed), vy(y)}, forbidden);
}

std::variant<CompatiblePath, CompatibleCycle> extend_to_maximal(
    const BipartiteDigraph& d, const Matching& m, CompatiblePath path,
    const VertexSet& forbidden) {
  check_shapes(d, m);
  check_shapes(d, forbidden);
  if (path.empty()) raise(Errc::precondition_violated, "cannot extend an empty path");
  return exhaust(d, m, std::move(path.vertices), forbidden);
}

std::optional<CompatiblePath> reopen_cycle(const BipartiteDigraph& d, const Matching& m,
                                           const CompatibleCycle& cycle,
                                           const VertexSet& forbidden) {
  check_shapes(d, m);
  check_shapes(d, forbidden);
  if (cycle.vertices.empty()) raise(Errc::precondition_violated, "empty cycle");
  const int mm = cycle.half_length();
  Membership in(d, cycle.vertices);
  for (int y = 0; y < d.b(); ++y) {
    if (in.y[y] || forbidden.contains(vy(y))) continue;
    const int px = m.x_of(y);
    if (px < 0 || in.x[px] || forbidden.contains(vx(px))) continue;
    for (int pos = 0; pos < mm; ++pos) {
      if (!d.yx(y, pair_x(cycle.vertices, pos).index)) continue;
      std::vector<Vertex> seq{vx(px), vy(y)};
      append_pairs(cycle.vertices, mm, pos, (pos + mm - 1) % mm, seq);
      self_check(d, m, seq, false);
      return CompatiblePath{std::move(seq)};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<CompatibleCycle, MoveRecord>> cut_long_cycle(
    const BipartiteDigraph& d, const Matching& m, const CompatiblePath& path, int k) {
  check_shapes(d, m);
  if (path.empty()) raise(Errc::precondition_violated, "empty path");
  const int mm = path.half_length();
  const Vertex head = path.vertices.front(), tail = path.vertices.back();
  if (d.yx(tail.index, head.index))
    raise(Errc::precondition_violated, "path already closes into a cycle");
  VertexSet on_path(d.a(), d.b());
  for (const Vertex& v : path.vertices) on_path.add(v);
  const int bound = d.a() + k;
  if (2 * d.degrees(tail, on_path).out >= bound) {
    int i0 = 0;
    while (!d.yx(tail.index, pair_x(path.vertices, i0).index)) ++i0;
    std::vector<Vertex> seq(path.vertices.begin() + 2 * i0, path.vertices.end());
    self_check(d, m, seq, true);
    MoveRecord rec{MoveKind::cut, {}, 0, static_cast<int>(seq.size())};
    rec.indices.i0 = i0;
    return std::pair{CompatibleCycle{std::move(seq)}, rec};
  }
  if (2 * d.degrees(head, on_path).in >= bound) {
    int j0 = mm - 1;
    while (!d.yx(pair_y(path.vertices, j0).index, head.index)) --j0;
    std::vector<Vertex> seq(path.vertices.begin(), path.vertices.begin() + 2 * (j0 + 1));
    self_check(d, m, seq, true);
    MoveRecord rec{MoveKind::cut, {}, 0, static_cast<int>(seq.size())};
    rec.indices.j0 = j0;
    return std::pair{CompatibleCycle{std::move(seq)}, rec};
  }
  return std::nullopt;
}

std::optional<std::pair<CompatibleCycle, MoveRecord>> insert_segment(
    const BipartiteDigraph& d, const Matching& m, const CompatibleCycle& cycle,
    const CompatiblePath& path) {
  check_shapes(d, m);
  if (cycle.vertices.empty()) raise(Errc::precondition_violated, "empty cycle");
  const int mm = cycle.half_length();
  const int pp = path.half_length();
  Membership on_cycle(d, cycle.vertices);
  for (const Vertex& v : path.vertices)
    if ((v.side == Side::X ? on_cycle.x : on_cycle.y)[v.index])
      raise(Errc::not_disjoint, "path shares " + to_string(v) + " with the cycle");
  for (int len = pp; len >= 1; --len) {
    for (int g = 0; g + len <= pp; ++g) {
      const int h = g + len - 1;
      const Vertex u_g = pair_x(path.vertices, g), v_h = pair_y(path.vertices, h);
      for (int i = 0; i < mm; ++i) {
        if (!d.yx(pair_y(cycle.vertices, i).index, u_g.index)) continue;
        for (int j = 0; j < mm; ++j) {
          const int gap = (j - i - 1 + mm) % mm;
          if (gap >= len) continue;
          if (!d.yx(v_h.index, pair_x(cycle.vertices, j).index)) continue;
          std::vector<Vertex> seq;
          append_pairs(cycle.vertices, mm, j, i, seq);
          seq.insert(seq.end(), path.vertices.begin() + 2 * g,
                     path.vertices.begin() + 2 * (h + 1));
          self_check(d, m, seq, true);
          MoveRecord rec{MoveKind::insert_segment, {}, 2 * mm,
                         static_cast<int>(seq.size())};
          rec.indices.i = i;
          rec.indices.j = j;
          rec.indices.l = gap;
          rec.indices.g = g;
          rec.indices.h = h;
          return std::pair{CompatibleCycle{std::move(seq)}, rec};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<CompatibleCycle, MoveRecord>> cross_merge(
    const BipartiteDigraph& d, const Matching& m, const CompatibleCycle& cycle,
    const CompatiblePath& closed_path) {
  check_shapes(d, m);
  if (cycle.vertices.empty()) raise(Errc::precondition_violated, "empty cycle");
  if (closed_path.empty()) raise(Errc::precondition_violated, "empty path");
  const int mm = cycle.half_length();
  const int pp = closed_path.half_length();
  const Vertex u1 = closed_path.vertices.front(), vp = closed_path.vertices.back();
  if (!d.yx(vp.index, u1.index))
    raise(Errc::precondition_violated, "path does not close into a cycle");
  Membership on_cycle(d, cycle.vertices);
  for (const Vertex& v : closed_path.vertices)
    if ((v.side == Side::X ? on_cycle.x : on_cycle.y)[v.index])
      raise(Errc::precondition_violated, "path shares " + to_string(v) + " with the cycle");
  for (int i0 = 0; i0 < mm; ++i0) {
    if (!d.yx(pair_y(cycle.vertices, i0).index, u1.index)) continue;
    for (int j0 = 0; j0 < mm; ++j0) {
      const int l = (j0 - i0 - 1 + mm) % mm;
      if (l < 1) continue;
      if (!d.yx(vp.index, pair_x(cycle.vertices, j0).index)) continue;
      for (int s = 0; s < mm; ++s) {
        if ((s - j0 + mm) % mm > mm - l - 2) continue;
        if (!d.yx(pair_y(cycle.vertices, s).index,
                  pair_x(cycle.vertices, (i0 + 1) % mm).index))
          continue;
        if (!d.yx(pair_y(cycle.vertices, (j0 - 1 + mm) % mm).index,
                  pair_x(cycle.vertices, (s + 1) % mm).index))
          continue;
        std::vector<Vertex> seq = closed_path.vertices;
        append_pairs(cycle.vertices, mm, j0, s, seq);
        append_pairs(cycle.vertices, mm, (i0 + 1) % mm, (j0 - 1 + mm) % mm, seq);
        append_pairs(cycle.vertices, mm, (s + 1) % mm, i0, seq);
        self_check(d, m, seq, true);
        MoveRecord rec{MoveKind::cross_merge, {}, 2 * mm, 2 * (mm + pp)};
        rec.indices.i0 = i0;
        rec.indices.j0 = j0;
        rec.indices.s = s;
        rec.indices.l = l;
        return std::pair{CompatibleCycle{std::move(seq)}, rec};
      }
    }
  }
  return std::nullopt;
}

MergeBound merge_degree_bound(const BipartiteDigraph& d, const Matching& m,
                              const CompatibleCycle& cycle, const CompatiblePath& path) {
  check_shapes(d, m);
  if (cycle.vertices.empty() || path.empty())
    raise(Errc::precondition_violated, "bound needs a cycle and a nonempty path");
  VertexSet on_cycle(d.a(), d.b());
  for (const Vertex& v : cycle.vertices) on_cycle.add(v);
  const int out_tail = d.degrees(path.vertices.back(), on_cycle).out;
  const int in_head = d.degrees(path.vertices.front(), on_cycle).in;
  MergeBound b;
  b.lhs = out_tail + in_head;
  b.rhs = cycle.half_length() - path.half_length() + 1;
  b.premises_hold = out_tail > 0 && in_head > 0;
  return b;
}

}  // namespace bdg
