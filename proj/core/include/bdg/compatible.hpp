#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "bdg/graph.hpp"
#include "bdg/matching.hpp"

namespace bdg {

/// Matching-compatible path: vertices alternate x, M(x), x', M(x'), ...
/// starting in X and ending in Y, and every Y->X step is a present arc.
/// Only the vertex sequence is stored; compatibility is re-checked against
/// (D, M) by verify().
struct CompatiblePath {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  int half_length() const { return length() / 2; }
  bool empty() const { return vertices.empty(); }
};

/// Same shape, closed by an additional arc from the last Y back to the first X.
struct CompatibleCycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  int half_length() const { return length() / 2; }
};

enum class SeqVerdict {
  ok,
  empty,
  odd_length,
  out_of_range,
  wrong_side,       // does not alternate X, Y, X, Y, ...
  repeated_vertex,
  not_matching_pair,  // an X vertex is not followed by its matching partner
  missing_arc,        // a required Y->X arc (or the closing arc) is absent
};

/// Structural check of a vertex sequence as a matching-compatible path
/// (closed == false) or cycle (closed == true).
SeqVerdict verify_sequence(const BipartiteDigraph& d, const Matching& m,
                           std::span<const Vertex> seq, bool closed);
bool verify(const BipartiteDigraph& d, const Matching& m,
            std::span<const Vertex> seq, bool closed);

enum class MoveKind { reopen, cut, insert_segment, cross_merge };

const char* move_kind_name(MoveKind k);

/// Positions used by a move; unused fields stay -1.  All values are 0-based
/// pair positions (cycle) or pair offsets (path segment bounds g..h).
struct MoveIndices {
  int i{-1}, j{-1};    // insert anchors: entry pair i (its y), exit pair j (its x)
  int i0{-1}, j0{-1};  // merge entry/exit pairs, or the cut positions
  int s{-1};           // merge splice pair
  int l{-1};           // half-length of the replaced / skipped cycle segment
  int g{-1}, h{-1};    // inserted path segment: pairs g..h
};

/// before_len / after_len track the cycle length owned by the engine before
/// and after the move (0 when no cycle existed yet); every move strictly
/// increases it.
struct MoveRecord {
  MoveKind kind{MoveKind::cut};
  MoveIndices indices;
  int before_len{0};
  int after_len{0};
};

/// Deterministic growth: seeds at the least X-index outside `forbidden`,
/// extends at the tail while possible (least x with an arc from the trailing
/// y, appended together with its matching partner), then at the head (least
/// matched y with an arc to the head, prepended with its partner).  When both
/// directions are exhausted and the closing arc tail->head is present, the
/// sequence is returned as a cycle.  `forbidden` must be closed under m.
std::variant<CompatiblePath, CompatibleCycle> grow_maximal_path(
    const BipartiteDigraph& d, const Matching& m, const VertexSet& forbidden);

/// The extension loop of grow_maximal_path applied to an existing path.
std::variant<CompatiblePath, CompatibleCycle> extend_to_maximal(
    const BipartiteDigraph& d, const Matching& m, CompatiblePath path,
    const VertexSet& forbidden);

/// If some matched y outside cycle and forbidden has an arc into the cycle's
/// X vertices, cuts the cycle before the least such entry and prefixes the
/// pair (partner(y), y), giving a strictly longer compatible path.  Scans y
/// ascending, then entry pair position ascending.
std::optional<CompatiblePath> reopen_cycle(const BipartiteDigraph& d, const Matching& m,
                                           const CompatibleCycle& cycle,
                                           const VertexSet& forbidden);

/// For a maximal path whose ends do not close (tail->head arc absent): if the
/// tail has at least (a + k) / 2 out-neighbours on the path, wraps at the
/// earliest one; otherwise, if the head has as many in-neighbours on the
/// path, wraps at the latest one.  The resulting cycle has length >= a + k.
/// Returns nothing when neither degree reaches the bound.
std::optional<std::pair<CompatibleCycle, MoveRecord>> cut_long_cycle(
    const BipartiteDigraph& d, const Matching& m, const CompatiblePath& path, int k);

/// Searches sub-segments (pairs g..h) of `path` and anchor pairs (y of pair
/// i, x of pair j) on `cycle` with arcs y_i -> u_g and v_h -> x_j, where the
/// cycle segment strictly between the anchors has half-length l < h - g + 1.
/// The replaced segment leaves the cycle; the result is strictly longer.
/// Scan order: longest segment first (then g ascending), then i, then j.
/// Cycle and path must be vertex-disjoint.
std::optional<std::pair<CompatibleCycle, MoveRecord>> insert_segment(
    const BipartiteDigraph& d, const Matching& m, const CompatibleCycle& cycle,
    const CompatiblePath& path);

/// Merge of a closed outside path (closing arc required) with the cycle into
/// one cycle covering both vertex sets.  Tries all entry/exit/splice pair
/// triples (i0, j0, s) in ascending order; the merged cycle is
///   path, x_j0 .. y_s, x_i0+1 .. y_j0-1, x_s+1 .. y_i0
/// and needs arcs y_i0 -> front, back -> x_j0, y_s -> x_i0+1, y_j0-1 -> x_s+1.
std::optional<std::pair<CompatibleCycle, MoveRecord>> cross_merge(
    const BipartiteDigraph& d, const Matching& m, const CompatibleCycle& cycle,
    const CompatiblePath& closed_path);

struct MergeBound {
  int lhs{0};  // cycle-restricted out-degree of the path's tail plus in-degree of its head
  int rhs{0};  // m - p + 1
  bool premises_hold{false};
};

/// Counting bound on how strongly a path outside an unimprovable cycle can
/// attach to it; informational when the cycle is still improvable.
MergeBound merge_degree_bound(const BipartiteDigraph& d, const Matching& m,
                              const CompatibleCycle& cycle, const CompatiblePath& path);

}  // namespace bdg
