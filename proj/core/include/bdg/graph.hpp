#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bdg/error.hpp"

namespace bdg {

enum class Side : std::uint8_t { X = 0, Y = 1 };

constexpr Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }

/// A vertex is addressed by colour class and 0-based index within the class.
/// Ordering: all of X before all of Y, then by index.
struct Vertex {
  Side side{Side::X};
  int index{0};

  friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex vx(int i) { return Vertex{Side::X, i}; }
constexpr Vertex vy(int j) { return Vertex{Side::Y, j}; }

std::string to_string(Vertex v);  // "x0", "y3", ...
std::optional<Vertex> vertex_from_string(std::string_view s);

struct DegreePair {
  int out{0};
  int in{0};

  friend constexpr bool operator==(const DegreePair&, const DegreePair&) = default;
};

/// Subset of the vertices of a host with class sizes (a, b).
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(int a, int b);

  void add(Vertex v);
  void remove(Vertex v);
  bool contains(Vertex v) const;

  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  int side_count(Side s) const;
  int host_a() const { return static_cast<int>(x_.size()); }
  int host_b() const { return static_cast<int>(y_.size()); }

  /// Ascending, X before Y.
  std::vector<Vertex> to_vector() const;

private:
  void check(Vertex v) const;
  std::vector<char> x_, y_;
  int count_{0};
};

/// Directed bipartite graph on colour classes X (size a) and Y (size b).
/// Arcs run only between the classes; both orientations are stored as dense
/// boolean matrices.  Loops and same-class arcs are unrepresentable.
class BipartiteDigraph {
public:
  BipartiteDigraph() = default;
  BipartiteDigraph(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }
  bool balanced() const { return a_ == b_; }
  int side_size(Side s) const { return s == Side::X ? a_ : b_; }

  bool xy(int i, int j) const;  // arc x_i -> y_j
  bool yx(int j, int i) const;  // arc y_j -> x_i

  /// Same-class pairs are never adjacent.
  bool arc(Vertex from, Vertex to) const;

  void add_arc(Vertex from, Vertex to);
  void remove_arc(Vertex from, Vertex to);
  int arc_count() const;

  DegreePair degrees(Vertex v) const;
  /// Degrees counting only neighbours inside `within` (its members from the
  /// class opposite to v are the ones that can contribute).
  DegreePair degrees(Vertex v, const VertexSet& within) const;

  friend bool operator==(const BipartiteDigraph&, const BipartiteDigraph&) = default;

private:
  void check_x(int i) const;
  void check_y(int j) const;

  int a_{0}, b_{0};
  std::vector<std::uint8_t> xy_, yx_;  // row-major: xy_[i*b+j], yx_[j*a+i]
};

/// a, b >= 1; throws on same-class or out-of-range arcs.
BipartiteDigraph build(int a, int b, std::span<const std::pair<Vertex, Vertex>> arcs);

struct InducedSubdigraph {
  BipartiteDigraph graph;
  std::vector<int> x_new_to_old, y_new_to_old;
  std::vector<int> x_old_to_new, y_old_to_new;  // -1 for removed vertices
};

/// Induced subdigraph on V(D) minus `removed`, with the index remapping in
/// both directions.  Surviving vertices keep their relative order.
InducedSubdigraph remove_vertices(const BipartiteDigraph& d, const VertexSet& removed);

/// Reverses every arc; classes keep their roles.  Involution.
BipartiteDigraph reverse_arcs(const BipartiteDigraph& d);

/// Class-preserving relabeling: x_perm[i] is the new index of x_i.
BipartiteDigraph relabel(const BipartiteDigraph& d, std::span<const int> x_perm,
                         std::span<const int> y_perm);

}  // namespace bdg
