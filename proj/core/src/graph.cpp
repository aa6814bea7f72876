#include "bdg/graph.hpp"

#include <algorithm>
#include <cctype>

namespace bdg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::same_class_arc: return "same_class_arc";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::parse_error: return "parse_error";
    case Errc::unbalanced_input: return "unbalanced_input";
    case Errc::not_a_violator: return "not_a_violator";
    case Errc::empty_region: return "empty_region";
    case Errc::precondition_violated: return "precondition_violated";
    case Errc::not_disjoint: return "not_disjoint";
    case Errc::bad_length: return "bad_length";
    case Errc::too_large: return "too_large";
    case Errc::invalid_params: return "invalid_params";
    case Errc::search_failed: return "search_failed";
    case Errc::theorem_violation: return "theorem_violation";
    case Errc::matching_absent: return "matching_absent";
    case Errc::internal_error: return "internal_error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message, int line)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      line_(line) {}

void raise(Errc code, const std::string& message, int line) {
  throw Error(code, message, line);
}

std::string to_string(Vertex v) {
  return (v.side == Side::X ? "x" : "y") + std::to_string(v.index);
}

std::optional<Vertex> vertex_from_string(std::string_view s) {
  if (s.size() < 2 || s.size() > 10 || (s[0] != 'x' && s[0] != 'y')) return std::nullopt;
  int idx = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    idx = idx * 10 + (s[i] - '0');
  }
  return Vertex{s[0] == 'x' ? Side::X : Side::Y, idx};
}

VertexSet::VertexSet(int a, int b) {
  if (a < 0 || b < 0) raise(Errc::invalid_params, "negative class size");
  x_.assign(static_cast<std::size_t>(a), 0);
  y_.assign(static_cast<std::size_t>(b), 0);
}

void VertexSet::check(Vertex v) const {
  const auto& side = v.side == Side::X ? x_ : y_;
  if (v.index < 0 || v.index >= static_cast<int>(side.size()))
    raise(Errc::index_out_of_range, "vertex " + to_string(v) + " outside host");
}

void VertexSet::add(Vertex v) {
  check(v);
  auto& slot = v.side == Side::X ? x_[v.index] : y_[v.index];
  if (!slot) {
    slot = 1;
    ++count_;
  }
}

void VertexSet::remove(Vertex v) {
  check(v);
  auto& slot = v.side == Side::X ? x_[v.index] : y_[v.index];
  if (slot) {
    slot = 0;
    --count_;
  }
}

bool VertexSet::contains(Vertex v) const {
  check(v);
  return v.side == Side::X ? x_[v.index] != 0 : y_[v.index] != 0;
}

int VertexSet::side_count(Side s) const {
  const auto& side = s == Side::X ? x_ : y_;
  return static_cast<int>(std::count(side.begin(), side.end(), 1));
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (int i = 0; i < static_cast<int>(x_.size()); ++i)
    if (x_[i]) out.push_back(vx(i));
  for (int j = 0; j < static_cast<int>(y_.size()); ++j)
    if (y_[j]) out.push_back(vy(j));
  return out;
}

BipartiteDigraph::BipartiteDigraph(int a, int b) : a_(a), b_(b) {
  if (a < 0 || b < 0) raise(Errc::invalid_params, "negative class size");
  xy_.assign(static_cast<std::size_t>(a) * b, 0);
  yx_.assign(static_cast<std::size_t>(a) * b, 0);
}

void BipartiteDigraph::check_x(int i) const {
  if (i < 0 || i >= a_) raise(Errc::index_out_of_range, "x" + std::to_string(i));
}

void BipartiteDigraph::check_y(int j) const {
  if (j < 0 || j >= b_) raise(Errc::index_out_of_range, "y" + std::to_string(j));
}

bool BipartiteDigraph::xy(int i, int j) const {
  check_x(i);
  check_y(j);
  return xy_[static_cast<std::size_t>(i) * b_ + j] != 0;
}

bool BipartiteDigraph::yx(int j, int i) const {
  check_x(i);
  check_y(j);
  return yx_[static_cast<std::size_t>(j) * a_ + i] != 0;
}

bool BipartiteDigraph::arc(Vertex from, Vertex to) const {
  if (from.side == to.side) {
    (from.side == Side::X ? check_x(from.index) : check_y(from.index));
    (to.side == Side::X ? check_x(to.index) : check_y(to.index));
    return false;
  }
  return from.side == Side::X ? xy(from.index, to.index) : yx(from.index, to.index);
}

void BipartiteDigraph::add_arc(Vertex from, Vertex to) {
  if (from.side == to.side)
    raise(Errc::same_class_arc,
          to_string(from) + " -> " + to_string(to) + " stays inside one colour class");
  if (from.side == Side::X) {
    check_x(from.index);
    check_y(to.index);
    xy_[static_cast<std::size_t>(from.index) * b_ + to.index] = 1;
  } else {
    check_y(from.index);
    check_x(to.index);
    yx_[static_cast<std::size_t>(from.index) * a_ + to.index] = 1;
  }
}

void BipartiteDigraph::remove_arc(Vertex from, Vertex to) {
  if (from.side == to.side)
    raise(Errc::same_class_arc,
          to_string(from) + " -> " + to_string(to) + " stays inside one colour class");
  if (from.side == Side::X) {
    check_x(from.index);
    check_y(to.index);
    xy_[static_cast<std::size_t>(from.index) * b_ + to.index] = 0;
  } else {
    check_y(from.index);
    check_x(to.index);
    yx_[static_cast<std::size_t>(from.index) * a_ + to.index] = 0;
  }
}

int BipartiteDigraph::arc_count() const {
  int n = 0;
  for (auto v : xy_) n += v;
  for (auto v : yx_) n += v;
  return n;
}

DegreePair BipartiteDigraph::degrees(Vertex v) const {
  DegreePair dp;
  if (v.side == Side::X) {
    check_x(v.index);
    for (int j = 0; j < b_; ++j) {
      dp.out += xy_[static_cast<std::size_t>(v.index) * b_ + j];
      dp.in += yx_[static_cast<std::size_t>(j) * a_ + v.index];
    }
  } else {
    check_y(v.index);
    for (int i = 0; i < a_; ++i) {
      dp.out += yx_[static_cast<std::size_t>(v.index) * a_ + i];
      dp.in += xy_[static_cast<std::size_t>(i) * b_ + v.index];
    }
  }
  return dp;
}

DegreePair BipartiteDigraph::degrees(Vertex v, const VertexSet& within) const {
  if (within.host_a() != a_ || within.host_b() != b_)
    raise(Errc::index_out_of_range, "vertex set shaped for a different host");
  DegreePair dp;
  if (v.side == Side::X) {
    check_x(v.index);
    for (int j = 0; j < b_; ++j) {
      if (!within.contains(vy(j))) continue;
      dp.out += xy_[static_cast<std::size_t>(v.index) * b_ + j];
      dp.in += yx_[static_cast<std::size_t>(j) * a_ + v.index];
    }
  } else {
    check_y(v.index);
    for (int i = 0; i < a_; ++i) {
      if (!within.contains(vx(i))) continue;
      dp.out += yx_[static_cast<std::size_t>(v.index) * a_ + i];
      dp.in += xy_[static_cast<std::size_t>(i) * b_ + v.index];
    }
  }
  return dp;
}

BipartiteDigraph build(int a, int b, std::span<const std::pair<Vertex, Vertex>> arcs) {
  if (a < 1 || b < 1) raise(Errc::invalid_params, "class sizes must be at least 1");
  BipartiteDigraph d(a, b);
  for (const auto& [from, to] : arcs) d.add_arc(from, to);
  return d;
}

InducedSubdigraph remove_vertices(const BipartiteDigraph& d, const VertexSet& removed) {
  if (removed.host_a() != d.a() || removed.host_b() != d.b())
    raise(Errc::index_out_of_range, "vertex set shaped for a different host");
  InducedSubdigraph out;
  out.x_old_to_new.assign(d.a(), -1);
  out.y_old_to_new.assign(d.b(), -1);
  for (int i = 0; i < d.a(); ++i) {
    if (removed.contains(vx(i))) continue;
    out.x_old_to_new[i] = static_cast<int>(out.x_new_to_old.size());
    out.x_new_to_old.push_back(i);
  }
  for (int j = 0; j < d.b(); ++j) {
    if (removed.contains(vy(j))) continue;
    out.y_old_to_new[j] = static_cast<int>(out.y_new_to_old.size());
    out.y_new_to_old.push_back(j);
  }
  out.graph = BipartiteDigraph(static_cast<int>(out.x_new_to_old.size()),
                               static_cast<int>(out.y_new_to_old.size()));
  for (int ni = 0; ni < out.graph.a(); ++ni) {
    for (int nj = 0; nj < out.graph.b(); ++nj) {
      const int oi = out.x_new_to_old[ni];
      const int oj = out.y_new_to_old[nj];
      if (d.xy(oi, oj)) out.graph.add_arc(vx(ni), vy(nj));
      if (d.yx(oj, oi)) out.graph.add_arc(vy(nj), vx(ni));
    }
  }
  return out;
}

BipartiteDigraph reverse_arcs(const BipartiteDigraph& d) {
  BipartiteDigraph out(d.a(), d.b());
  for (int i = 0; i < d.a(); ++i) {
    for (int j = 0; j < d.b(); ++j) {
      if (d.xy(i, j)) out.add_arc(vy(j), vx(i));
      if (d.yx(j, i)) out.add_arc(vx(i), vy(j));
    }
  }
  return out;
}

namespace {

void check_permutation(std::span<const int> perm, int n, const char* what) {
  if (static_cast<int>(perm.size()) != n)
    raise(Errc::invalid_params, std::string(what) + " permutation has wrong size");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      raise(Errc::invalid_params, std::string(what) + " permutation is not a bijection");
    seen[v] = 1;
  }
}

}  // namespace

BipartiteDigraph relabel(const BipartiteDigraph& d, std::span<const int> x_perm,
                         std::span<const int> y_perm) {
  check_permutation(x_perm, d.a(), "X");
  check_permutation(y_perm, d.b(), "Y");
  BipartiteDigraph out(d.a(), d.b());
  for (int i = 0; i < d.a(); ++i) {
    for (int j = 0; j < d.b(); ++j) {
      if (d.xy(i, j)) out.add_arc(vx(x_perm[i]), vy(y_perm[j]));
      if (d.yx(j, i)) out.add_arc(vy(y_perm[j]), vx(x_perm[i]));
    }
  }
  return out;
}

}  // namespace bdg
