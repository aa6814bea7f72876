#include "bdg/matching.hpp"

#include <algorithm>

namespace bdg {

Matching::Matching(int a, int b) {
  if (a < 0 || b < 0) raise(Errc::invalid_params, "negative class size");
  to_y_.assign(static_cast<std::size_t>(a), -1);
  to_x_.assign(static_cast<std::size_t>(b), -1);
}

bool Matching::complete() const {
  return std::find(to_y_.begin(), to_y_.end(), -1) == to_y_.end();
}

int Matching::pair_count() const {
  return static_cast<int>(to_y_.size() - std::count(to_y_.begin(), to_y_.end(), -1));
}

int Matching::y_of(int x) const {
  if (x < 0 || x >= host_a()) raise(Errc::index_out_of_range, "x" + std::to_string(x));
  return to_y_[x];
}

int Matching::x_of(int y) const {
  if (y < 0 || y >= host_b()) raise(Errc::index_out_of_range, "y" + std::to_string(y));
  return to_x_[y];
}

void Matching::bind(int x, int y) {
  if (x < 0 || x >= host_a() || y < 0 || y >= host_b())
    raise(Errc::index_out_of_range, "pair outside host");
  if (to_y_[x] != -1 || to_x_[y] != -1)
    raise(Errc::precondition_violated, "bind on an already matched vertex");
  to_y_[x] = y;
  to_x_[y] = x;
}

namespace {

// Kuhn's augmenting search, determinized: each step claims the least free
// neighbour outright before trying to displace owners in ascending Y order.
struct Augmenter {
  const BipartiteDigraph& d;
  std::vector<int> to_y, to_x;
  std::vector<char> visited;

  explicit Augmenter(const BipartiteDigraph& graph)
      : d(graph),
        to_y(graph.a(), -1),
        to_x(graph.b(), -1),
        visited(graph.b(), 0) {}

  bool augment(int x) {
    for (int y = 0; y < d.b(); ++y) {
      if (!d.xy(x, y) || visited[y] || to_x[y] != -1) continue;
      visited[y] = 1;
      to_y[x] = y;
      to_x[y] = x;
      return true;
    }
    for (int y = 0; y < d.b(); ++y) {
      if (!d.xy(x, y) || visited[y]) continue;
      visited[y] = 1;
      if (augment(to_x[y])) {
        to_y[x] = y;
        to_x[y] = x;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::variant<Matching, HallViolator> complete_matching(const BipartiteDigraph& d) {
  if (d.a() > d.b())
    raise(Errc::precondition_violated, "matching needs |X| <= |Y|");
  Augmenter aug(d);
  for (int x = 0; x < d.a(); ++x) {
    std::fill(aug.visited.begin(), aug.visited.end(), 0);
    if (aug.augment(x)) continue;
    // The alternating tree of the failed search: x plus the owners of every
    // visited y reach exactly the visited ys, one short of the tree size.
    HallViolator viol;
    viol.members.push_back(x);
    for (int y = 0; y < d.b(); ++y) {
      if (!aug.visited[y]) continue;
      viol.neighborhood.push_back(y);
      viol.members.push_back(aug.to_x[y]);
    }
    std::sort(viol.members.begin(), viol.members.end());
    return viol;
  }
  Matching m(d.a(), d.b());
  for (int x = 0; x < d.a(); ++x) m.bind(x, aug.to_y[x]);
  return m;
}

WitnessPair hall_to_witness(const BipartiteDigraph& d, const HallViolator& viol) {
  if (!d.balanced())
    raise(Errc::not_a_violator, "witness conversion needs equal class sizes");
  if (viol.members.empty())
    raise(Errc::not_a_violator, "empty member set");
  std::vector<char> in_s(d.a(), 0), in_n(d.b(), 0);
  for (int x : viol.members) {
    if (x < 0 || x >= d.a()) raise(Errc::not_a_violator, "member index out of range");
    if (in_s[x]) raise(Errc::not_a_violator, "duplicate member");
    in_s[x] = 1;
  }
  for (int y : viol.neighborhood) {
    if (y < 0 || y >= d.b()) raise(Errc::not_a_violator, "neighbourhood index out of range");
    in_n[y] = 1;
  }
  // The recorded neighbourhood must be exactly the joint out-neighbourhood.
  for (int j = 0; j < d.b(); ++j) {
    bool hit = false;
    for (int x : viol.members)
      if (d.xy(x, j)) {
        hit = true;
        break;
      }
    if (hit != (in_n[j] != 0))
      raise(Errc::not_a_violator, "recorded neighbourhood does not match the digraph");
  }
  if (viol.neighborhood.size() >= viol.members.size())
    raise(Errc::not_a_violator, "neighbourhood is not smaller than the member set");

  const int x = *std::min_element(viol.members.begin(), viol.members.end());
  int y = -1;
  for (int j = 0; j < d.b(); ++j) {
    if (!in_n[j]) {
      y = j;
      break;
    }
  }
  if (y < 0) raise(Errc::internal_error, "violator neighbourhood covers Y");
  const int sum = d.degrees(vx(x)).out + d.degrees(vy(y)).in;
  return {vx(x), vy(y), sum};
}

}  // namespace bdg
