#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "bdg/codec.hpp"
#include "bdg/generators.hpp"
#include "bdg/graph.hpp"
#include "bdg/oracle.hpp"
#include "oracles.hpp"

using namespace bdg;
using testing_oracles::make;
using testing_oracles::raised;

TEST_CASE("vertex ordering and names") {
  CHECK(vx(0) < vx(1));
  CHECK(vx(5) < vy(0));
  CHECK(vy(1) < vy(2));
  CHECK(to_string(vx(0)) == "x0");
  CHECK(to_string(vy(3)) == "y3");
  CHECK(vertex_from_string("x2") == vx(2));
  CHECK(vertex_from_string("y11") == vy(11));
  CHECK_FALSE(vertex_from_string("z1").has_value());
}

TEST_CASE("build collects arcs and rejects bad ones") {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      arcs.emplace_back(vx(i), vy(j));
      arcs.emplace_back(vy(j), vx(i));
    }
  BipartiteDigraph k22 = build(2, 2, arcs);
  CHECK(k22 == complete_bipartite(2, 2));
  CHECK(k22.arc_count() == 8);

  CHECK(build(2, 2, {}).arc_count() == 0);

  std::vector<std::pair<Vertex, Vertex>> loop{{vx(0), vx(0)}};
  CHECK(raised([&] { build(1, 1, loop); }) == Errc::same_class_arc);
  std::vector<std::pair<Vertex, Vertex>> oob{{vx(0), vy(5)}};
  CHECK(raised([&] { build(1, 1, oob); }) == Errc::index_out_of_range);

  // duplicate listings collapse
  std::vector<std::pair<Vertex, Vertex>> dup{{vx(0), vy(0)}, {vx(0), vy(0)}};
  CHECK(build(1, 1, dup).arc_count() == 1);
}

TEST_CASE("degrees with and without restriction") {
  BipartiteDigraph k22 = complete_bipartite(2, 2);
  CHECK(k22.degrees(vx(0)) == DegreePair{2, 2});
  CHECK(BipartiteDigraph(2, 2).degrees(vy(1)) == DegreePair{0, 0});

  VertexSet only_y0(2, 2);
  only_y0.add(vy(0));
  CHECK(k22.degrees(vx(0), only_y0) == DegreePair{1, 1});

  VertexSet everything(2, 2);
  for (int i = 0; i < 2; ++i) {
    everything.add(vx(i));
    everything.add(vy(i));
  }
  for (int i = 0; i < 2; ++i) {
    CHECK(k22.degrees(vx(i), everything) == k22.degrees(vx(i)));
    CHECK(k22.degrees(vy(i), everything) == k22.degrees(vy(i)));
  }

  CHECK(raised([&] { k22.degrees(vx(7)); }) == Errc::index_out_of_range);
}

TEST_CASE("remove_vertices keeps surviving arcs and reports the remapping") {
  BipartiteDigraph k22 = complete_bipartite(2, 2);

  VertexSet drop(2, 2);
  drop.add(vx(1));
  drop.add(vy(1));
  InducedSubdigraph sub = remove_vertices(k22, drop);
  CHECK(sub.graph == complete_bipartite(1, 1));
  CHECK(sub.x_new_to_old == std::vector<int>{0});
  CHECK(sub.x_old_to_new == std::vector<int>{0, -1});

  CHECK(remove_vertices(k22, VertexSet(2, 2)).graph == k22);

  VertexSet y0(2, 2);
  y0.add(vy(0));
  InducedSubdigraph col = remove_vertices(k22, y0);
  CHECK(col.graph.a() == 2);
  CHECK(col.graph.b() == 1);
  CHECK(col.graph.arc_count() == 4);
  CHECK(col.y_new_to_old == std::vector<int>{1});
}

TEST_CASE("degree sums count the arcs of each orientation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    BipartiteDigraph d = random_digraph(4, 5, 0.4, rng());
    int out_x = 0, out_y = 0;
    for (int i = 0; i < d.a(); ++i) out_x += d.degrees(vx(i)).out;
    for (int j = 0; j < d.b(); ++j) out_y += d.degrees(vy(j)).out;
    int xy_arcs = 0, yx_arcs = 0;
    for (int i = 0; i < d.a(); ++i)
      for (int j = 0; j < d.b(); ++j) {
        xy_arcs += d.xy(i, j);
        yx_arcs += d.yx(j, i);
      }
    CHECK(out_x == xy_arcs);
    CHECK(out_y == yx_arcs);
    CHECK(d.arc_count() == xy_arcs + yx_arcs);
  }
}

TEST_CASE("reversal is an involution and swaps the degree orientations") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    BipartiteDigraph d = random_digraph(3, 4, 0.5, rng());
    BipartiteDigraph r = reverse_arcs(d);
    CHECK(reverse_arcs(r) == d);
    for (int i = 0; i < d.a(); ++i) {
      auto [o, in] = d.degrees(vx(i));
      CHECK(r.degrees(vx(i)) == DegreePair{in, o});
    }
  }
}

TEST_CASE("relabel permutes indices consistently") {
  BipartiteDigraph d = make(2, 3, {"101", "010", "10", "01", "11"});
  std::vector<int> xp{1, 0}, yp{2, 0, 1};
  BipartiteDigraph r = relabel(d, xp, yp);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(r.xy(xp[static_cast<std::size_t>(i)], yp[static_cast<std::size_t>(j)]) ==
            d.xy(i, j));
      CHECK(r.yx(yp[static_cast<std::size_t>(j)], xp[static_cast<std::size_t>(i)]) ==
            d.yx(j, i));
    }
  // identity permutation is a fixed point
  std::vector<int> ix{0, 1}, iy{0, 1, 2};
  CHECK(relabel(d, ix, iy) == d);
}

TEST_CASE("text codec round-trips and pins the canonical form") {
  CHECK(parse_bdg("bdg 1\n2 2\n11\n11\n11\n11\n") == complete_bipartite(2, 2));
  CHECK(serialize_bdg(BipartiteDigraph(1, 1)) == "bdg 1\n1 1\n0\n0\n");
  CHECK(serialize_bdg(complete_bipartite(2, 2)) == "bdg 1\n2 2\n11\n11\n11\n11\n");

  // comments and missing trailing newline are tolerated on parse
  CHECK(parse_bdg("# note\nbdg 1\n# sizes\n1 1\n1\n1") == complete_bipartite(1, 1));

  CHECK(raised([] { parse_bdg("bdg 1\n2 2\n111\n11\n11\n11\n"); }) == Errc::parse_error);
  CHECK(raised([] { parse_bdg("bdg 2\n1 1\n0\n0\n"); }) == Errc::parse_error);
  CHECK(raised([] { parse_bdg("bdg 1\n1 1\n2\n0\n"); }) == Errc::parse_error);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    BipartiteDigraph d = random_digraph(1 + int(rng() % 5), 1 + int(rng() % 5), 0.5, rng());
    CHECK(parse_bdg(serialize_bdg(d)) == d);
    CHECK(parse_single_line(to_single_line(d)) == d);
  }
}

TEST_CASE("parse errors carry the offending physical line number") {
  auto line_of = [](std::string_view text) -> int {
    try {
      parse_bdg(text);
    } catch (const Error& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("bdg 1\n2 2\n111\n11\n11\n11\n") == 3);
  CHECK(line_of("# c\nbdg 1\n2 2\n11\n11\n11\nxx\n") == 7);
}
