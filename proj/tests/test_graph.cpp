#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>
#include <set>

#include <p4recon/enumerate.hpp>
#include <p4recon/graph.hpp>

using namespace p4recon;

namespace {

Graph random_graph(int n, std::mt19937& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1u) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("complement") {
  CHECK(complement(Graph(3)) == complete_graph(3));
  CHECK(complement(complete_graph(3)) == Graph(3));

  // complement of path 0-1-2-3 is the path 1-3-0-2
  const Graph cp = complement(path_graph(4));
  CHECK(cp == graph_from_edges(4, {{1, 3}, {3, 0}, {0, 2}}));

  SECTION("involution over all graphs n <= 8") {
    for (int n = 1; n <= 8; ++n)
      for (const auto& entry : catalogue_cached(n).entries)
        CHECK(complement(complement(entry.graph)) == entry.graph);
  }
}

TEST_CASE("induced subgraph") {
  const Graph c5 = cycle_graph(5);
  SECTION("whole vertex set is the identity") {
    const auto sub = induced_subgraph(c5, c5.vertices());
    CHECK(sub.graph == c5);
    CHECK(sub.vertex_map == std::vector<int>{0, 1, 2, 3, 4});
  }
  SECTION("four consecutive C5 vertices induce P4") {
    const auto sub = induced_subgraph(c5, VertexSet{0b01111});
    CHECK(sub.graph == path_graph(4));
  }
  SECTION("nonadjacent P4 vertices induce the edgeless pair") {
    const auto sub = induced_subgraph(path_graph(4), VertexSet{0b0101});
    CHECK(sub.graph == Graph(2));
    CHECK(sub.vertex_map == std::vector<int>{0, 2});
  }
  SECTION("member out of range") {
    CHECK_THROWS_AS(induced_subgraph(path_graph(4), VertexSet{0b10001}), std::out_of_range);
  }
}

TEST_CASE("delete_vertex") {
  CHECK(delete_vertex(path_graph(4), 0) == path_graph(3));
  CHECK(delete_vertex(path_graph(4), 3) == path_graph(3));
  // deleting a midpoint leaves K2 + K1
  CHECK(delete_vertex(path_graph(4), 1) == graph_from_edges(3, {{1, 2}}));
  CHECK(delete_vertex(Graph(1), 0) == Graph(0));
  CHECK_THROWS_AS(delete_vertex(path_graph(4), 4), std::out_of_range);

  SECTION("card loses exactly deg(v) edges") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const Graph g = random_graph(2 + static_cast<int>(rng() % 7), rng);
      const int v = static_cast<int>(rng() % static_cast<unsigned>(g.size()));
      CHECK(delete_vertex(g, v).edge_count() ==
            g.edge_count() - static_cast<std::size_t>(g.degree(v)));
    }
  }
}

TEST_CASE("degree_sequence") {
  CHECK(degree_sequence(path_graph(4)) == std::vector<int>{2, 2, 1, 1});
  CHECK(degree_sequence(cycle_graph(5)) == std::vector<int>{2, 2, 2, 2, 2});
  CHECK(degree_sequence(Graph(3)) == std::vector<int>{0, 0, 0});
}

TEST_CASE("connectivity") {
  CHECK(is_connected(complete_graph(2)));
  CHECK_FALSE(is_anticonnected(complete_graph(2)));
  CHECK(is_connected(path_graph(4)));
  CHECK(is_anticonnected(path_graph(4)));  // complement of P4 is a P4
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(Graph(0)));

  const auto comps = connected_components(disjoint_union(path_graph(3), complete_graph(2)));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0b00111});
  CHECK(comps[1] == VertexSet{0b11000});
}

TEST_CASE("induced_p4s") {
  SECTION("P4 itself") {
    const auto p4s = induced_p4s(path_graph(4));
    REQUIRE(p4s.size() == 1);
    CHECK(p4s[0].vertices() == VertexSet::full(4));
    CHECK(p4s[0].midpoints() == VertexSet{0b0110});
    CHECK(p4s[0].x < p4s[0].t);
  }
  SECTION("C5 has five, C4 none") {
    CHECK(induced_p4s(cycle_graph(5)).size() == 5);
    CHECK(induced_p4s(cycle_graph(4)).empty());
  }
  SECTION("each P4 listed once, in canonical orientation") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = random_graph(4 + static_cast<int>(rng() % 4), rng);
      const auto p4s = induced_p4s(g);
      std::set<std::array<int, 4>> seen;
      for (const P4& p : p4s) {
        CHECK(induces_p4(g, p));
        CHECK(p.x < p.t);
        CHECK(seen.insert({p.x, p.y, p.z, p.t}).second);
      }
      // oracle: count 4-subsets inducing a path by hand
      std::size_t expected = 0;
      const std::uint32_t all = VertexSet::full(g.size()).bits;
      for (std::uint32_t mask = 0; mask <= all && g.size() >= 4; ++mask) {
        const VertexSet s{mask};
        if (s.count() != 4) continue;
        const Graph sub = induced_subgraph(g, s).graph;
        const std::vector<int> degs = degree_sequence(sub);
        if (sub.edge_count() == 3 && degs == std::vector<int>{2, 2, 1, 1} && is_connected(sub))
          ++expected;
      }
      CHECK(p4s.size() == expected);
    }
  }
}

TEST_CASE("P4 count is complement-invariant for n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& entry : catalogue_cached(n).entries)
      CHECK(induced_p4s(entry.graph).size() == induced_p4s(complement(entry.graph)).size());
}

TEST_CASE("Kelly counting over all graphs n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& entry : catalogue_cached(n).entries) {
      std::size_t total = 0;
      for (int v = 0; v < n; ++v) total += delete_vertex(entry.graph, v).edge_count();
      CHECK(total == static_cast<std::size_t>(n - 2) * entry.graph.edge_count());
    }
  }
}

TEST_CASE("partners") {
  SECTION("no fifth vertex") {
    const auto p4s = induced_p4s(path_graph(4));
    CHECK(partners(path_graph(4), p4s[0]).empty());
  }
  SECTION("P5 interior") {
    const Graph p5 = path_graph(5);
    const P4 p{0, 1, 2, 3};
    CHECK(partners(p5, p) == VertexSet{0b10000});
  }
  SECTION("isolated vertex is not a partner") {
    const Graph g = disjoint_union(path_graph(4), Graph(1));
    CHECK(partners(g, P4{0, 1, 2, 3}).empty());
  }
  SECTION("non-induced quadruple rejected") {
    CHECK_THROWS_AS(partners(cycle_graph(4), P4{0, 1, 2, 3}), std::invalid_argument);
  }
}
