#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <p4recon/enumerate.hpp>
#include <p4recon/oracles.hpp>
#include <p4recon/pstructure.hpp>

using namespace p4recon;

namespace {

// triangle 0,1,2 with pendant legs 3-0, 4-1, 5-2
Graph thin_spider6() {
  return graph_from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {4, 1}, {5, 2}});
}

}  // namespace

TEST_CASE("is_module") {
  const Graph p4 = path_graph(4);
  CHECK(is_module(p4, p4.vertices()));
  CHECK(is_module(p4, VertexSet{}));
  CHECK(is_module(p4, VertexSet::single(2)));
  CHECK_FALSE(is_module(p4, VertexSet{0b0110}));  // 0 sees 1 but not 2
  CHECK(is_module(cycle_graph(4), VertexSet{0b0101}));
}

TEST_CASE("module_partition") {
  SECTION("paw: join vertex vs lone vertex") {
    // 0 joined to everything, K2 = {1,2}, lone vertex 3
    const Graph g = graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    const auto [a, b] = module_partition(g, VertexSet{0b0110});
    CHECK(a == VertexSet::single(0));
    CHECK(b == VertexSet::single(3));
  }
  SECTION("full vertex set gives empty sides") {
    const auto [a, b] = module_partition(path_graph(4), VertexSet::full(4));
    CHECK(a.empty());
    CHECK(b.empty());
  }
  SECTION("C4 diagonal") {
    const auto [a, b] = module_partition(cycle_graph(4), VertexSet{0b0101});
    CHECK(a == VertexSet{0b1010});
    CHECK(b.empty());
  }
  SECTION("errors") {
    CHECK_THROWS_AS(module_partition(path_graph(4), VertexSet{}), std::invalid_argument);
    CHECK_THROWS_AS(module_partition(path_graph(4), VertexSet{0b0110}), std::invalid_argument);
  }
}

TEST_CASE("compose") {
  const Triad t{path_graph(4), VertexSet{0b0110}, VertexSet{0b1001}};
  SECTION("P4 composed with K1 joins the new vertex to the midpoints") {
    const Graph g = compose(t, Graph(1));
    CHECK(g == graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {4, 1}, {4, 2}}));
    CHECK(is_module(g, VertexSet::single(4)));
  }
  SECTION("empty h leaves the triad graph unchanged") {
    CHECK(compose(t, Graph(0)) == path_graph(4));
  }
  SECTION("the h-copy is a module and the round-trip recovers (a, b)") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      Triad rt;
      const int nt = 1 + static_cast<int>(rng() % 5);
      rt.g = Graph(nt);
      for (int u = 0; u < nt; ++u)
        for (int v = u + 1; v < nt; ++v)
          if (rng() & 1u) rt.g.add_edge(u, v);
      const std::uint32_t mask = rng() & VertexSet::full(nt).bits;
      rt.a = VertexSet{mask};
      rt.b = rt.g.vertices() - rt.a;
      Graph h(1 + static_cast<int>(rng() % 4));
      for (int u = 0; u < h.size(); ++u)
        for (int v = u + 1; v < h.size(); ++v)
          if (rng() & 1u) h.add_edge(u, v);
      const Graph g = compose(rt, h);
      const VertexSet hcopy = g.vertices() - VertexSet::full(nt);
      REQUIRE(is_module(g, hcopy));
      const auto [a, b] = module_partition(g, hcopy);
      CHECK(a == rt.a);
      CHECK(b == rt.b);
    }
  }
  SECTION("capacity") {
    const Triad big{complete_graph(20), VertexSet::full(20), VertexSet{}};
    CHECK_THROWS_AS(compose(big, complete_graph(20)), std::length_error);
  }
}

TEST_CASE("p4_cooccurrence") {
  CHECK(p4_cooccurrence(cycle_graph(4)) == Graph(4));
  CHECK(p4_cooccurrence(path_graph(4)) == complete_graph(4));
  CHECK(p4_cooccurrence(disjoint_union(path_graph(4), Graph(1))) ==
        disjoint_union(complete_graph(4), Graph(1)));
}

TEST_CASE("is_p_connected") {
  CHECK(is_p_connected(path_graph(4)));
  CHECK(is_p_connected(cycle_graph(5)));
  CHECK_FALSE(is_p_connected(Graph(2)));
  CHECK_FALSE(is_p_connected(complete_graph(3)));
  CHECK_FALSE(is_p_connected(path_graph(3)));
  CHECK(is_p_connected(Graph(1)));  // convention: co-occurrence of K1 is connected

  SECTION("agrees with the bipartition-scan definition up to n = 6") {
    for (int n = 1; n <= 6; ++n)
      for (const auto& entry : catalogue_cached(n).entries)
        CHECK(is_p_connected(entry.graph) == oracles::p_connected_by_definition(entry.graph));
  }
}

TEST_CASE("p_components") {
  SECTION("P4 plus isolated vertex") {
    const auto comps = p_components(disjoint_union(path_graph(4), Graph(1)));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0b01111});
    CHECK(comps[1] == VertexSet{0b10000});
  }
  SECTION("C4 has four trivial components") {
    CHECK(p_components(cycle_graph(4)).size() == 4);
  }
  SECTION("P5 is one component") {
    const auto comps = p_components(path_graph(5));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == VertexSet::full(5));
  }
  SECTION("nontrivial components induce p-connected subgraphs") {
    for (const auto& entry : catalogue_cached(6).entries)
      for (VertexSet comp : p_components(entry.graph))
        if (comp.count() >= 2)
          CHECK(is_p_connected(induced_subgraph(entry.graph, comp).graph));
  }
}

TEST_CASE("is_separable_triad") {
  const Graph p4 = path_graph(4);
  CHECK(is_separable_triad({p4, VertexSet{0b0110}, VertexSet{0b1001}}));
  CHECK_FALSE(is_separable_triad({p4, VertexSet{0b1001}, VertexSet{0b0110}}));

  SECTION("C5 fails for every bipartition") {
    const Graph c5 = cycle_graph(5);
    for (std::uint32_t mask = 1; mask < 0b11111u; ++mask)
      CHECK_FALSE(is_separable_triad({c5, VertexSet{mask}, VertexSet{0b11111u & ~mask}}));
  }
}

TEST_CASE("find_separable_partition") {
  SECTION("P4 splits into midpoints and endpoints") {
    const auto found = find_separable_partition(path_graph(4));
    REQUIRE(found.has_value());
    CHECK(found->first == VertexSet{0b0110});
    CHECK(found->second == VertexSet{0b1001});
  }
  SECTION("C5 has none") {
    CHECK_FALSE(find_separable_partition(cycle_graph(5)).has_value());
  }
  SECTION("thin spider splits into body and legs") {
    const auto found = find_separable_partition(thin_spider6());
    REQUIRE(found.has_value());
    CHECK(found->first == VertexSet{0b000111});
    CHECK(found->second == VertexSet{0b111000});
  }
  SECTION("requires a p-connected graph") {
    CHECK_THROWS_AS(find_separable_partition(cycle_graph(4)), std::invalid_argument);
  }
  SECTION("at most one bipartition passes, exhaustively at n <= 6") {
    for (int n = 4; n <= 6; ++n) {
      for (const auto& entry : catalogue_cached(n).entries) {
        if (!is_p_connected(entry.graph)) continue;
        int passing = 0;
        const std::uint32_t all = VertexSet::full(n).bits;
        for (std::uint32_t mask = 1; mask < all; ++mask)
          if (is_separable_triad({entry.graph, VertexSet{mask}, VertexSet{all & ~mask}}))
            ++passing;
        CHECK(passing <= 1);
      }
    }
  }
}

TEST_CASE("is_generalized_split_triad") {
  SECTION("split partitions make all components singletons") {
    const Graph g = graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});  // paw is split
    CHECK(is_generalized_split_triad({g, VertexSet{0b0111}, VertexSet{0b1000}}));
  }
  CHECK(is_generalized_split_triad({path_graph(4), VertexSet{0b0110}, VertexSet{0b1001}}));
  SECTION("C5 with two adjacent vertices in a") {
    CHECK_FALSE(
        is_generalized_split_triad({cycle_graph(5), VertexSet{0b00011}, VertexSet{0b11100}}));
  }
  SECTION("separable triads are generalized split triads with both sides shattered (n <= 6)") {
    for (int n = 4; n <= 6; ++n) {
      for (const auto& entry : catalogue_cached(n).entries) {
        if (!is_p_connected(entry.graph)) continue;
        const auto found = find_separable_partition(entry.graph);
        if (!found) continue;
        const Triad t{entry.graph, found->first, found->second};
        CHECK(is_generalized_split_triad(t));
        CHECK_FALSE(is_connected(complement(induced_subgraph(t.g, t.a).graph)));
        CHECK_FALSE(is_connected(induced_subgraph(t.g, t.b).graph));
      }
    }
  }
}

TEST_CASE("composition with a generalized split triad is p-disconnected (n <= 5, h <= 3)") {
  for (int nt = 1; nt <= 5; ++nt) {
    for (const auto& te : catalogue_cached(nt).entries) {
      const std::uint32_t all = VertexSet::full(nt).bits;
      for (std::uint32_t mask = 0; mask <= all; ++mask) {
        const Triad t{te.graph, VertexSet{mask}, VertexSet{all & ~mask}};
        if (!is_generalized_split_triad(t)) continue;
        for (int nh = 1; nh <= 3; ++nh) {
          for (const auto& he : catalogue_cached(nh).entries) {
            const Graph composed = compose(t, he.graph);
            CHECK_FALSE(is_p_connected(composed));
            const VertexSet side_t = VertexSet::full(nt);
            for (VertexSet comp : p_components(composed))
              CHECK((side_t.contains(comp) || (comp & side_t).empty()));
          }
        }
      }
    }
  }
}

TEST_CASE("structure_classify") {
  CHECK(structure_classify(Graph(2)).kind == StructureCase::disconnected);
  CHECK(structure_classify(complete_graph(2)).kind == StructureCase::antidisconnected);
  CHECK(structure_classify(cycle_graph(5)).kind == StructureCase::p_connected);
  CHECK(structure_classify(Graph(1)).kind == StructureCase::p_connected);
  CHECK_THROWS_AS(structure_classify(Graph(0)), std::invalid_argument);

  SECTION("composition of the P4 triad with K2") {
    const Triad t{path_graph(4), VertexSet{0b0110}, VertexSet{0b1001}};
    const StructureClass sc = structure_classify(compose(t, complete_graph(2)));
    CHECK(sc.kind == StructureCase::separable_composition);
    CHECK(sc.s == VertexSet::full(4));
    CHECK(sc.a == VertexSet{0b0110});
    CHECK(sc.b == VertexSet{0b1001});
  }
  SECTION("exactly one case per graph, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& entry : catalogue_cached(n).entries) {
        const StructureClass sc = structure_classify(entry.graph);  // must not throw
        switch (sc.kind) {
          case StructureCase::disconnected:
            CHECK_FALSE(is_connected(entry.graph));
            break;
          case StructureCase::antidisconnected:
            CHECK(is_connected(entry.graph));
            CHECK_FALSE(is_anticonnected(entry.graph));
            break;
          case StructureCase::p_connected:
            CHECK(is_p_connected(entry.graph));
            break;
          case StructureCase::separable_composition: {
            CHECK(is_connected(entry.graph));
            CHECK(is_anticonnected(entry.graph));
            CHECK_FALSE(is_p_connected(entry.graph));
            const auto sub = induced_subgraph(entry.graph, sc.s);
            VertexSet a, b;
            for (std::size_t i = 0; i < sub.vertex_map.size(); ++i) {
              if (sc.a.test(sub.vertex_map[i])) a.set(static_cast<int>(i));
              if (sc.b.test(sub.vertex_map[i])) b.set(static_cast<int>(i));
            }
            CHECK(is_separable_triad({sub.graph, a, b}));
            break;
          }
        }
      }
    }
  }
}

TEST_CASE("is_1_decomposable") {
  SECTION("split graphs qualify through the empty module") {
    const auto dec = is_1_decomposable(path_graph(4));
    REQUIRE(dec.has_value());
    CHECK(dec->m.empty());
    CHECK(is_clique(path_graph(4), dec->a));
    CHECK(is_stable_set(path_graph(4), dec->b));
  }
  SECTION("C5 is 1-indecomposable") {
    CHECK_FALSE(is_1_decomposable(cycle_graph(5)).has_value());
    CHECK_FALSE(is_1_decomposable(cycle_graph(5), true).has_value());
  }
  SECTION("P4 triad composed with C5 decomposes at the C5 module") {
    const Triad t{path_graph(4), VertexSet{0b0110}, VertexSet{0b1001}};
    const Graph g = compose(t, cycle_graph(5));
    const auto dec = is_1_decomposable(g, true);
    REQUIRE(dec.has_value());
    CHECK(dec->m == (g.vertices() - VertexSet::full(4)));
    CHECK(dec->a == VertexSet{0b0110});
    CHECK(dec->b == VertexSet{0b1001});
  }
  SECTION("witness is always a module with clique/stable partition") {
    for (const auto& entry : catalogue_cached(6).entries) {
      for (bool strict : {false, true}) {
        const auto dec = is_1_decomposable(entry.graph, strict);
        if (!dec) continue;
        if (!dec->m.empty()) {
          CHECK(is_module(entry.graph, dec->m));
          const auto [a, b] = module_partition(entry.graph, dec->m);
          CHECK(a == dec->a);
          CHECK(b == dec->b);
        }
        if (strict) CHECK((dec->m.count() > 1 && dec->m.count() < 6));
        CHECK(is_clique(entry.graph, dec->a));
        CHECK(is_stable_set(entry.graph, dec->b));
      }
    }
  }
  SECTION("strict implies lenient") {
    for (const auto& entry : catalogue_cached(5).entries)
      if (is_1_decomposable(entry.graph, true))
        CHECK(is_1_decomposable(entry.graph).has_value());
  }
}

TEST_CASE("triad_delete_vertex keeps colors aligned") {
  const Triad t{thin_spider6(), VertexSet{0b000111}, VertexSet{0b111000}};
  const Triad td = triad_delete_vertex(t, 1);
  CHECK(td.g.size() == 5);
  CHECK(td.a == VertexSet{0b00011});   // body vertices 0,2 move to 0,1
  CHECK(td.b == VertexSet{0b11100});   // legs 3,4,5 move to 2,3,4
  CHECK(td.valid_partition());
}
