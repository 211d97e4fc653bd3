#pragma once

/**
 * Small simple undirected graphs (up to 32 vertices) with one bitmask row
 * per vertex, plus the elementary operations everything else is built on:
 * complement, induced subgraphs, degrees, connectivity and induced-P4
 * enumeration.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p4recon {

/// Subset of {0..31} with bit-mask semantics.
struct VertexSet {
  std::uint32_t bits = 0;

  constexpr VertexSet() = default;
  explicit constexpr VertexSet(std::uint32_t mask) : bits(mask) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 32 ? 0xffffffffu : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint32_t{1} << v); }

  constexpr bool test(int v) const { return (bits >> v) & 1u; }
  constexpr void set(int v) { bits |= std::uint32_t{1} << v; }
  constexpr void reset(int v) { bits &= ~(std::uint32_t{1} << v); }
  constexpr int count() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  /// True iff s is a subset of *this.
  constexpr bool contains(VertexSet s) const { return (s.bits & ~bits) == 0; }
  /// Lowest member; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  struct iterator {
    std::uint32_t rest;
    int operator*() const { return std::countr_zero(rest); }
    iterator& operator++() { rest &= rest - 1; return *this; }
    friend bool operator!=(iterator a, iterator b) { return a.rest != b.rest; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }
};

/// Simple undirected graph on vertices 0..n-1. Rows are symmetric and
/// irreflexive by construction; bits at positions >= n stay zero.
class Graph {
public:
  static constexpr int max_vertices = 32;

  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
      throw std::out_of_range("Graph: order " + std::to_string(n) + " outside 0.." +
                              std::to_string(max_vertices));
  }

  int size() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("add_edge: self-loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(adj_[v].count());
    return twice / 2;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                              std::to_string(n_));
  }

  int n_ = 0;
  std::array<VertexSet, max_vertices> adj_{};
};

/// Graph together with an ordered bipartition (a, b) of its vertices.
struct Triad {
  Graph g;
  VertexSet a;
  VertexSet b;

  bool valid_partition() const {
    return (a & b).empty() && (a | b) == g.vertices();
  }
};

/// Induced path on four vertices x-y-z-t, stored with min(x,t) first
/// among the two end-to-end readings.
struct P4 {
  int x, y, z, t;  // endpoints x,t; midpoints y,z

  VertexSet vertices() const {
    return VertexSet::single(x) | VertexSet::single(y) | VertexSet::single(z) |
           VertexSet::single(t);
  }
  VertexSet midpoints() const { return VertexSet::single(y) | VertexSet::single(z); }
  VertexSet endpoints() const { return VertexSet::single(x) | VertexSet::single(t); }
};

// ---- construction helpers -------------------------------------------------

inline Graph graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.size() + b.size() > Graph::max_vertices)
    throw std::length_error("disjoint_union: combined order exceeds capacity");
  Graph g(a.size() + b.size());
  for (int u = 0; u < a.size(); ++u)
    for (int v : a.neighbors(u))
      if (u < v) g.add_edge(u, v);
  for (int u = 0; u < b.size(); ++u)
    for (int v : b.neighbors(u))
      if (u < v) g.add_edge(a.size() + u, a.size() + v);
  return g;
}

// ---- elementary operations ------------------------------------------------

inline Graph complement(const Graph& g) {
  Graph c(g.size());
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

/// Induced subgraph plus the relabeling map back into the host graph:
/// vertex i of `graph` is vertex `vertex_map[i]` of the original.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!g.vertices().contains(s))
    throw std::out_of_range("induced_subgraph: member outside vertex range of host graph");
  InducedSubgraph out;
  out.vertex_map.reserve(static_cast<std::size_t>(s.count()));
  for (int v : s) out.vertex_map.push_back(v);
  out.graph = Graph(static_cast<int>(out.vertex_map.size()));
  for (std::size_t i = 0; i < out.vertex_map.size(); ++i)
    for (std::size_t j = i + 1; j < out.vertex_map.size(); ++j)
      if (g.adjacent(out.vertex_map[i], out.vertex_map[j]))
        out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

inline Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.size())
    throw std::out_of_range("delete_vertex: vertex " + std::to_string(v) +
                            " outside graph of order " + std::to_string(g.size()));
  return induced_subgraph(g, g.vertices() - VertexSet::single(v)).graph;
}

/// Degrees sorted descending.
inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

inline bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s)
    if (!(g.neighbors(v) & s).contains(s - VertexSet::single(v))) return false;
  return true;
}

inline bool is_stable_set(const Graph& g, VertexSet s) {
  for (int v : s)
    if (!(g.neighbors(v) & s).empty()) return false;
  return true;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen;
  for (int v = 0; v < g.size(); ++v) {
    if (seen.test(v)) continue;
    VertexSet comp = VertexSet::single(v);
    for (;;) {
      VertexSet grown = comp;
      for (int u : comp) grown = grown | g.neighbors(u);
      if (grown == comp) break;
      comp = grown;
    }
    comps.push_back(comp);
    seen = seen | comp;
  }
  return comps;
}

/// Graphs on at most one vertex count as connected.
inline bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

inline bool is_anticonnected(const Graph& g) { return is_connected(complement(g)); }

/// Every induced four-vertex path, each exactly once in its canonical
/// orientation. Midpair-first enumeration with adjacency-mask pruning.
inline std::vector<P4> induced_p4s(const Graph& g) {
  std::vector<P4> out;
  for (int y = 0; y < g.size(); ++y) {
    for (int z : g.neighbors(y)) {
      VertexSet xs = (g.neighbors(y) - g.neighbors(z)) - VertexSet::single(z);
      for (int x : xs) {
        VertexSet ts = ((g.neighbors(z) - g.neighbors(y)) - g.neighbors(x)) -
                       (VertexSet::single(x) | VertexSet::single(y));
        for (int t : ts)
          if (x < t) out.push_back(P4{x, y, z, t});
      }
    }
  }
  return out;
}

inline bool induces_p4(const Graph& g, const P4& p) {
  VertexSet vs = p.vertices();
  if (vs.count() != 4 || !g.vertices().contains(vs)) return false;
  return g.adjacent(p.x, p.y) && g.adjacent(p.y, p.z) && g.adjacent(p.z, p.t) &&
         !g.adjacent(p.x, p.z) && !g.adjacent(p.x, p.t) && !g.adjacent(p.y, p.t);
}

/// Vertices v outside p such that the induced subgraph on p's vertices plus v
/// contains at least two induced P4s.
inline VertexSet partners(const Graph& g, const P4& p) {
  if (!induces_p4(g, p))
    throw std::invalid_argument("partners: quadruple does not induce a P4 in the host graph");
  VertexSet result;
  for (int v : g.vertices() - p.vertices()) {
    auto sub = induced_subgraph(g, p.vertices() | VertexSet::single(v));
    if (induced_p4s(sub.graph).size() >= 2) result.set(v);
  }
  return result;
}

}  // namespace p4recon
