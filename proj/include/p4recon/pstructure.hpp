#pragma once

/**
 * P4-connectivity machinery: modules and their associated partitions, triad
 * composition, the P4 co-occurrence relation, p-components, separable and
 * generalized split triads, the four-way structure classifier, and
 * 1-decomposability.
 */

#include <cassert>
#include <optional>
#include <span>

#include "p4recon/graph.hpp"

namespace p4recon {

/// Raised when a graph contradicts the unique-separable-component
/// structure. Surfaced for the verification suites rather than handled.
struct structure_violation : std::logic_error {
  using std::logic_error::logic_error;
};

// ---- modules ---------------------------------------------------------------

/// True iff every vertex outside m is adjacent to all of m or to none of it.
inline bool is_module(const Graph& g, VertexSet m) {
  for (int v : g.vertices() - m) {
    const VertexSet hit = g.neighbors(v) & m;
    if (!hit.empty() && hit != m) return false;
  }
  return true;
}

/// The partition V = a + b + m with a fully adjacent to m and b fully
/// non-adjacent. Requires a nonempty module.
inline std::pair<VertexSet, VertexSet> module_partition(const Graph& g, VertexSet m) {
  if (m.empty()) throw std::invalid_argument("module_partition: empty module has no partition");
  if (!is_module(g, m)) throw std::invalid_argument("module_partition: set is not a module");
  VertexSet a, b;
  for (int v : g.vertices() - m) {
    if ((g.neighbors(v) & m) == m)
      a.set(v);
    else
      b.set(v);
  }
  return {a, b};
}

// ---- composition -----------------------------------------------------------

/// Disjoint union of t.g and h plus the complete join between t.a and the
/// copy of h. The copy occupies vertices t.g.size() .. t.g.size()+h.size()-1
/// and is a module of the result with associated partition (t.a, t.b).
inline Graph compose(const Triad& t, const Graph& h) {
  const int nt = t.g.size(), nh = h.size();
  if (nt + nh > Graph::max_vertices)
    throw std::length_error("compose: combined order " + std::to_string(nt + nh) +
                            " exceeds capacity " + std::to_string(Graph::max_vertices));
  Graph r(nt + nh);
  for (int u = 0; u < nt; ++u)
    for (int v : t.g.neighbors(u))
      if (u < v) r.add_edge(u, v);
  for (int u = 0; u < nh; ++u)
    for (int v : h.neighbors(u))
      if (u < v) r.add_edge(nt + u, nt + v);
  for (int u : t.a)
    for (int v = 0; v < nh; ++v) r.add_edge(u, nt + v);
  return r;
}

/// Vertex deletion that keeps the (a, b) coloring aligned with the relabeled
/// graph.
inline Triad triad_delete_vertex(const Triad& t, int v) {
  Triad out;
  out.g = delete_vertex(t.g, v);
  for (int i = 0; i < out.g.size(); ++i) {
    const int old = i < v ? i : i + 1;
    if (t.a.test(old)) out.a.set(i);
    if (t.b.test(old)) out.b.set(i);
  }
  return out;
}

// ---- p-connectivity --------------------------------------------------------

/// Auxiliary graph on the same vertices: u ~ v iff some induced P4 of g
/// contains both.
inline Graph p4_cooccurrence(const Graph& g) {
  Graph r(g.size());
  for (const P4& p : induced_p4s(g)) {
    const int vs[4] = {p.x, p.y, p.z, p.t};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) r.add_edge(vs[i], vs[j]);
  }
  return r;
}

/// A bipartition with no crossing P4 is exactly a disconnection of the
/// co-occurrence graph, so p-connectivity reduces to its connectivity.
/// Graphs on at most one vertex are p-connected under this convention.
inline bool is_p_connected(const Graph& g) { return is_connected(p4_cooccurrence(g)); }

/// Connected components of the co-occurrence graph; singletons are trivial
/// p-components, every component of size >= 2 induces a maximal p-connected
/// subgraph.
inline std::vector<VertexSet> p_components(const Graph& g) {
  return connected_components(p4_cooccurrence(g));
}

// ---- separable triads ------------------------------------------------------

namespace detail {

// Crossing-P4 placement test against a fixed P4 list. A P4 crosses (a, b)
// when it meets both sides; separability demands midpoints in a and
// endpoints in b for each such P4.
inline bool separable_placement(std::span<const P4> p4s, VertexSet a, VertexSet b) {
  for (const P4& p : p4s) {
    const VertexSet vs = p.vertices();
    if ((vs & a).empty() || (vs & b).empty()) continue;
    if (!a.contains(p.midpoints()) || !b.contains(p.endpoints())) return false;
  }
  return true;
}

}  // namespace detail

inline bool is_separable_triad(const Triad& t) {
  if (t.a.empty() || t.b.empty()) return false;
  if (!is_p_connected(t.g)) return false;
  return detail::separable_placement(induced_p4s(t.g), t.a, t.b);
}

/// The unique bipartition making (g, a, b) a separable triad, if any. Scans
/// all bipartitions; in debug builds the scan also asserts uniqueness.
inline std::optional<std::pair<VertexSet, VertexSet>> find_separable_partition(const Graph& g) {
  if (!is_p_connected(g))
    throw std::invalid_argument("find_separable_partition: graph is not p-connected");
  const std::vector<P4> p4s = induced_p4s(g);
  const std::uint32_t all = VertexSet::full(g.size()).bits;
  std::optional<std::pair<VertexSet, VertexSet>> found;
  for (std::uint32_t mask = 1; mask < all; ++mask) {
    const VertexSet a{mask}, b{all & ~mask};
    if (!detail::separable_placement(p4s, a, b)) continue;
    assert(!found && "separable partition is unique for p-connected graphs");
    found = {a, b};
#ifdef NDEBUG
    break;
#endif
  }
  return found;
}

/// Every connected component of complement(g[a]) and of g[b], read as a
/// vertex set of g, must be a module of g.
inline bool is_generalized_split_triad(const Triad& t) {
  const auto component_modules = [&](VertexSet part, bool complement_part) {
    auto sub = induced_subgraph(t.g, part);
    const Graph inner = complement_part ? complement(sub.graph) : sub.graph;
    for (VertexSet comp : connected_components(inner)) {
      VertexSet host;
      for (int v : comp) host.set(sub.vertex_map[static_cast<std::size_t>(v)]);
      if (!is_module(t.g, host)) return false;
    }
    return true;
  };
  return component_modules(t.a, true) && component_modules(t.b, false);
}

// ---- structure classification ----------------------------------------------

enum class StructureCase { disconnected, antidisconnected, separable_composition, p_connected };

inline const char* to_string(StructureCase c) {
  switch (c) {
    case StructureCase::disconnected: return "Disconnected";
    case StructureCase::antidisconnected: return "Antidisconnected";
    case StructureCase::separable_composition: return "SeparableComposition";
    case StructureCase::p_connected: return "PConnected";
  }
  return "?";
}

/// Exactly one case applies per graph. For separable_composition, the graph
/// equals (g[s], a, b) composed with g[V - s].
struct StructureClass {
  StructureCase kind;
  VertexSet s;  // separable component (separable_composition only)
  VertexSet a;  // s-vertices joined to everything outside s
  VertexSet b;  // s-vertices with no neighbor outside s
};

inline StructureClass structure_classify(const Graph& g) {
  if (g.size() < 1) throw std::invalid_argument("structure_classify: empty graph");
  if (!is_connected(g)) return {StructureCase::disconnected, {}, {}, {}};
  if (!is_anticonnected(g)) return {StructureCase::antidisconnected, {}, {}, {}};
  const std::vector<P4> p4s = induced_p4s(g);
  const std::vector<VertexSet> comps = connected_components(p4_cooccurrence(g));
  if (comps.size() == 1) return {StructureCase::p_connected, {}, {}, {}};

  // A component S is accepted when every S-vertex is uniform toward the rest
  // of the graph (all or nothing) and (g[S], a, b) is separable. Any P4
  // meeting S in two or more vertices lies wholly inside S, so the placement
  // test can run on the full P4 list.
  int accepted = 0;
  StructureClass found{StructureCase::separable_composition, {}, {}, {}};
  for (VertexSet s : comps) {
    const VertexSet c = g.vertices() - s;
    if (c.empty()) continue;
    VertexSet a, b;
    bool uniform = true;
    for (int v : s) {
      const VertexSet hit = g.neighbors(v) & c;
      if (hit == c)
        a.set(v);
      else if (hit.empty())
        b.set(v);
      else {
        uniform = false;
        break;
      }
    }
    if (!uniform || a.empty() || b.empty()) continue;
    if (!detail::separable_placement(p4s, a, b)) continue;
    ++accepted;
    found.s = s;
    found.a = a;
    found.b = b;
  }
  if (accepted != 1)
    throw structure_violation("connected, anticonnected, p-disconnected graph with " +
                              std::to_string(accepted) + " accepted separable components");
  return found;
}

// ---- 1-decomposability -----------------------------------------------------

/// Witness module with associated partition (a, b), a a clique and b stable.
struct OneDecomposition {
  VertexSet m, a, b;
};

/// Searches modules in mask order. The trivial candidates follow the letter
/// of the definition: the empty module leaves (a, b) unconstrained, so it
/// succeeds exactly on split graphs; the full vertex set is excluded since
/// its partition is vacuous and would qualify every graph. Pass
/// nontrivial_only to restrict to homogeneous sets (1 < |m| < n).
inline std::optional<OneDecomposition> is_1_decomposable(const Graph& g,
                                                         bool nontrivial_only = false) {
  if (g.size() > 20)
    throw std::out_of_range("is_1_decomposable: subset scan capped at 20 vertices");
  const std::uint32_t all = VertexSet::full(g.size()).bits;
  if (!nontrivial_only) {
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
      const VertexSet a{mask}, b{all & ~mask};
      if (is_clique(g, a) && is_stable_set(g, b)) return OneDecomposition{VertexSet{}, a, b};
    }
  }
  for (std::uint32_t mask = 1; mask < all; ++mask) {
    const VertexSet m{mask};
    if (nontrivial_only && m.count() < 2) continue;
    if (!is_module(g, m)) continue;
    const auto [a, b] = module_partition(g, m);
    if (is_clique(g, a) && is_stable_set(g, b)) return OneDecomposition{m, a, b};
  }
  return std::nullopt;
}

}  // namespace p4recon
