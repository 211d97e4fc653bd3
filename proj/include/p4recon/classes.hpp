#pragma once

/**
 * Recognition of the named graph classes: split graphs via the
 * Hammer-Simeone degree test, thin and thick spiders, minimally p-connected
 * graphs, quasi-starfish / quasi-urchin, and P4-tidy by both the partner
 * definition and the p-component structure.
 */

#include <numeric>
#include <span>

#include "p4recon/canonical.hpp"
#include "p4recon/pstructure.hpp"

namespace p4recon {

// ---- split graphs ----------------------------------------------------------

/// m is the Hammer-Simeone index max{i : deg(v_i) >= i-1} over the
/// descending degree sequence; a/b are only meaningful when is_split.
struct SplitVerdict {
  bool is_split = false;
  int m = 0;
  VertexSet a, b;
};

namespace detail {

/// Vertex indices ordered by descending degree, ties by smallest index.
inline std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int u, int v) { return g.degree(u) > g.degree(v); });
  return order;
}

inline int hammer_simeone_index(std::span<const int> degs_desc) {
  int m = 0;
  for (std::size_t i = 0; i < degs_desc.size(); ++i)
    if (degs_desc[i] >= static_cast<int>(i)) m = static_cast<int>(i) + 1;
  return m;
}

/// Degree-sum equality characterizing split graphs:
/// sum of the top m degrees = m(m-1) + sum of the rest.
inline bool split_degree_equality(std::span<const int> degs_desc, int m) {
  long lhs = 0, rhs = static_cast<long>(m) * (m - 1);
  for (std::size_t i = 0; i < degs_desc.size(); ++i)
    (static_cast<int>(i) < m ? lhs : rhs) += degs_desc[i];
  return lhs == rhs;
}

}  // namespace detail

inline SplitVerdict split_hs(const Graph& g) {
  if (g.size() < 1) throw std::invalid_argument("split_hs: empty graph");
  const std::vector<int> order = detail::degree_order(g);
  std::vector<int> degs;
  degs.reserve(order.size());
  for (int v : order) degs.push_back(g.degree(v));
  SplitVerdict verdict;
  verdict.m = detail::hammer_simeone_index(degs);
  verdict.is_split = detail::split_degree_equality(degs, verdict.m);
  if (verdict.is_split) {
    for (std::size_t i = 0; i < order.size(); ++i)
      (static_cast<int>(i) < verdict.m ? verdict.a : verdict.b).set(order[i]);
  }
  return verdict;
}

/// Oracle for split_hs: scan all bipartitions for clique + stable set.
inline bool split_bruteforce(const Graph& g) {
  if (g.size() > 20) throw std::out_of_range("split_bruteforce: scan capped at 20 vertices");
  const std::uint32_t all = VertexSet::full(g.size()).bits;
  for (std::uint32_t mask = 0;; ++mask) {
    if (is_clique(g, VertexSet{mask}) && is_stable_set(g, VertexSet{all & ~mask})) return true;
    if (mask == all) return false;
  }
}

// ---- spiders ---------------------------------------------------------------

enum class SpiderKind { none, thin, thick, both };

inline const char* to_string(SpiderKind k) {
  switch (k) {
    case SpiderKind::none: return "none";
    case SpiderKind::thin: return "thin";
    case SpiderKind::thick: return "thick";
    case SpiderKind::both: return "both";
  }
  return "?";
}

/// For thin (and both), pairing maps each b-vertex to its unique neighbor in
/// a; for thick, to its unique non-neighbor in a.
struct SpiderVerdict {
  SpiderKind kind = SpiderKind::none;
  VertexSet a, b;
  std::vector<std::pair<int, int>> pairing;  // (b-vertex, a-vertex), sorted by b-vertex
};

/// Degree-sequence criterion for thin spiders: the split equality holds with
/// index m, the top m degrees all equal m and the rest all equal 1. Only
/// graphs on >= 4 vertices qualify (spiders here are p-connected, and K2 is
/// not). Shared with the deck-level recognizer, which sees degrees only.
inline bool thin_spider_degrees(std::span<const int> degs_desc) {
  const int n = static_cast<int>(degs_desc.size());
  if (n < 4) return false;
  const int m = detail::hammer_simeone_index(degs_desc);
  if (!detail::split_degree_equality(degs_desc, m)) return false;
  for (int i = 0; i < n; ++i)
    if (degs_desc[static_cast<std::size_t>(i)] != (i < m ? m : 1)) return false;
  return true;
}

inline std::vector<int> complement_degrees(std::span<const int> degs_desc) {
  std::vector<int> out;
  out.reserve(degs_desc.size());
  const int n = static_cast<int>(degs_desc.size());
  for (auto it = degs_desc.rbegin(); it != degs_desc.rend(); ++it) out.push_back(n - 1 - *it);
  return out;
}

inline SpiderVerdict spider_kind(const Graph& g) {
  SpiderVerdict v;
  if (g.size() < 4) return v;
  const std::vector<int> degs = degree_sequence(g);
  const bool thin = thin_spider_degrees(degs);
  const bool thick = thin_spider_degrees(complement_degrees(degs));
  if (!thin && !thick) return v;
  v.kind = thin && thick ? SpiderKind::both : thin ? SpiderKind::thin : SpiderKind::thick;
  const SplitVerdict split = split_hs(g);
  assert(split.is_split);
  v.a = split.a;
  v.b = split.b;
  for (int bv : v.b) {
    const int av = thin ? g.neighbors(bv).lowest() : (v.a - g.neighbors(bv)).lowest();
    v.pairing.emplace_back(bv, av);
  }
  return v;
}

// ---- minimal p-connectivity ------------------------------------------------

/// True iff g is p-connected and every vertex-deleted card is p-disconnected.
inline bool is_minimally_p_connected(const Graph& g) {
  if (g.size() < 1) throw std::invalid_argument("is_minimally_p_connected: empty graph");
  if (!is_p_connected(g)) return false;
  for (int v = 0; v < g.size(); ++v)
    if (is_p_connected(delete_vertex(g, v))) return false;
  return true;
}

// ---- quasi-starfish / quasi-urchin ------------------------------------------

enum class QuasiKind { none, urchin, starfish, both };

inline const char* to_string(QuasiKind k) {
  switch (k) {
    case QuasiKind::none: return "none";
    case QuasiKind::urchin: return "quasi-urchin";
    case QuasiKind::starfish: return "quasi-starfish";
    case QuasiKind::both: return "both";
  }
  return "?";
}

/// Quasi-urchin: a thin spider, or a thin spider with one vertex replaced by
/// a two-vertex module (K2 or O2); quasi-starfish likewise with thick.
/// Replacement is module substitution, so the test contracts every size-2
/// module (delete one of the two twins) and re-tests.
inline QuasiKind quasi_kind(const Graph& g) {
  bool urchin = false, starfish = false;
  const auto absorb = [&](const Graph& cand) {
    const SpiderKind k = spider_kind(cand).kind;
    urchin = urchin || k == SpiderKind::thin || k == SpiderKind::both;
    starfish = starfish || k == SpiderKind::thick || k == SpiderKind::both;
  };
  absorb(g);
  for (int u = 0; u < g.size() && !(urchin && starfish); ++u)
    for (int w = u + 1; w < g.size(); ++w)
      if (is_module(g, VertexSet::single(u) | VertexSet::single(w))) absorb(delete_vertex(g, w));
  if (urchin && starfish) return QuasiKind::both;
  if (urchin) return QuasiKind::urchin;
  if (starfish) return QuasiKind::starfish;
  return QuasiKind::none;
}

// ---- P4-tidy ----------------------------------------------------------------

/// Partner definition: every induced P4 has at most one partner.
inline bool is_p4_tidy_direct(const Graph& g) {
  for (const P4& p : induced_p4s(g))
    if (partners(g, p).count() > 1) return false;
  return true;
}

/// Structural characterization: every nontrivial p-component induces P5,
/// the complement of P5, C5, a quasi-starfish or a quasi-urchin.
inline bool is_p4_tidy_structural(const Graph& g) {
  static const CanonicalCode p5 = canonical_form(path_graph(5));
  static const CanonicalCode p5_bar = canonical_form(complement(path_graph(5)));
  static const CanonicalCode c5 = canonical_form(cycle_graph(5));
  for (VertexSet comp : p_components(g)) {
    if (comp.count() < 2) continue;
    const Graph sub = induced_subgraph(g, comp).graph;
    const CanonicalCode code = canonical_form(sub);
    if (code == p5 || code == p5_bar || code == c5) continue;
    if (quasi_kind(sub) == QuasiKind::none) return false;
  }
  return true;
}

}  // namespace p4recon
