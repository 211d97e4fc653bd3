#pragma once

/**
 * Independent reference implementations used by the verification suites.
 * Each deliberately follows the raw definition instead of the optimized
 * path in the main modules, so agreement between the two is evidence, not
 * tautology.
 */

#include <numeric>

#include "p4recon/graph.hpp"

namespace p4recon::oracles {

/// Raw definition of p-connectivity: every bipartition into two nonempty
/// parts admits a crossing P4. Exponential scan; usable to ~12 vertices.
inline bool p_connected_by_definition(const Graph& g) {
  if (g.size() <= 1) return true;
  const std::vector<P4> p4s = induced_p4s(g);
  const std::uint32_t all = VertexSet::full(g.size()).bits;
  // bipartitions up to swapping sides: fix vertex 0 on side one
  for (std::uint32_t mask = 1; mask < all; mask += 2) {
    const VertexSet v1{mask}, v2{all & ~mask};
    bool crossed = false;
    for (const P4& p : p4s) {
      const VertexSet vs = p.vertices();
      if (!(vs & v1).empty() && !(vs & v2).empty()) {
        crossed = true;
        break;
      }
    }
    if (!crossed) return false;
  }
  return true;
}

/// Literal thin-spider definition: some bipartition into a clique a and a
/// stable set b admits a bijection f with N(b) = {f(b)} for every b. On at
/// most 3 vertices only K2 qualifies, which the main recognizer excludes as
/// not p-connected; callers compare on >= 4 vertices.
inline bool thin_spider_by_definition(const Graph& g) {
  const std::uint32_t all = VertexSet::full(g.size()).bits;
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    const VertexSet a{static_cast<std::uint32_t>(mask)}, b{all & ~static_cast<std::uint32_t>(mask)};
    if (a.count() != b.count() || a.empty()) continue;
    if (!is_clique(g, a) || !is_stable_set(g, b)) continue;
    VertexSet images;
    bool ok = true;
    for (int bv : b) {
      const VertexSet nb = g.neighbors(bv);
      if (nb.count() != 1 || !a.contains(nb)) {
        ok = false;
        break;
      }
      if (!(images & nb).empty()) {  // injectivity
        ok = false;
        break;
      }
      images = images | nb;
    }
    if (ok) return true;
  }
  return false;
}

inline bool thick_spider_by_definition(const Graph& g) {
  return thin_spider_by_definition(complement(g));
}

/// Permutation-search isomorphism; factorial, for small cross-checks only.
inline bool isomorphic_bruteforce(const Graph& g1, const Graph& g2) {
  if (g1.size() != g2.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(g1.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int u = 0; u < g1.size() && match; ++u)
      for (int v = u + 1; v < g1.size() && match; ++v)
        if (g1.adjacent(u, v) != g2.adjacent(perm[static_cast<std::size_t>(u)],
                                             perm[static_cast<std::size_t>(v)]))
          match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Permutation-search triad isomorphism: a graph isomorphism carrying a to c
/// and b to d.
inline bool triad_isomorphic_bruteforce(const Triad& t1, const Triad& t2) {
  if (t1.g.size() != t2.g.size() || t1.a.count() != t2.a.count() ||
      t1.b.count() != t2.b.count())
    return false;
  std::vector<int> perm(static_cast<std::size_t>(t1.g.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int v = 0; v < t1.g.size() && match; ++v) {
      const int w = perm[static_cast<std::size_t>(v)];
      if (t1.a.test(v) != t2.a.test(w)) match = false;
    }
    for (int u = 0; u < t1.g.size() && match; ++u)
      for (int v = u + 1; v < t1.g.size() && match; ++v)
        if (t1.g.adjacent(u, v) != t2.g.adjacent(perm[static_cast<std::size_t>(u)],
                                                 perm[static_cast<std::size_t>(v)]))
          match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace p4recon::oracles
