#pragma once

/**
 * Canonical labeling and graph6 serialization.
 *
 * A canonical code is the graph6 string of a canonical relabeling, so equal
 * codes mean isomorphic graphs and every code can be decoded back into a
 * graph. Labelings are found by iterated neighbor-count partition refinement
 * followed by backtracking over the surviving cell orderings, keeping the
 * lexicographically least adjacency bit string. Triads canonicalize the same
 * way with (a, b) as the initial partition, a-cells ahead of b-cells.
 */

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "p4recon/graph.hpp"

namespace p4recon {

/// Equal codes iff isomorphic; decodable via from_graph6.
using CanonicalCode = std::string;

/// Canonical form of an ordered 2-coloring: "<graph6>:<|a|>".
using TriadCode = std::string;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- graph6 ---------------------------------------------------------------

inline std::string to_graph6(const Graph& g) {
  const int n = g.size();
  std::string s(1, static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        s += static_cast<char>(63 + acc);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) s += static_cast<char>(63 + (acc << (6 - nbits)));
  return s;
}

inline Graph from_graph6(std::string_view text) {
  if (text.empty()) throw parse_error("graph6: empty string");
  for (char c : text)
    if (c < 63 || c > 126)
      throw parse_error("graph6: character '" + std::string(1, c) + "' outside 63..126 in \"" +
                        std::string(text) + "\"");
  const int n = text[0] - 63;
  if (n > Graph::max_vertices)
    throw parse_error("graph6: order " + std::to_string(n) + " exceeds supported maximum of " +
                      std::to_string(Graph::max_vertices));
  const std::size_t expected = 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (text.size() != expected)
    throw parse_error("graph6: \"" + std::string(text) + "\" has length " +
                      std::to_string(text.size()) + ", expected " + std::to_string(expected) +
                      " for order " + std::to_string(n));
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int c = text[1 + k / 6] - 63;
      if ((c >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

// ---- canonical labeling ---------------------------------------------------

namespace detail {

// Edge bits in graph6 order under a vertex ordering, packed so that word
// comparison is lexicographic bit comparison.
struct EdgeBits {
  std::array<std::uint64_t, 8> w{};
  friend auto operator<=>(const EdgeBits&, const EdgeBits&) = default;
};

inline EdgeBits edge_bits(const Graph& g, std::span<const int> order) {
  EdgeBits b;
  std::size_t k = 0;
  const int n = static_cast<int>(order.size());
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(order[i], order[j])) b.w[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
  return b;
}

// Split cells until every cell's vertices have equal neighbor counts against
// every cell; subcells are ordered by their count signatures.
inline void refine_partition(const Graph& g, std::vector<VertexSet>& cells) {
  using Sig = std::vector<std::uint8_t>;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      const VertexSet cell = cells[ci];
      if (cell.count() <= 1) continue;
      std::vector<std::pair<Sig, int>> keyed;
      keyed.reserve(static_cast<std::size_t>(cell.count()));
      for (int v : cell) {
        Sig s;
        s.reserve(cells.size());
        for (const VertexSet& w : cells)
          s.push_back(static_cast<std::uint8_t>((g.neighbors(v) & w).count()));
        keyed.emplace_back(std::move(s), v);
      }
      std::sort(keyed.begin(), keyed.end());
      if (keyed.front().first == keyed.back().first) continue;
      std::vector<VertexSet> split;
      VertexSet cur;
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first != keyed[i - 1].first) {
          split.push_back(cur);
          cur = VertexSet{};
        }
        cur.set(keyed[i].second);
      }
      split.push_back(cur);
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), split.begin(), split.end());
      changed = true;
      break;
    }
  }
}

// Transposing u and v is an automorphism exactly when their neighborhoods
// agree off {u, v}; branching on both would explore identical subtrees.
inline bool swappable(const Graph& g, int u, int v) {
  return (g.neighbors(u) - VertexSet::single(v)) == (g.neighbors(v) - VertexSet::single(u));
}

struct CanonSearch {
  const Graph& g;
  std::vector<int> best;
  EdgeBits best_bits;
  bool have = false;

  void run(std::vector<VertexSet> cells) {
    refine_partition(g, cells);
    int target = -1;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].count() > 1) {
        target = static_cast<int>(i);
        break;
      }
    if (target < 0) {
      std::vector<int> order;
      order.reserve(cells.size());
      for (const VertexSet& c : cells) order.push_back(c.lowest());
      EdgeBits bits = edge_bits(g, order);
      if (!have || bits < best_bits) {
        have = true;
        best_bits = bits;
        best = std::move(order);
      }
      return;
    }
    const VertexSet cell = cells[static_cast<std::size_t>(target)];
    VertexSet branched;
    for (int v : cell) {
      bool skip = false;
      for (int u : branched)
        if (swappable(g, u, v)) {
          skip = true;
          break;
        }
      if (skip) continue;
      branched.set(v);
      std::vector<VertexSet> child;
      child.reserve(cells.size() + 1);
      for (int i = 0; i < target; ++i) child.push_back(cells[static_cast<std::size_t>(i)]);
      child.push_back(VertexSet::single(v));
      child.push_back(cell - VertexSet::single(v));
      for (std::size_t i = static_cast<std::size_t>(target) + 1; i < cells.size(); ++i)
        child.push_back(cells[i]);
      run(std::move(child));
    }
  }
};

inline std::vector<int> canonical_order(const Graph& g, std::vector<VertexSet> initial) {
  CanonSearch search{g, {}, {}, false};
  std::erase_if(initial, [](VertexSet c) { return c.empty(); });
  if (initial.empty()) return {};
  search.run(std::move(initial));
  return search.best;
}

}  // namespace detail

/// Copy of g with vertex order[i] relabeled to i.
inline Graph relabeled(const Graph& g, std::span<const int> order) {
  Graph h(static_cast<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (g.adjacent(order[i], order[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

/// order[i] = the original vertex placed at canonical position i.
inline std::vector<int> canonical_labeling(const Graph& g) {
  return detail::canonical_order(g, {g.vertices()});
}

inline CanonicalCode canonical_form(const Graph& g) {
  const std::vector<int> order = canonical_labeling(g);
  return to_graph6(relabeled(g, order));
}

inline bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return false;
  return canonical_form(g1) == canonical_form(g2);
}

/// Color-preserving canonical form; the ordered partition is not
/// interchangeable, so (g, a, b) and (g, b, a) generally differ.
inline TriadCode triad_canonical_form(const Triad& t) {
  if (!t.valid_partition())
    throw std::invalid_argument("triad_canonical_form: (a, b) is not a partition of the vertices");
  const std::vector<int> order = detail::canonical_order(t.g, {t.a, t.b});
  return to_graph6(relabeled(t.g, order)) + ":" + std::to_string(t.a.count());
}

}  // namespace p4recon
