#pragma once

/**
 * Exhaustive generation of all non-isomorphic graphs up to 9 vertices by
 * vertex augmentation with canonical-code dedup, and the verification driver
 * that groups the catalogue by deck fingerprint and runs every per-graph
 * lemma suite. Verification shards the catalogue across threads; the merge
 * is associative and order-independent, so the output does not depend on
 * the job count.
 */

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "p4recon/canonical.hpp"
#include "p4recon/classes.hpp"
#include "p4recon/deck.hpp"
#include "p4recon/oracles.hpp"
#include "p4recon/pstructure.hpp"

namespace p4recon {

inline constexpr int max_catalogue_order = 9;

/// One representative per isomorphism class, sorted by code.
struct Catalogue {
  int n = 0;
  struct Entry {
    CanonicalCode code;
    Graph graph;
  };
  std::vector<Entry> entries;
};

namespace detail {

inline int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Static sharding of [0, count) across jobs threads.
template <typename Fn>
void parallel_shards(std::size_t count, int jobs, Fn&& fn) {
  const int threads = std::min<std::size_t>(effective_jobs(jobs), std::max<std::size_t>(count, 1));
  if (threads <= 1 || count == 0) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  const std::size_t chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(count, static_cast<std::size_t>(t) * chunk);
    const std::size_t hi = std::min(count, lo + chunk);
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (std::thread& th : pool) th.join();
}

inline Graph with_added_vertex(const Graph& g, VertexSet neighborhood) {
  Graph h(g.size() + 1);
  for (int u = 0; u < g.size(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) h.add_edge(u, v);
  for (int u : neighborhood) h.add_edge(u, g.size());
  return h;
}

}  // namespace detail

/// All isomorphism classes on n vertices, built by extending each entry of
/// the (n-1)-catalogue with every neighborhood for the new vertex and
/// deduplicating by canonical code.
inline Catalogue all_graphs(int n) {
  if (n < 1 || n > max_catalogue_order)
    throw std::out_of_range("all_graphs: n must be in 1.." +
                            std::to_string(max_catalogue_order) + ", got " + std::to_string(n));
  std::vector<CanonicalCode> level = {canonical_form(Graph(1))};
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<CanonicalCode> next;
    std::mutex merge_mutex;
    detail::parallel_shards(level.size(), 0, [&](std::size_t lo, std::size_t hi) {
      std::unordered_set<CanonicalCode> local;
      for (std::size_t i = lo; i < hi; ++i) {
        const Graph parent = from_graph6(level[i]);
        const std::uint32_t masks = std::uint32_t{1} << (k - 1);
        for (std::uint32_t m = 0; m < masks; ++m)
          local.insert(canonical_form(detail::with_added_vertex(parent, VertexSet{m})));
      }
      const std::lock_guard<std::mutex> lock(merge_mutex);
      next.merge(local);
    });
    level.assign(next.begin(), next.end());
  }
  std::sort(level.begin(), level.end());
  Catalogue cat;
  cat.n = n;
  cat.entries.reserve(level.size());
  for (CanonicalCode& code : level) {
    Graph g = from_graph6(code);
    cat.entries.push_back({std::move(code), std::move(g)});
  }
  return cat;
}

namespace detail {

inline std::mutex& catalogue_mutex() {
  static std::mutex m;
  return m;
}

inline std::map<int, Catalogue>& catalogue_store() {
  static std::map<int, Catalogue> cache;
  return cache;
}

}  // namespace detail

/// Process-wide memo of catalogues; levels build once and are shared.
inline const Catalogue& catalogue_cached(int n) {
  const std::lock_guard<std::mutex> lock(detail::catalogue_mutex());
  auto& cache = detail::catalogue_store();
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, all_graphs(n)).first;
  return it->second;
}

/// Seeds the process-wide memo with an externally loaded catalogue (the
/// CLI's disk cache path).
inline void catalogue_cache_install(Catalogue cat) {
  const std::lock_guard<std::mutex> lock(detail::catalogue_mutex());
  const int n = cat.n;
  detail::catalogue_store().insert_or_assign(n, std::move(cat));
}

/// Labeled enumeration oracle: canonicalize all 2^C(n,2) labeled graphs and
/// count distinct codes. Independent of the augmentation path.
inline std::size_t count_isomorphism_classes_naive(int n, int jobs = 0) {
  if (n < 1 || n > 7)
    throw std::out_of_range("count_isomorphism_classes_naive: n must be in 1..7");
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::unordered_set<CanonicalCode> codes;
  std::mutex merge_mutex;
  detail::parallel_shards(total, jobs, [&](std::size_t lo, std::size_t hi) {
    std::unordered_set<CanonicalCode> local;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      Graph g(n);
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if ((mask >> bit) & 1) g.add_edge(u, v);
      local.insert(canonical_form(g));
    }
    const std::lock_guard<std::mutex> lock(merge_mutex);
    codes.merge(local);
  });
  return codes.size();
}

// ---- catalogue persistence ---------------------------------------------------

/// One graph6 line per entry.
inline void save_catalogue(const Catalogue& cat, std::ostream& os) {
  for (const Catalogue::Entry& e : cat.entries) os << e.code << '\n';
}

/// Lines are canonicalized, deduplicated and sorted, so the result is
/// independent of file ordering. Every line must decode to order n.
inline Catalogue load_catalogue(std::istream& is, int n) {
  std::unordered_set<CanonicalCode> codes;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const Graph g = from_graph6(line);
    if (g.size() != n)
      throw parse_error("catalogue: line \"" + line + "\" has order " +
                        std::to_string(g.size()) + ", expected " + std::to_string(n));
    codes.insert(canonical_form(g));
  }
  Catalogue cat;
  cat.n = n;
  std::vector<CanonicalCode> sorted(codes.begin(), codes.end());
  std::sort(sorted.begin(), sorted.end());
  for (CanonicalCode& code : sorted) {
    Graph g = from_graph6(code);
    cat.entries.push_back({std::move(code), std::move(g)});
  }
  return cat;
}

inline std::filesystem::path catalogue_file_name(const std::filesystem::path& dir, int n) {
  return dir / ("n" + std::to_string(n) + ".g6");
}

// ---- class filters -------------------------------------------------------------

inline const std::vector<std::string>& class_filter_names() {
  static const std::vector<std::string> names = {
      "all",   "p-connected",    "p-disconnected",  "split",
      "spider", "1-decomposable", "p4-tidy",         "disconnected",
      "antidisconnected"};
  return names;
}

inline std::function<bool(const Graph&)> class_predicate(const std::string& name) {
  if (name.empty() || name == "all") return [](const Graph&) { return true; };
  if (name == "p-connected") return [](const Graph& g) { return is_p_connected(g); };
  if (name == "p-disconnected") return [](const Graph& g) { return !is_p_connected(g); };
  if (name == "split") return [](const Graph& g) { return split_hs(g).is_split; };
  if (name == "spider") return [](const Graph& g) { return spider_kind(g).kind != SpiderKind::none; };
  if (name == "1-decomposable") return [](const Graph& g) { return is_1_decomposable(g).has_value(); };
  if (name == "p4-tidy") return [](const Graph& g) { return is_p4_tidy_direct(g); };
  if (name == "disconnected") return [](const Graph& g) { return !is_connected(g); };
  if (name == "antidisconnected")
    return [](const Graph& g) { return is_connected(g) && !is_anticonnected(g); };
  throw std::invalid_argument("unknown class filter \"" + name + "\"");
}

// ---- verification --------------------------------------------------------------

struct VerificationReport {
  int n = 0;
  std::string class_filter;
  std::size_t graph_count = 0;

  // structure-theorem cases (mutually exclusive, sum to graph_count)
  std::size_t disconnected = 0;
  std::size_t antidisconnected = 0;
  std::size_t separable_composition = 0;
  std::size_t p_connected = 0;

  std::size_t p_disconnected = 0;
  std::size_t split = 0;
  std::size_t spider = 0;
  std::size_t one_decomposable = 0;
  std::size_t one_decomposable_strict = 0;
  std::size_t p4_tidy = 0;

  std::size_t deck_groups = 0;
  std::size_t max_group_size = 0;
  /// Deck-fingerprint groups of size >= 2, as graph6 lists. Empty means the
  /// reconstruction assertion holds at this order.
  std::vector<std::vector<std::string>> collisions;

  struct Suite {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
  };
  std::vector<Suite> suites;

  bool all_singletons() const { return collisions.empty(); }
  bool passed() const {
    if (!all_singletons()) return false;
    for (const Suite& s : suites)
      if (!s.passed()) return false;
    return true;
  }
};

namespace detail {

enum SuiteId {
  s_split_oracle = 0,
  s_pconn_def,
  s_sep_unique,
  s_sep_structure,
  s_minimal_spider,
  s_non_articulation,
  s_structure,
  s_tidy,
  s_deck_recog,
  s_degseq,
  s_spider_deck,
  suite_count
};

inline const char* suite_name(int id) {
  static const char* names[suite_count] = {
      "split-degree-test-vs-bruteforce", "p-connectivity-vs-definition",
      "separable-partition-unique",      "separable-implies-generalized-split",
      "minimal-p-connected-iff-spider",  "two-non-articulation-vertices",
      "structure-classification",        "p4-tidy-direct-vs-structural",
      "p-disconnected-deck-recognition", "degree-sequence-from-deck",
      "spider-deck-recognition"};
  return names[id];
}

struct PerGraph {
  std::string fingerprint;
  StructureCase structure = StructureCase::disconnected;
  bool split = false;
  bool spider = false;
  bool one_dec = false;
  bool one_dec_strict = false;
  bool tidy = false;
  bool pconn = false;
  std::array<std::vector<std::string>, suite_count> violations;
  std::array<bool, suite_count> ran{};
};

inline PerGraph analyze_graph(const Graph& g, const CanonicalCode& code, int n) {
  PerGraph out;
  const auto flag = [&](int suite, const std::string& msg) {
    out.violations[static_cast<std::size_t>(suite)].push_back(code + ": " + msg);
  };

  // deck fingerprint
  const Deck deck = deck_of(g);
  std::string fp;
  for (const CanonicalCode& card : deck.cards) {
    fp += card;
    fp += ';';
  }
  out.fingerprint = std::move(fp);

  // Split degree test against the bipartition scan, plus the clique /
  // stable / maximal-clique guarantees of the returned split.
  out.ran[s_split_oracle] = true;
  const SplitVerdict sv = split_hs(g);
  out.split = sv.is_split;
  if (sv.is_split != split_bruteforce(g)) flag(s_split_oracle, "degree test disagrees with scan");
  if (sv.is_split) {
    if (!is_clique(g, sv.a) || !is_stable_set(g, sv.b))
      flag(s_split_oracle, "returned bipartition is not clique + stable");
    for (int v : sv.b)
      if (g.neighbors(v).contains(sv.a)) flag(s_split_oracle, "returned clique is not maximal");
  }

  out.pconn = is_p_connected(g);
  if (n <= 6) {
    out.ran[s_pconn_def] = true;
    if (out.pconn != oracles::p_connected_by_definition(g))
      flag(s_pconn_def, "co-occurrence connectivity disagrees with definition scan");
  }

  // Separable-partition uniqueness and structure, by full bipartition scan
  // of each p-connected graph.
  if (n <= 8 && out.pconn) {
    out.ran[s_sep_unique] = true;
    const std::vector<P4> p4s = induced_p4s(g);
    const std::uint32_t all = VertexSet::full(n).bits;
    int passing = 0;
    for (std::uint32_t mask = 1; mask < all; ++mask) {
      const VertexSet a{mask}, b{all & ~mask};
      if (!detail::separable_placement(p4s, a, b)) continue;
      ++passing;
      out.ran[s_sep_structure] = true;
      const Triad t{g, a, b};
      if (!is_generalized_split_triad(t))
        flag(s_sep_structure, "separable triad is not a generalized split triad");
      if (is_connected(complement(induced_subgraph(g, a).graph)))
        flag(s_sep_structure, "complement of g[a] is connected");
      if (is_connected(induced_subgraph(g, b).graph)) flag(s_sep_structure, "g[b] is connected");
    }
    if (passing > 1)
      flag(s_sep_unique, std::to_string(passing) + " bipartitions pass the separable test");
  }

  // Minimality vs spider, then the non-articulation count.
  out.ran[s_minimal_spider] = true;
  const SpiderVerdict spider = spider_kind(g);
  out.spider = spider.kind != SpiderKind::none;
  const bool minimal = is_minimally_p_connected(g);
  if (minimal != out.spider) flag(s_minimal_spider, "minimally p-connected does not match spider verdict");
  if (out.pconn && !minimal && n >= 2) {
    out.ran[s_non_articulation] = true;
    int keepers = 0;
    for (int v = 0; v < n; ++v)
      if (is_p_connected(delete_vertex(g, v))) ++keepers;
    if (keepers < 2)
      flag(s_non_articulation, "only " + std::to_string(keepers) + " non-articulation vertices");
  }

  // Structure classification.
  out.ran[s_structure] = true;
  try {
    out.structure = structure_classify(g).kind;
  } catch (const structure_violation& e) {
    flag(s_structure, e.what());
    out.structure = StructureCase::p_connected;
  }

  out.ran[s_tidy] = true;
  out.tidy = is_p4_tidy_direct(g);
  if (out.tidy != is_p4_tidy_structural(g))
    flag(s_tidy, "partner count and p-component structure disagree");

  out.one_dec = is_1_decomposable(g).has_value();
  out.one_dec_strict = is_1_decomposable(g, /*nontrivial_only=*/true).has_value();

  // Deck-level suites.
  if (n >= 3) {
    out.ran[s_deck_recog] = true;
    if (is_p_disconnected_deck(deck) != !out.pconn)
      flag(s_deck_recog, "deck recognizer disagrees with p-connectivity");
    out.ran[s_degseq] = true;
    if (degree_sequence_from_deck(deck) != degree_sequence(g))
      flag(s_degseq, "deck-derived degree sequence is wrong");
    out.ran[s_spider_deck] = true;
    if (is_spider_deck(deck) != out.spider)
      flag(s_spider_deck, "deck recognizer disagrees with spider verdict");
  }
  return out;
}

}  // namespace detail

/// Groups the (optionally filtered) catalogue at order n by deck fingerprint
/// and runs the per-graph lemma suites. Every fingerprint group of size one
/// is the reconstruction assertion; collisions are reported as evidence, not
/// thrown.
inline VerificationReport verify_reconstruction(int n, const std::string& class_filter = "",
                                                int jobs = 0) {
  if (n < 3 || n > max_catalogue_order)
    throw std::out_of_range("verify_reconstruction: n must be in 3.." +
                            std::to_string(max_catalogue_order) + ", got " + std::to_string(n));
  const auto predicate = class_predicate(class_filter);
  const Catalogue& cat = catalogue_cached(n);

  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < cat.entries.size(); ++i)
    if (predicate(cat.entries[i].graph)) selected.push_back(i);

  std::vector<detail::PerGraph> results(selected.size());
  detail::parallel_shards(selected.size(), jobs, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      const Catalogue::Entry& e = cat.entries[selected[k]];
      results[k] = detail::analyze_graph(e.graph, e.code, n);
    }
  });

  VerificationReport rep;
  rep.n = n;
  rep.class_filter = class_filter.empty() ? "all" : class_filter;
  rep.graph_count = selected.size();
  rep.suites.resize(detail::suite_count);
  for (int s = 0; s < detail::suite_count; ++s) rep.suites[static_cast<std::size_t>(s)].name =
      detail::suite_name(s);

  std::map<std::string, std::vector<std::string>> groups;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const detail::PerGraph& r = results[k];
    groups[r.fingerprint].push_back(cat.entries[selected[k]].code);
    switch (r.structure) {
      case StructureCase::disconnected: ++rep.disconnected; break;
      case StructureCase::antidisconnected: ++rep.antidisconnected; break;
      case StructureCase::separable_composition: ++rep.separable_composition; break;
      case StructureCase::p_connected: break;
    }
    if (r.pconn) ++rep.p_connected;
    if (r.split) ++rep.split;
    if (r.spider) ++rep.spider;
    if (r.one_dec) ++rep.one_decomposable;
    if (r.one_dec_strict) ++rep.one_decomposable_strict;
    if (r.tidy) ++rep.p4_tidy;
    for (int s = 0; s < detail::suite_count; ++s) {
      auto& suite = rep.suites[static_cast<std::size_t>(s)];
      if (r.ran[static_cast<std::size_t>(s)]) ++suite.checked;
      for (const std::string& v : r.violations[static_cast<std::size_t>(s)])
        suite.violations.push_back(v);
    }
  }
  rep.p_disconnected = rep.graph_count - rep.p_connected;
  rep.deck_groups = groups.size();
  for (auto& [fp, members] : groups) {
    rep.max_group_size = std::max(rep.max_group_size, members.size());
    if (members.size() >= 2) {
      std::sort(members.begin(), members.end());
      rep.collisions.push_back(members);
    }
  }
  for (auto& suite : rep.suites) std::sort(suite.violations.begin(), suite.violations.end());
  return rep;
}

// ---- per-graph classification table ---------------------------------------------

struct ClassificationRow {
  CanonicalCode code;
  StructureCase structure = StructureCase::disconnected;
  bool split = false;
  SpiderKind spider = SpiderKind::none;
  bool one_decomposable = false;
  bool p4_tidy = false;
  std::vector<int> p_component_sizes;  // descending
};

inline ClassificationRow classify_graph(const Graph& g) {
  ClassificationRow row;
  row.code = canonical_form(g);
  row.structure = structure_classify(g).kind;
  row.split = split_hs(g).is_split;
  row.spider = spider_kind(g).kind;
  row.one_decomposable = is_1_decomposable(g).has_value();
  row.p4_tidy = is_p4_tidy_direct(g);
  for (VertexSet comp : p_components(g)) row.p_component_sizes.push_back(comp.count());
  std::sort(row.p_component_sizes.begin(), row.p_component_sizes.end(), std::greater<int>());
  return row;
}

inline std::vector<ClassificationRow> classify_all(int n) {
  if (n < 1 || n > max_catalogue_order)
    throw std::out_of_range("classify_all: n must be in 1.." +
                            std::to_string(max_catalogue_order));
  const Catalogue& cat = catalogue_cached(n);
  std::vector<ClassificationRow> rows(cat.entries.size());
  detail::parallel_shards(cat.entries.size(), 0, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) rows[i] = classify_graph(cat.entries[i].graph);
  });
  return rows;
}

// ---- report serialization ----------------------------------------------------------

inline nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["n"] = rep.n;
  j["class_filter"] = rep.class_filter;
  j["graphs"] = rep.graph_count;
  j["structure"] = {{"disconnected", rep.disconnected},
                    {"antidisconnected", rep.antidisconnected},
                    {"separable_composition", rep.separable_composition},
                    {"p_connected", rep.p_connected}};
  j["tallies"] = {{"p_connected", rep.p_connected},
                  {"p_disconnected", rep.p_disconnected},
                  {"split", rep.split},
                  {"spider", rep.spider},
                  {"one_decomposable", rep.one_decomposable},
                  {"one_decomposable_strict", rep.one_decomposable_strict},
                  {"p4_tidy", rep.p4_tidy}};
  j["deck_groups"] = rep.deck_groups;
  j["max_group_size"] = rep.max_group_size;
  j["all_singletons"] = rep.all_singletons();
  j["collisions"] = rep.collisions;
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& s : rep.suites)
    suites.push_back({{"name", s.name},
                      {"checked", s.checked},
                      {"passed", s.passed()},
                      {"violations", s.violations}});
  j["suites"] = suites;
  j["passed"] = rep.passed();
  return j;
}

inline std::string to_tsv(const VerificationReport& rep) {
  std::string out;
  const auto kv = [&out](const std::string& k, const std::string& v) {
    out += k;
    out += '\t';
    out += v;
    out += '\n';
  };
  kv("n", std::to_string(rep.n));
  kv("class_filter", rep.class_filter);
  kv("graphs", std::to_string(rep.graph_count));
  kv("disconnected", std::to_string(rep.disconnected));
  kv("antidisconnected", std::to_string(rep.antidisconnected));
  kv("separable_composition", std::to_string(rep.separable_composition));
  kv("p_connected", std::to_string(rep.p_connected));
  kv("p_disconnected", std::to_string(rep.p_disconnected));
  kv("split", std::to_string(rep.split));
  kv("spider", std::to_string(rep.spider));
  kv("one_decomposable", std::to_string(rep.one_decomposable));
  kv("one_decomposable_strict", std::to_string(rep.one_decomposable_strict));
  kv("p4_tidy", std::to_string(rep.p4_tidy));
  kv("deck_groups", std::to_string(rep.deck_groups));
  kv("max_group_size", std::to_string(rep.max_group_size));
  kv("all_singletons", rep.all_singletons() ? "true" : "false");
  for (const auto& s : rep.suites)
    kv("suite:" + s.name,
       std::string(s.passed() ? "pass" : "FAIL") + "\t" + std::to_string(s.checked));
  kv("passed", rep.passed() ? "true" : "false");
  return out;
}

inline nlohmann::json to_json(const ClassificationRow& row) {
  nlohmann::json j;
  j["graph6"] = row.code;
  j["structure"] = to_string(row.structure);
  j["split"] = row.split;
  j["spider"] = to_string(row.spider);
  j["one_decomposable"] = row.one_decomposable;
  j["p4_tidy"] = row.p4_tidy;
  j["p_components"] = row.p_component_sizes;
  return j;
}

inline std::string classification_tsv_header() {
  return "graph6\tstructure\tsplit\tspider\tone_decomposable\tp4_tidy\tp_components";
}

inline std::string to_tsv(const ClassificationRow& row) {
  std::string sizes;
  for (std::size_t i = 0; i < row.p_component_sizes.size(); ++i) {
    if (i) sizes += '+';
    sizes += std::to_string(row.p_component_sizes[i]);
  }
  std::string out = row.code;
  out += '\t';
  out += to_string(row.structure);
  out += '\t';
  out += row.split ? "true" : "false";
  out += '\t';
  out += to_string(row.spider);
  out += '\t';
  out += row.one_decomposable ? "true" : "false";
  out += '\t';
  out += row.p4_tidy ? "true" : "false";
  out += '\t';
  out += sizes;
  return out;
}

}  // namespace p4recon
