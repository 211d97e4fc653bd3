// Command-line frontend: enumerate, classify, deck, verify, crosscheck.
//
// Exit codes: 0 success, 1 verification counterexample or crosscheck
// failure (evidence on stderr), 2 usage or parse errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include <p4recon/p4recon.hpp>

namespace {

using namespace p4recon;

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;

// Catalogue with optional file cache under P4RECON_CATALOGUE_DIR. Cached
// files are installed into the process-wide memo so verify and crosscheck
// pick them up too.
const Catalogue& catalogue_for(int n) {
  const char* dir = std::getenv("P4RECON_CATALOGUE_DIR");
  if (dir != nullptr && *dir != '\0') {
    static std::set<int> seen;
    if (seen.insert(n).second) {
      const std::filesystem::path path = catalogue_file_name(dir, n);
      if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        catalogue_cache_install(load_catalogue(in, n));
      } else {
        const Catalogue& cat = catalogue_cached(n);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (std::ofstream out(path); out) save_catalogue(cat, out);
      }
    }
  }
  return catalogue_cached(n);
}

// graph6 inputs from positional arguments, a file, or standard input.
std::vector<Graph> gather_graphs(const std::vector<std::string>& args,
                                 const std::string& file) {
  std::vector<std::string> lines = args;
  const auto slurp = [&lines](std::istream& is) {
    std::string line;
    while (std::getline(is, line))
      if (!line.empty()) lines.push_back(line);
  };
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw parse_error("cannot open input file \"" + file + "\"");
    slurp(in);
  }
  if (lines.empty()) slurp(std::cin);
  std::vector<Graph> graphs;
  graphs.reserve(lines.size());
  for (const std::string& line : lines) graphs.push_back(from_graph6(line));
  return graphs;
}

int run_enumerate(int n, const std::string& out_path) {
  const Catalogue& cat = catalogue_for(n);
  if (out_path.empty()) {
    save_catalogue(cat, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw parse_error("cannot open output file \"" + out_path + "\"");
    save_catalogue(cat, out);
  }
  return exit_ok;
}

int run_classify(const std::vector<std::string>& args, const std::string& file,
                 const std::string& format) {
  const std::vector<Graph> graphs = gather_graphs(args, file);
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const Graph& g : graphs) rows.push_back(to_json(classify_graph(g)));
    std::cout << rows.dump(2) << '\n';
  } else {
    std::cout << classification_tsv_header() << '\n';
    for (const Graph& g : graphs) std::cout << to_tsv(classify_graph(g)) << '\n';
  }
  return exit_ok;
}

int run_deck(const std::string& graph6, bool emit_cards, const std::string& format) {
  const Graph g = from_graph6(graph6);
  const Deck d = deck_of(g);
  if (emit_cards) {
    write_deck(std::cout, d);
    return exit_ok;
  }
  const std::size_t edges = d.n >= 3 ? edge_count_from_deck(d) : 0;
  const std::vector<int> degs = d.n >= 3 ? degree_sequence_from_deck(d) : std::vector<int>{};
  std::string deg_text;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (i) deg_text += ',';
    deg_text += std::to_string(degs[i]);
  }
  if (format == "json") {
    nlohmann::json j;
    j["graph6"] = graph6;
    j["n"] = d.n;
    j["cards"] = d.cards;
    if (d.n >= 3) {
      j["edges"] = edges;
      j["degree_sequence"] = degs;
      j["spider_deck"] = is_spider_deck(d);
      j["p_disconnected_deck"] = is_p_disconnected_deck(d);
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n\t" << d.n << '\n';
    if (d.n >= 3) {
      std::cout << "edges\t" << edges << '\n';
      std::cout << "degree_sequence\t" << deg_text << '\n';
      std::cout << "spider_deck\t" << (is_spider_deck(d) ? "true" : "false") << '\n';
      std::cout << "p_disconnected_deck\t" << (is_p_disconnected_deck(d) ? "true" : "false")
                << '\n';
    }
  }
  return exit_ok;
}

int run_verify(int n, const std::string& filter, int jobs, const std::string& format) {
  catalogue_for(n);  // warm the cache through the env-var path
  const VerificationReport rep = verify_reconstruction(n, filter == "all" ? "" : filter, jobs);
  if (format == "json")
    std::cout << to_json(rep).dump(2) << '\n';
  else
    std::cout << to_tsv(rep);
  if (!rep.passed()) {
    for (const auto& group : rep.collisions) {
      std::cerr << "deck collision:";
      for (const std::string& code : group) std::cerr << ' ' << code;
      std::cerr << '\n';
    }
    for (const auto& suite : rep.suites)
      for (const std::string& v : suite.violations)
        std::cerr << "violation " << suite.name << ": " << v << '\n';
    return exit_counterexample;
  }
  return exit_ok;
}

// Named oracle suites runnable at a chosen order.
int run_crosscheck(int n, const std::string& suite, int jobs) {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  const auto check = [&](bool ok, const std::string& evidence) {
    ++checked;
    if (!ok) violations.push_back(evidence);
  };

  if (suite == "counts") {
    if (n > 7) throw std::invalid_argument("crosscheck counts: naive oracle capped at n=7");
    const std::size_t naive = count_isomorphism_classes_naive(n, jobs);
    const std::size_t cat = catalogue_for(n).entries.size();
    check(naive == cat, "catalogue has " + std::to_string(cat) + " classes, naive oracle " +
                            std::to_string(naive));
  } else if (suite == "canonical") {
    std::mt19937 rng(0x5eedu + static_cast<unsigned>(n));
    for (int trial = 0; trial < 1000; ++trial) {
      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() & 1u) g.add_edge(u, v);
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      check(canonical_form(g) == canonical_form(relabeled(g, perm)),
            "relabeling changed the code of " + to_graph6(g));
    }
  } else if (suite == "compose") {
    // Composition of a generalized split triad with any graph is
    // p-disconnected, and every p-component stays on one side.
    const int max_t = std::min(n, 6);
    for (int nt = 1; nt <= max_t; ++nt) {
      for (const auto& te : catalogue_for(nt).entries) {
        const std::uint32_t all = VertexSet::full(nt).bits;
        for (std::uint32_t mask = 0; mask <= all; ++mask) {
          const Triad t{te.graph, VertexSet{mask}, VertexSet{all & ~mask}};
          if (!is_generalized_split_triad(t)) continue;
          for (int nh = 1; nh <= 4; ++nh) {
            for (const auto& he : catalogue_for(nh).entries) {
              const Graph composed = compose(t, he.graph);
              const VertexSet side_t = VertexSet::full(nt);
              const VertexSet side_h = composed.vertices() - side_t;
              const std::string id = te.code + "/" + std::to_string(mask) + "+" + he.code;
              check(!is_p_connected(composed), id + ": composition is p-connected");
              for (VertexSet comp : p_components(composed))
                check(side_t.contains(comp) || side_h.contains(comp),
                      id + ": p-component straddles the composition");
            }
          }
        }
      }
    }
  } else if (suite == "split" || suite == "spider" || suite == "tidy" || suite == "pconn" ||
             suite == "deck" || suite == "minimal" || suite == "separable-unique" || suite == "separable-structure") {
    for (const auto& entry : catalogue_for(n).entries) {
      const Graph& g = entry.graph;
      if (suite == "split") {
        check(split_hs(g).is_split == split_bruteforce(g), entry.code);
      } else if (suite == "spider") {
        const SpiderKind k = spider_kind(g).kind;
        check((k == SpiderKind::thin || k == SpiderKind::both) ==
                  (g.size() >= 4 && oracles::thin_spider_by_definition(g)),
              entry.code + ": thin");
        check((k == SpiderKind::thick || k == SpiderKind::both) ==
                  (g.size() >= 4 && oracles::thick_spider_by_definition(g)),
              entry.code + ": thick");
      } else if (suite == "tidy") {
        check(is_p4_tidy_direct(g) == is_p4_tidy_structural(g), entry.code);
      } else if (suite == "pconn") {
        if (n > 7) throw std::invalid_argument("crosscheck pconn: definition scan capped at n=7");
        check(is_p_connected(g) == oracles::p_connected_by_definition(g), entry.code);
      } else if (suite == "minimal") {
        check(is_minimally_p_connected(g) == (spider_kind(g).kind != SpiderKind::none),
              entry.code);
      } else if (suite == "deck") {
        if (n < 3) throw std::invalid_argument("crosscheck deck: needs n >= 3");
        const Deck d = deck_of(g);
        check(is_p_disconnected_deck(d) == !is_p_connected(g), entry.code + ": p-disconnected recognition");
        check(degree_sequence_from_deck(d) == degree_sequence(g), entry.code + ": degrees");
        check(is_spider_deck(d) == (spider_kind(g).kind != SpiderKind::none),
              entry.code + ": spider");
      } else {  // the separable-partition suites
        if (!is_p_connected(g)) continue;
        const std::vector<P4> p4s = induced_p4s(g);
        const std::uint32_t all = VertexSet::full(n).bits;
        int passing = 0;
        for (std::uint32_t mask = 1; mask < all; ++mask) {
          const Triad t{g, VertexSet{mask}, VertexSet{all & ~mask}};
          if (!is_separable_triad(t)) continue;
          ++passing;
          if (suite == "separable-structure") {
            check(is_generalized_split_triad(t), entry.code + ": not generalized split");
            check(!is_connected(complement(induced_subgraph(g, t.a).graph)),
                  entry.code + ": complement of g[a] connected");
            check(!is_connected(induced_subgraph(g, t.b).graph), entry.code + ": g[b] connected");
          }
        }
        if (suite == "separable-unique") check(passing <= 1, entry.code + ": " + std::to_string(passing));
      }
    }
  } else {
    throw std::invalid_argument("unknown crosscheck suite \"" + suite + "\"");
  }

  if (violations.empty()) {
    std::cout << "pass\t" << suite << "\tn=" << n << "\tchecks=" << checked << '\n';
    return exit_ok;
  }
  std::cout << "FAIL\t" << suite << "\tn=" << n << "\tchecks=" << checked
            << "\tviolations=" << violations.size() << '\n';
  for (const std::string& v : violations) std::cerr << "violation: " << v << '\n';
  return exit_counterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p4recon: graph reconstruction and P4-structure workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // let subcommands hand --format up to the app

  std::string format = "tsv";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();

  int n = 0;
  int jobs = 0;
  std::string out_path, file, filter = "all", suite = "all", graph6_arg;
  std::vector<std::string> graph6_args;
  bool emit_cards = false;

  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "emit one graph6 line per isomorphism class");
  cmd_enumerate->add_option("-n,--order", n, "vertex count (1..9)")->required();
  cmd_enumerate->add_option("-o,--out", out_path, "output file (default stdout)");

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "per-graph structure and class flags");
  cmd_classify->add_option("graph6", graph6_args, "graph6 strings");
  cmd_classify->add_option("--file", file, "file with one graph6 per line");

  CLI::App* cmd_deck = app.add_subcommand("deck", "deck of a graph");
  cmd_deck->add_option("graph6", graph6_arg, "graph6 string")->required();
  cmd_deck->add_flag("--emit-cards", emit_cards, "print the deck text format (n, then cards)");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "deck-fingerprint grouping plus the lemma suites");
  cmd_verify->add_option("-n,--order", n, "vertex count (3..9)")->required();
  cmd_verify->add_option("--class", filter, "restrict to a class")
      ->check(CLI::IsMember(class_filter_names()));
  cmd_verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  CLI::App* cmd_crosscheck =
      app.add_subcommand("crosscheck", "run one oracle suite at a given order");
  cmd_crosscheck->add_option("-n,--order", n, "vertex count")->required();
  cmd_crosscheck
      ->add_option("--suite", suite, "counts|canonical|split|spider|pconn|tidy|deck|minimal|separable-unique|separable-structure|compose")
      ->required();
  cmd_crosscheck->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (cmd_enumerate->parsed()) return run_enumerate(n, out_path);
    if (cmd_classify->parsed()) return run_classify(graph6_args, file, format);
    if (cmd_deck->parsed()) return run_deck(graph6_arg, emit_cards, format);
    if (cmd_verify->parsed()) return run_verify(n, filter, jobs, format);
    if (cmd_crosscheck->parsed()) return run_crosscheck(n, suite, jobs);
  } catch (const structure_violation& e) {
    std::cerr << "counterexample: " << e.what() << '\n';
    return exit_counterexample;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
