#pragma once

/**
 * Decks of vertex-deleted cards, deck-derived invariants, deck-level class
 * recognition, and the brute-force reconstruction oracle. Cards are stored
 * as canonical codes so deck equality is sorted-list equality; synthetic
 * decks are accepted and inconsistencies surface through the exact-division
 * check rather than at construction.
 */

#include <istream>
#include <ostream>
#include <ranges>
#include <sstream>

#include "p4recon/canonical.hpp"
#include "p4recon/classes.hpp"
#include "p4recon/pstructure.hpp"

namespace p4recon {

struct inconsistent_deck : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Order of the original graph plus the multiset of its n card codes,
/// kept sorted.
struct Deck {
  int n = 0;
  std::vector<CanonicalCode> cards;

  friend bool operator==(const Deck&, const Deck&) = default;
};

inline Deck deck_of(const Graph& g) {
  if (g.size() < 1) throw std::invalid_argument("deck_of: empty graph has no cards");
  Deck d;
  d.n = g.size();
  d.cards.reserve(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) d.cards.push_back(canonical_form(delete_vertex(g, v)));
  std::sort(d.cards.begin(), d.cards.end());
  return d;
}

inline bool decks_equal(const Deck& d1, const Deck& d2) { return d1 == d2; }

/// Kelly counting: each edge survives in n-2 cards, so the card edge total
/// divided by n-2 recovers |E|. The division must be exact for a legal deck.
inline std::size_t edge_count_from_deck(const Deck& d) {
  if (d.n < 3)
    throw std::invalid_argument("edge_count_from_deck: underdetermined for order " +
                                std::to_string(d.n));
  std::size_t total = 0;
  for (const CanonicalCode& card : d.cards) total += from_graph6(card).edge_count();
  if (total % static_cast<std::size_t>(d.n - 2) != 0)
    throw inconsistent_deck("card edge total " + std::to_string(total) +
                            " is not divisible by n-2 = " + std::to_string(d.n - 2));
  return total / static_cast<std::size_t>(d.n - 2);
}

/// deg(v) = |E| - |E(G_v)| for each card, sorted descending.
inline std::vector<int> degree_sequence_from_deck(const Deck& d) {
  const long edges = static_cast<long>(edge_count_from_deck(d));
  std::vector<int> degs;
  degs.reserve(d.cards.size());
  for (const CanonicalCode& card : d.cards)
    degs.push_back(static_cast<int>(edges - static_cast<long>(from_graph6(card).edge_count())));
  std::sort(degs.begin(), degs.end(), std::greater<int>());
  return degs;
}

/// Spiders are visible in the degree sequence alone, and the degree sequence
/// is deck-derivable, so spiders are recognizable from the deck.
inline bool is_spider_deck(const Deck& d) {
  const std::vector<int> degs = degree_sequence_from_deck(d);
  return thin_spider_degrees(degs) || thin_spider_degrees(complement_degrees(degs));
}

/// Deck-level recognition of p-disconnected graphs: not a spider deck and at
/// most one card is p-connected.
inline bool is_p_disconnected_deck(const Deck& d) {
  if (is_spider_deck(d)) return false;
  int p_connected_cards = 0;
  for (const CanonicalCode& card : d.cards)
    if (is_p_connected(from_graph6(card)) && ++p_connected_cards > 1) return false;
  return true;
}

// ---- reconstruction oracle ---------------------------------------------------

struct ReconstructionReport {
  Deck deck;
  std::vector<CanonicalCode> matches;  // sorted, duplicate-free
  bool unique = false;
};

/// All candidates whose deck equals d. The candidate range must cover every
/// isomorphism class on d.n vertices for the report to certify uniqueness;
/// matches come out as a deterministic sorted set regardless of input order.
template <std::ranges::input_range R>
  requires std::convertible_to<std::ranges::range_reference_t<R>, const Graph&>
ReconstructionReport reconstruct_bruteforce(const Deck& d, R&& candidates) {
  ReconstructionReport report;
  report.deck = d;
  for (const Graph& g : candidates) {
    if (g.size() != d.n) continue;
    if (decks_equal(deck_of(g), d)) report.matches.push_back(canonical_form(g));
  }
  std::sort(report.matches.begin(), report.matches.end());
  report.matches.erase(std::unique(report.matches.begin(), report.matches.end()),
                       report.matches.end());
  report.unique = report.matches.size() == 1;
  return report;
}

// ---- composed decks ------------------------------------------------------------

/// The deck of compose(t, h) split by where the deleted vertex lives:
/// first the cards with a deleted h-vertex (one per vertex of h), then the
/// cards with a deleted triad vertex (one per vertex of t.g). Their multiset
/// union is the full deck.
inline std::pair<std::vector<CanonicalCode>, std::vector<CanonicalCode>> deck_split_composed(
    const Triad& t, const Graph& h) {
  if (h.size() < 1) throw std::invalid_argument("deck_split_composed: h must be nonempty");
  std::vector<CanonicalCode> from_h, from_t;
  for (int v = 0; v < h.size(); ++v)
    from_h.push_back(canonical_form(compose(t, delete_vertex(h, v))));
  for (int v = 0; v < t.g.size(); ++v)
    from_t.push_back(canonical_form(compose(triad_delete_vertex(t, v), h)));
  std::sort(from_h.begin(), from_h.end());
  std::sort(from_t.begin(), from_t.end());
  return {std::move(from_h), std::move(from_t)};
}

// ---- deck text format -----------------------------------------------------------

/// First line n, then n graph6 card lines.
inline void write_deck(std::ostream& os, const Deck& d) {
  os << d.n << '\n';
  for (const CanonicalCode& card : d.cards) os << card << '\n';
}

inline std::string deck_to_string(const Deck& d) {
  std::ostringstream os;
  write_deck(os, d);
  return os.str();
}

/// Cards are canonicalized on the way in, so equal decks parse equal even
/// from non-canonical graph6 lines. Card order must be n-1.
inline Deck read_deck(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw parse_error("deck: missing order line");
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(line, &pos);
    if (pos != line.size()) throw std::invalid_argument(line);
  } catch (const std::exception&) {
    throw parse_error("deck: bad order line \"" + line + "\"");
  }
  if (n < 1 || n > Graph::max_vertices)
    throw parse_error("deck: order " + std::to_string(n) + " outside 1.." +
                      std::to_string(Graph::max_vertices));
  Deck d;
  d.n = n;
  for (int i = 0; i < n; ++i) {
    if (!std::getline(is, line))
      throw parse_error("deck: expected " + std::to_string(n) + " cards, got " +
                        std::to_string(i));
    const Graph card = from_graph6(line);
    if (card.size() != n - 1)
      throw parse_error("deck: card \"" + line + "\" has order " + std::to_string(card.size()) +
                        ", expected " + std::to_string(n - 1));
    d.cards.push_back(canonical_form(card));
  }
  std::sort(d.cards.begin(), d.cards.end());
  return d;
}

inline Deck deck_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_deck(is);
}

}  // namespace p4recon
