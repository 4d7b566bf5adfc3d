#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dycknf/derivation.hpp"
#include "dycknf/grammar.hpp"

namespace dycknf {

enum class Side : std::uint8_t { open, close };

/// A letter of D_k: `[i` or `]i`, pair indices starting at 1.
struct Bracket {
  std::size_t pair = 1;
  Side side = Side::open;

  static Bracket open(std::size_t pair) { return {pair, Side::open}; }
  static Bracket close(std::size_t pair) { return {pair, Side::close}; }

  friend auto operator<=>(const Bracket&, const Bracket&) = default;
};

using DyckWord = std::vector<Bracket>;

/// Whitespace-separated tokens `[<idx>` / `]<idx>`, e.g. "[1 [2 ]2 ]1".
DyckWord parse_dyck_word(std::string_view text);
std::string format_dyck_word(const DyckWord& w);

/// Length first, then letterwise.
bool dyck_word_less(const DyckWord& a, const DyckWord& b);

/// Left/right roles of the nonterminals of a Dyck-NF grammar. Pairs are
/// numbered in the order their binary rule first occurs.
class BracketPairing {
 public:
  struct Pair {
    std::string left;
    std::string right;
  };

  BracketPairing() = default;
  BracketPairing(std::string start, std::vector<Pair> pairs, std::vector<std::string> unpaired);

  const std::string& start() const noexcept { return start_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  const Pair& pair(std::size_t index) const;  // 1-based
  /// Non-start nonterminals that never occur as a child.
  const std::vector<std::string>& unpaired() const noexcept { return unpaired_; }

  std::optional<Bracket> bracket_of(std::string_view nonterminal) const;
  const std::string& name_of(Bracket b) const;

  BracketPairing with_pair(Pair p) const;

 private:
  std::string start_;
  std::vector<Pair> pairs_;
  std::vector<std::string> unpaired_;
};

/// Throws PreconditionError unless g is in Dyck normal form.
BracketPairing pairing_of(const Grammar& g);

/// Depth-first read of the interior nodes, root excluded. Throws
/// DerivationTooShort for a one-step derivation.
DyckWord trace_word(const BracketPairing& pairing, const DerivationTree& tree);
DyckWord trace_word(const Grammar& g, const DerivationTree& tree);

/// The same trace computed by replaying the leftmost derivation and recording
/// each rewritten nonterminal.
DyckWord trace_word_by_rewriting(const BracketPairing& pairing, const DerivationTree& tree);

/// Renders letters by nonterminal name, e.g. "[E [T ]T1".
std::string format_trace(const BracketPairing& pairing, const DyckWord& w);

/// Every left letter becomes [1, every right letter ]1.
DyckWord project_h(const DyckWord& w);

/// Keeps the letters of pair `k_prime`, renamed to pair 1. `alphabet_size`
/// bounds k_prime when nonzero.
DyckWord project_hk(const DyckWord& w, std::size_t k_prime, std::size_t alphabet_size = 0);

/// Equal counts and no prefix with more ]1 than [1. Requires a one-pair word.
bool is_balanced(const DyckWord& w);

/// Positions are 1-based and inclusive.
bool is_matched_pair(const DyckWord& w, std::size_t i, std::size_t j);
bool is_nested_pair(const DyckWord& w, std::size_t i, std::size_t j);
/// Requires (i, j) to be matched.
bool is_reducible_pair(const DyckWord& w, std::size_t i, std::size_t j);

/// D_k membership by the matched-pair characterization: (1, |w|) is matched
/// and every matched pair projects into D_1 under each single-pair
/// homomorphism. The empty word is not in D_k.
bool in_dk_lemma(const DyckWord& w);

/// D_k membership by stack matching. The empty word is not in D_k.
bool in_dk_stack(const DyckWord& w);

struct TraceLanguageOptions {
  std::size_t max_trees_per_word = 100'000;
};

/// Trace-words of every derivation tree of every word of length at most
/// max_len, sorted by dyck_word_less without duplicates.
std::vector<DyckWord> trace_language(const Grammar& g, std::size_t max_len,
                                     const TraceLanguageOptions& options = {});

}  // namespace dycknf
