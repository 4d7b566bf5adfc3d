#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dycknf/dyck.hpp"
#include "dycknf/grammar.hpp"

namespace dycknf {

/// Bracket pairs (1-based indices) classified by which sides rewrite to a
/// terminal: both (n1), only the left (n2_left), only the right (n2_right),
/// neither (n3).
struct NonterminalPartition {
  std::vector<std::size_t> n1;
  std::vector<std::size_t> n2_left;
  std::vector<std::size_t> n2_right;
  std::vector<std::size_t> n3;
  std::vector<std::string> warnings;
};

NonterminalPartition partition_nonterminals(const Grammar& g);
NonterminalPartition partition_nonterminals(const Grammar& g, const BracketPairing& pairing);

/// A Dyck-NF grammar plus one extra pair per terminal t with S -> t:
/// S -> [t ]t, [t -> t, ]t -> eps. The extended grammar has lambda-rules and
/// so is not itself in Dyck normal form.
struct ExtendedGrammar {
  Grammar base;
  Grammar grammar;
  BracketPairing pairing;              // the base pairs followed by the new ones
  std::vector<std::size_t> new_pairs;  // indices into pairing
  std::vector<DyckWord> lp;            // [t ]t for each new pair
};

ExtendedGrammar extend_grammar(const Grammar& g);

/// phi on the 2K bracket letters; nullopt stands for the empty word.
class TerminalMap {
 public:
  void set(Bracket b, std::optional<char> image) { images_[b] = image; }
  std::optional<char> at(Bracket b) const;
  bool contains(Bracket b) const { return images_.contains(b); }
  const std::map<Bracket, std::optional<char>>& images() const noexcept { return images_; }

 private:
  std::map<Bracket, std::optional<char>> images_;
};

TerminalMap build_phi(const ExtendedGrammar& eg);

/// Letterwise image with empty letters elided. Throws PreconditionError for a
/// letter outside the map.
Sentence apply_phi(const TerminalMap& phi, const DyckWord& w);

struct CharacterizationReport {
  bool passed = false;
  std::size_t traces = 0;  // size of the bounded D'_K
  std::size_t words = 0;   // size of the bounded L(G)
  std::vector<Sentence> missing;     // in L, not an image
  std::vector<DyckWord> extra;       // image outside L
  std::vector<DyckWord> not_in_dk;   // fails the stack check over K pairs

  /// Summary line followed by MISSING / EXTRA / NOT-DYCK lines.
  std::string text() const;
};

/// Checks phi(trace_language(base, max_len) + L_p) = L(base) up to max_len
/// and that every element of the bounded D'_K is in D_K.
CharacterizationReport verify_characterization(const ExtendedGrammar& eg, std::size_t max_len);

}  // namespace dycknf
