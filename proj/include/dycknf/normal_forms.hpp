#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dycknf/derivation.hpp"
#include "dycknf/grammar.hpp"

namespace dycknf {

enum class SubstitutionKind : std::uint8_t { terminal, nonterminal };

struct Substitution {
  std::string introduced;
  std::string original;  // the nonterminal it was split from, possibly itself a substitute
  SubstitutionKind kind = SubstitutionKind::terminal;
  int step = 1;

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

/// Substitutions in creation order.
struct SubstitutionLedger {
  std::vector<Substitution> entries;

  bool empty() const noexcept { return entries.empty(); }
  /// One line per entry: `<new> <- <original> terminal|nonterminal step=<k>`.
  std::string serialize() const;
};

struct DyckConversion {
  Grammar grammar;
  SubstitutionLedger ledger;
};

/// Textbook Chomsky normal form. A fresh start symbol is added only when the
/// start occurs on a right-hand side. Throws PreconditionError on a
/// lambda-rule and ValidationError when the language is empty.
Grammar to_cnf(const Grammar& g);

/// Three-step conversion to Dyck normal form:
///   1. terminal rules of nonterminals that also rewrite otherwise move to
///      fresh nonterminals `<A>_t<k>`;
///   2. right-child occurrences of a nonterminal that is also a left child
///      move to a fresh `<A>_R<k>` per left sibling;
///   3. remaining partner conflicts are split off (`<A>_L<k>` / `<A>_R<k>`)
///      until left and right children determine each other.
/// `<A>` is always the original nonterminal of the source grammar.
/// Requires a CNF grammar whose start symbol is on no right-hand side.
DyckConversion to_dyck_nf(const Grammar& g);

/// h_d as a map on nonterminals; terminals are fixed implicitly.
using Homomorphism = std::map<std::string, std::string>;

/// Collapses substitution chains to the source nonterminal. Identity on the
/// nonterminals of `source`. Throws ValidationError on a dangling entry.
Homomorphism build_hd(const SubstitutionLedger& ledger, const Grammar& source);

/// Relabels every nonterminal node through hd and validates the result
/// against `target`. Throws ValidationError if the image is not a derivation
/// tree of target.
DerivationTree map_tree(const Homomorphism& hd, const DerivationTree& tree, const Grammar& target);

struct SubstitutionRelations {
  // (X, a) -> {X' : hd(X') = X, X' -> a}
  std::map<std::pair<std::string, char>, std::vector<std::string>> h_t;
  // X -> {X' : hd(X') = X, X' has a binary rule}; the start maps to itself
  std::map<std::string, std::vector<std::string>> h_not_t;
};

SubstitutionRelations build_relations(const Grammar& g_cnf, const Grammar& g_dyck,
                                      const SubstitutionLedger& ledger);

/// Builds the CYK tables V over g_cnf and V' over g_dyck and checks
/// V'_ii = h_t(V_ii) and V'_ij = h_not_t(V_ij) for i < j.
bool verify_equivalence_matrices(const Grammar& g_cnf, const Grammar& g_dyck,
                                 const SubstitutionLedger& ledger, const Sentence& w);

/// Drops nonproductive, then unreachable, nonterminals. Throws
/// ValidationError when the start symbol itself is nonproductive.
Grammar prune_useless(const Grammar& g);

/// A renaming of nonterminals mapping a onto b (start to start, rules onto
/// rules), if one exists.
std::optional<std::map<std::string, std::string>> find_isomorphism(const Grammar& a,
                                                                   const Grammar& b);

}  // namespace dycknf
