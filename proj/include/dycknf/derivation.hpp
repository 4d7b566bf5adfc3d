#pragma once

#include <string>
#include <vector>

#include "dycknf/grammar.hpp"

namespace dycknf {

/// A parse tree. Terminal leaves have no children; a nonterminal node with no
/// children stands for a lambda-rule.
struct DerivationTree {
  Symbol label;
  std::vector<DerivationTree> children;

  static DerivationTree leaf(char c) { return {Symbol::terminal(c), {}}; }
  static DerivationTree node(std::string nonterminal, std::vector<DerivationTree> children) {
    return {Symbol::nonterminal(std::move(nonterminal)), std::move(children)};
  }

  bool is_leaf() const noexcept { return label.is_terminal(); }
  Sentence frontier() const;
  /// The rule instantiated at this node.
  Rule rule() const;

  friend bool operator==(const DerivationTree&, const DerivationTree&) = default;
};

/// Throws PreconditionError if some node does not instantiate a rule of g or
/// the root is not the start symbol.
void validate_tree(const Grammar& g, const DerivationTree& tree);

/// The rules applied by the leftmost derivation whose tree is `tree`.
std::vector<Rule> leftmost_derivation(const Grammar& g, const DerivationTree& tree);

/// S-expression rendering, e.g. (S (A a) (B b)).
std::string format_tree(const DerivationTree& tree);

}  // namespace dycknf
