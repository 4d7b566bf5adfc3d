#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dycknf/derivation.hpp"
#include "dycknf/grammar.hpp"

namespace dycknf {

/// Triangular CYK matrix V_ij, 1 <= i <= j <= n, over a grammar in Chomsky
/// normal form:
///   V_ii = {A : A -> a_i},
///   V_ij = union over l in [i, j) of {A : A -> B C, B in V_il, C in V_(l+1)j}.
class CykTable {
 public:
  std::size_t size() const noexcept { return n_; }
  const Sentence& word() const noexcept { return word_; }

  /// Cell contents in nonterminal declaration order. Positions are 1-based.
  std::vector<std::string> cell(std::size_t i, std::size_t j) const;
  bool contains(std::size_t i, std::size_t j, const std::string& nonterminal) const;

  friend CykTable build_table(const Grammar& g, const Sentence& w);
  friend class CykAccess;

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return (i - 1) * n_ + (j - 1); }

  std::size_t n_ = 0;
  Sentence word_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::uint8_t>> cells_;
};

/// Throws PreconditionError for a grammar that is not in Chomsky normal form,
/// an empty word, or a symbol outside the terminal alphabet.
CykTable build_table(const Grammar& g, const Sentence& w);

bool member(const Grammar& g, const Sentence& w);

/// The canonical tree: at every node the smallest split point, then the first
/// matching rule in declaration order. Throws PreconditionError if w is not
/// in L(g).
DerivationTree extract_tree(const Grammar& g, const Sentence& w);

/// Number of distinct derivation trees of w, saturating at UINT64_MAX.
std::uint64_t count_trees(const Grammar& g, const Sentence& w);

/// Every derivation tree of w. Throws ResourceLimitError when there are more
/// than `max_trees`.
std::vector<DerivationTree> all_trees(const Grammar& g, const Sentence& w,
                                      std::size_t max_trees = 100'000);

/// Row-major text dump, one row per i, cells rendered as {A,B}.
std::string format_table(const CykTable& table);

}  // namespace dycknf
