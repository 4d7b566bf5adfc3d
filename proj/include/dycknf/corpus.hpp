#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dycknf/grammar.hpp"

namespace dycknf {

struct CorpusEntry {
  std::string name;
  Grammar grammar;
};

struct RandomGrammarOptions {
  std::size_t min_nonterminals = 2;
  std::size_t max_nonterminals = 8;
  std::size_t max_rules_per_nonterminal = 3;
  std::size_t check_len = 9;       // bound for the checks below
  std::size_t min_words = 3;       // words up to check_len
  std::uint64_t max_trees = 3000;  // derivation trees summed over those words
  std::size_t max_attempts = 10000;
};

/// A CNF grammar over {a, b} or {a, b, c} with start S (never on a
/// right-hand side) and nonterminals from A..G, drawn by std::mt19937_64.
/// Candidates are pruned and redrawn until they meet the options.
/// Throws ResourceLimitError when max_attempts is exhausted.
Grammar random_cnf_grammar(std::uint64_t seed, const RandomGrammarOptions& options = {});

/// The expression grammar in CNF, hand-written cases, then `random_count`
/// random grammars seeded with seed, seed + 1, ...
std::vector<CorpusEntry> cnf_corpus(std::uint64_t seed, std::size_t random_count = 20);

/// Even linear grammars, starting with S -> a S b | c.
std::vector<CorpusEntry> elin_corpus();

/// Random member of exactly `length` letters of a linear grammar. Each step
/// picks uniformly among the rules that can still reach that length.
/// Linear means at most one nonterminal per right-hand side. Returns nullopt when
/// the language has no word of that length. Throws PreconditionError for
/// non-linear grammars.
std::optional<Sentence> sample_linear_member(const Grammar& g, std::size_t length,
                                             std::mt19937_64& rng);

}  // namespace dycknf
