#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "dycknf/grammar.hpp"

namespace dycknf {

struct ParseOptions {
  std::size_t max_rhs_length = 8;
};

/// Reads the line-oriented grammar format:
///
///   # comment
///   start: S
///   S -> A 'b' | 'c'
///   A -> eps
///
/// Identifiers are nonterminals, single-quoted characters are terminals and
/// `eps` is the empty right-hand side. A nonterminal may head several lines.
Grammar parse_grammar(std::string_view text, const ParseOptions& options = {});

Grammar load_grammar(const std::string& path, const ParseOptions& options = {});

/// Canonical text: the start header, then one line per maximal run of rules
/// sharing a left-hand side. parse_grammar(serialize_grammar(g)) == g.
std::string serialize_grammar(const Grammar& g);

std::string format_rule(const Rule& rule);

}  // namespace dycknf
