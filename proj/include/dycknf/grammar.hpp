#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dycknf {

enum class SymbolKind : std::uint8_t { terminal, nonterminal };

/// A grammar symbol. Terminals are single characters; nonterminals are
/// identifiers matching [A-Za-z][A-Za-z0-9_]*.
struct Symbol {
  SymbolKind kind = SymbolKind::nonterminal;
  std::string name;

  static Symbol terminal(char c) { return Symbol{SymbolKind::terminal, std::string(1, c)}; }
  static Symbol nonterminal(std::string name) {
    return Symbol{SymbolKind::nonterminal, std::move(name)};
  }

  bool is_terminal() const noexcept { return kind == SymbolKind::terminal; }
  bool is_nonterminal() const noexcept { return kind == SymbolKind::nonterminal; }
  char terminal_char() const { return name.front(); }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Sentences are strings of single-character terminals.
using Sentence = std::string;

struct Rule {
  std::string lhs;
  std::vector<Symbol> rhs;  // empty rhs is a lambda-rule

  bool is_binary() const noexcept;     // X -> A B, both nonterminals
  bool is_terminal() const noexcept;   // X -> a
  bool is_empty() const noexcept { return rhs.empty(); }

  friend auto operator<=>(const Rule&, const Rule&) = default;
};

bool is_identifier(std::string_view name) noexcept;

/// G = (N, T, P, S). Immutable once built.
///
/// The nonterminal alphabet is the set of left-hand sides, ordered by first
/// appearance in the rule list; the terminal alphabet is ordered by first
/// appearance anywhere in the rules. Deriving both alphabets from the rule
/// order makes text serialization an exact round trip.
class Grammar {
 public:
  /// Throws ValidationError when the start symbol has no rule, a right-hand
  /// side mentions a nonterminal without rules ("undeclared symbol"), the
  /// rule list is empty, or a name is malformed.
  Grammar(std::string start, std::vector<Rule> rules);

  const std::string& start() const noexcept { return start_; }
  const std::vector<std::string>& nonterminals() const noexcept { return nonterminals_; }
  const std::vector<char>& terminals() const noexcept { return terminals_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  bool has_nonterminal(std::string_view name) const;
  bool has_terminal(char c) const;
  std::optional<std::size_t> nonterminal_index(std::string_view name) const;
  std::optional<std::size_t> terminal_index(char c) const;

  /// Indices into rules() of the rules rewriting `lhs`, in declaration order.
  const std::vector<std::size_t>& rules_for(std::string_view lhs) const;
  bool has_rule(const Rule& rule) const;

  /// True iff the start symbol occurs on some right-hand side.
  bool start_on_rhs() const;

  friend bool operator==(const Grammar& a, const Grammar& b) {
    return a.start_ == b.start_ && a.rules_ == b.rules_;
  }

 private:
  std::string start_;
  std::vector<Rule> rules_;
  std::vector<std::string> nonterminals_;
  std::vector<char> terminals_;
  std::unordered_map<std::string, std::size_t> nt_index_;
  std::vector<std::vector<std::size_t>> rules_by_lhs_;
};

/// Stable-sorts rules so that all alternatives of a nonterminal are
/// contiguous, in the order the nonterminals first appear as left-hand sides.
std::vector<Rule> group_by_lhs(std::vector<Rule> rules);

}  // namespace dycknf
