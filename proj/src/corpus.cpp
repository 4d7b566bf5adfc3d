#include "dycknf/corpus.hpp"

#include <set>

#include "dycknf/cyk.hpp"
#include "dycknf/enumerate.hpp"
#include "dycknf/errors.hpp"
#include "dycknf/grammar_io.hpp"
#include "dycknf/normal_forms.hpp"
#include "dycknf/predicates.hpp"

namespace dycknf {

namespace {

const char* const kExpressionCnf = R"(start: E0
E0 -> 'a' | T T1 | E E1
E -> 'a' | T T1 | E E1
T -> 'a' | T T1
T1 -> T2 R
E1 -> E2 T
T2 -> '*'
E2 -> '+'
R -> 'a'
)";

const char* const kHandwritten[][2] = {
    {"minimal", "start: S\nS -> 'a'\n"},
    {"ambiguous", "start: S\nS -> X X | 'a'\nX -> X X | 'a' | 'b'\n"},
    {"anbn-cnf", "start: S\nS -> A B | A C\nC -> X B\nX -> A B | A C\nA -> 'a'\nB -> 'b'\n"},
    {"shared-terminal", "start: S\nS -> A A | B A\nA -> 'a' | A B\nB -> 'a' | 'b'\n"},
};

const char* const kEvenLinear[][2] = {
    {"anbn", "start: S\nS -> 'a' S 'b' | 'c'\n"},
    {"odd-palindromes", "start: S\nS -> 'a' S 'a' | 'b' S 'b' | 'a' | 'b'\n"},
    {"even-palindromes", "start: S\nS -> 'a' S 'a' | 'b' S 'b' | 'a' 'a' | 'b' 'b'\n"},
    {"wide-flanks", "start: S\nS -> 'a' 'b' S 'b' 'a' | 'a' S 'b' | 'c' | 'a' 'b'\n"},
    {"alternating",
     "start: S\nS -> 'a' T 'b' | 'c'\nT -> 'b' S 'a' | 'a' T 'a' | 'c' 'c'\n"},
    {"mirrored",
     "start: S\nS -> 'a' S 'b' | 'b' S 'a' | 'a' 'b' 'c' 'b' 'a' | 'c'\n"},
    {"unit-chain", "start: S\nS -> T | 'a' S 'a'\nT -> 'b' T 'b' | 'c'\n"},
};

std::optional<Grammar> draw(std::mt19937_64& rng, const RandomGrammarOptions& o) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const auto count = pick(o.min_nonterminals, o.max_nonterminals);
  const auto letters = pick(2, 3);
  std::vector<std::string> names{"S"};
  for (std::size_t i = 1; i < count; ++i) names.push_back(std::string(1, static_cast<char>('A' + i - 1)));

  std::vector<Rule> rules;
  std::set<Rule> seen;
  for (const auto& lhs : names) {
    const auto k = pick(1, o.max_rules_per_nonterminal);
    for (std::size_t r = 0; r < k; ++r) {
      Rule rule{lhs, {}};
      if (pick(0, 9) < 4) {
        rule.rhs.push_back(Symbol::terminal(static_cast<char>('a' + pick(0, letters - 1))));
      } else {
        rule.rhs.push_back(Symbol::nonterminal(names[pick(1, count - 1)]));
        rule.rhs.push_back(Symbol::nonterminal(names[pick(1, count - 1)]));
      }
      if (seen.insert(rule).second) rules.push_back(std::move(rule));
    }
  }
  // right-hand sides may name nonterminals without rules; give them none and prune
  std::set<std::string> declared;
  for (const auto& r : rules) declared.insert(r.lhs);
  std::erase_if(rules, [&](const Rule& r) {
    for (const auto& s : r.rhs)
      if (s.is_nonterminal() && !declared.contains(s.name)) return true;
    return false;
  });
  try {
    auto g = prune_useless(Grammar("S", std::move(rules)));
    if (!is_cnf(g) || g.start_on_rhs()) return std::nullopt;
    const auto words = enumerate_words(g, o.check_len);
    if (words.size() < o.min_words || words.back().size() < 3) return std::nullopt;
    std::uint64_t trees = 0;
    for (const auto& w : words) {
      trees += count_trees(g, w);
      if (trees > o.max_trees) return std::nullopt;
    }
    return g;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

Grammar random_cnf_grammar(std::uint64_t seed, const RandomGrammarOptions& options) {
  if (options.min_nonterminals < 2 || options.max_nonterminals > 8 ||
      options.min_nonterminals > options.max_nonterminals)
    throw PreconditionError("nonterminal count must lie in 2..8");
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt)
    if (auto g = draw(rng, options)) return *std::move(g);
  throw ResourceLimitError("no acceptable random grammar for seed " + std::to_string(seed));
}

std::vector<CorpusEntry> cnf_corpus(std::uint64_t seed, std::size_t random_count) {
  std::vector<CorpusEntry> out;
  out.push_back({"expr-cnf", parse_grammar(kExpressionCnf)});
  for (const auto& [name, text] : kHandwritten) out.push_back({name, parse_grammar(text)});
  for (std::size_t i = 0; i < random_count; ++i)
    out.push_back({"random-" + std::to_string(seed + i), random_cnf_grammar(seed + i)});
  return out;
}

std::vector<CorpusEntry> elin_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& [name, text] : kEvenLinear) out.push_back({name, parse_grammar(text)});
  return out;
}

std::optional<Sentence> sample_linear_member(const Grammar& g, std::size_t length,
                                             std::mt19937_64& rng) {
  const auto& rules = g.rules();
  std::vector<std::optional<std::size_t>> middle(rules.size());
  for (std::size_t r = 0; r < rules.size(); ++r) {
    for (std::size_t i = 0; i < rules[r].rhs.size(); ++i) {
      if (!rules[r].rhs[i].is_nonterminal()) continue;
      if (middle[r]) throw PreconditionError("sampling needs a linear grammar");
      middle[r] = i;
    }
  }
  const auto nts = g.nonterminals().size();
  // reach[x][l]: nonterminal x derives some word of length l
  std::vector<std::vector<bool>> reach(nts, std::vector<bool>(length + 1));
  auto flank = [&](std::size_t r) { return rules[r].rhs.size() - (middle[r] ? 1 : 0); };
  auto feasible = [&](std::size_t r, std::size_t l) {
    const auto f = flank(r);
    if (f > l) return false;
    if (!middle[r]) return f == l;
    return static_cast<bool>(reach[*g.nonterminal_index(rules[r].rhs[*middle[r]].name)][l - f]);
  };
  for (std::size_t l = 0; l <= length; ++l)
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t r = 0; r < rules.size(); ++r) {
        const auto x = *g.nonterminal_index(rules[r].lhs);
        if (!reach[x][l] && feasible(r, l)) changed = reach[x][l] = true;
      }
    }
  if (!reach[*g.nonterminal_index(g.start())][length]) return std::nullopt;

  Sentence left;
  Sentence right;
  std::string current = g.start();
  std::size_t remaining = length;
  while (true) {
    std::vector<std::size_t> options;
    for (auto r : g.rules_for(current))
      if (feasible(r, remaining)) options.push_back(r);
    const auto r = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    const auto& rhs = rules[r].rhs;
    if (!middle[r]) {
      for (const auto& s : rhs) left += s.name;
      break;
    }
    for (std::size_t i = 0; i < *middle[r]; ++i) left += rhs[i].name;
    Sentence suffix;
    for (std::size_t i = *middle[r] + 1; i < rhs.size(); ++i) suffix += rhs[i].name;
    right = suffix + right;
    remaining -= flank(r);
    current = rhs[*middle[r]].name;
  }
  return left + right;
}

}  // namespace dycknf
