#include <random>
#include <set>

#include "doctest.h"
#include "dycknf/corpus.hpp"
#include "dycknf/cyk.hpp"
#include "dycknf/elin.hpp"
#include "dycknf/enumerate.hpp"
#include "dycknf/errors.hpp"
#include "dycknf/grammar_io.hpp"
#include "dycknf/normal_forms.hpp"
#include "dycknf/predicates.hpp"

using namespace dycknf;

TEST_CASE("random grammars are reproducible CNF grammars") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_cnf_grammar(seed);
    CAPTURE(seed);
    CHECK(g == random_cnf_grammar(seed));
    CHECK(is_cnf(g));
    CHECK_FALSE(g.start_on_rhs());
    CHECK(g.nonterminals().size() <= 8);
    CHECK(g.terminals().size() <= 3);
    CHECK(enumerate_words(g, 9).size() >= 3);
  }
  CHECK_FALSE(random_cnf_grammar(1) == random_cnf_grammar(2));
  RandomGrammarOptions bad;
  bad.max_nonterminals = 9;
  CHECK_THROWS_AS(random_cnf_grammar(1, bad), PreconditionError);
}

TEST_CASE("corpus shape") {
  const auto corpus = cnf_corpus(100);
  CHECK(corpus.size() >= 20);
  CHECK(corpus.front().name == "expr-cnf");
  std::set<std::string> names;
  for (const auto& e : corpus) names.insert(e.name);
  CHECK(names.size() == corpus.size());

  const auto elgs = elin_corpus();
  CHECK(elgs.size() >= 5);
  CHECK(serialize_grammar(elgs.front().grammar) == "start: S\nS -> 'a' S 'b' | 'c'\n");
  for (const auto& e : elgs) CHECK(is_even_linear(e.grammar));
}

TEST_CASE("enumeration agrees with CYK on the corpus") {
  for (const auto& e : cnf_corpus(7, 8)) {
    const auto& g = e.grammar;
    const auto words = enumerate_words(g, 7);
    const std::set<Sentence> language(words.begin(), words.end());
    for (const auto& w : all_words(g.terminals(), 7)) {
      CAPTURE(e.name);
      CAPTURE(w);
      CHECK(member(g, w) == language.contains(w));
    }
  }
}

TEST_CASE("linear sampler") {
  std::mt19937_64 rng(5);
  for (const auto& e : elin_corpus()) {
    const auto cnf = to_cnf(e.grammar);
    for (std::size_t len = 1; len <= 25; ++len) {
      const auto w = sample_linear_member(e.grammar, len, rng);
      const auto exists = !enumerate_words(e.grammar, len).empty() &&
                          enumerate_words(e.grammar, len).back().size() == len;
      CAPTURE(e.name);
      CAPTURE(len);
      CHECK(w.has_value() == exists);
      if (w) {
        CHECK(w->size() == len);
        CHECK(member(cnf, *w));
      }
    }
  }
  CHECK_FALSE(sample_linear_member(parse_grammar("start: S\nS -> 'a' S 'b' | 'c'\n"), 4, rng));
  CHECK_THROWS_AS(sample_linear_member(parse_grammar("start: S\nS -> S S | 'a'\n"), 3, rng),
                  PreconditionError);
}
