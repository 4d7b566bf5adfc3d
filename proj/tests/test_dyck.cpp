#include <random>
#include <set>

#include "doctest.h"
#include "dycknf/cyk.hpp"
#include "dycknf/dyck.hpp"
#include "dycknf/enumerate.hpp"
#include "dycknf/errors.hpp"
#include "dycknf/grammar_io.hpp"
#include "dycknf/normal_forms.hpp"
#include "fixtures.hpp"

using namespace dycknf;
using dycknf::testing::fixture;

namespace {

DyckWord w(const char* text) { return parse_dyck_word(text); }

// Every word of the given length over k pairs.
std::vector<DyckWord> all_dyck_candidates(std::size_t k, std::size_t len) {
  std::vector<DyckWord> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<DyckWord> next;
    for (const auto& prefix : out)
      for (std::size_t p = 1; p <= k; ++p)
        for (auto side : {Side::open, Side::close}) {
          auto extended = prefix;
          extended.push_back({p, side});
          next.push_back(std::move(extended));
        }
    out = std::move(next);
  }
  return out;
}

const char* const kExpressionTrace = "[LE [LT [LT3 ]RT5 [LT2 ]RR ]RT1 [LT2 ]RR ]RE1 [LE4 ]RT4";

}  // namespace

TEST_CASE("Dyck word text form") {
  const auto x = w("[1 [2 ]2 ]1");
  REQUIRE(x.size() == 4);
  CHECK(x[1] == Bracket::open(2));
  CHECK(format_dyck_word(x) == "[1 [2 ]2 ]1");
  CHECK(w("").empty());
  CHECK_THROWS_AS(w("[0"), ParseError);
  CHECK_THROWS_AS(w("[a"), ParseError);
  CHECK_THROWS_AS(w("[1]1"), ParseError);
  CHECK_THROWS_AS(w("(1"), ParseError);
}

TEST_CASE("pairing of the expression Dyck grammar") {
  const auto p = pairing_of(fixture("expr-dyck.cfg"));
  CHECK(p.size() == 7);
  CHECK(p.unpaired().empty());
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& pair : p.pairs()) got.insert({pair.left, pair.right});
  CHECK(got == std::set<std::pair<std::string, std::string>>{{"LE", "RE1"},
                                                             {"LT", "RT1"},
                                                             {"LE3", "RE5"},
                                                             {"LT3", "RT5"},
                                                             {"LE2", "Tp"},
                                                             {"LE4", "RT4"},
                                                             {"LT2", "RR"}});
  CHECK(p.pair(1).left == "LT");  // E0 -> LT RT1 is the first binary rule
  CHECK(pairing_of(parse_grammar("start: S\nS -> 'a'")).size() == 0);
  const auto one = pairing_of(parse_grammar("start: S\nS -> A B\nA -> 'a'\nB -> 'b'"));
  REQUIRE(one.size() == 1);
  CHECK(one.pair(1).left == "A");
  CHECK(one.pair(1).right == "B");
  CHECK_THROWS_AS(pairing_of(fixture("expr-cnf.cfg")), PreconditionError);
}

TEST_CASE("trace of a*a*a+a") {
  const auto g = fixture("expr-dyck.cfg");
  const auto pairing = pairing_of(g);
  const auto tree = extract_tree(g, "a*a*a+a");
  const auto t = trace_word(pairing, tree);
  CHECK(format_trace(pairing, t) == kExpressionTrace);
  CHECK(t.size() == 12);
  CHECK(trace_word_by_rewriting(pairing, tree) == t);
  CHECK(in_dk_stack(t));
  CHECK(in_dk_lemma(t));
  CHECK(is_matched_pair(t, 1, 12));
  CHECK(format_dyck_word(project_h(t)) == "[1 [1 [1 ]1 [1 ]1 ]1 [1 ]1 ]1 [1 ]1");

  const auto t3 = pairing.bracket_of("LT3")->pair;
  CHECK(format_dyck_word(project_hk(t, t3, pairing.size())) == "[1 ]1");

  CHECK_THROWS_AS(trace_word(pairing, extract_tree(g, "a")), DerivationTooShort);
}

TEST_CASE("the converted grammar gives the same trace") {
  const auto cnf = fixture("expr-cnf.cfg");
  const auto dyck = to_dyck_nf(cnf).grammar;
  const auto iso = find_isomorphism(dyck, fixture("expr-dyck.cfg"));
  REQUIRE(iso.has_value());
  const auto pairing = pairing_of(dyck);
  const auto t = trace_word(pairing, extract_tree(dyck, "a*a*a+a"));
  std::string renamed;
  for (const auto& b : t) {
    if (!renamed.empty()) renamed += ' ';
    renamed += (b.side == Side::open ? "[" : "]") + iso->at(pairing.name_of(b));
  }
  CHECK(renamed == kExpressionTrace);
}

TEST_CASE("traces agree under both definitions on many trees") {
  const auto g = to_dyck_nf(parse_grammar("start: S\nS -> X X | 'a'\nX -> X X | 'a' | 'b'\n")).grammar;
  const auto pairing = pairing_of(g);
  std::size_t checked = 0;
  for (const auto& word : enumerate_words(g, 5))
    for (const auto& tree : all_trees(g, word)) {
      if (tree.children.size() == 1) continue;
      CHECK(trace_word(pairing, tree) == trace_word_by_rewriting(pairing, tree));
      ++checked;
    }
  CHECK(checked >= 100);
}

TEST_CASE("projections") {
  CHECK(format_dyck_word(project_h(w("[2 ]2 [3 ]3"))) == "[1 ]1 [1 ]1");
  CHECK(project_h({}).empty());
  CHECK(format_dyck_word(project_hk(w("[1 [2 ]2 ]1"), 2)) == "[1 ]1");
  CHECK(project_hk(w("[2 ]2"), 1).empty());
  CHECK_THROWS_AS(project_hk(w("[2 ]2"), 0), PreconditionError);
  CHECK_THROWS_AS(project_hk(w("[2 ]2"), 3, 2), PreconditionError);
}

TEST_CASE("balance and pairs") {
  CHECK(is_balanced(w("[1 ]1 [1 ]1")));
  CHECK_FALSE(is_balanced(w("]1 [1")));
  CHECK_FALSE(is_balanced(w("[1 [1 ]1")));
  CHECK(is_balanced({}));
  CHECK_THROWS_AS(is_balanced(w("[2 ]2")), PreconditionError);

  CHECK(is_matched_pair(w("[1 ]1 [2 ]2"), 1, 4));
  CHECK_FALSE(is_matched_pair(w("[1 ]1 [2 ]2"), 2, 3));
  CHECK(is_matched_pair(w("[1 [2 ]2 ]1"), 2, 3));
  CHECK_THROWS_AS(is_matched_pair(w("[1 ]1"), 0, 1), PreconditionError);
  CHECK_THROWS_AS(is_matched_pair(w("[1 ]1"), 2, 3), PreconditionError);

  CHECK(is_nested_pair(w("[1 ]1"), 1, 2));
  CHECK(is_nested_pair(w("[1 [2 ]2 ]1"), 1, 4));
  CHECK_FALSE(is_nested_pair(w("[1 ]1 [2 ]2"), 1, 4));

  CHECK(is_reducible_pair(w("[1 ]1 [2 ]2"), 1, 4));
  CHECK_FALSE(is_reducible_pair(w("[1 [2 ]2 ]1"), 1, 4));
  CHECK_THROWS_AS(is_reducible_pair(w("[1 [2 ]2 ]1"), 1, 3), PreconditionError);
}

TEST_CASE("D_k membership") {
  CHECK(in_dk_lemma(w("[1 [2 ]2 ]1")));
  CHECK_FALSE(in_dk_lemma(w("[1 ]2")));
  CHECK(in_dk_stack(w("[1 [2 ]2 ]1")));
  CHECK_FALSE(in_dk_stack(w("[1 ]2 ]1")));
  CHECK_FALSE(in_dk_lemma(w("[1 [2 ]1 ]2")));
  CHECK_FALSE(in_dk_stack({}));
  CHECK_FALSE(in_dk_lemma({}));
}

TEST_CASE("lemma and stack agree on small words") {
  for (std::size_t len = 1; len <= 6; ++len)
    for (const auto& x : all_dyck_candidates(2, len)) CHECK(in_dk_lemma(x) == in_dk_stack(x));
  std::mt19937_64 rng(7);
  for (int n = 0; n < 500; ++n) {
    DyckWord x;
    const auto len = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
    for (std::size_t i = 0; i < len; ++i)
      x.push_back({std::uniform_int_distribution<std::size_t>(1, 3)(rng),
                   rng() % 2 ? Side::open : Side::close});
    CHECK(in_dk_lemma(x) == in_dk_stack(x));
  }
}

TEST_CASE("nested pairs are irreducible") {
  for (std::size_t len = 2; len <= 6; len += 2)
    for (const auto& x : all_dyck_candidates(2, len))
      for (std::size_t i = 1; i <= len; ++i)
        for (std::size_t j = i + 1; j <= len; ++j)
          if (is_nested_pair(x, i, j)) CHECK_FALSE(is_reducible_pair(x, i, j));
}

TEST_CASE("trace language") {
  const auto g = fixture("expr-dyck.cfg");
  const auto traces = trace_language(g, 7);
  const auto pairing = pairing_of(g);
  bool found = false;
  for (const auto& t : traces) {
    CHECK(in_dk_stack(t));
    found |= format_trace(pairing, t) == kExpressionTrace;
  }
  CHECK(found);
  CHECK(trace_language(parse_grammar("start: S\nS -> 'a'"), 5).empty());
}
