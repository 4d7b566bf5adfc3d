// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion-number]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dycknf/corpus.hpp"
#include "dycknf/cyk.hpp"
#include "dycknf/derivation.hpp"
#include "dycknf/dyck.hpp"
#include "dycknf/elin.hpp"
#include "dycknf/enumerate.hpp"
#include "dycknf/grammar_io.hpp"
#include "dycknf/normal_forms.hpp"
#include "dycknf/phi.hpp"
#include "dycknf/predicates.hpp"

using namespace dycknf;

namespace {

// pinned bounds
constexpr std::uint64_t kCorpusSeed = 2026;
constexpr std::size_t kRandomGrammars = 20;
constexpr std::size_t kMinCorpus = 20;
constexpr std::size_t kLanguageBound = 9;      // criteria 2, 3, 4, 11
constexpr std::size_t kMatrixExhaustive = 30000;
constexpr std::size_t kMatrixSample = 200;
constexpr std::size_t kTraceBound = 8;         // criterion 7
constexpr std::size_t kPhiBound = 7;           // criterion 8
constexpr std::size_t kElinMaxLen = 33;        // criterion 9
constexpr std::size_t kElinExhaustive = 200000;
constexpr std::size_t kElinSamplesPerLength = 30;
constexpr std::size_t kMinElgs = 5;
constexpr std::uint64_t kDivisionLimit = 1'000'000;
constexpr double kGoldenSeconds = 1.0;
constexpr double kLanguageSeconds = 60.0;
constexpr double kDyckOracleSeconds = 120.0;
constexpr std::size_t kRandomDyckWords = 10000;
constexpr std::size_t kRandomDyckMaxPairs = 5;
constexpr std::size_t kRandomDyckMaxLen = 40;

const char* const kExpressionCnf = DYCKNF_GRAMMAR_DIR "/expr-cnf.cfg";
const char* const kExpressionDyck = DYCKNF_GRAMMAR_DIR "/expr-dyck.cfg";
const char* const kTraceWord = "a*a*a+a";
const char* const kGoldenTrace = "[LE [LT [LT3 ]RT5 [LT2 ]RR ]RT1 [LT2 ]RR ]RE1 [LE4 ]RT4";
const char* const kGoldenTraceNumeric = "[2 [1 [4 ]4 [7 ]7 ]1 [7 ]7 ]2 [6 ]6";

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0: no time bound
  std::function<Outcome()> run;
};

struct CorpusItem {
  std::string name;
  Grammar cnf;
  DyckConversion dyck;
};

const std::vector<CorpusItem>& corpus() {
  static const auto items = [] {
    std::vector<CorpusItem> out;
    for (auto& e : cnf_corpus(kCorpusSeed, kRandomGrammars))
      out.push_back({e.name, e.grammar, to_dyck_nf(e.grammar)});
    return out;
  }();
  return items;
}

std::string count_of(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

Outcome golden_conversion() {
  const auto gp = load_grammar(kExpressionCnf);
  const auto conv = to_dyck_nf(gp);
  const auto reference = load_grammar(kExpressionDyck);
  const auto nts = conv.grammar.nonterminals().size();
  const auto rules = conv.grammar.rules().size();
  const bool iso = find_isomorphism(conv.grammar, reference).has_value();
  return {nts == 15 && rules == 26 && iso,
          count_of(nts, "nonterminals") + ", " + count_of(rules, "rules") +
              (iso ? ", isomorphic to the reference" : ", NOT isomorphic")};
}

Outcome language_preservation() {
  std::size_t mismatches = 0;
  std::size_t words = 0;
  for (const auto& item : corpus()) {
    const auto a = enumerate_words(item.cnf, kLanguageBound);
    words += a.size();
    if (a != enumerate_words(item.dyck.grammar, kLanguageBound)) {
      ++mismatches;
      std::cout << "  mismatch: " << item.name << '\n';
    }
  }
  return {corpus().size() >= kMinCorpus && mismatches == 0,
          count_of(corpus().size(), "grammars") + ", " + count_of(words, "words") + ", " +
              count_of(mismatches, "mismatches")};
}

std::vector<Sentence> matrix_words(const Grammar& g, std::mt19937_64& rng) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t l = 1; l <= kLanguageBound; ++l) total += (layer *= g.terminals().size());
  if (total <= kMatrixExhaustive) return all_words(g.terminals(), kLanguageBound);
  std::vector<Sentence> out;
  std::uniform_int_distribution<std::size_t> len(1, kLanguageBound);
  std::uniform_int_distribution<std::size_t> letter(0, g.terminals().size() - 1);
  for (std::size_t i = 0; i < kMatrixSample; ++i) {
    Sentence w(len(rng), ' ');
    for (auto& c : w) c = g.terminals()[letter(rng)];
    out.push_back(std::move(w));
  }
  return out;
}

Outcome equivalence_matrices() {
  std::mt19937_64 rng(kCorpusSeed);
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (const auto& item : corpus())
    for (const auto& w : matrix_words(item.cnf, rng)) {
      ++checked;
      if (!verify_equivalence_matrices(item.cnf, item.dyck.grammar, item.dyck.ledger, w)) {
        if (failures++ < 5) std::cout << "  failure: " << item.name << " \"" << w << "\"\n";
      }
    }
  return {failures == 0, count_of(checked, "(grammar, word) pairs") + ", " +
                             count_of(failures, "failures")};
}

Outcome derivation_length() {
  std::size_t trees = 0;
  std::size_t failures = 0;
  for (const auto& item : corpus()) {
    const auto& g = item.dyck.grammar;
    for (const auto& w : enumerate_words(g, kLanguageBound))
      for (const auto& tree : all_trees(g, w)) {
        ++trees;
        if (leftmost_derivation(g, tree).size() != 2 * w.size() - 1) ++failures;
      }
  }
  return {failures == 0 && trees > 0,
          count_of(trees, "trees") + ", " + count_of(failures, "with a length other than 2n-1")};
}

Outcome golden_trace() {
  const auto g = load_grammar(kExpressionDyck);
  const auto pairing = pairing_of(g);
  const auto t = trace_word(pairing, extract_tree(g, kTraceWord));
  const auto named = format_trace(pairing, t);
  const auto numeric = format_dyck_word(t);
  const bool ok = named == kGoldenTrace && numeric == kGoldenTraceNumeric;
  return {ok, count_of(t.size(), "letters") + ": " + numeric};
}

std::vector<DyckWord> words_over(std::size_t pairs, std::size_t max_len) {
  std::vector<DyckWord> out;
  std::vector<DyckWord> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<DyckWord> next;
    for (const auto& w : layer)
      for (std::size_t p = 1; p <= pairs; ++p)
        for (auto side : {Side::open, Side::close}) {
          auto v = w;
          v.push_back({p, side});
          next.push_back(std::move(v));
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

DyckWord random_dyck_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pairs_dist(1, kRandomDyckMaxPairs);
  std::uniform_int_distribution<std::size_t> half_dist(1, kRandomDyckMaxLen / 2);
  const auto k = pairs_dist(rng);
  std::uniform_int_distribution<std::size_t> pair(1, k);
  std::bernoulli_distribution coin(0.5);
  DyckWord w;
  if (coin(rng)) {
    // arbitrary letters
    std::uniform_int_distribution<std::size_t> len(1, kRandomDyckMaxLen);
    for (auto n = len(rng); n > 0; --n) w.push_back({pair(rng), coin(rng) ? Side::open : Side::close});
    return w;
  }
  // well nested, then possibly one letter changed
  const auto half = half_dist(rng);
  std::vector<std::size_t> stack;
  std::size_t opened = 0;
  while (w.size() < 2 * half) {
    const bool open = opened < half && (stack.empty() || coin(rng));
    if (open) {
      stack.push_back(pair(rng));
      w.push_back(Bracket::open(stack.back()));
      ++opened;
    } else {
      w.push_back(Bracket::close(stack.back()));
      stack.pop_back();
    }
  }
  if (coin(rng)) {
    std::uniform_int_distribution<std::size_t> at(0, w.size() - 1);
    auto& b = w[at(rng)];
    if (coin(rng))
      b.pair = pair(rng);
    else
      b.side = b.side == Side::open ? Side::close : Side::open;
  }
  return w;
}

Outcome dyck_oracles() {
  std::size_t checked = 0;
  std::size_t members = 0;
  std::size_t disagreements = 0;
  auto check = [&](const DyckWord& w) {
    ++checked;
    const bool s = in_dk_stack(w);
    members += s;
    if (in_dk_lemma(w) != s && disagreements++ < 5)
      std::cout << "  disagreement: " << format_dyck_word(w) << '\n';
  };
  for (const auto& w : words_over(1, 12)) check(w);
  for (const auto& w : words_over(2, 8)) check(w);
  std::mt19937_64 rng(kCorpusSeed);
  for (std::size_t i = 0; i < kRandomDyckWords; ++i) check(random_dyck_word(rng));
  return {disagreements == 0, count_of(checked, "words") + " (" + count_of(members, "in D_k") +
                                  "), " + count_of(disagreements, "disagreements")};
}

Outcome traces_in_dyck() {
  std::size_t traces = 0;
  std::size_t failures = 0;
  for (const auto& item : corpus())
    for (const auto& t : trace_language(item.dyck.grammar, kTraceBound)) {
      ++traces;
      if (!in_dk_stack(t)) ++failures;
    }
  return {failures == 0, count_of(traces, "trace-words") + ", " + count_of(failures, "failures")};
}

Outcome characterization() {
  std::size_t failed = 0;
  std::size_t lines = 0;
  for (const auto& item : corpus()) {
    const auto report = verify_characterization(extend_grammar(item.dyck.grammar), kPhiBound);
    lines += report.missing.size() + report.extra.size();
    if (!report.passed) {
      ++failed;
      std::cout << "  " << item.name << ": " << report.text();
    }
  }
  return {failed == 0, count_of(corpus().size(), "grammars") + ", " + count_of(failed, "failed") +
                           ", " + count_of(lines, "MISSING/EXTRA lines")};
}

std::vector<Sentence> elin_words(const Grammar& g, std::mt19937_64& rng) {
  const auto& sigma = g.terminals();
  std::size_t exhaustive_len = 0;
  for (std::size_t total = 0, layer = 1;;) {
    layer *= sigma.size();
    if (total + layer > kElinExhaustive || exhaustive_len == kElinMaxLen) break;
    total += layer;
    ++exhaustive_len;
  }
  auto words = all_words(sigma, exhaustive_len);
  std::uniform_int_distribution<std::size_t> letter(0, sigma.size() - 1);
  for (auto len = exhaustive_len + 1; len <= kElinMaxLen; ++len)
    for (std::size_t i = 0; i < kElinSamplesPerLength; ++i) {
      if (auto w = sample_linear_member(g, len, rng)) {
        words.push_back(*w);
        std::uniform_int_distribution<std::size_t> at(0, len - 1);
        auto v = *w;
        v[at(rng)] = sigma[letter(rng)];
        words.push_back(v);
        auto u = *w;
        std::swap(u[at(rng)], u[at(rng)]);
        words.push_back(u);
      }
      Sentence r(len, ' ');
      for (auto& c : r) c = sigma[letter(rng)];
      words.push_back(std::move(r));
    }
  return words;
}

Outcome elin_correctness() {
  const auto elgs = elin_corpus();
  std::mt19937_64 rng(kCorpusSeed);
  std::size_t checked = 0;
  std::size_t accepted = 0;
  std::size_t disagreements = 0;
  bool has_anbn = false;
  for (const auto& e : elgs) {
    has_anbn |= serialize_grammar(e.grammar) == "start: S\nS -> 'a' S 'b' | 'c'\n";
    const auto conv = elin_to_dyck_nf(e.grammar);
    const auto cnf = to_cnf(e.grammar);
    for (const auto& w : elin_words(e.grammar, rng)) {
      ++checked;
      const bool cyk = member(cnf, w);
      accepted += cyk;
      if (recognize_atm(conv, w).accepted != cyk && disagreements++ < 5)
        std::cout << "  disagreement: " << e.name << " \"" << w << "\"\n";
    }
  }
  return {elgs.size() >= kMinElgs && has_anbn && disagreements == 0,
          count_of(elgs.size(), "grammars") + ", " + count_of(checked, "words") + " (" +
              count_of(accepted, "members") + "), " + count_of(disagreements, "disagreements")};
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

Outcome resource_accounting() {
  std::mt19937_64 rng(kCorpusSeed);
  std::size_t runs = 0;
  std::size_t depth_violations = 0;
  std::size_t cell_violations = 0;
  std::size_t cut_violations = 0;
  std::map<std::size_t, std::size_t> max_depth;
  std::map<std::size_t, std::size_t> max_cells;
  for (const auto& e : elin_corpus()) {
    const auto conv = elin_to_dyck_nf(e.grammar);
    const auto& sigma = e.grammar.terminals();
    std::uniform_int_distribution<std::size_t> letter(0, sigma.size() - 1);
    for (std::size_t n : {9, 17, 33, 65, 129}) {
      std::vector<Sentence> words;
      if (auto w = sample_linear_member(e.grammar, n, rng)) words.push_back(*w);
      Sentence r(n, ' ');
      for (auto& c : r) c = sigma[letter(rng)];
      words.push_back(std::move(r));
      for (const auto& w : words) {
        const auto t = recognize_atm(conv, w).trace;
        ++runs;
        depth_violations += t.alternation_depth > 8 * ceil_log2(n);
        cell_violations += t.work_tape_cells > 32 * ceil_log2(n);
        cut_violations += t.cutting_point_violations.size();
        max_depth[n] = std::max(max_depth[n], t.alternation_depth);
        max_cells[n] = std::max(max_cells[n], t.work_tape_cells);
      }
    }
  }
  std::string profile;
  for (const auto& [n, d] : max_depth)
    profile += " n=" + std::to_string(n) + ":depth " + std::to_string(d) + "/cells " +
               std::to_string(max_cells[n]);
  std::cout << "  resource profile:" << profile << '\n';

  std::size_t identity_failures = 0;
  std::size_t range_failures = 0;
  std::vector<std::uint64_t> long_chains;
  for (std::uint64_t p = 4; p <= kDivisionLimit; ++p) {
    const auto div = iterated_division(p);
    identity_failures += div.reconstruct() != p;
    const auto d = div.divisor;
    bool ranges = div.quotients.back() >= 1 && div.quotients.back() < d;
    for (auto r : div.remainders) ranges = ranges && r < d;
    range_failures += !ranges;
    // l < log2 p  <=>  2^l < p
    if ((std::uint64_t{1} << div.levels()) >= p) long_chains.push_back(p);
  }
  std::string chains;
  for (auto p : long_chains) chains += " p=" + std::to_string(p);
  if (!long_chains.empty()) std::cout << "  chain length not below log2 p at:" << chains << '\n';

  const bool ok = depth_violations == 0 && cell_violations == 0 && cut_violations == 0 &&
                  identity_failures == 0 && range_failures == 0 && long_chains.empty();
  return {ok, count_of(runs, "runs") + ", depth violations " + std::to_string(depth_violations) +
                  ", cell violations " + std::to_string(cell_violations) +
                  ", cutting-point violations " + std::to_string(cut_violations) +
                  ", reconstruction failures " + std::to_string(identity_failures) +
                  ", range failures " + std::to_string(range_failures) +
                  ", chains with l >= log2 p " + std::to_string(long_chains.size())};
}

Outcome elin_conversion() {
  std::size_t failures = 0;
  const auto elgs = elin_corpus();
  for (const auto& e : elgs) {
    const auto conv = elin_to_dyck_nf(e.grammar);
    const bool ok = is_dyck_nf(conv.grammar) && conv.partition.n3.empty() &&
                    enumerate_words(conv.grammar, kLanguageBound) ==
                        enumerate_words(e.grammar, kLanguageBound);
    if (!ok) {
      ++failures;
      std::cout << "  failed: " << e.name << '\n';
    }
  }
  return {failures == 0, count_of(elgs.size(), "grammars") + ", " + count_of(failures, "failures")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "golden conversion of the expression grammar", kGoldenSeconds, golden_conversion},
      {2, "language preservation over the corpus", kLanguageSeconds, language_preservation},
      {3, "CYK matrix equivalence", 0, equivalence_matrices},
      {4, "leftmost derivations have 2n-1 steps", 0, derivation_length},
      {5, "golden trace of a*a*a+a", 0, golden_trace},
      {6, "Dyck oracles agree", kDyckOracleSeconds, dyck_oracles},
      {7, "trace-words are Dyck words", 0, traces_in_dyck},
      {8, "bounded characterization", 0, characterization},
      {9, "even linear recognizer agrees with CYK", 0, elin_correctness},
      {10, "resource accounting", 0, resource_accounting},
      {11, "even linear conversion", 0, elin_conversion},
  };
  int only = 0;
  if (argc > 1) {
    try {
      only = std::stoi(argv[1]);
    } catch (const std::exception&) {
      std::cerr << "usage: acceptance [criterion-number]\n";
      return 2;
    }
  }

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto begin = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - begin;
    std::string timing = std::to_string(elapsed.count()).substr(0, 6) + " s";
    if (c.budget_seconds > 0) {
      const bool in_time = elapsed.count() < c.budget_seconds;
      timing += in_time ? " < " : " >= ";
      timing += std::to_string(static_cast<int>(c.budget_seconds)) + " s";
      o.passed = o.passed && in_time;
    }
    std::cout << "criterion " << c.id << ": " << (o.passed ? "PASS" : "FAIL") << " " << c.title
              << ": " << o.detail << " [" << timing << "]" << std::endl;
    failed += !o.passed;
  }
  return failed == 0 ? 0 : 1;
}
