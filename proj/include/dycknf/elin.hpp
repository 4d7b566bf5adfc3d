#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dycknf/dyck.hpp"
#include "dycknf/grammar.hpp"
#include "dycknf/normal_forms.hpp"
#include "dycknf/phi.hpp"

namespace dycknf {

/// Every rule is X -> t1 Y t2 with |t1| = |t2|, or X -> t.
bool is_even_linear(const Grammar& g);

struct ElinConversion {
  Grammar normalized;  // rules X -> a Y b, X -> a b, X -> a
  Grammar grammar;     // Dyck normal form
  BracketPairing pairing;
  NonterminalPartition partition;
  SubstitutionLedger ledger;
};

/// Normalizes to X -> a Y b | a b | a, binarizes each X -> a Y b as
/// X -> A B, A -> a, B -> Y C, C -> b (and X -> a b as X -> A C), then runs
/// the Dyck normal form conversion. Every binary rule then has a child that
/// rewrites to a terminal, so no pair lands in n3. Throws PreconditionError
/// for grammars that are not even linear or contain lambda-rules.
ElinConversion elin_to_dyck_nf(const Grammar& g);

enum class TraceShape : std::uint8_t { form_a, form_b, neither };

/// Trace templates of the converted grammars. A chain of [j ]j [i ... ]i
/// levels with j in n2_left and i in n2_right ends either in an n1 pair
/// nested directly in an [i (form A, even length) or in an n1 pair right after
/// an n2_left pair (form B, odd length). The empty trace is form A.
TraceShape trace_shape_check(const NonterminalPartition& partition, const DyckWord& t);
std::string to_string(TraceShape shape);

/// Repeated division of p by d = floor(log2 p): Q_l = Q_(l-1) div d,
/// R_l = Q_(l-1) mod d, Q_0 = p, until the quotient falls below d.
struct IteratedDivision {
  std::uint64_t p = 0;
  std::uint64_t divisor = 0;
  std::vector<std::uint64_t> quotients;   // Q_1 .. Q_l
  std::vector<std::uint64_t> remainders;  // R_1 .. R_l

  std::size_t levels() const noexcept { return quotients.size(); }
  /// ((Q_l d + R_l) d + R_(l-1)) d + ... + R_1
  std::uint64_t reconstruct() const;
};

/// Requires p >= 4.
IteratedDivision iterated_division(std::uint64_t p);

/// Rule lookups of a converted grammar, by pair index.
class ElinIndex {
 public:
  explicit ElinIndex(const ElinConversion& conversion);

  const Grammar& grammar() const noexcept { return *grammar_; }
  const BracketPairing& pairing() const noexcept { return *pairing_; }

  /// Pairs j with [j -> c.
  const std::vector<std::size_t>& left_terminal(char c) const;
  /// Pairs i with ]j -> [i ]i.
  const std::vector<std::size_t>& inner_of_right(std::size_t j) const { return right_children_[j]; }
  /// Pairs j' with [i -> [j' ]j'.
  const std::vector<std::size_t>& inner_of_left(std::size_t i) const { return left_children_[i]; }
  std::optional<char> left_char(std::size_t j) const { return left_char_[j]; }
  std::optional<char> right_char(std::size_t j) const { return right_char_[j]; }
  bool start_rewrites_to(std::size_t j) const;
  bool start_derives(char c) const;

 private:
  const Grammar* grammar_;
  const BracketPairing* pairing_;
  std::vector<std::optional<char>> left_char_;
  std::vector<std::optional<char>> right_char_;
  std::vector<std::vector<std::size_t>> right_children_;
  std::vector<std::vector<std::size_t>> left_children_;
  std::vector<std::size_t> start_pairs_;
  std::vector<char> start_terminals_;
  std::map<char, std::vector<std::size_t>> by_left_char_;
};

/// The five rule conditions linking guessed left brackets j_k and j_(k+1):
/// [j_k -> a_k, [j_(k+1) -> a_(k+1), ]j_k -> [i ]i, [i -> [j_(k+1) ]j_(k+1),
/// ]i -> a_(n+1-k) for some i. Positions are 1-based with 1 <= k < m, where
/// m = (n-1)/2 for odd n and (n-2)/2 for even n.
bool local_check(const ElinIndex& index, const Sentence& w, std::size_t k, std::size_t jk,
                 std::size_t jk1);

enum class Quantifier : std::uint8_t { existential, universal };

struct AlternationNode {
  std::string level;
  Quantifier kind = Quantifier::existential;
  std::uint64_t branches = 0;
  std::size_t depth = 0;
};

struct AlternationTrace {
  bool base_case = false;
  std::size_t n = 0;
  std::size_t p = 0;  // guessed positions
  IteratedDivision division;
  std::vector<AlternationNode> nodes;  // evaluated nodes, capped
  std::size_t nodes_evaluated = 0;
  std::size_t alternation_depth = 0;  // quantifier blocks on the deepest path
  std::size_t work_tape_cells = 0;
  std::size_t deferred_resolved = 0;  // remainder verdicts settled by their parent
  std::size_t cutting_point_checks = 0;
  std::vector<std::string> cutting_point_violations;
};

struct RecognitionResult {
  bool accepted = false;
  AlternationTrace trace;
};

/// Divide-and-conquer recognizer over the chain of guessed left brackets.
/// Words with fewer than four guessed positions go to CYK. Throws
/// PreconditionError when the grammar is not a converted even linear grammar.
RecognitionResult recognize_atm(const ElinConversion& conversion, const Sentence& w);

/// Verdict, n, p, d, the (Q_l, R_l) chain, alternation depth and space.
std::string format_recognition_report(const RecognitionResult& result);

}  // namespace dycknf
