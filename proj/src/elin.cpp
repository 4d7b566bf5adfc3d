#include "dycknf/elin.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <tuple>

#include "dycknf/cyk.hpp"
#include "dycknf/errors.hpp"
#include "dycknf/names.hpp"
#include "dycknf/predicates.hpp"

namespace dycknf {

bool is_even_linear(const Grammar& g) {
  for (const auto& r : g.rules()) {
    std::size_t nts = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < r.rhs.size(); ++i)
      if (r.rhs[i].is_nonterminal()) {
        ++nts;
        at = i;
      }
    if (nts > 1) return false;
    if (nts == 1 && at != r.rhs.size() - 1 - at) return false;
  }
  return true;
}

namespace {

Grammar normalize_even_linear(const Grammar& g, NameAllocator& names) {
  auto is_unit = [](const Rule& r) { return r.rhs.size() == 1 && r.rhs[0].is_nonterminal(); };
  std::vector<Rule> out;
  for (const auto& x : g.nonterminals()) {
    std::vector<std::string> reach{x};
    std::set<std::string> seen{x};
    for (std::size_t i = 0; i < reach.size(); ++i)
      for (auto r : g.rules_for(reach[i]))
        if (is_unit(g.rules()[r]) && seen.insert(g.rules()[r].rhs[0].name).second)
          reach.push_back(g.rules()[r].rhs[0].name);
    for (const auto& y : reach)
      for (auto r : g.rules_for(y)) {
        const auto& rhs = g.rules()[r].rhs;
        if (is_unit(g.rules()[r])) continue;
        // peel one terminal from each side per rule until one of the final shapes remains
        std::string cur = x;
        std::size_t lo = 0;
        std::size_t hi = rhs.size();
        while (true) {
          const auto len = hi - lo;
          const bool has_middle = std::any_of(rhs.begin() + static_cast<std::ptrdiff_t>(lo),
                                              rhs.begin() + static_cast<std::ptrdiff_t>(hi),
                                              [](const Symbol& s) { return s.is_nonterminal(); });
          if ((has_middle && len == 3) || (!has_middle && len <= 2)) {
            out.push_back(Rule{cur, {rhs.begin() + static_cast<std::ptrdiff_t>(lo),
                                     rhs.begin() + static_cast<std::ptrdiff_t>(hi)}});
            break;
          }
          const auto next = names.next(x, "_e");
          out.push_back(Rule{cur, {rhs[lo], Symbol::nonterminal(next), rhs[hi - 1]}});
          cur = next;
          ++lo;
          --hi;
        }
      }
  }

  std::string start = g.start();
  const bool start_in_middle = std::any_of(out.begin(), out.end(), [&](const Rule& r) {
    return r.rhs.size() == 3 && r.rhs[1].name == start;
  });
  if (start_in_middle) {
    const auto fresh = names.fresh(start + "0");
    std::vector<Rule> copies;
    for (const auto& r : out)
      if (r.lhs == start) copies.push_back(Rule{fresh, r.rhs});
    out.insert(out.begin(), copies.begin(), copies.end());
    start = fresh;
  }
  std::set<Rule> seen;
  std::vector<Rule> unique;
  for (auto& r : out)
    if (seen.insert(r).second) unique.push_back(std::move(r));
  return prune_useless(Grammar(start, std::move(unique)));
}

}  // namespace

ElinConversion elin_to_dyck_nf(const Grammar& g) {
  if (!is_even_linear(g)) throw PreconditionError("the grammar is not even linear");
  for (const auto& r : g.rules())
    if (r.is_empty()) throw PreconditionError("lambda-rule " + r.lhs + " -> eps is not supported");

  NameAllocator names(g);
  auto normalized = normalize_even_linear(g, names);
  for (const auto& nt : normalized.nonterminals()) names.reserve(nt);

  std::vector<Rule> rules;
  std::vector<Rule> helpers;
  for (const auto& r : normalized.rules()) {
    if (r.rhs.size() == 1) {
      rules.push_back(r);
      continue;
    }
    const auto a = names.next(r.lhs, "_l");
    const auto c = names.next(r.lhs, "_r");
    helpers.push_back(Rule{a, {r.rhs.front()}});
    helpers.push_back(Rule{c, {r.rhs.back()}});
    if (r.rhs.size() == 2) {
      rules.push_back(Rule{r.lhs, {Symbol::nonterminal(a), Symbol::nonterminal(c)}});
    } else {
      const auto b = names.next(r.lhs, "_m");
      rules.push_back(Rule{r.lhs, {Symbol::nonterminal(a), Symbol::nonterminal(b)}});
      helpers.push_back(Rule{b, {r.rhs[1], Symbol::nonterminal(c)}});
    }
  }
  rules.insert(rules.end(), helpers.begin(), helpers.end());
  const Grammar cnf(normalized.start(), group_by_lhs(std::move(rules)));

  auto [dyck, ledger] = to_dyck_nf(cnf);
  auto pairing = pairing_of(dyck);
  auto partition = partition_nonterminals(dyck, pairing);
  if (!partition.n3.empty()) throw Error("internal error: converted grammar has an n3 pair");
  return {std::move(normalized), std::move(dyck), std::move(pairing), std::move(partition),
          std::move(ledger)};
}

std::string to_string(TraceShape shape) {
  switch (shape) {
    case TraceShape::form_a:
      return "formA";
    case TraceShape::form_b:
      return "formB";
    case TraceShape::neither:
      break;
  }
  return "neither";
}

TraceShape trace_shape_check(const NonterminalPartition& partition, const DyckWord& t) {
  auto in = [](const std::vector<std::size_t>& set, std::size_t j) {
    return std::find(set.begin(), set.end(), j) != set.end();
  };
  auto closes = [&](std::size_t pos, std::size_t pair) {
    return pos < t.size() && t[pos] == Bracket::close(pair);
  };
  auto opens_in = [&](std::size_t pos, const std::vector<std::size_t>& set) {
    return pos < t.size() && t[pos].side == Side::open && in(set, t[pos].pair);
  };

  if (t.empty()) return TraceShape::form_a;
  std::size_t pos = 0;
  if (opens_in(0, partition.n1))
    return t.size() == 2 && closes(1, t[0].pair) ? TraceShape::form_a : TraceShape::neither;

  std::vector<std::size_t> pending;
  TraceShape shape = TraceShape::neither;
  while (true) {
    if (!opens_in(pos, partition.n2_left) || !closes(pos + 1, t[pos].pair))
      return TraceShape::neither;
    pos += 2;
    if (opens_in(pos, partition.n1)) {
      if (!closes(pos + 1, t[pos].pair)) return TraceShape::neither;
      pos += 2;
      shape = TraceShape::form_b;
      break;
    }
    if (!opens_in(pos, partition.n2_right)) return TraceShape::neither;
    pending.push_back(t[pos].pair);
    ++pos;
    if (opens_in(pos, partition.n1)) {
      if (!closes(pos + 1, t[pos].pair)) return TraceShape::neither;
      pos += 2;
      shape = TraceShape::form_a;
      break;
    }
  }
  for (auto it = pending.rbegin(); it != pending.rend(); ++it, ++pos)
    if (!closes(pos, *it)) return TraceShape::neither;
  return pos == t.size() ? shape : TraceShape::neither;
}

std::uint64_t IteratedDivision::reconstruct() const {
  if (quotients.empty()) return p;
  std::uint64_t x = quotients.back();
  for (auto it = remainders.rbegin(); it != remainders.rend(); ++it) x = x * divisor + *it;
  return x;
}

IteratedDivision iterated_division(std::uint64_t p) {
  if (p < 4) throw PreconditionError("iterated division needs p >= 4");
  IteratedDivision out;
  out.p = p;
  out.divisor = static_cast<std::uint64_t>(std::bit_width(p) - 1);
  for (auto q = p; q >= out.divisor;) {
    out.quotients.push_back(q / out.divisor);
    out.remainders.push_back(q % out.divisor);
    q /= out.divisor;
  }
  return out;
}

ElinIndex::ElinIndex(const ElinConversion& conversion)
    : grammar_(&conversion.grammar), pairing_(&conversion.pairing) {
  const auto& g = conversion.grammar;
  const auto& p = conversion.pairing;
  const auto k = p.size();
  left_char_.resize(k + 1);
  right_char_.resize(k + 1);
  right_children_.resize(k + 1);
  left_children_.resize(k + 1);

  auto terminal_of = [&](const std::string& nt) -> std::optional<char> {
    for (auto r : g.rules_for(nt))
      if (g.rules()[r].is_terminal()) return g.rules()[r].rhs[0].terminal_char();
    return std::nullopt;
  };
  auto children = [&](const std::string& nt) {
    std::vector<std::size_t> out;
    for (auto r : g.rules_for(nt))
      if (g.rules()[r].is_binary()) out.push_back(p.bracket_of(g.rules()[r].rhs[0].name)->pair);
    return out;
  };
  for (std::size_t j = 1; j <= k; ++j) {
    left_char_[j] = terminal_of(p.pair(j).left);
    right_char_[j] = terminal_of(p.pair(j).right);
    right_children_[j] = children(p.pair(j).right);
    left_children_[j] = children(p.pair(j).left);
    if (left_char_[j]) by_left_char_[*left_char_[j]].push_back(j);
  }
  start_pairs_ = children(g.start());
  for (auto r : g.rules_for(g.start()))
    if (g.rules()[r].is_terminal()) start_terminals_.push_back(g.rules()[r].rhs[0].terminal_char());
}

const std::vector<std::size_t>& ElinIndex::left_terminal(char c) const {
  static const std::vector<std::size_t> none;
  auto it = by_left_char_.find(c);
  return it == by_left_char_.end() ? none : it->second;
}

bool ElinIndex::start_rewrites_to(std::size_t j) const {
  return std::find(start_pairs_.begin(), start_pairs_.end(), j) != start_pairs_.end();
}

bool ElinIndex::start_derives(char c) const {
  return std::find(start_terminals_.begin(), start_terminals_.end(), c) != start_terminals_.end();
}

namespace {

std::size_t guessed_positions(std::size_t n) { return n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2; }

bool links(const ElinIndex& index, const Sentence& w, std::size_t k, std::size_t jk,
           std::size_t jk1) {
  const auto n = w.size();
  if (index.left_char(jk) != w[k - 1] || index.left_char(jk1) != w[k]) return false;
  for (auto i : index.inner_of_right(jk)) {
    if (index.right_char(i) != w[n - k]) continue;
    const auto& inner = index.inner_of_left(i);
    if (std::find(inner.begin(), inner.end(), jk1) != inner.end()) return true;
  }
  return false;
}

}  // namespace

bool local_check(const ElinIndex& index, const Sentence& w, std::size_t k, std::size_t jk,
                 std::size_t jk1) {
  const auto m = guessed_positions(w.size());
  if (w.empty() || k < 1 || k >= m) throw PreconditionError("position out of range");
  const auto pairs = index.pairing().size();
  if (jk < 1 || jk > pairs || jk1 < 1 || jk1 > pairs)
    throw PreconditionError("pair index out of range");
  return links(index, w, k, jk, jk1);
}

namespace {

constexpr std::size_t kRoot = 0;
constexpr std::size_t kNodeLogCap = 2000;

class Recognizer {
 public:
  Recognizer(const ElinIndex& index, const Sentence& w, AlternationTrace& trace)
      : index_(index), w_(w), n_(w.size()), m_(guessed_positions(w.size())), trace_(trace) {
    trace_.division = iterated_division(m_);
    d_ = trace_.division.divisor;
    levels_ = trace_.division.levels();
    candidates_.resize(m_ + 1);
    for (std::size_t k = 1; k <= m_; ++k) candidates_[k] = index_.left_terminal(w_[k - 1]);
  }

  bool run() {
    check_cutting_points();
    // Level 1 guesses the innermost bracket together with the first cutting points.
    std::vector<std::size_t> centers;
    for (auto b : candidates_[m_])
      if (center(b)) centers.push_back(b);
    log("top exists center bracket", Quantifier::existential, centers.size(), 1);
    for (auto b : centers)
      if (segment(1, 0, m_, kRoot, b)) return true;
    return false;
  }

  std::size_t structural_depth() const { return 2 * levels_ + 2; }

  std::size_t work_tape_cells() const {
    const auto bits = static_cast<std::size_t>(std::bit_width(n_));  // ceil(log2(n + 1))
    return 8 * bits + static_cast<std::size_t>(d_) + 2;
  }

 private:
  void log(std::string label, Quantifier kind, std::uint64_t branches, std::size_t depth) {
    ++trace_.nodes_evaluated;
    if (trace_.nodes.size() < kNodeLogCap)
      trace_.nodes.push_back({std::move(label), kind, branches, depth});
  }

  bool link(std::size_t k, std::size_t a, std::size_t b) const {
    if (k == 0) return index_.start_rewrites_to(b) && index_.left_char(b) == w_[0];
    return links(index_, w_, k, a, b);
  }

  // innermost checks at position m
  bool center(std::size_t b) const {
    const auto m = m_;
    if (n_ % 2 == 1) {
      for (auto c : index_.inner_of_right(b))
        if (index_.left_char(c) == w_[m] && index_.right_char(c) == w_[m + 1]) return true;
      return false;
    }
    for (auto i : index_.inner_of_right(b)) {
      if (index_.right_char(i) != w_[m + 2]) continue;
      for (auto t : index_.inner_of_left(i))
        if (index_.left_char(t) == w_[m] && index_.right_char(t) == w_[m + 1]) return true;
    }
    return false;
  }

  std::uint64_t tuple_count(std::size_t from, std::size_t to, std::size_t step) const {
    std::uint64_t total = 1;
    for (auto k = from; k <= to && k <= m_; k += step) {
      const auto c = std::max<std::uint64_t>(candidates_[k].size(), 1);
      total = total > std::numeric_limits<std::uint64_t>::max() / c
                  ? std::numeric_limits<std::uint64_t>::max()
                  : total * c;
    }
    return total;
  }

  // Leaf process: guess every bracket strictly inside (s, s + len), then check each link.
  bool leaf(std::size_t s, std::size_t len, std::size_t bl, std::size_t br, std::size_t depth) {
    const auto key = std::make_tuple(std::size_t{0}, s, len, bl, br);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    log("leaf exists tuple", Quantifier::existential,
        len > 1 ? tuple_count(s + 1, s + len - 1, 1) : 1, depth);
    log("leaf forall links", Quantifier::universal, len, depth + 1);
    std::vector<std::size_t> reach{bl};
    for (auto pos = s + 1; pos < s + len && !reach.empty(); ++pos) {
      std::vector<std::size_t> next;
      for (auto b : candidates_[pos])
        if (std::any_of(reach.begin(), reach.end(), [&](auto a) { return link(pos - 1, a, b); }))
          next.push_back(b);
      reach = std::move(next);
    }
    const bool ok = std::any_of(reach.begin(), reach.end(),
                                [&](auto a) { return link(s + len - 1, a, br); });
    memo_.emplace(key, ok);
    return ok;
  }

  // A segment of Q_(l-1) links: remainder of R_l links, then d intervals of Q_l links.
  bool segment(std::size_t level, std::size_t s, std::size_t len, std::size_t bl, std::size_t br) {
    const auto depth = 2 * level - 1;
    if (level > levels_) return leaf(s, len, bl, br, depth);
    const auto key = std::make_tuple(level, s, len, bl, br);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto r = static_cast<std::size_t>(trace_.division.remainders[level - 1]);
    const auto q = static_cast<std::size_t>(trace_.division.quotients[level - 1]);
    const auto c0 = s + r;
    log("level " + std::to_string(depth) + " exists cutting points", Quantifier::existential,
        tuple_count(c0, s + len - 1, q), depth);
    log("level " + std::to_string(depth + 1) + " forall processes", Quantifier::universal,
        d_ + (r > 0 ? 1 : 0), depth + 1);

    std::vector<std::size_t> reach;
    if (r == 0) {
      reach.push_back(bl);
    } else {
      for (auto b : candidates_[c0])
        if (leaf(s, r, bl, b, depth + 2)) reach.push_back(b);
      ++trace_.deferred_resolved;
    }
    bool ok = false;
    for (std::size_t u = 0; u < d_ && !reach.empty(); ++u) {
      const auto from = c0 + u * q;
      if (u + 1 == d_) {
        ok = std::any_of(reach.begin(), reach.end(),
                         [&](auto a) { return segment(level + 1, from, q, a, br); });
        break;
      }
      std::vector<std::size_t> next;
      for (auto b : candidates_[from + q])
        if (std::any_of(reach.begin(), reach.end(),
                        [&](auto a) { return segment(level + 1, from, q, a, b); }))
          next.push_back(b);
      reach = std::move(next);
    }
    memo_.emplace(key, ok);
    return ok;
  }

  // Compares the closed-form cutting point with the recursive layout on every
  // interval path, and checks that the last interval ends at its parent's edge.
  void check_cutting_points() {
    const auto& div = trace_.division;
    std::vector<std::size_t> path;
    auto walk = [&](auto&& self, std::size_t level, std::size_t s, std::size_t len) -> void {
      if (level > levels_) return;
      const auto r = div.remainders[level - 1];
      const auto q = div.quotients[level - 1];
      for (std::size_t u = 0; u < d_; ++u) {
        path.push_back(u);
        const auto right_edge = s + r + (u + 1) * q;
        std::uint64_t formula = 0;
        for (std::size_t l = 1; l <= level; ++l) formula += div.remainders[l - 1];
        for (std::size_t l = 1; l < level; ++l) formula += path[l - 1] * div.quotients[l - 1];
        formula += (u + 1) * q;
        ++trace_.cutting_point_checks;
        std::string where = "level " + std::to_string(level) + " interval " + std::to_string(u);
        if (formula != right_edge)
          trace_.cutting_point_violations.push_back(where + ": formula " + std::to_string(formula) +
                                                    " != edge " + std::to_string(right_edge));
        if (u + 1 == d_ && right_edge != s + len)
          trace_.cutting_point_violations.push_back(where + ": last interval ends at " +
                                                    std::to_string(right_edge) + ", not " +
                                                    std::to_string(s + len));
        if (right_edge > m_)
          trace_.cutting_point_violations.push_back(where + ": edge beyond the word");
        self(self, level + 1, s + r + u * q, q);
        path.pop_back();
      }
    };
    walk(walk, 1, 0, m_);
  }

  const ElinIndex& index_;
  const Sentence& w_;
  std::size_t n_;
  std::size_t m_;
  AlternationTrace& trace_;
  std::size_t d_ = 0;
  std::size_t levels_ = 0;
  std::vector<std::vector<std::size_t>> candidates_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>, bool> memo_;
};

}  // namespace

RecognitionResult recognize_atm(const ElinConversion& conversion, const Sentence& w) {
  if (!is_dyck_nf(conversion.grammar) || !conversion.partition.n3.empty())
    throw PreconditionError("recognition needs a converted even linear grammar");
  if (w.empty()) throw PreconditionError("empty word");
  for (char c : w)
    if (!conversion.grammar.has_terminal(c))
      throw PreconditionError(std::string("symbol '") + c + "' is not a terminal of the grammar");

  RecognitionResult result;
  auto& trace = result.trace;
  trace.n = w.size();
  trace.p = guessed_positions(w.size());
  if (trace.p < 4) {
    trace.base_case = true;
    result.accepted = member(conversion.grammar, w);
    return result;
  }
  const ElinIndex index(conversion);
  Recognizer recognizer(index, w, trace);
  result.accepted = recognizer.run();
  trace.alternation_depth = recognizer.structural_depth();
  trace.work_tape_cells = recognizer.work_tape_cells();
  return result;
}

std::string format_recognition_report(const RecognitionResult& result) {
  const auto& t = result.trace;
  std::string out = std::string("verdict: ") + (result.accepted ? "accept" : "reject") + '\n';
  out += "n: " + std::to_string(t.n) + '\n';
  out += "p: " + std::to_string(t.p) + '\n';
  if (t.base_case) {
    out += "base case: decided by CYK\nalternation depth: 0\n";
    return out;
  }
  out += "d: " + std::to_string(t.division.divisor) + '\n';
  out += "levels: " + std::to_string(t.division.levels()) + '\n';
  out += "chain:";
  for (std::size_t l = 0; l < t.division.levels(); ++l)
    out += " (Q" + std::to_string(l + 1) + "=" + std::to_string(t.division.quotients[l]) + ", R" +
           std::to_string(l + 1) + "=" + std::to_string(t.division.remainders[l]) + ")";
  out += '\n';
  out += "alternation depth: " + std::to_string(t.alternation_depth) + '\n';
  out += "work-tape cells: " + std::to_string(t.work_tape_cells) + '\n';
  out += "nodes evaluated: " + std::to_string(t.nodes_evaluated) + '\n';
  out += "cutting points checked: " + std::to_string(t.cutting_point_checks) +
         ", violations: " + std::to_string(t.cutting_point_violations.size()) + '\n';
  for (const auto& v : t.cutting_point_violations) out += "VIOLATION " + v + '\n';
  return out;
}

}  // namespace dycknf
