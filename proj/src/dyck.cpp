#include "dycknf/dyck.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dycknf/cyk.hpp"
#include "dycknf/enumerate.hpp"
#include "dycknf/errors.hpp"
#include "dycknf/predicates.hpp"

namespace dycknf {

DyckWord parse_dyck_word(std::string_view text) {
  DyckWord out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const auto column = pos + 1;
    const char c = text[pos];
    if (c != '[' && c != ']') throw ParseError("expected '[' or ']'", 1, column);
    ++pos;
    std::size_t index = 0;
    const auto digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (index > 1'000'000) throw ParseError("pair index too large", 1, column);
      ++pos;
    }
    if (pos == digits || index == 0) throw ParseError("expected a pair index >= 1", 1, column);
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected whitespace between letters", 1, pos + 1);
    out.push_back({index, c == '[' ? Side::open : Side::close});
  }
  return out;
}

std::string format_dyck_word(const DyckWord& w) {
  std::string out;
  for (const auto& b : w) {
    if (!out.empty()) out += ' ';
    out += b.side == Side::open ? '[' : ']';
    out += std::to_string(b.pair);
  }
  return out;
}

bool dyck_word_less(const DyckWord& a, const DyckWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

BracketPairing::BracketPairing(std::string start, std::vector<Pair> pairs,
                               std::vector<std::string> unpaired)
    : start_(std::move(start)), pairs_(std::move(pairs)), unpaired_(std::move(unpaired)) {}

const BracketPairing::Pair& BracketPairing::pair(std::size_t index) const {
  if (index < 1 || index > pairs_.size()) throw PreconditionError("pair index out of range");
  return pairs_[index - 1];
}

std::optional<Bracket> BracketPairing::bracket_of(std::string_view nonterminal) const {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].left == nonterminal) return Bracket::open(i + 1);
    if (pairs_[i].right == nonterminal) return Bracket::close(i + 1);
  }
  return std::nullopt;
}

const std::string& BracketPairing::name_of(Bracket b) const {
  const auto& p = pair(b.pair);
  return b.side == Side::open ? p.left : p.right;
}

BracketPairing BracketPairing::with_pair(Pair p) const {
  auto copy = *this;
  copy.pairs_.push_back(std::move(p));
  return copy;
}

BracketPairing pairing_of(const Grammar& g) {
  if (!is_dyck_nf(g)) throw PreconditionError("bracket pairing needs a Dyck normal form grammar");
  std::vector<BracketPairing::Pair> pairs;
  std::set<std::string> seen;
  for (const auto& r : g.rules()) {
    if (!r.is_binary() || seen.contains(r.rhs[0].name)) continue;
    seen.insert(r.rhs[0].name);
    seen.insert(r.rhs[1].name);
    pairs.push_back({r.rhs[0].name, r.rhs[1].name});
  }
  std::vector<std::string> unpaired;
  for (const auto& nt : g.nonterminals())
    if (nt != g.start() && !seen.contains(nt)) unpaired.push_back(nt);
  return BracketPairing(g.start(), std::move(pairs), std::move(unpaired));
}

namespace {

Bracket letter_for(const BracketPairing& pairing, const std::string& name) {
  auto b = pairing.bracket_of(name);
  if (!b) throw PreconditionError(name + " has no bracket in the pairing");
  return *b;
}

void check_length(const DerivationTree& tree) {
  if (tree.children.size() == 1 && tree.children[0].is_leaf())
    throw DerivationTooShort("trace-words need a derivation of at least three steps");
}

void depth_first(const BracketPairing& pairing, const DerivationTree& node, DyckWord& out) {
  for (const auto& c : node.children) {
    if (c.is_leaf()) continue;
    out.push_back(letter_for(pairing, c.label.name));
    depth_first(pairing, c, out);
  }
}

}  // namespace

DyckWord trace_word(const BracketPairing& pairing, const DerivationTree& tree) {
  check_length(tree);
  DyckWord out;
  depth_first(pairing, tree, out);
  return out;
}

DyckWord trace_word(const Grammar& g, const DerivationTree& tree) {
  return trace_word(pairing_of(g), tree);
}

DyckWord trace_word_by_rewriting(const BracketPairing& pairing, const DerivationTree& tree) {
  check_length(tree);
  // sentential form as pointers into the tree; terminals stay in place
  std::vector<const DerivationTree*> form{&tree};
  DyckWord out;
  while (true) {
    auto it = std::find_if(form.begin(), form.end(),
                           [](const DerivationTree* n) { return !n->is_leaf(); });
    if (it == form.end()) break;
    const auto* node = *it;
    if (node != &tree) out.push_back(letter_for(pairing, node->label.name));
    std::vector<const DerivationTree*> children;
    for (const auto& c : node->children) children.push_back(&c);
    it = form.erase(it);
    form.insert(it, children.begin(), children.end());
  }
  return out;
}

std::string format_trace(const BracketPairing& pairing, const DyckWord& w) {
  std::string out;
  for (const auto& b : w) {
    if (!out.empty()) out += ' ';
    out += b.side == Side::open ? '[' : ']';
    out += pairing.name_of(b);
  }
  return out;
}

DyckWord project_h(const DyckWord& w) {
  DyckWord out;
  out.reserve(w.size());
  for (const auto& b : w) out.push_back({1, b.side});
  return out;
}

DyckWord project_hk(const DyckWord& w, std::size_t k_prime, std::size_t alphabet_size) {
  if (k_prime == 0 || (alphabet_size != 0 && k_prime > alphabet_size))
    throw PreconditionError("projection index out of range");
  DyckWord out;
  for (const auto& b : w)
    if (b.pair == k_prime) out.push_back({1, b.side});
  return out;
}

bool is_balanced(const DyckWord& w) {
  long depth = 0;
  for (const auto& b : w) {
    if (b.pair != 1) throw PreconditionError("is_balanced takes a word over one bracket pair");
    depth += b.side == Side::open ? 1 : -1;
    if (depth < 0) return false;
  }
  return depth == 0;
}

namespace {

void check_positions(const DyckWord& w, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > w.size()) throw PreconditionError("position out of range");
}

DyckWord slice(const DyckWord& w, std::size_t i, std::size_t j) {
  return DyckWord(w.begin() + static_cast<std::ptrdiff_t>(i - 1),
                  w.begin() + static_cast<std::ptrdiff_t>(j));
}

}  // namespace

bool is_matched_pair(const DyckWord& w, std::size_t i, std::size_t j) {
  check_positions(w, i, j);
  return is_balanced(project_h(slice(w, i, j)));
}

bool is_nested_pair(const DyckWord& w, std::size_t i, std::size_t j) {
  if (!is_matched_pair(w, i, j)) return false;
  return j == i + 1 || (i + 1 <= j - 1 && is_matched_pair(w, i + 1, j - 1));
}

bool is_reducible_pair(const DyckWord& w, std::size_t i, std::size_t j) {
  if (!is_matched_pair(w, i, j)) throw PreconditionError("(i, j) is not a matched pair");
  for (std::size_t jp = i + 1; jp < j; ++jp)
    if (is_matched_pair(w, i, jp) && is_matched_pair(w, jp + 1, j)) return true;
  return false;
}

bool in_dk_lemma(const DyckWord& w) {
  const auto n = w.size();
  if (n == 0) return false;
  std::size_t k = 0;
  for (const auto& b : w) k = std::max(k, b.pair);

  bool whole_matched = false;
  std::vector<long> depth(k + 1);
  std::vector<bool> dipped(k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    long h = 0;
    std::fill(depth.begin(), depth.end(), 0);
    std::fill(dipped.begin(), dipped.end(), false);
    for (std::size_t j = i; j < n; ++j) {
      const auto delta = w[j].side == Side::open ? 1 : -1;
      h += delta;
      if (h < 0) break;  // no (i, j') with j' >= j can be matched
      depth[w[j].pair] += delta;
      if (depth[w[j].pair] < 0) dipped[w[j].pair] = true;
      if (h != 0) continue;
      if (i == 0 && j == n - 1) whole_matched = true;
      for (std::size_t kp = 1; kp <= k; ++kp)
        if (dipped[kp] || depth[kp] != 0) return false;
    }
  }
  return whole_matched;
}

bool in_dk_stack(const DyckWord& w) {
  if (w.empty()) return false;
  std::vector<std::size_t> stack;
  for (const auto& b : w) {
    if (b.side == Side::open) {
      stack.push_back(b.pair);
    } else {
      if (stack.empty() || stack.back() != b.pair) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

std::vector<DyckWord> trace_language(const Grammar& g, std::size_t max_len,
                                     const TraceLanguageOptions& options) {
  const auto pairing = pairing_of(g);
  std::set<DyckWord, decltype(&dyck_word_less)> traces(&dyck_word_less);
  for (const auto& w : enumerate_words(g, max_len))
    for (const auto& tree : all_trees(g, w, options.max_trees_per_word)) {
      if (tree.children.size() == 1) continue;  // one-step derivation, no trace
      traces.insert(trace_word(pairing, tree));
    }
  return {traces.begin(), traces.end()};
}

}  // namespace dycknf
