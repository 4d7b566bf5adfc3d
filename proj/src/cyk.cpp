#include "dycknf/cyk.hpp"

#include <limits>
#include <map>
#include <tuple>

#include "dycknf/errors.hpp"
#include "dycknf/predicates.hpp"

namespace dycknf {

namespace {

struct BinaryRule {
  std::size_t lhs;
  std::size_t left;
  std::size_t right;
};

struct CompiledCnf {
  std::vector<BinaryRule> binary;                            // declaration order
  std::map<char, std::vector<std::size_t>> terminal_lhs;     // declaration order
  std::vector<std::vector<std::size_t>> binary_by_lhs;       // indices into binary
};

CompiledCnf compile(const Grammar& g) {
  if (!is_cnf(g)) throw PreconditionError("CYK needs a grammar in Chomsky normal form");
  CompiledCnf out;
  out.binary_by_lhs.resize(g.nonterminals().size());
  for (const auto& rule : g.rules()) {
    const auto lhs = *g.nonterminal_index(rule.lhs);
    if (rule.is_terminal()) {
      out.terminal_lhs[rule.rhs[0].terminal_char()].push_back(lhs);
    } else {
      out.binary_by_lhs[lhs].push_back(out.binary.size());
      out.binary.push_back({lhs, *g.nonterminal_index(rule.rhs[0].name),
                            *g.nonterminal_index(rule.rhs[1].name)});
    }
  }
  return out;
}

}  // namespace

class CykAccess {
 public:
  static bool has(const CykTable& t, std::size_t i, std::size_t j, std::size_t nt) {
    return t.cells_[t.index(i, j)][nt] != 0;
  }
};

std::vector<std::string> CykTable::cell(std::size_t i, std::size_t j) const {
  if (i < 1 || j > n_ || i > j) throw PreconditionError("CYK cell index out of range");
  std::vector<std::string> out;
  const auto& flags = cells_[index(i, j)];
  for (std::size_t a = 0; a < flags.size(); ++a)
    if (flags[a]) out.push_back(names_[a]);
  return out;
}

bool CykTable::contains(std::size_t i, std::size_t j, const std::string& nonterminal) const {
  for (std::size_t a = 0; a < names_.size(); ++a)
    if (names_[a] == nonterminal) return cells_[index(i, j)][a] != 0;
  return false;
}

CykTable build_table(const Grammar& g, const Sentence& w) {
  if (w.empty()) throw PreconditionError("CYK needs a nonempty word");
  for (char c : w)
    if (!g.has_terminal(c))
      throw PreconditionError(std::string("symbol '") + c + "' is not a terminal of the grammar");
  const auto compiled = compile(g);

  CykTable t;
  t.n_ = w.size();
  t.word_ = w;
  t.names_ = g.nonterminals();
  const auto nts = t.names_.size();
  t.cells_.assign(t.n_ * t.n_, std::vector<std::uint8_t>(nts, 0));

  for (std::size_t i = 1; i <= t.n_; ++i) {
    auto it = compiled.terminal_lhs.find(w[i - 1]);
    if (it == compiled.terminal_lhs.end()) continue;
    for (auto a : it->second) t.cells_[t.index(i, i)][a] = 1;
  }
  for (std::size_t span = 2; span <= t.n_; ++span) {
    for (std::size_t i = 1; i + span - 1 <= t.n_; ++i) {
      const auto j = i + span - 1;
      auto& cell = t.cells_[t.index(i, j)];
      for (std::size_t l = i; l < j; ++l) {
        const auto& left = t.cells_[t.index(i, l)];
        const auto& right = t.cells_[t.index(l + 1, j)];
        for (const auto& r : compiled.binary)
          if (left[r.left] && right[r.right]) cell[r.lhs] = 1;
      }
    }
  }
  return t;
}

bool member(const Grammar& g, const Sentence& w) {
  const auto t = build_table(g, w);
  return t.contains(1, w.size(), g.start());
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const Grammar& g, const Sentence& w)
      : g_(g), w_(w), compiled_(compile(g)), table_(build_table(g, w)) {}

  const CykTable& table() const { return table_; }

  DerivationTree canonical(std::size_t a, std::size_t i, std::size_t j) const {
    const auto& name = g_.nonterminals()[a];
    if (i == j) return DerivationTree::node(name, {DerivationTree::leaf(w_[i - 1])});
    for (std::size_t l = i; l < j; ++l)
      for (auto r : compiled_.binary_by_lhs[a]) {
        const auto& rule = compiled_.binary[r];
        if (CykAccess::has(table_, i, l, rule.left) && CykAccess::has(table_, l + 1, j, rule.right))
          return DerivationTree::node(name, {canonical(rule.left, i, l),
                                             canonical(rule.right, l + 1, j)});
      }
    throw PreconditionError("inconsistent CYK table");
  }

  std::uint64_t count(std::size_t a, std::size_t i, std::size_t j) {
    if (!CykAccess::has(table_, i, j, a)) return 0;
    if (i == j) return 1;
    const auto key = std::make_tuple(a, i, j);
    if (auto it = counts_.find(key); it != counts_.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t l = i; l < j; ++l)
      for (auto r : compiled_.binary_by_lhs[a]) {
        const auto& rule = compiled_.binary[r];
        const auto left = count(rule.left, i, l);
        if (left == 0) continue;
        const auto right = count(rule.right, l + 1, j);
        total = saturating_add(total, saturating_mul(left, right));
      }
    counts_[key] = total;
    return total;
  }

  const std::vector<DerivationTree>& trees(std::size_t a, std::size_t i, std::size_t j) {
    const auto key = std::make_tuple(a, i, j);
    if (auto it = trees_.find(key); it != trees_.end()) return it->second;
    std::vector<DerivationTree> out;
    const auto& name = g_.nonterminals()[a];
    if (i == j) {
      out.push_back(DerivationTree::node(name, {DerivationTree::leaf(w_[i - 1])}));
    } else {
      for (std::size_t l = i; l < j; ++l)
        for (auto r : compiled_.binary_by_lhs[a]) {
          const auto& rule = compiled_.binary[r];
          if (!CykAccess::has(table_, i, l, rule.left) ||
              !CykAccess::has(table_, l + 1, j, rule.right))
            continue;
          const auto& lefts = trees(rule.left, i, l);
          const auto& rights = trees(rule.right, l + 1, j);
          for (const auto& lt : lefts)
            for (const auto& rt : rights) out.push_back(DerivationTree::node(name, {lt, rt}));
        }
    }
    return trees_.emplace(key, std::move(out)).first->second;
  }

 private:
  static std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b
               ? std::numeric_limits<std::uint64_t>::max()
               : a + b;
  }
  static std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
      return std::numeric_limits<std::uint64_t>::max();
    return a * b;
  }

  const Grammar& g_;
  const Sentence& w_;
  CompiledCnf compiled_;
  CykTable table_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::uint64_t> counts_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<DerivationTree>> trees_;
};

}  // namespace

DerivationTree extract_tree(const Grammar& g, const Sentence& w) {
  TreeBuilder builder(g, w);
  const auto start = *g.nonterminal_index(g.start());
  if (!CykAccess::has(builder.table(), 1, w.size(), start))
    throw PreconditionError("'" + w + "' is not a member of the language");
  return builder.canonical(start, 1, w.size());
}

std::uint64_t count_trees(const Grammar& g, const Sentence& w) {
  TreeBuilder builder(g, w);
  return builder.count(*g.nonterminal_index(g.start()), 1, w.size());
}

std::vector<DerivationTree> all_trees(const Grammar& g, const Sentence& w, std::size_t max_trees) {
  TreeBuilder builder(g, w);
  const auto start = *g.nonterminal_index(g.start());
  if (builder.count(start, 1, w.size()) > max_trees)
    throw ResourceLimitError("more than " + std::to_string(max_trees) + " derivation trees");
  if (!CykAccess::has(builder.table(), 1, w.size(), start)) return {};
  return builder.trees(start, 1, w.size());
}

std::string format_table(const CykTable& table) {
  std::string out;
  for (std::size_t i = 1; i <= table.size(); ++i) {
    for (std::size_t j = 1; j <= table.size(); ++j) {
      if (j > 1) out += ' ';
      if (j < i) {
        out += '.';
        continue;
      }
      out += '{';
      const auto cell = table.cell(i, j);
      for (std::size_t k = 0; k < cell.size(); ++k) {
        if (k) out += ',';
        out += cell[k];
      }
      out += '}';
    }
    out += '\n';
  }
  return out;
}

}  // namespace dycknf
