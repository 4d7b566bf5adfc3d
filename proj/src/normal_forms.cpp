#include "dycknf/normal_forms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "dycknf/cyk.hpp"
#include "dycknf/errors.hpp"
#include "dycknf/names.hpp"
#include "dycknf/predicates.hpp"

namespace dycknf {

std::string SubstitutionLedger::serialize() const {
  std::string out;
  for (const auto& e : entries) {
    out += e.introduced + " <- " + e.original + ' ';
    out += e.kind == SubstitutionKind::terminal ? "terminal" : "nonterminal";
    out += " step=" + std::to_string(e.step) + '\n';
  }
  return out;
}

namespace {

std::vector<Rule> dedupe(const std::vector<Rule>& rules) {
  std::set<Rule> seen;
  std::vector<Rule> out;
  for (const auto& r : rules)
    if (seen.insert(r).second) out.push_back(r);
  return out;
}

// Keeps the rules whose symbols all derive some terminal string.
std::vector<Rule> productive_rules(const std::vector<Rule>& rules) {
  std::set<std::string> productive;
  auto derives = [&](const Rule& r) {
    return std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
      return s.is_terminal() || productive.contains(s.name);
    });
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules)
      if (!productive.contains(r.lhs) && derives(r)) changed = productive.insert(r.lhs).second;
  }
  std::vector<Rule> out;
  for (const auto& r : rules)
    if (productive.contains(r.lhs) && derives(r)) out.push_back(r);
  return out;
}

}  // namespace

Grammar to_cnf(const Grammar& g) {
  for (const auto& r : g.rules())
    if (r.is_empty()) throw PreconditionError("lambda-rule " + r.lhs + " -> eps is not supported");
  if (is_cnf(g) && !g.start_on_rhs()) return g;

  NameAllocator names(g);
  std::vector<Rule> rules = g.rules();
  std::string start = g.start();
  if (g.start_on_rhs()) {
    const auto fresh_start = names.fresh(start + "0");
    rules.insert(rules.begin(), Rule{fresh_start, {Symbol::nonterminal(start)}});
    start = fresh_start;
  }

  std::vector<Rule> extra;
  std::map<char, std::string> proxies;
  for (auto& r : rules) {
    if (r.rhs.size() < 2) continue;
    for (auto& s : r.rhs) {
      if (!s.is_terminal()) continue;
      const char c = s.terminal_char();
      auto [it, added] = proxies.try_emplace(c);
      if (added) {
        it->second = names.next("Term", "_t");
        extra.push_back(Rule{it->second, {Symbol::terminal(c)}});
      }
      s = Symbol::nonterminal(it->second);
    }
  }

  std::map<std::vector<Symbol>, std::string> tails;
  std::function<std::string(const std::string&, std::vector<Symbol>)> tail_name =
      [&](const std::string& owner, std::vector<Symbol> seq) -> std::string {
    if (auto it = tails.find(seq); it != tails.end()) return it->second;
    const auto name = names.next(owner, "_c");
    tails.emplace(seq, name);
    if (seq.size() == 2) {
      extra.push_back(Rule{name, seq});
    } else {
      std::vector<Symbol> rest(seq.begin() + 1, seq.end());
      extra.push_back(Rule{name, {seq.front(), Symbol::nonterminal(tail_name(owner, rest))}});
    }
    return name;
  };
  for (auto& r : rules) {
    if (r.rhs.size() <= 2) continue;
    std::vector<Symbol> rest(r.rhs.begin() + 1, r.rhs.end());
    r.rhs = {r.rhs.front(), Symbol::nonterminal(tail_name(r.lhs, std::move(rest)))};
  }
  rules.insert(rules.end(), extra.begin(), extra.end());

  auto is_unit = [](const Rule& r) { return r.rhs.size() == 1 && r.rhs[0].is_nonterminal(); };
  std::vector<std::string> order;
  std::map<std::string, std::vector<const Rule*>> by_lhs;
  for (const auto& r : rules) {
    if (!by_lhs.contains(r.lhs)) order.push_back(r.lhs);
    by_lhs[r.lhs].push_back(&r);
  }
  std::vector<Rule> closed;
  for (const auto& x : order) {
    std::vector<std::string> reach{x};
    std::set<std::string> seen{x};
    for (std::size_t i = 0; i < reach.size(); ++i)
      for (const auto* r : by_lhs[reach[i]])
        if (is_unit(*r) && seen.insert(r->rhs[0].name).second) reach.push_back(r->rhs[0].name);
    for (const auto& y : reach)
      for (const auto* r : by_lhs[y])
        if (!is_unit(*r)) closed.push_back(Rule{x, r->rhs});
  }
  closed = productive_rules(dedupe(closed));
  if (std::none_of(closed.begin(), closed.end(), [&](const Rule& r) { return r.lhs == start; }))
    throw ValidationError("the grammar generates no word");
  return Grammar(start, group_by_lhs(std::move(closed)));
}

namespace {

class DyckConverter {
 public:
  explicit DyckConverter(const Grammar& g) : start_(g.start()), rules_(g.rules()), names_(g) {
    for (const auto& nt : g.nonterminals()) root_[nt] = nt;
  }

  DyckConversion run() {
    terminal_substitution();
    right_occurrences();
    pairing();
    return {Grammar(start_, group_by_lhs(rules_)), ledger_};
  }

 private:
  std::string introduce(const std::string& original, const std::string& tag,
                        SubstitutionKind kind, int step) {
    const auto& root = root_.at(original);
    auto name = names_.next(root, tag);
    root_[name] = root;
    ledger_.entries.push_back({name, original, kind, step});
    return name;
  }

  std::vector<std::string> lhs_order() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& r : rules_)
      if (seen.insert(r.lhs).second) out.push_back(r.lhs);
    return out;
  }

  void copy_rules(const std::string& from, const std::string& to) {
    std::vector<Rule> copies;
    for (const auto& r : rules_)
      if (r.lhs == from) copies.push_back(Rule{to, r.rhs});
    rules_.insert(rules_.end(), copies.begin(), copies.end());
  }

  void terminal_substitution() {
    for (const auto& a : lhs_order()) {
      if (a == start_) continue;
      std::vector<std::size_t> terminal_rules;
      bool has_other = false;
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        if (rules_[r].lhs != a) continue;
        if (rules_[r].is_terminal())
          terminal_rules.push_back(r);
        else
          has_other = true;
      }
      if (terminal_rules.empty()) continue;
      if (!has_other) terminal_rules.erase(terminal_rules.begin());
      if (terminal_rules.empty()) continue;

      std::vector<Symbol> moved;
      for (auto r : terminal_rules) moved.push_back(rules_[r].rhs[0]);
      for (auto it = terminal_rules.rbegin(); it != terminal_rules.rend(); ++it)
        rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(*it));

      for (const auto& b : moved) {
        const auto sub = introduce(a, "_t", SubstitutionKind::terminal, 1);
        rules_.push_back(Rule{sub, {b}});
        const auto current = rules_.size();
        for (std::size_t r = 0; r < current; ++r) {
          const auto rule = rules_[r];
          std::vector<std::size_t> positions;
          for (std::size_t p = 0; p < rule.rhs.size(); ++p)
            if (rule.rhs[p].is_nonterminal() && rule.rhs[p].name == a) positions.push_back(p);
          // every nonempty subset of the occurrences, so X -> A A yields three rules
          for (std::size_t mask = 1; mask < (std::size_t{1} << positions.size()); ++mask) {
            auto copy = rule;
            for (std::size_t k = 0; k < positions.size(); ++k)
              if (mask & (std::size_t{1} << k)) copy.rhs[positions[k]] = Symbol::nonterminal(sub);
            rules_.push_back(std::move(copy));
          }
        }
      }
      rules_ = dedupe(rules_);
    }
  }

  void replace_in_pairs(const std::string& left, const std::string& right, std::size_t slot,
                        const std::string& replacement) {
    for (auto& r : rules_)
      if (r.is_binary() && r.rhs[0].name == left && r.rhs[1].name == right)
        r.rhs[slot] = Symbol::nonterminal(replacement);
  }

  void right_occurrences() {
    while (true) {
      std::set<std::string> left_children;
      for (const auto& r : rules_)
        if (r.is_binary()) left_children.insert(r.rhs[0].name);
      std::optional<std::string> target;
      for (const auto& r : rules_)
        if (r.is_binary() && left_children.contains(r.rhs[1].name)) {
          target = r.rhs[1].name;
          break;
        }
      if (!target) return;

      std::vector<std::string> siblings;
      for (const auto& r : rules_)
        if (r.is_binary() && r.rhs[1].name == *target &&
            std::find(siblings.begin(), siblings.end(), r.rhs[0].name) == siblings.end())
          siblings.push_back(r.rhs[0].name);
      for (const auto& z : siblings) {
        const auto sub = introduce(*target, "_R", SubstitutionKind::nonterminal, 2);
        replace_in_pairs(z, *target, 1, sub);
        copy_rules(*target, sub);
      }
    }
  }

  void pairing() {
    std::set<std::string> nts;
    for (const auto& r : rules_) nts.insert(r.lhs);
    const auto cap = nts.size() * rules_.size();
    for (std::size_t steps = 0;; ++steps) {
      if (steps > cap) throw Error("internal error: pairing step did not converge");
      std::map<std::string, std::string> first_left;   // right child -> left partner
      std::map<std::string, std::string> first_right;  // left child -> right partner
      for (const auto& r : rules_) {
        if (!r.is_binary()) continue;
        first_left.try_emplace(r.rhs[1].name, r.rhs[0].name);
        first_right.try_emplace(r.rhs[0].name, r.rhs[1].name);
      }
      bool split = false;
      for (const auto& r : rules_) {
        if (!r.is_binary()) continue;
        const auto a = r.rhs[0].name;
        const auto b = r.rhs[1].name;
        if (first_left.at(b) != a) {
          const auto sub = introduce(b, "_R", SubstitutionKind::nonterminal, 3);
          replace_in_pairs(a, b, 1, sub);
          copy_rules(b, sub);
          split = true;
        } else if (first_right.at(a) != b) {
          const auto sub = introduce(a, "_L", SubstitutionKind::nonterminal, 3);
          replace_in_pairs(a, b, 0, sub);
          copy_rules(a, sub);
          split = true;
        }
        if (split) break;
      }
      if (!split) return;
    }
  }

  std::string start_;
  std::vector<Rule> rules_;
  NameAllocator names_;
  std::map<std::string, std::string> root_;
  SubstitutionLedger ledger_;
};

}  // namespace

DyckConversion to_dyck_nf(const Grammar& g) {
  if (!is_cnf(g)) throw PreconditionError("Dyck normal form conversion needs a CNF grammar");
  if (g.start_on_rhs())
    throw PreconditionError("start symbol " + g.start() + " occurs on a right-hand side");
  auto result = DyckConverter(g).run();
  if (result.ledger.empty()) return {g, {}};
  return result;
}

Homomorphism build_hd(const SubstitutionLedger& ledger, const Grammar& source) {
  Homomorphism hd;
  for (const auto& nt : source.nonterminals()) hd[nt] = nt;
  for (const auto& e : ledger.entries) {
    auto it = hd.find(e.original);
    if (it == hd.end())
      throw ValidationError("ledger entry " + e.introduced + " <- " + e.original +
                            " refers to an unknown nonterminal");
    if (hd.contains(e.introduced))
      throw ValidationError("ledger introduces " + e.introduced + " twice");
    hd[e.introduced] = it->second;
  }
  return hd;
}

namespace {

DerivationTree relabel(const Homomorphism& hd, const DerivationTree& tree) {
  if (tree.is_leaf()) return tree;
  auto it = hd.find(tree.label.name);
  if (it == hd.end()) throw ValidationError("h_d is undefined on " + tree.label.name);
  DerivationTree out{Symbol::nonterminal(it->second), {}};
  out.children.reserve(tree.children.size());
  for (const auto& c : tree.children) out.children.push_back(relabel(hd, c));
  return out;
}

}  // namespace

DerivationTree map_tree(const Homomorphism& hd, const DerivationTree& tree, const Grammar& target) {
  auto image = relabel(hd, tree);
  try {
    validate_tree(target, image);
  } catch (const PreconditionError& e) {
    throw ValidationError(std::string("image tree is not a derivation tree: ") + e.what());
  }
  return image;
}

SubstitutionRelations build_relations(const Grammar& g_cnf, const Grammar& g_dyck,
                                      const SubstitutionLedger& ledger) {
  const auto hd = build_hd(ledger, g_cnf);
  SubstitutionRelations rel;
  for (const auto& nt : g_dyck.nonterminals())
    if (!hd.contains(nt)) throw ValidationError("ledger does not account for " + nt);
  for (const auto& r : g_dyck.rules()) {
    const auto& image = hd.at(r.lhs);
    if (r.is_terminal()) {
      rel.h_t[{image, r.rhs[0].terminal_char()}].push_back(r.lhs);
    } else {
      auto& v = rel.h_not_t[image];
      if (std::find(v.begin(), v.end(), r.lhs) == v.end()) v.push_back(r.lhs);
    }
  }
  rel.h_not_t[g_cnf.start()] = {g_dyck.start()};
  return rel;
}

bool verify_equivalence_matrices(const Grammar& g_cnf, const Grammar& g_dyck,
                                 const SubstitutionLedger& ledger, const Sentence& w) {
  if (w.empty()) throw PreconditionError("empty word");
  const auto rel = build_relations(g_cnf, g_dyck, ledger);
  const auto v = build_table(g_cnf, w);
  const auto v2 = build_table(g_dyck, w);
  for (std::size_t i = 1; i <= w.size(); ++i) {
    for (std::size_t j = i; j <= w.size(); ++j) {
      std::set<std::string> expected;
      for (const auto& x : v.cell(i, j)) {
        if (i == j) {
          auto it = rel.h_t.find({x, w[i - 1]});
          if (it != rel.h_t.end()) expected.insert(it->second.begin(), it->second.end());
        } else {
          auto it = rel.h_not_t.find(x);
          if (it != rel.h_not_t.end()) expected.insert(it->second.begin(), it->second.end());
        }
      }
      const auto actual = v2.cell(i, j);
      if (expected != std::set<std::string>(actual.begin(), actual.end())) return false;
    }
  }
  return true;
}

Grammar prune_useless(const Grammar& g) {
  const auto kept = productive_rules(g.rules());
  if (std::none_of(kept.begin(), kept.end(), [&](const Rule& r) { return r.lhs == g.start(); }))
    throw ValidationError("the grammar generates no word");

  std::set<std::string> reachable{g.start()};
  std::deque<std::string> queue{g.start()};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& r : kept)
      if (r.lhs == x)
        for (const auto& s : r.rhs)
          if (s.is_nonterminal() && reachable.insert(s.name).second) queue.push_back(s.name);
  }
  std::vector<Rule> out;
  for (const auto& r : kept)
    if (reachable.contains(r.lhs)) out.push_back(r);
  return Grammar(g.start(), std::move(out));
}

namespace {

struct Signature {
  bool is_start = false;
  std::vector<std::string> shapes;  // "'c" for a terminal rule, "#<len>" otherwise
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t other = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

std::map<std::string, Signature> signatures(const Grammar& g) {
  std::map<std::string, Signature> out;
  for (const auto& nt : g.nonterminals()) out[nt].is_start = nt == g.start();
  for (const auto& r : g.rules()) {
    out[r.lhs].shapes.push_back(r.is_terminal() ? "'" + r.rhs[0].name
                                                : "#" + std::to_string(r.rhs.size()));
    for (std::size_t p = 0; p < r.rhs.size(); ++p) {
      if (!r.rhs[p].is_nonterminal()) continue;
      auto& s = out[r.rhs[p].name];
      if (r.is_binary())
        ++(p == 0 ? s.left : s.right);
      else
        ++s.other;
    }
  }
  for (auto& [nt, s] : out) std::sort(s.shapes.begin(), s.shapes.end());
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Grammar& a, const Grammar& b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)),
        b_rules_(b.rules().begin(), b.rules().end()) {
    std::set<std::string> seen{a.start()};
    order_.push_back(a.start());
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (auto r : a.rules_for(order_[i]))
        for (const auto& s : a.rules()[r].rhs)
          if (s.is_nonterminal() && seen.insert(s.name).second) order_.push_back(s.name);
    for (const auto& nt : a.nonterminals())
      if (seen.insert(nt).second) order_.push_back(nt);
  }

  std::optional<std::map<std::string, std::string>> run() {
    if (a_.nonterminals().size() != b_.nonterminals().size() ||
        a_.rules().size() != b_.rules().size())
      return std::nullopt;
    if (search(0)) return mapping_;
    return std::nullopt;
  }

 private:
  bool consistent(const std::string& nt) const {
    for (const auto& r : a_.rules()) {
      bool touches = r.lhs == nt;
      for (const auto& s : r.rhs) touches |= s.is_nonterminal() && s.name == nt;
      if (!touches) continue;
      Rule image{"", {}};
      auto it = mapping_.find(r.lhs);
      if (it == mapping_.end()) continue;
      image.lhs = it->second;
      bool complete = true;
      for (const auto& s : r.rhs) {
        if (s.is_terminal()) {
          image.rhs.push_back(s);
          continue;
        }
        auto m = mapping_.find(s.name);
        if (m == mapping_.end()) {
          complete = false;
          break;
        }
        image.rhs.push_back(Symbol::nonterminal(m->second));
      }
      if (complete && !b_rules_.contains(image)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const auto& nt = order_[depth];
    for (const auto& candidate : b_.nonterminals()) {
      if (taken_.contains(candidate) || !(sig_a_.at(nt) == sig_b_.at(candidate))) continue;
      mapping_[nt] = candidate;
      taken_.insert(candidate);
      if (consistent(nt) && search(depth + 1)) return true;
      mapping_.erase(nt);
      taken_.erase(candidate);
    }
    return false;
  }

  const Grammar& a_;
  const Grammar& b_;
  std::map<std::string, Signature> sig_a_;
  std::map<std::string, Signature> sig_b_;
  std::set<Rule> b_rules_;
  std::vector<std::string> order_;
  std::map<std::string, std::string> mapping_;
  std::set<std::string> taken_;
};

}  // namespace

std::optional<std::map<std::string, std::string>> find_isomorphism(const Grammar& a,
                                                                   const Grammar& b) {
  if (a.terminals().size() != b.terminals().size()) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

}  // namespace dycknf
