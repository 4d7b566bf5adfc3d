#include "dycknf/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dycknf/errors.hpp"

namespace dycknf {

bool Rule::is_binary() const noexcept {
  return rhs.size() == 2 && rhs[0].is_nonterminal() && rhs[1].is_nonterminal();
}

bool Rule::is_terminal() const noexcept { return rhs.size() == 1 && rhs[0].is_terminal(); }

bool is_identifier(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

bool valid_terminal(const std::string& name) {
  if (name.size() != 1) return false;
  const auto c = static_cast<unsigned char>(name.front());
  return std::isgraph(c) && c != '\'';
}

}  // namespace

Grammar::Grammar(std::string start, std::vector<Rule> rules)
    : start_(std::move(start)), rules_(std::move(rules)) {
  if (rules_.empty()) throw ValidationError("empty rule set");

  for (const auto& rule : rules_) {
    if (!is_identifier(rule.lhs) || rule.lhs == "eps")
      throw ValidationError("malformed nonterminal name '" + rule.lhs + "'");
    if (nt_index_.emplace(rule.lhs, nonterminals_.size()).second) nonterminals_.push_back(rule.lhs);
  }
  rules_by_lhs_.resize(nonterminals_.size());

  std::set<char> seen_terminals;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const auto& rule = rules_[r];
    rules_by_lhs_[nt_index_.at(rule.lhs)].push_back(r);
    for (const auto& sym : rule.rhs) {
      if (sym.is_terminal()) {
        if (!valid_terminal(sym.name))
          throw ValidationError("malformed terminal '" + sym.name + "'");
        if (seen_terminals.insert(sym.terminal_char()).second)
          terminals_.push_back(sym.terminal_char());
      } else if (!nt_index_.contains(sym.name)) {
        throw ValidationError("undeclared symbol '" + sym.name + "' in a rule for '" + rule.lhs +
                              "'");
      }
    }
  }
  if (!nt_index_.contains(start_))
    throw ValidationError("start symbol '" + start_ + "' has no rules");

  std::set<Rule> unique(rules_.begin(), rules_.end());
  if (unique.size() != rules_.size()) throw ValidationError("duplicate rule");
}

bool Grammar::has_nonterminal(std::string_view name) const {
  return nt_index_.contains(std::string(name));
}

bool Grammar::has_terminal(char c) const {
  return std::find(terminals_.begin(), terminals_.end(), c) != terminals_.end();
}

std::optional<std::size_t> Grammar::nonterminal_index(std::string_view name) const {
  auto it = nt_index_.find(std::string(name));
  if (it == nt_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Grammar::terminal_index(char c) const {
  auto it = std::find(terminals_.begin(), terminals_.end(), c);
  if (it == terminals_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - terminals_.begin());
}

const std::vector<std::size_t>& Grammar::rules_for(std::string_view lhs) const {
  static const std::vector<std::size_t> none;
  auto idx = nonterminal_index(lhs);
  return idx ? rules_by_lhs_[*idx] : none;
}

bool Grammar::has_rule(const Rule& rule) const {
  for (auto r : rules_for(rule.lhs))
    if (rules_[r].rhs == rule.rhs) return true;
  return false;
}

bool Grammar::start_on_rhs() const {
  for (const auto& rule : rules_)
    for (const auto& sym : rule.rhs)
      if (sym.is_nonterminal() && sym.name == start_) return true;
  return false;
}

std::vector<Rule> group_by_lhs(std::vector<Rule> rules) {
  std::unordered_map<std::string, std::size_t> order;
  for (const auto& rule : rules) order.emplace(rule.lhs, order.size());
  std::stable_sort(rules.begin(), rules.end(), [&](const Rule& a, const Rule& b) {
    return order.at(a.lhs) < order.at(b.lhs);
  });
  return rules;
}

}  // namespace dycknf
