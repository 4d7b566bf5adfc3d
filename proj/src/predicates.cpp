#include "dycknf/predicates.hpp"

#include <map>
#include <set>

#include "dycknf/grammar_io.hpp"

namespace dycknf {

bool is_cnf(const Grammar& g) {
  for (const auto& rule : g.rules())
    if (!rule.is_binary() && !rule.is_terminal()) return false;
  return true;
}

std::vector<std::string> dyck_nf_violations(const Grammar& g) {
  std::vector<std::string> out;
  for (const auto& rule : g.rules())
    if (!rule.is_binary() && !rule.is_terminal())
      out.push_back("not in Chomsky normal form: " + format_rule(rule));
  if (!out.empty()) return out;

  if (g.start_on_rhs()) out.push_back("start symbol " + g.start() + " occurs on a right-hand side");

  for (const auto& nt : g.nonterminals()) {
    if (nt == g.start()) continue;
    const auto& alts = g.rules_for(nt);
    bool has_terminal = false;
    for (auto r : alts) has_terminal |= g.rules()[r].is_terminal();
    if (has_terminal && alts.size() > 1)
      out.push_back(nt + " has a terminal rule and " + std::to_string(alts.size() - 1) +
                    " other rule(s)");
  }

  std::map<std::string, std::set<std::string>> right_partners;  // left child -> right children
  std::map<std::string, std::set<std::string>> left_partners;   // right child -> left children
  for (const auto& rule : g.rules()) {
    if (!rule.is_binary()) continue;
    right_partners[rule.rhs[0].name].insert(rule.rhs[1].name);
    left_partners[rule.rhs[1].name].insert(rule.rhs[0].name);
  }
  for (const auto& [nt, partners] : right_partners)
    if (left_partners.contains(nt)) out.push_back(nt + " occurs both as a left and a right child");
  for (const auto& [nt, partners] : right_partners)
    if (partners.size() > 1) out.push_back(nt + " has several right partners");
  for (const auto& [nt, partners] : left_partners)
    if (partners.size() > 1) out.push_back(nt + " has several left partners");
  return out;
}

bool is_dyck_nf(const Grammar& g) { return dyck_nf_violations(g).empty(); }

}  // namespace dycknf
