#include "dycknf/phi.hpp"

#include <algorithm>
#include <set>

#include "dycknf/enumerate.hpp"
#include "dycknf/errors.hpp"
#include "dycknf/names.hpp"

namespace dycknf {

namespace {

std::optional<char> terminal_image(const Grammar& g, const std::string& nt) {
  for (auto r : g.rules_for(nt))
    if (g.rules()[r].is_terminal()) return g.rules()[r].rhs[0].terminal_char();
  return std::nullopt;
}

}  // namespace

NonterminalPartition partition_nonterminals(const Grammar& g) {
  return partition_nonterminals(g, pairing_of(g));
}

NonterminalPartition partition_nonterminals(const Grammar& g, const BracketPairing& pairing) {
  NonterminalPartition out;
  for (std::size_t i = 1; i <= pairing.size(); ++i) {
    const auto& p = pairing.pair(i);
    const bool left = terminal_image(g, p.left).has_value();
    const bool right = terminal_image(g, p.right).has_value();
    if (left && right)
      out.n1.push_back(i);
    else if (left)
      out.n2_left.push_back(i);
    else if (right)
      out.n2_right.push_back(i);
    else
      out.n3.push_back(i);
  }
  if (pairing.size() > 0 && out.n1.empty())
    out.warnings.push_back("no pair rewrites to terminals on both sides");
  if (pairing.size() > 0 && out.n3.size() == pairing.size())
    out.warnings.push_back("no bracket rewrites to a terminal; the binary rules derive nothing");
  return out;
}

ExtendedGrammar extend_grammar(const Grammar& g) {
  auto pairing = pairing_of(g);
  std::vector<char> start_terminals;
  for (auto r : g.rules_for(g.start()))
    if (g.rules()[r].is_terminal()) start_terminals.push_back(g.rules()[r].rhs[0].terminal_char());
  // terminal declaration order
  std::vector<char> ordered;
  for (char t : g.terminals())
    if (std::find(start_terminals.begin(), start_terminals.end(), t) != start_terminals.end())
      ordered.push_back(t);

  NameAllocator names(g);
  auto rules = g.rules();
  std::vector<std::size_t> new_pairs;
  std::vector<DyckWord> lp;
  for (char t : ordered) {
    const auto id = names.next("Ext", "");
    const auto left = names.fresh(id + "_L");
    const auto right = names.fresh(id + "_R");
    rules.push_back(Rule{g.start(), {Symbol::nonterminal(left), Symbol::nonterminal(right)}});
    rules.push_back(Rule{left, {Symbol::terminal(t)}});
    rules.push_back(Rule{right, {}});
    pairing = pairing.with_pair({left, right});
    new_pairs.push_back(pairing.size());
    lp.push_back({Bracket::open(pairing.size()), Bracket::close(pairing.size())});
  }
  return {g, Grammar(g.start(), group_by_lhs(std::move(rules))), std::move(pairing),
          std::move(new_pairs), std::move(lp)};
}

std::optional<char> TerminalMap::at(Bracket b) const {
  auto it = images_.find(b);
  if (it == images_.end())
    throw PreconditionError("letter outside the alphabet of phi: " + format_dyck_word({b}));
  return it->second;
}

TerminalMap build_phi(const ExtendedGrammar& eg) {
  TerminalMap phi;
  for (std::size_t i = 1; i <= eg.pairing.size(); ++i) {
    const auto& p = eg.pairing.pair(i);
    phi.set(Bracket::open(i), terminal_image(eg.grammar, p.left));
    phi.set(Bracket::close(i), terminal_image(eg.grammar, p.right));
  }
  return phi;
}

Sentence apply_phi(const TerminalMap& phi, const DyckWord& w) {
  Sentence out;
  for (const auto& b : w)
    if (auto c = phi.at(b)) out += *c;
  return out;
}

std::string CharacterizationReport::text() const {
  std::string out = std::string("characterization ") + (passed ? "PASS" : "FAIL") +
                    ": traces=" + std::to_string(traces) + " words=" + std::to_string(words) +
                    " missing=" + std::to_string(missing.size()) +
                    " extra=" + std::to_string(extra.size()) +
                    " not-dyck=" + std::to_string(not_in_dk.size()) + '\n';
  for (const auto& w : missing) out += "MISSING " + w + '\n';
  for (const auto& t : extra) out += "EXTRA " + format_dyck_word(t) + '\n';
  for (const auto& t : not_in_dk) out += "NOT-DYCK " + format_dyck_word(t) + '\n';
  return out;
}

CharacterizationReport verify_characterization(const ExtendedGrammar& eg, std::size_t max_len) {
  const auto phi = build_phi(eg);
  auto bounded = trace_language(eg.base, max_len);
  for (const auto& w : eg.lp)
    if (max_len >= 1) bounded.push_back(w);
  std::sort(bounded.begin(), bounded.end(), dyck_word_less);

  const auto language = enumerate_words(eg.base, max_len);
  const std::set<Sentence> in_language(language.begin(), language.end());
  std::set<Sentence> images;

  CharacterizationReport report;
  report.traces = bounded.size();
  report.words = language.size();
  for (const auto& t : bounded) {
    const auto image = apply_phi(phi, t);
    images.insert(image);
    if (!in_language.contains(image)) report.extra.push_back(t);
    if (!in_dk_stack(t)) report.not_in_dk.push_back(t);
  }
  for (const auto& w : language)
    if (!images.contains(w)) report.missing.push_back(w);
  report.passed = report.missing.empty() && report.extra.empty() && report.not_in_dk.empty();
  return report;
}

}  // namespace dycknf
