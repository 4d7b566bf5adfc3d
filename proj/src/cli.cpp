#include "dycknf/cli.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "dycknf/cyk.hpp"
#include "dycknf/dyck.hpp"
#include "dycknf/elin.hpp"
#include "dycknf/enumerate.hpp"
#include "dycknf/errors.hpp"
#include "dycknf/grammar_io.hpp"
#include "dycknf/normal_forms.hpp"
#include "dycknf/phi.hpp"
#include "dycknf/predicates.hpp"

namespace dycknf {

namespace {

struct CliConfig {
  std::string grammar_path;
  std::string word;
  std::size_t max_len = 7;
  std::uint64_t seed = 1;
  bool machine = false;
};

const char* yes_no(bool b, bool machine) {
  if (machine) return b ? "true" : "false";
  return b ? "yes" : "no";
}

Grammar as_cnf(const Grammar& g) { return is_cnf(g) && !g.start_on_rhs() ? g : to_cnf(g); }

Grammar as_dyck(const Grammar& g) { return is_dyck_nf(g) ? g : to_dyck_nf(as_cnf(g)).grammar; }

int cmd_cnf(const CliConfig& c, std::ostream& out) {
  out << serialize_grammar(to_cnf(load_grammar(c.grammar_path)));
  return 0;
}

int cmd_dyckify(const CliConfig& c, std::ostream& out) {
  const auto [g, ledger] = to_dyck_nf(as_cnf(load_grammar(c.grammar_path)));
  if (c.machine) {
    out << "nonterminals=" << g.nonterminals().size() << "\nrules=" << g.rules().size() << '\n';
    for (const auto& r : g.rules()) out << "rule=" << format_rule(r) << '\n';
    for (const auto& e : ledger.entries)
      out << "ledger=" << SubstitutionLedger{{e}}.serialize();
    return 0;
  }
  out << serialize_grammar(g);
  out << "# " << g.nonterminals().size() << " nonterminals, " << g.rules().size() << " rules\n";
  if (!ledger.empty()) out << "# ledger\n";
  for (const auto& e : ledger.entries) out << "# " << SubstitutionLedger{{e}}.serialize();
  return 0;
}

int cmd_member(const CliConfig& c, std::ostream& out) {
  const bool ok = member(as_cnf(load_grammar(c.grammar_path)), c.word);
  out << (c.machine ? (ok ? "member=true\n" : "member=false\n") : (ok ? "accept\n" : "reject\n"));
  return ok ? 0 : 1;
}

int cmd_trace(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const auto g = as_dyck(load_grammar(c.grammar_path));
  if (!member(g, c.word)) {
    out << (c.machine ? "member=false\n" : "reject\n");
    return 1;
  }
  const auto pairing = pairing_of(g);
  try {
    const auto t = trace_word(pairing, extract_tree(g, c.word));
    if (c.machine) {
      out << "trace=" << format_dyck_word(t) << "\nnamed=" << format_trace(pairing, t) << '\n';
    } else {
      out << format_dyck_word(t) << '\n' << format_trace(pairing, t) << '\n';
    }
    return 0;
  } catch (const DerivationTooShort& e) {
    err << "trace: " << e.what() << '\n';
    return 1;
  }
}

int cmd_check_dyck(const std::string& text, bool machine, std::ostream& out) {
  const auto w = parse_dyck_word(text);
  const bool lemma = in_dk_lemma(w);
  const bool stack = in_dk_stack(w);
  const auto sep = machine ? "=" : ": ";
  out << "lemma" << sep << yes_no(lemma, machine) << '\n';
  out << "stack" << sep << yes_no(stack, machine) << '\n';
  out << "agree" << sep << yes_no(lemma == stack, machine) << '\n';
  return lemma && stack ? 0 : 1;
}

int cmd_phi(const CliConfig& c, std::ostream& out) {
  const auto eg = extend_grammar(as_dyck(load_grammar(c.grammar_path)));
  const auto phi = build_phi(eg);
  for (const auto& [b, image] : phi.images()) {
    const std::string letter = (b.side == Side::open ? "[" : "]") + std::to_string(b.pair);
    const std::string value = image ? std::string(1, *image) : "eps";
    if (c.machine)
      out << "phi=" << letter << ' ' << value << '\n';
    else
      out << letter << ' ' << eg.pairing.name_of(b) << " -> " << value << '\n';
  }
  return 0;
}

int cmd_verify_phi(const CliConfig& c, std::ostream& out) {
  const auto eg = extend_grammar(as_dyck(load_grammar(c.grammar_path)));
  const auto report = verify_characterization(eg, c.max_len);
  if (c.machine) {
    out << "passed=" << yes_no(report.passed, true) << "\ntraces=" << report.traces
        << "\nwords=" << report.words << "\nmissing=" << report.missing.size()
        << "\nextra=" << report.extra.size() << "\nnot_dyck=" << report.not_in_dk.size() << '\n';
  } else {
    out << report.text();
  }
  return report.passed ? 0 : 1;
}

int cmd_elin(const CliConfig& c, std::ostream& out) {
  const auto conv = elin_to_dyck_nf(load_grammar(c.grammar_path));
  const auto r = recognize_atm(conv, c.word);
  if (!c.machine) {
    out << format_recognition_report(r);
  } else {
    const auto& t = r.trace;
    out << "accepted=" << yes_no(r.accepted, true) << "\nn=" << t.n << "\np=" << t.p
        << "\nbase_case=" << yes_no(t.base_case, true) << "\nd=" << t.division.divisor
        << "\nlevels=" << t.division.levels() << "\nalternation_depth=" << t.alternation_depth
        << "\nwork_tape_cells=" << t.work_tape_cells << "\nnodes=" << t.nodes_evaluated
        << "\ncutting_point_violations=" << t.cutting_point_violations.size() << '\n';
  }
  return r.accepted ? 0 : 1;
}

int cmd_verify_equiv(const CliConfig& c, std::ostream& out) {
  const auto cnf = as_cnf(load_grammar(c.grammar_path));
  const auto conv = to_dyck_nf(cnf);
  const auto lhs = enumerate_words(cnf, c.max_len);
  const bool same = lhs == enumerate_words(conv.grammar, c.max_len);

  constexpr std::size_t kExhaustive = 20000;
  constexpr std::size_t kSampled = 200;
  const auto k = static_cast<double>(cnf.terminals().size());
  std::vector<Sentence> words;
  if (std::pow(k, static_cast<double>(c.max_len)) <= kExhaustive) {
    words = all_words(cnf.terminals(), c.max_len);
  } else {
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<std::size_t> len(1, c.max_len);
    std::uniform_int_distribution<std::size_t> letter(0, cnf.terminals().size() - 1);
    words = lhs;
    for (std::size_t i = 0; i < kSampled; ++i) {
      Sentence w(len(rng), ' ');
      for (auto& ch : w) ch = cnf.terminals()[letter(rng)];
      words.push_back(std::move(w));
    }
  }
  std::size_t failures = 0;
  for (const auto& w : words)
    if (!verify_equivalence_matrices(cnf, conv.grammar, conv.ledger, w)) ++failures;

  const auto sep = c.machine ? "=" : ": ";
  out << "words" << sep << lhs.size() << '\n';
  out << "languages_equal" << sep << yes_no(same, c.machine) << '\n';
  out << "matrix_words" << sep << words.size() << '\n';
  out << "matrix_failures" << sep << failures << '\n';
  return same && failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyck normal form toolkit", "dycknf"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig config;
  std::string dyck_text;
  app.add_option("--max-len", config.max_len, "length bound for enumeration")
      ->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  app.add_option("--seed", config.seed, "seed for sampled words");
  app.add_flag("--machine", config.machine, "key=value output");

  auto grammar_cmd = [&](const char* name, const char* help, bool with_word) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("grammar", config.grammar_path, "grammar file")->required()->check(CLI::ExistingFile);
    if (with_word) sub->add_option("word", config.word, "input word")->required();
    return sub;
  };
  auto* cnf = grammar_cmd("cnf", "convert to Chomsky normal form", false);
  auto* dyckify = grammar_cmd("dyckify", "convert to Dyck normal form and print the ledger", false);
  auto* member_cmd = grammar_cmd("member", "CYK membership", true);
  auto* trace = grammar_cmd("trace", "trace-word of the canonical derivation tree", true);
  auto* check_dyck = app.add_subcommand("check-dyck", "Dyck membership by both checkers");
  check_dyck->add_option("word", dyck_text, "bracket word such as \"[1 [2 ]2 ]1\"")->required();
  auto* phi = grammar_cmd("phi", "print the terminal homomorphism", false);
  auto* verify_phi = grammar_cmd("verify-phi", "check the bounded characterization", false);
  auto* elin = grammar_cmd("elin-recognize", "even linear recognition with resource report", true);
  auto* verify_equiv = grammar_cmd("verify-equiv", "language and CYK matrix equivalence", false);

  std::vector<const char*> argv{"dycknf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cnf->parsed()) return cmd_cnf(config, out);
    if (dyckify->parsed()) return cmd_dyckify(config, out);
    if (member_cmd->parsed()) return cmd_member(config, out);
    if (trace->parsed()) return cmd_trace(config, out, err);
    if (check_dyck->parsed()) return cmd_check_dyck(dyck_text, config.machine, out);
    if (phi->parsed()) return cmd_phi(config, out);
    if (verify_phi->parsed()) return cmd_verify_phi(config, out);
    if (elin->parsed()) return cmd_elin(config, out);
    if (verify_equiv->parsed()) return cmd_verify_equiv(config, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace dycknf
