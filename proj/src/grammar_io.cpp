#include "dycknf/grammar_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "dycknf/errors.hpp"

namespace dycknf {

namespace {

class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_no_, column());
  }

  bool consume(std::string_view token) {
    skip_space();
    if (line_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_space();
    const auto begin = pos_;
    if (pos_ >= line_.size() || !std::isalpha(static_cast<unsigned char>(line_[pos_])))
      fail("expected identifier");
    while (pos_ < line_.size() &&
           (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_'))
      ++pos_;
    return std::string(line_.substr(begin, pos_ - begin));
  }

  char quoted_terminal() {
    // caller has seen the opening quote at pos_
    if (pos_ + 2 >= line_.size() || line_[pos_ + 2] != '\'') fail("unterminated terminal");
    const char c = line_[pos_ + 1];
    if (!std::isgraph(static_cast<unsigned char>(c)) || c == '\'') fail("invalid terminal character");
    pos_ += 3;
    return c;
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

struct RawSymbol {
  Symbol symbol;
  std::size_t line;
  std::size_t column;
};

}  // namespace

Grammar parse_grammar(std::string_view text, const ParseOptions& options) {
  std::optional<std::string> start;
  std::vector<Rule> rules;
  std::vector<RawSymbol> rhs_nonterminals;

  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    auto end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    begin = end + 1;

    LineScanner scan(line, line_no);
    if (scan.at_end() || scan.peek() == '#') continue;

    if (scan.consume("start:")) {
      if (start) scan.fail("duplicate start declaration");
      start = scan.identifier();
      if (!scan.at_end()) scan.fail("unexpected text after start symbol");
      continue;
    }

    const auto lhs = scan.identifier();
    if (lhs == "eps") scan.fail("'eps' cannot be a left-hand side");
    if (!scan.consume("->")) scan.fail("expected '->'");

    std::vector<Symbol> rhs;
    bool saw_eps = false;
    auto finish_alternative = [&] {
      if (rhs.empty() && !saw_eps) scan.fail("empty alternative (write eps for the empty string)");
      if (rhs.size() > options.max_rhs_length)
        scan.fail("right-hand side longer than " + std::to_string(options.max_rhs_length));
      rules.push_back(Rule{lhs, std::move(rhs)});
      rhs.clear();
      saw_eps = false;
    };
    while (true) {
      if (scan.at_end()) {
        finish_alternative();
        break;
      }
      const auto column = scan.column();
      if (scan.peek() == '|') {
        scan.consume("|");
        finish_alternative();
        continue;
      }
      if (saw_eps) scan.fail("'eps' must stand alone in an alternative");
      if (scan.peek() == '\'') {
        rhs.push_back(Symbol::terminal(scan.quoted_terminal()));
        continue;
      }
      auto name = scan.identifier();
      if (name == "eps") {
        if (!rhs.empty()) scan.fail("'eps' must stand alone in an alternative");
        saw_eps = true;
        continue;
      }
      rhs_nonterminals.push_back({Symbol::nonterminal(name), line_no, column});
      rhs.push_back(Symbol::nonterminal(std::move(name)));
    }
  }

  if (!start) throw ParseError("missing 'start:' declaration", line_no, 1);
  if (rules.empty()) throw ParseError("empty rule set", line_no, 1);

  // Report undeclared symbols with their position before Grammar validation.
  std::vector<std::string> lhs_names;
  for (const auto& rule : rules) lhs_names.push_back(rule.lhs);
  auto declared = [&](const std::string& name) {
    for (const auto& l : lhs_names)
      if (l == name) return true;
    return false;
  };
  for (const auto& raw : rhs_nonterminals)
    if (!declared(raw.symbol.name))
      throw ParseError("undeclared symbol '" + raw.symbol.name + "'", raw.line, raw.column);
  if (!declared(*start)) throw ParseError("undeclared start symbol '" + *start + "'", 1, 1);

  try {
    return Grammar(*start, std::move(rules));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

Grammar load_grammar(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read grammar file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_grammar(buffer.str(), options);
}

namespace {

std::string format_alternative(const std::vector<Symbol>& rhs) {
  if (rhs.empty()) return "eps";
  std::string out;
  for (const auto& sym : rhs) {
    if (!out.empty()) out += ' ';
    out += sym.is_terminal() ? "'" + sym.name + "'" : sym.name;
  }
  return out;
}

}  // namespace

std::string format_rule(const Rule& rule) {
  return rule.lhs + " -> " + format_alternative(rule.rhs);
}

std::string serialize_grammar(const Grammar& g) {
  std::string out = "start: " + g.start() + "\n";
  const auto& rules = g.rules();
  for (std::size_t i = 0; i < rules.size();) {
    out += rules[i].lhs + " -> " + format_alternative(rules[i].rhs);
    std::size_t j = i + 1;
    for (; j < rules.size() && rules[j].lhs == rules[i].lhs; ++j)
      out += " | " + format_alternative(rules[j].rhs);
    out += '\n';
    i = j;
  }
  return out;
}

}  // namespace dycknf
