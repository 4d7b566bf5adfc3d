#include "dycknf/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dycknf/errors.hpp"

namespace dycknf {

namespace {

using WordSet = std::set<Sentence>;

// Bottom-up closure over nonterminals and the proper suffixes of every
// right-hand side (the suffixes play the role of binarization symbols).
class LanguageTable {
 public:
  LanguageTable(const Grammar& g, std::size_t max_len, std::size_t cap)
      : g_(g), max_len_(max_len), cap_(cap) {
    const auto& rules = g.rules();
    nt_.assign(g.nonterminals().size(), std::vector<WordSet>(max_len + 1));
    suffix_.resize(rules.size());
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const auto k = rules[r].rhs.size();
      if (k >= 2) suffix_[r].assign(k - 1, std::vector<WordSet>(max_len + 1));
    }
    for (std::size_t len = 0; len <= max_len; ++len) close_length(len);
  }

  const WordSet& words(std::size_t nt, std::size_t len) const { return nt_[nt][len]; }

 private:
  // Adds the concatenations of `head` (a symbol) and `tail` (a set source)
  // of total length `len` into `target`.
  template <typename TailFn>
  bool add_concatenations(const Symbol& head, TailFn tail, std::size_t len, WordSet& target) {
    bool changed = false;
    for (std::size_t a = 0; a <= len; ++a) {
      const WordSet* rest = tail(len - a);
      if (rest->empty()) continue;
      for (const auto& x : *symbol_set(head, a))
        for (const auto& y : *rest) changed |= insert(target, x + y);
    }
    return changed;
  }

  bool insert(WordSet& target, Sentence word) {
    if (!target.insert(std::move(word)).second) return false;
    if (++stored_ > cap_) throw ResourceLimitError("word enumeration exceeded the table cap");
    return true;
  }

  void close_length(std::size_t len) {
    const auto& rules = g_.rules();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t r = 0; r < rules.size(); ++r) {
        const auto& rhs = rules[r].rhs;
        auto& target = nt_[*g_.nonterminal_index(rules[r].lhs)][len];
        if (rhs.empty()) {
          if (len == 0) changed |= insert(target, "");
          continue;
        }
        if (rhs.size() == 1) {
          WordSet copy = *symbol_set(rhs[0], len);  // may alias target
          for (const auto& w : copy) changed |= insert(target, w);
          continue;
        }
        const auto k = rhs.size();
        for (std::size_t pos = k - 1; pos-- > 0;) {
          auto tail = [&, pos](std::size_t l) -> const WordSet* {
            if (pos + 1 == k - 1) return symbol_set(rhs[k - 1], l);
            return &suffix_[r][pos + 1][l];
          };
          changed |= add_concatenations(rhs[pos], tail, len, suffix_[r][pos][len]);
        }
        for (const auto& w : suffix_[r][0][len]) changed |= insert(target, w);
      }
    }
  }

  const WordSet* symbol_set(const Symbol& sym, std::size_t len) {
    if (sym.is_nonterminal()) return &nt_[*g_.nonterminal_index(sym.name)][len];
    static const WordSet empty;
    auto& cached = terminal_sets_[sym.name];
    if (cached.empty()) cached.insert(sym.name);
    return len == 1 ? &cached : &empty;
  }

  const Grammar& g_;
  std::size_t max_len_;
  std::size_t cap_;
  std::size_t stored_ = 0;
  std::vector<std::vector<WordSet>> nt_;
  std::vector<std::vector<std::vector<WordSet>>> suffix_;
  std::map<std::string, WordSet> terminal_sets_;
};

}  // namespace

std::vector<Sentence> enumerate_words(const Grammar& g, std::size_t max_len,
                                      const EnumerateOptions& options) {
  LanguageTable table(g, max_len, options.max_table_words);
  const auto start = *g.nonterminal_index(g.start());
  std::vector<Sentence> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const auto& words = table.words(start, len);
    out.insert(out.end(), words.begin(), words.end());
  }
  return out;
}

std::vector<Sentence> all_words(const std::vector<char>& alphabet, std::size_t max_len) {
  std::vector<char> sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Sentence> out;
  std::vector<Sentence> layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Sentence> next;
    next.reserve(layer.size() * sorted.size());
    for (const auto& prefix : layer)
      for (char c : sorted) next.push_back(prefix + c);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace dycknf
