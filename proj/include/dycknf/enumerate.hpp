#pragma once

#include <cstddef>
#include <vector>

#include "dycknf/grammar.hpp"

namespace dycknf {

struct EnumerateOptions {
  /// Upper bound on the number of words held across all table cells.
  std::size_t max_table_words = 4'000'000;
};

/// All words of L(g) with length in [1, max_len], ordered by length and then
/// lexicographically. Works for arbitrary context-free grammars, including
/// unit and lambda-rules, by a length-indexed bottom-up closure. This is the
/// language oracle the other modules are checked against.
std::vector<Sentence> enumerate_words(const Grammar& g, std::size_t max_len,
                                      const EnumerateOptions& options = {});

/// Every word over the terminal alphabet of length in [1, max_len], in the
/// same order as enumerate_words.
std::vector<Sentence> all_words(const std::vector<char>& alphabet, std::size_t max_len);

}  // namespace dycknf
