#pragma once

#include <map>
#include <set>
#include <string>

#include "dycknf/grammar.hpp"

namespace dycknf {

/// Hands out nonterminal names not used by a grammar or by earlier calls.
class NameAllocator {
 public:
  NameAllocator() = default;
  explicit NameAllocator(const Grammar& g);

  void reserve(const std::string& name) { used_.insert(name); }
  bool used(const std::string& name) const { return used_.contains(name); }

  /// `<base><tag><k>` with k counting from 1 per (base, tag), skipping taken names.
  std::string next(const std::string& base, const std::string& tag);

  /// `candidate` itself when free, otherwise `<candidate>_<k>`.
  std::string fresh(const std::string& candidate);

 private:
  std::set<std::string> used_;
  std::map<std::string, int> counters_;
};

}  // namespace dycknf
