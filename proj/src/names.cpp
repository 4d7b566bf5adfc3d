#include "dycknf/names.hpp"

namespace dycknf {

NameAllocator::NameAllocator(const Grammar& g) {
  for (const auto& nt : g.nonterminals()) used_.insert(nt);
}

std::string NameAllocator::next(const std::string& base, const std::string& tag) {
  auto& k = counters_[base + '\n' + tag];
  std::string name;
  do {
    name = base + tag + std::to_string(++k);
  } while (used_.contains(name));
  used_.insert(name);
  return name;
}

std::string NameAllocator::fresh(const std::string& candidate) {
  if (used_.insert(candidate).second) return candidate;
  return next(candidate, "_");
}

}  // namespace dycknf
