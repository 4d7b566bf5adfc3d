#pragma once

#include <string>
#include <vector>

#include "dycknf/grammar.hpp"

namespace dycknf {

/// Every rule is X -> A B or X -> a. No lambda-rules.
bool is_cnf(const Grammar& g);

/// Reasons `g` fails Dyck normal form, empty when it passes. The checks are
/// Chomsky normal form, the start symbol kept off every right-hand side, a
/// nonterminal other than the start that has a terminal rule has no other
/// rule, no nonterminal appearing both as a left and as a right child, and
/// left/right partners determining each other.
std::vector<std::string> dyck_nf_violations(const Grammar& g);

bool is_dyck_nf(const Grammar& g);

}  // namespace dycknf
