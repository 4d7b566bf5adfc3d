#pragma once

#include <string>

#include "dycknf/grammar_io.hpp"

namespace dycknf::testing {

inline Grammar fixture(const std::string& name) {
  return load_grammar(std::string(DYCKNF_GRAMMAR_DIR) + "/" + name);
}

}  // namespace dycknf::testing
