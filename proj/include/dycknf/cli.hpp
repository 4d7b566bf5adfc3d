#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dycknf {

/// `dycknf <subcommand> [flags] <grammar-file> [word]`. `args` excludes the
/// program name. Returns 0 on success or acceptance, 1 on rejection or a
/// failed check, 2 on a usage error (diagnostics go to `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dycknf
