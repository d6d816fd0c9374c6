#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotgrp::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kBudgetError = 2,
};

// Runs one knotgrp invocation. args excludes the program name. Output is
// buffered and written to `out` only on success; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotgrp::cli
