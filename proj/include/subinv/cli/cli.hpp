#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subinv::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kBudgetExceeded = 2,
  kNotInvertible = 3,
  kVerificationFailure = 4,
};

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
///
///   verify --n <k> [--side right|left|both] [--max-n <cap>] [--workers <w>] [--json]
///   trace2x2 [--json]
///   invert --ring <spec> --matrix <file> [--denoms <spec>] [--json]
///   ocdet --ring <spec> --matrix <file> [--variant fwd|left|recursive] [--json]
///   closure --ring <spec> --gens <file> [--max-matrix <N>] [--budget <steps>] [--workers <w>] [--json]
///   consequences --modulus <m> --n <k> --samples <c> [--seed <s>] [--workers <w>] [--json]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subinv::cli
