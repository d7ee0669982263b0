#pragma once

#include <string>
#include <vector>

namespace holospin {

/// One verified property. detail is empty on success and carries the
/// counterexample (signature, indices, values) on failure.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::vector<CheckResult> checks;
};

/// Property suites behind the command-line verifier.
///   clifford:     generator relations for every signature with n <= 10 and
///                 for every catalog signature with n <= 16; tau-twist
///                 factorization against the definite representation
///   inner:        closed-form oracles for the scalar product (exhaustive
///                 n <= 8, sampled interleaved r = 7, 8); infinitesimal
///                 invariance for n <= 8
///   equivariance: lift linearity, bracket compatibility, and the
///                 commutator identity [lift X, e_j] = X e_j for n <= 8
///   forms:        stabilizer dimensions of the distinguished 3- and
///                 4-forms over both scalar fields, and annihilation
/// "all" runs the four suites in the order above. Unknown names throw
/// std::invalid_argument.
std::vector<SuiteResult> run_verify(const std::string& suite);

std::vector<std::string> verify_suite_names();

}  // namespace holospin
