#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ptq {

struct CheckResult {
  std::string suite;
  std::string check;
  double measured = 0.0;   // a residual, gap, or 0/1 flag; smaller is better
  double tolerance = 0.0;  // passed iff measured <= tolerance
  bool passed = false;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  double tolerance_scale = 1.0;            // multiplies every default tolerance
  std::optional<double> tolerance_override;  // replaces every tolerance
  double quadrature_tol = 1e-12;           // QuadratureSpec::target_tol for norm integrals
};

// "rhp", "gegenbauer", "rho", "mpt", "classical", "group", in report order.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options);

// "all" or one suite name. Suites run concurrently; results come back in
// suite_names() order regardless of scheduling.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options);

}  // namespace ptq
