#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fermihat {

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Bound for cases without a dedicated tolerance.
  double tol = 1e-10;
  int boson_cutoff = 3;
};

/// Outcome of one identity check. For cases named `*_nonzero` the value is
/// the observed defect, which must exceed the threshold.
struct CaseResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double max_err = 0.0;
};

/// car, product, commutator, anticommutator, sectors, exp, bch, kraus, pairing, bose.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws Error on an unknown name.
std::vector<CaseResult> run_suite(std::string_view suite, const VerifyOptions& opts = {});

/// "SUITE/CASE: PASS max_err=<value>"
std::string format_report_line(const CaseResult& r);

/// JSON array of {"suite","case","status","max_err"} objects.
std::string format_report_json(const std::vector<CaseResult>& results);

}  // namespace fermihat
