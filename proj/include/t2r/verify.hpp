#pragma once

// Exact identity battery over small groups: every structural fact the other
// modules rely on, re-derived from first principles (repeated convolution,
// definitional scans, brute-force distances) and compared for exact equality.
// This is what `verify` on the CLI runs; any failure names the identity and
// a witness (n, p, k, ...).

#include <string>
#include <vector>

#include "t2r/stirling.hpp"

namespace t2r {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // witness on failure, case tally on success
};

struct VerifyOptions {
  int n_max = 3;
  int p_max = 2;
  long k_max = -1;           // per-(n,p) step range; -1 = 2n + 2
  std::uint64_t group_cap = 100000;  // skip (n,p) with p^n n! above this
  // Test-only substitution for the {k,a} lookup inside the power expansion
  // check; proves that check actually consumes the table.
  Stirling2Fn stirling2_hook = nullptr;
};

std::vector<CheckResult> verify_algebra(const VerifyOptions& opts);
std::vector<CheckResult> verify_spectral(const VerifyOptions& opts);
std::vector<CheckResult> verify_mixing(const VerifyOptions& opts);
std::vector<CheckResult> verify_all(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace t2r
