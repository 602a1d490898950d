#pragma once

#include "norlund/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace norlund {

// Options shared by all identity checks.  tolerance_scale multiplies every
// tolerance (including overrides); ell restricts block-structured checks to
// one block; xs replaces the default evaluation grid where the check has one.
struct VerifyOptions {
  double tolerance_scale = 1.0;
  std::map<std::string, double> tolerance_overrides;
  std::optional<int> ell;
  std::vector<double> xs;
};

// All identity ids known to the registry, sorted.
const std::vector<std::string>& verifier_ids();

// One-line description for an id; throws std::invalid_argument if unknown.
const std::string& verifier_description(const std::string& id);

// Runs one identity check.  A check may emit several reports (one per
// parameter block).  Throws std::invalid_argument for unknown ids or
// unsupported ell restrictions, std::domain_error for grid points outside the
// identity's domain.
std::vector<VerificationReport> run_verifier(const std::string& id,
                                             const VerifyOptions& opts = {});

// Runs the named checks (all registered checks when ids is empty) and returns
// the reports sorted by identity id, ties keeping emission order.
std::vector<VerificationReport> run_suite(const std::vector<std::string>& ids,
                                          const VerifyOptions& opts = {});

}  // namespace norlund
