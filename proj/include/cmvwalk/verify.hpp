#ifndef CMVWALK_VERIFY_HPP
#define CMVWALK_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cmvwalk {
namespace checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      ///< worst observed deviation (check-specific)
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string detail;
};

/// Seed for randomized checks; honors the CMVWALK_SEED environment
/// variable, with a fixed default so runs are reproducible.
std::uint64_t project_seed();

/// Suite names: conjugation, eigen, normalization, moments, oracle,
/// boundary, caratheodory, rotation, all.
std::vector<std::string> suite_names();

/// Runs one suite; tol_override replaces each check's primary tolerance
/// when set.  Throws Error for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::optional<double> tol_override = {});

}  // namespace checks
}  // namespace cmvwalk

#endif
