#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sl2cat {

struct CheckResult {
  std::string suite;
  bool passed = false;
  std::string detail;  // one line; failures carry the first counterexample
  double seconds = 0.0;
};

struct VerifyOptions {
  int hom_count_bound = 12;     // m + n bound for the counting checks
  int composition_bound = 4;    // exhaustive composition oracle bound
  int equivalence_bound = 10;   // m + n bound for the equivalence checks
  int pentagon_bound = 2;       // entries of pentagon quadruples
  int action_samples = 200;     // verify_relations sample count
  int action_comp_samples = 20; // samples for act-functoriality
  int pi_samples = 50;          // random spaces for the translation identity
  int adjunction_samples = 20;  // random pairs for the adjunction dims
  std::uint64_t seed = 0x5eedULL;
};

/// Suite names: hom-counts, relations, composition-oracle, crystal-iso,
/// counterexample, equivalence, action, adjunction.
std::vector<std::string> verify_suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name.
CheckResult run_verify_suite(const std::string& name, const VerifyOptions& opts);

/// Runs every suite in order.
std::vector<CheckResult> run_all_verify_suites(const VerifyOptions& opts);

}  // namespace sl2cat
