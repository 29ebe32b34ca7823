// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries a wall-clock budget that is enforced here.

#include <cstdio>
#include <string>
#include <vector>

#include "sl2cat/verify.hpp"

int main() {
  using sl2cat::CheckResult;
  using sl2cat::VerifyOptions;

  VerifyOptions opts;  // defaults pin the acceptance bounds
  struct Criterion {
    int number;
    const char* suite;
    const char* title;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {1, "hom-counts", "hom counts = Catalan = multiplicity oracle, m+n <= 12", 10.0},
      {2, "relations", "relations (1)-(3) in diagrams, crystals, graded category", 30.0},
      {3, "composition-oracle", "diagram composition = crystal composition, m,n,p <= 4", 60.0},
      {4, "crystal-iso", "b(1)⊗b(1) ≅ 1 ⊕ b(2) with the stated maps", 1.0},
      {5, "counterexample", "2 vs 3 nonzero morphisms and 17 != 5", 5.0},
      {6, "equivalence", "monoidal equivalence to m+n <= 10 and pentagon <= 2", 120.0},
      {7, "action", "action of the diagram category on the graded category", 120.0},
      {8, "adjunction", "translation identity and adjunction dimensions", 10.0},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    const CheckResult r = sl2cat::run_verify_suite(c.suite, opts);
    const bool in_budget = r.seconds < c.budget_seconds;
    const bool ok = r.passed && in_budget;
    all_ok = all_ok && ok;
    std::printf("%s criterion %d: %s [%s] (%.2fs%s)\n", ok ? "PASS" : "FAIL", c.number,
                c.title, r.detail.c_str(), r.seconds,
                in_budget ? "" : ", over budget");
  }
  std::printf("%s\n", all_ok ? "ACCEPTANCE: all criteria passed"
                             : "ACCEPTANCE: some criteria FAILED");
  return all_ok ? 0 : 1;
}
