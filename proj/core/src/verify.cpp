#include "sl2cat/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "sl2cat/crystal.hpp"
#include "sl2cat/crystal_q.hpp"
#include "sl2cat/graded_o.hpp"
#include "sl2cat/hom_element.hpp"
#include "sl2cat/planar_matching.hpp"
#include "sl2cat/sl2_multiplicities.hpp"

namespace sl2cat {

namespace {

struct Failure {
  std::string what;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

// 1. counting: matchings = Catalan = multiplicity oracle
void suite_hom_counts(const VerifyOptions& opts, std::ostringstream& detail) {
  int checked = 0;
  for (int m = 0; m <= opts.hom_count_bound; ++m)
    for (int n = 0; m + n <= opts.hom_count_bound; ++n) {
      const auto count = static_cast<std::int64_t>(enumerate_matchings(m, n).size());
      const std::int64_t oracle = hom_dimension(m, n);
      const std::int64_t cat = (m + n) % 2 == 0 ? catalan((m + n) / 2) : 0;
      expect(count == cat && count == oracle,
             "count mismatch at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      ++checked;
    }
  detail << checked << " hom spaces counted up to m+n <= " << opts.hom_count_bound;
}

// 2. the defining relations, in all three models
void suite_relations(const VerifyOptions& opts, std::ostringstream& detail) {
  const PlanarMatching cup = PlanarMatching::cup();
  const PlanarMatching cap = PlanarMatching::cap();
  const PlanarMatching id1 = PlanarMatching::identity(1);

  // diagrams
  const DiagramResult loop = compose(cap, cup);
  expect(!loop.is_zero() && loop.diagram() == PlanarMatching::identity(0),
         "cap∘cup is not the identity of the unit");
  const DiagramResult zig = compose(tensor(id1, cap), tensor(cup, id1));
  const DiagramResult zag = compose(tensor(cap, id1), tensor(id1, cup));
  expect(zig.is_zero() && zag.is_zero(), "a zigzag survived in the diagram model");

  // crystals
  const CrystalMorphism c_loop = compose(eval_diagram(cap), eval_diagram(cup));
  expect(c_loop == CrystalMorphism::identity(Crystal::b(0)),
         "cap∘cup is not the identity on the unit crystal");
  const CrystalMorphism c_zig =
      compose(eval_diagram(tensor(id1, cap)), eval_diagram(tensor(cup, id1)));
  const CrystalMorphism c_zag =
      compose(eval_diagram(tensor(cap, id1)), eval_diagram(tensor(id1, cup)));
  expect(c_zig.is_zero() && c_zag.is_zero(), "a zigzag survived in the crystal model");

  // graded category
  const auto samples = sample_objects(opts.seed, 24);
  const RelationReport rel = verify_relations(samples);
  expect(rel.ok, "graded relations failed: " + rel.first_failure);
  detail << "relations (1)-(3) hold in all three models; " << rel.checked
         << " graded samples";
}

// 3. diagram composition agrees with crystal composition, zeros included
void suite_composition_oracle(const VerifyOptions& opts, std::ostringstream& detail) {
  int checked = 0;
  const int bound = opts.composition_bound;
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n)
      for (int p = 0; p <= bound; ++p) {
        const auto fs = enumerate_matchings(m, n);
        const auto gs = enumerate_matchings(n, p);
        for (const auto& f : fs)
          for (const auto& g : gs) {
            const DiagramResult comp = compose(g, f);
            const CrystalMorphism expected = eval_diagram(comp, m, p);
            const CrystalMorphism actual = compose(eval_diagram(g), eval_diagram(f));
            expect(expected == actual,
                   "composition disagrees at " + f.describe() + " then " + g.describe());
            ++checked;
          }
      }
  detail << checked << " composite pairs agree with the crystal oracle";
}

// 4. the unique isomorphism b(1)⊗b(1) ≅ 1 ⊕ b(2)
void suite_crystal_iso(const VerifyOptions&, std::ostringstream& detail) {
  const Crystal square = tensor(Crystal::b(1), Crystal::b(1));
  expect(square.is_valid(), "b(1)⊗b(1) violates the axioms");
  const Decomposition dec = decompose(square);
  expect(dec.hw.size() == 2 && dec.hw.count(0) && dec.hw.count(2),
         "b(1)⊗b(1) does not decompose as 1 ⊕ b(2)");
  expect(dec.hw.at(0) == std::vector<std::string>{"v-1⊗v1"},
         "the unit component is not spanned by v-1⊗v1");
  expect(dec.hw.at(2) == std::vector<std::string>{"v1⊗v1"},
         "the b(2) component is not spanned by v1⊗v1");
  // the two inclusions are crystal morphisms
  const CrystalMorphism unit_inc(Crystal::b(0), square, {{"v0", "v-1⊗v1"}});
  expect(unit_inc.is_valid(), "v0 -> v-1⊗v1 is not a morphism");
  std::map<std::string, std::string> b2_map;
  const Crystal b2 = Crystal::b(2);
  std::string cur = "v1⊗v1";
  for (int k = 0; k <= 2; ++k) {
    b2_map["v" + std::to_string(2 - 2 * k)] = cur;
    if (k < 2) cur = *square.f(cur);
  }
  const CrystalMorphism b2_inc(b2, square, b2_map);
  expect(b2_inc.is_valid(), "v2 -> v1⊗v1 does not extend to a morphism");
  detail << "unique isomorphism b(1)⊗b(1) ≅ 1 ⊕ b(2) with v0 -> v-1⊗v1, v2 -> v1⊗v1";
}

// 5. the counting asymmetry that rules out the naive equivalence
void suite_counterexample(const VerifyOptions&, std::ostringstream& detail) {
  const Crystal b1 = Crystal::b(1);
  const Crystal sum = direct_sum({b1, b1});
  const auto into = hom_enumerate(b1, sum);
  const auto from = hom_enumerate(sum, b1);
  const auto nonzero = [](const std::vector<CrystalMorphism>& v) {
    int c = 0;
    for (const auto& m : v)
      if (!m.is_zero()) ++c;
    return c;
  };
  expect(nonzero(into) == 2, "expected exactly 2 nonzero maps b(1) -> b(1)⊕b(1)");
  expect(nonzero(from) == 3, "expected exactly 3 nonzero maps b(1)⊕b(1) -> b(1)");
  const Crystal cube = tensor_power(b1, 3);
  const long long triple = hom_count_nonzero(cube, cube);
  expect(triple == 17, "expected 17 nonzero endomorphisms of b(1)^⊗3");
  const auto dim = static_cast<long long>(enumerate_matchings(3, 3).size());
  expect(dim == 5 && triple != dim, "the 17 != 5 inequality failed");
  detail << "2 vs 3 nonzero morphisms; 17 nonzero set maps != 5 = dim Hom(F^3, F^3)";
}

// 6. the monoidal equivalence with the multiplicity-set model
void suite_equivalence(const VerifyOptions& opts, std::ostringstream& detail) {
  const EquivalenceReport rep = verify_equivalence(opts.equivalence_bound);
  for (const auto& p : rep.pairs)
    expect(p.ok, "equivalence fails at (" + std::to_string(p.m) + "," + std::to_string(p.n) +
                     "): dims " + std::to_string(p.dim_diagrams) + "/" +
                     std::to_string(p.dim_cq) + ", rank " + std::to_string(p.functor_rank));
  expect(rep.essential_surjectivity_ok, "essential surjectivity witness failed");
  int quads = 0;
  for (int i = 0; i <= opts.pentagon_bound; ++i)
    for (int j = 0; j <= opts.pentagon_bound; ++j)
      for (int k = 0; k <= opts.pentagon_bound; ++k)
        for (int l = 0; l <= opts.pentagon_bound; ++l) {
          expect(pentagon_check(i, j, k, l),
                 "pentagon fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + "," + std::to_string(l) + ")");
          ++quads;
        }
  detail << rep.pairs.size() << " hom pairs up to m+n <= " << opts.equivalence_bound
         << " match with invertible functor matrices; pentagon holds on " << quads
         << " quadruples";
}

// 7. the action on the graded category
void suite_action(const VerifyOptions& opts, std::ostringstream& detail) {
  const auto samples = sample_objects(opts.seed, opts.action_samples);
  const RelationReport rel = verify_relations(samples);
  expect(rel.ok, "unit/counit relations failed: " + rel.first_failure);

  // the other uniform convention must fail (ii) or (iii) somewhere
  const RelationReport alt = verify_relations(samples, UnitConvention::DownThenUp);
  expect(!alt.ok, "the down-then-up convention unexpectedly satisfies the relations");
  expect(alt.first_failure.find("(ii") != std::string::npos,
         "down-then-up failed outside (ii)/(iii): " + alt.first_failure);

  // functoriality of the action on composites, zeros included
  int checked = 0;
  std::vector<OZObject> comp_samples = sample_objects(opts.seed ^ 0x9e3779b9ULL, opts.action_comp_samples);
  for (const auto& x : comp_samples) {
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n)
        for (int p = 0; p <= 3; ++p) {
          const auto fs = enumerate_matchings(m, n);
          const auto gs = enumerate_matchings(n, p);
          for (const auto& f : fs)
            for (const auto& g : gs) {
              const HomElement composite = compose_linear(HomElement::single(g),
                                                          HomElement::single(f));
              const OZMorphism lhs = act(composite, x);
              const OZMorphism rhs = compose(act(HomElement::single(g), x),
                                             act(HomElement::single(f), x));
              expect(lhs == rhs, "action not functorial at " + f.describe() + " then " +
                                     g.describe());
              ++checked;
            }
        }
  }
  detail << rel.checked << " samples satisfy (i)-(iii); down-then-up fails as recorded; "
         << checked << " composite actions agree";
}

// 8. translation identities
void suite_adjunction(const VerifyOptions& opts, std::ostringstream& detail) {
  for (int i = 0; i < opts.pi_samples; ++i) {
    const GradedVS v = random_graded_vs(opts.seed + 1000 + static_cast<std::uint64_t>(i));
    expect(pi_lower(pi_upper(v)) == direct_sum({v.shift(2), v}),
           "π_*π* != id ⊕ id<2> on sample " + std::to_string(i));
  }
  for (int i = 0; i < opts.adjunction_samples; ++i) {
    const GradedVS v = random_graded_vs(opts.seed + 2000 + static_cast<std::uint64_t>(i));
    const Block0Object m = random_block0(opts.seed + 3000 + static_cast<std::uint64_t>(i));
    const AdjunctionReport rep = adjunction_check(v, m);
    expect(rep.ok, "adjunction dimensions disagree on sample " + std::to_string(i) + ": " +
                       std::to_string(rep.left_block_dim) + "/" +
                       std::to_string(rep.left_vect_dim) + " and " +
                       std::to_string(rep.right_vect_dim) + "/" +
                       std::to_string(rep.right_block_dim));
  }
  detail << opts.pi_samples << " translation identities and " << opts.adjunction_samples
         << " adjunction dimension pairs hold";
}

using SuiteFn = std::function<void(const VerifyOptions&, std::ostringstream&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"hom-counts", suite_hom_counts},
      {"relations", suite_relations},
      {"composition-oracle", suite_composition_oracle},
      {"crystal-iso", suite_crystal_iso},
      {"counterexample", suite_counterexample},
      {"equivalence", suite_equivalence},
      {"action", suite_action},
      {"adjunction", suite_adjunction},
  };
  return table;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_table()) names.push_back(name);
  return names;
}

CheckResult run_verify_suite(const std::string& name, const VerifyOptions& opts) {
  for (const auto& [n, fn] : suite_table()) {
    if (n != name) continue;
    CheckResult result;
    result.suite = name;
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(opts, detail);
      result.passed = true;
      result.detail = detail.str();
    } catch (const Failure& f) {
      result.passed = false;
      result.detail = f.what;
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("unexpected error: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

std::vector<CheckResult> run_all_verify_suites(const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  for (const auto& name : verify_suite_names()) results.push_back(run_verify_suite(name, opts));
  return results;
}

}  // namespace sl2cat
