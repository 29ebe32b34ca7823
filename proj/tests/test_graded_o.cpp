#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2cat/graded_o.hpp"
#include "sl2cat/json_io.hpp"

using namespace sl2cat;

namespace {

GradedVS v_line() { return GradedVS::line(0); }  // one dimension in degree 0

OZObject single_minus1() { return OZObject::at_singular(v_line()); }

}  // namespace

TEST_CASE("shift laws") {
  const GradedVS v = direct_sum({GradedVS::line(0), GradedVS::line(2, 3)});
  CHECK(v.shift(2).dim(2) == 1);
  CHECK(v.shift(2).dim(4) == 3);
  CHECK(v.shift(2).shift(-2) == v);
  CHECK(v.shift(0) == v);
}

TEST_CASE("graded maps compose degreewise") {
  const GradedVS v = GradedVS::line(0, 2);
  RatMatrix m(2, 2);
  m.at(0, 1) = Rational(1);
  std::map<int, RatMatrix> blocks;
  blocks.emplace(0, m);
  const GradedMap f(v, v, blocks);
  CHECK(compose(f, f).block(0).is_zero());
  CHECK(compose(GradedMap::identity(v), f) == f);
  CHECK(f.shift(3).block(3) == f.block(0));
}

TEST_CASE("block objects enforce var∘can = 0") {
  const GradedVS psi = GradedVS::line(0);
  const GradedVS phi = GradedVS::line(1);
  // can: psi_0 -> phi_1 nonzero; var: phi_1 -> psi_2 must then vanish
  std::map<int, RatMatrix> can_blocks;
  can_blocks.emplace(0, RatMatrix::identity(1));
  const GradedMap can(psi, phi.shift(-1), can_blocks);
  // a nonzero var hitting psi at degree 2 does not exist here (psi has no
  // degree 2 part), so this is consistent
  CHECK_NOTHROW(Block0Object(psi, phi, GradedMap::zero(phi, psi.shift(-1)), can));

  // now give psi a degree-2 part and point var at it
  const GradedVS psi2 = direct_sum({GradedVS::line(0), GradedVS::line(2)});
  std::map<int, RatMatrix> var_blocks;
  RatMatrix vb(1, 1);
  vb.at(0, 0) = Rational(1);
  var_blocks.emplace(1, vb);
  const GradedMap var(phi, psi2.shift(-1), var_blocks);
  std::map<int, RatMatrix> can2_blocks;
  RatMatrix cb(1, 1);
  cb.at(0, 0) = Rational(1);
  can2_blocks.emplace(0, cb);
  const GradedMap can2(psi2, phi.shift(-1), can2_blocks);
  CHECK_THROWS_AS(Block0Object(psi2, phi, var, can2), std::invalid_argument);
}

TEST_CASE("pi_upper shape and shift equivariance") {
  const Block0Object zero = pi_upper(GradedVS());
  CHECK(zero.is_zero());

  const Block0Object p = pi_upper(v_line());
  CHECK(p.psi() == GradedVS::line(1));
  CHECK(p.phi() == direct_sum({GradedVS::line(2), GradedVS::line(0)}));
  // var = (0 id), can = (id 0)^T at the only populated degrees
  CHECK(p.var().block(0).at(0, 0) == Rational(1));
  CHECK(p.can().block(1).at(0, 0) == Rational(1));

  for (int n = -2; n <= 2; ++n) {
    const GradedVS v = direct_sum({GradedVS::line(-1, 2), GradedVS::line(3)});
    CHECK(pi_upper(v.shift(n)) == pi_upper(v).shift(n));
  }
}

TEST_CASE("pi_lower after pi_upper is id ⊕ id<2>") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GradedVS v = random_graded_vs(seed);
    CHECK(pi_lower(pi_upper(v)) == direct_sum({v.shift(2), v}));
  }
  // and on morphisms
  const GradedVS v = GradedVS::line(0, 2);
  RatMatrix m(2, 2);
  m.at(0, 0) = Rational(1, 2);
  m.at(1, 0) = Rational(3);
  std::map<int, RatMatrix> blocks;
  blocks.emplace(0, m);
  const GradedMap g(v, v, blocks);
  CHECK(pi_lower(pi_upper(g)) == direct_sum_maps({g.shift(2), g}));
}

TEST_CASE("the endofunctor on single blocks") {
  // block -1 input: F lands in block 0 as pi_upper
  const OZObject x = single_minus1();
  const OZObject fx = f_obj(x);
  CHECK(fx.singular().is_zero());
  CHECK(fx.regular(0) == pi_upper(v_line()));
  CHECK(fx.max_regular_block() == 0);

  // F^2: block 1 carries pi_upper(V), block -1 carries V<2> ⊕ V
  const OZObject f2x = f_obj(fx);
  CHECK(f2x.singular() == direct_sum({v_line().shift(2), v_line()}));
  CHECK(f2x.regular(1) == pi_upper(v_line()));
  CHECK(f2x.regular(0).is_zero());

  // block k input for k >= 1: F spreads to the two neighbours
  const Block0Object b = pi_upper(v_line());
  const OZObject y = OZObject::at_block(2, b);
  const OZObject fy = f_obj(y);
  CHECK(fy.regular(1) == b);
  CHECK(fy.regular(3) == b);
  CHECK(fy.singular().is_zero());

  // zero object and identities
  CHECK(f_obj(OZObject()).is_zero());
  const OZMorphism idx = OZMorphism::identity(x);
  CHECK(f_mor(idx) == OZMorphism::identity(fx));
}

TEST_CASE("F commutes with the grading shift") {
  const auto samples = sample_objects(3, 8);
  for (const auto& x : samples)
    for (const int n : {-2, 1, 3}) CHECK(f_obj(x.shift(n)) == f_obj(x).shift(n));
}

TEST_CASE("eta lands in the plain copy, block by block") {
  // block -1: the degree-0 summand of V ⊕ V<2>
  const OZObject x = single_minus1();
  const OZMorphism unit = eta(x);
  const RatMatrix block = unit.singular_map().block(0);
  REQUIRE(block.rows() == 1);
  REQUIRE(block.cols() == 1);
  CHECK(block.at(0, 0) == Rational(1));
  CHECK(unit.singular_map().block(2).is_zero());

  // block 0: eta avoids the pi_upper∘pi_lower summand
  const OZObject y = OZObject::at_block(0, pi_upper(v_line()));
  const OZMorphism unit_y = eta(y);
  const Block0Morphism comp = unit_y.regular_map(0);
  // the image inside F²(y)_0 = pi_upper(pi_lower(y_0)) ⊕ y_0: the first
  // summand has psi dims 3 at degree 1 and 3; the copy starts after them
  const Block0Object target = f_obj(f_obj(y)).regular(0);
  CHECK(compose(eps(y).regular_map(0), comp) == Block0Morphism::identity(y.regular(0)));
  CHECK(target.psi().total_dim() ==
        pi_upper(pi_lower(y.regular(0))).psi().total_dim() + y.regular(0).psi().total_dim());
}

TEST_CASE("zigzag relations hold with the recorded convention") {
  const auto samples = sample_objects(0x5eed, 60);
  const RelationReport rep = verify_relations(samples);
  CHECK(rep.ok);
  CHECK(rep.checked == 60);
}

TEST_CASE("the down-then-up convention fails the zigzags") {
  // a single regular block at k = 1 is already a counterexample
  const std::vector<OZObject> samples{OZObject::at_block(1, pi_upper(v_line()))};
  const RelationReport rep = verify_relations(samples, UnitConvention::DownThenUp);
  CHECK(!rep.ok);
  // ... while the recorded convention passes the same sample
  CHECK(verify_relations(samples).ok);
}

TEST_CASE("act on generators") {
  const auto samples = sample_objects(0xac7, 6);
  for (const auto& x : samples) {
    // identity diagram acts as the identity
    CHECK(act(HomElement::identity(1), x) == OZMorphism::identity(f_obj(x)));
    // the loop cap∘cup is the identity of the unit, acting as id_X
    const HomElement loop = compose_linear(HomElement::single(PlanarMatching::cap()),
                                           HomElement::single(PlanarMatching::cup()));
    CHECK(act(loop, x) == OZMorphism::identity(x));
    // both zigzags act as zero, composed at the action level
    const HomElement cup_id = tensor_linear(HomElement::single(PlanarMatching::cup()),
                                            HomElement::identity(1));
    const HomElement id_cap = tensor_linear(HomElement::identity(1),
                                            HomElement::single(PlanarMatching::cap()));
    CHECK(compose(act(id_cap, x), act(cup_id, x)).is_zero());
  }
}

TEST_CASE("action is functorial on composites") {
  const auto samples = sample_objects(0xf00d, 4);
  for (const auto& x : samples)
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (int p = 0; p <= 2; ++p)
          for (const auto& f : enumerate_matchings(m, n))
            for (const auto& g : enumerate_matchings(n, p)) {
              const HomElement gf = compose_linear(HomElement::single(g),
                                                   HomElement::single(f));
              CHECK(act(gf, x) ==
                    compose(act(HomElement::single(g), x), act(HomElement::single(f), x)));
            }
}

TEST_CASE("act is linear") {
  const OZObject x = OZObject::at_block(0, pi_upper(v_line()));
  const auto basis = enumerate_matchings(2, 2);
  const HomElement h = Rational(1, 2) * HomElement::single(basis[0]) +
                       Rational(-3) * HomElement::single(basis[1]);
  const OZMorphism expected = Rational(1, 2) * act(HomElement::single(basis[0]), x) +
                              Rational(-3) * act(HomElement::single(basis[1]), x);
  CHECK(act(h, x) == expected);
}

TEST_CASE("hom_space dimensions") {
  const GradedVS v = v_line();
  const OZObject pv = OZObject::at_block(0, pi_upper(v));
  CHECK(hom_space(pv, pv).size() == 1);

  CHECK(hom_space(OZObject(), OZObject()).empty());

  // maps between different blocks vanish
  const OZObject other = OZObject::at_block(1, pi_upper(v));
  CHECK(hom_space(pv, other).empty());

  // every basis element is a genuine morphism (construction validates), and
  // the identity is in the span for pv -> pv
  const auto basis = hom_space(pv, pv);
  REQUIRE(basis.size() == 1);
  const OZMorphism id = OZMorphism::identity(pv);
  bool proportional = false;
  for (const Rational c : {Rational(1), Rational(-1), Rational(2)})
    if (c * basis[0] == id) proportional = true;
  CHECK(proportional);
}

TEST_CASE("adjunction dimensions") {
  const GradedVS v = v_line();
  const Block0Object m = pi_upper(v);
  const AdjunctionReport rep = adjunction_check(v, m);
  CHECK(rep.ok);
  CHECK(rep.left_block_dim == 1);
  CHECK(rep.left_vect_dim == 1);

  const AdjunctionReport zero_rep = adjunction_check(GradedVS(), Block0Object());
  CHECK(zero_rep.ok);
  CHECK(zero_rep.left_block_dim == 0);

  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const GradedVS rv = random_graded_vs(seed);
    const Block0Object rm = random_block0(seed + 1000);
    CHECK(adjunction_check(rv, rm).ok);
  }
}

TEST_CASE("sample generator invariants") {
  const auto samples = sample_objects(1, 40);
  CHECK(samples.size() == 40);
  // constructors inside the generator enforce var∘can = 0 already; check
  // object equality semantics while we are here
  CHECK(samples == sample_objects(1, 40));  // deterministic
  const auto other = sample_objects(2, 40);
  bool any_different = false;
  for (std::size_t i = 0; i < other.size(); ++i)
    if (!(samples[i] == other[i])) any_different = true;
  CHECK(any_different);
}
