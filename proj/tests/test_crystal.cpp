#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sl2cat/crystal.hpp"
#include "sl2cat/sl2_multiplicities.hpp"

using namespace sl2cat;

namespace {
const std::string OX = "⊗";
}

TEST_CASE("string crystals b(n)") {
  const Crystal b0 = Crystal::b(0);
  CHECK(b0.size() == 1);
  CHECK(b0.wt("v0") == 0);
  CHECK(b0.eps("v0") == 0);
  CHECK(b0.phi("v0") == 0);
  CHECK(!b0.e("v0"));
  CHECK(!b0.f("v0"));

  const Crystal b1 = Crystal::b(1);
  CHECK(b1.labels() == std::vector<std::string>{"v1", "v-1"});
  CHECK(b1.eps("v1") == 0);
  CHECK(b1.phi("v1") == 1);
  CHECK(b1.eps("v-1") == 1);
  CHECK(b1.phi("v-1") == 0);
  CHECK(*b1.f("v1") == "v-1");
  CHECK(*b1.e("v-1") == "v1");

  const Crystal b2 = Crystal::b(2);
  CHECK(b2.eps("v0") == 1);
  CHECK(b2.phi("v0") == 1);

  for (int n = 0; n <= 10; ++n) CHECK(Crystal::b(n).is_valid());
}

TEST_CASE("validate reports injected defects") {
  CrystalData data = Crystal::b(1).data();
  data.elements[0].eps = 1;  // v1 now claims a raising step that is not there
  const auto violations = Crystal(data).validate();
  CHECK(!violations.empty());
  bool axiom5_at_v1 = false;
  for (const auto& v : violations)
    if (v.axiom == 5 && v.element == "v1") axiom5_at_v1 = true;
  CHECK(axiom5_at_v1);

  CrystalData cyc;
  cyc.elements.push_back({"a", 0, 0, 0, std::string("b"), std::nullopt});
  cyc.elements.push_back({"b", 2, 0, 2, std::string("a"), std::nullopt});
  bool cycle_flagged = false;
  for (const auto& v : Crystal(cyc).validate())
    if (v.axiom == 5 && v.detail.find("terminate") != std::string::npos) cycle_flagged = true;
  CHECK(cycle_flagged);
}

TEST_CASE("axiom (4) violations are caught") {
  CrystalData data = Crystal::b(1).data();
  data.elements[1].f_to = std::nullopt;  // keep e(v-1) = v1 but drop f(v1)... wrong side
  data.elements[0].f_to = std::nullopt;  // now b = e b' without f b = b'
  bool axiom4 = false;
  for (const auto& v : Crystal(data).validate())
    if (v.axiom == 4) axiom4 = true;
  CHECK(axiom4);
}

TEST_CASE("tensor follows the signed-rule case split") {
  const Crystal sq = tensor(Crystal::b(1), Crystal::b(1));
  CHECK(sq.is_valid());
  CHECK(sq.size() == 4);

  // v-1⊗v1 is killed by both e and f: the unit summand
  CHECK(!sq.e("v-1" + OX + "v1"));
  CHECK(!sq.f("v-1" + OX + "v1"));
  CHECK(sq.eps("v-1" + OX + "v1") == 0);
  CHECK(sq.wt("v-1" + OX + "v1") == 0);

  // the case split at the top of the b(2) string: eps(v1)=0 < phi(v1)=1,
  // so f acts on the right factor
  CHECK(*sq.f("v1" + OX + "v1") == "v1" + OX + "v-1");
  CHECK(*sq.f("v1" + OX + "v-1") == "v-1" + OX + "v-1");
  CHECK(!sq.f("v-1" + OX + "v-1"));
  CHECK(*sq.e("v1" + OX + "v-1") == "v1" + OX + "v1");

  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) CHECK(tensor(Crystal::b(i), Crystal::b(j)).is_valid());

  // iterated tensors stay valid
  Crystal acc = Crystal::b(2);
  for (const int next : {1, 0, 3, 1}) {
    acc = tensor(acc, Crystal::b(next));
    CHECK(acc.is_valid());
  }
}

TEST_CASE("tensor with the unit is the identity up to relabelling") {
  const Crystal b2 = Crystal::b(2);
  const Crystal left = tensor(Crystal::b(0), b2);
  REQUIRE(left.size() == b2.size());
  std::map<std::string, std::string> strip;
  for (const auto& l : left.labels()) {
    REQUIRE(l.substr(0, 2 + OX.size()) == "v0" + OX);
    strip[l] = l.substr(2 + OX.size());
  }
  CHECK(relabel(left, strip) == b2);
}

TEST_CASE("set-level tensor is strictly associative") {
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k) {
        const Crystal a = Crystal::b(i), b = Crystal::b(j), c = Crystal::b(k);
        CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
      }
}

TEST_CASE("decompose finds the isotypic pieces") {
  for (int n = 0; n <= 6; ++n) {
    const auto d = decompose(Crystal::b(n));
    REQUIRE(d.hw.size() == 1);
    CHECK(d.hw.at(n) == std::vector<std::string>{"v" + std::to_string(n)});
  }

  const auto sq = decompose(tensor(Crystal::b(1), Crystal::b(1)));
  CHECK(sq.hw.at(0) == std::vector<std::string>{"v-1" + OX + "v1"});
  CHECK(sq.hw.at(2) == std::vector<std::string>{"v1" + OX + "v1"});

  const auto cube = decompose(tensor_power(Crystal::b(1), 3));
  CHECK(cube.hw.at(1).size() == 2);
  CHECK(cube.hw.at(3).size() == 1);

  // multiplicities agree with the recursion oracle for all powers <= 6
  for (int m = 0; m <= 6; ++m) {
    const auto dec = decompose(tensor_power(Crystal::b(1), m));
    const auto oracle = tensor_power_multiplicities(m);
    for (const auto& [j, mult] : oracle) {
      if (mult == 0) continue;
      REQUIRE(dec.hw.count(j));
      CHECK(static_cast<std::int64_t>(dec.hw.at(j).size()) == mult);
    }
  }
}

TEST_CASE("decompose is an isomorphism witness") {
  const Crystal c = tensor(tensor(Crystal::b(2), Crystal::b(1)), Crystal::b(1));
  const auto d = decompose(c);
  CHECK(static_cast<int>(d.address.size()) == c.size());
  // dimension bookkeeping: sum over n of |V_n| (n+1) = |B|
  int total = 0;
  for (const auto& [n, hws] : d.hw) total += static_cast<int>(hws.size()) * (n + 1);
  CHECK(total == c.size());
  // reassembly: the f-arrows of c are exactly the address successors
  for (const auto& [label, addr] : d.address) {
    CHECK(c.wt(label) == addr.n - 2 * addr.k);
    CHECK(c.eps(label) == addr.k);
    const auto down = c.f(label);
    if (addr.k == addr.n) {
      CHECK(!down);
    } else {
      REQUIRE(down.has_value());
      const auto next = d.address.at(*down);
      CHECK(next == CrystalAddress{addr.n, addr.copy, addr.k + 1});
    }
  }
}

TEST_CASE("hom enumeration reproduces the counting formula") {
  const Crystal b1 = Crystal::b(1);
  const Crystal sum = direct_sum({b1, b1});

  const auto into = hom_enumerate(b1, sum);
  CHECK(static_cast<long long>(into.size()) - 1 == 2);
  CHECK(hom_count_nonzero(b1, sum) == 2);

  const auto from = hom_enumerate(sum, b1);
  CHECK(static_cast<long long>(from.size()) - 1 == 3);
  CHECK(hom_count_nonzero(sum, b1) == 3);

  const Crystal cube = tensor_power(b1, 3);
  const auto endos = hom_enumerate(cube, cube);
  CHECK(static_cast<long long>(endos.size()) - 1 == 17);
  CHECK(hom_count_nonzero(cube, cube) == 17);

  for (const auto& m : endos) CHECK(m.is_valid());

  // every enumerated morphism is distinct
  for (std::size_t i = 0; i < into.size(); ++i)
    for (std::size_t j = i + 1; j < into.size(); ++j) CHECK(!(into[i] == into[j]));
}

TEST_CASE("the extra morphism is the sum of the two projections") {
  const Crystal b1 = Crystal::b(1);
  const Crystal sum = direct_sum({b1, b1});
  // identity on both copies at once: a perfectly valid crystal morphism
  const CrystalMorphism both(sum, b1,
                             {{"0:v1", "v1"}, {"0:v-1", "v-1"}, {"1:v1", "v1"}, {"1:v-1", "v-1"}});
  CHECK(both.is_valid());
}

TEST_CASE("morphism violation reporting") {
  const Crystal b1 = Crystal::b(1);
  // killing only half a string breaks equivariance
  const CrystalMorphism half(b1, b1, {{"v1", "v1"}});
  CHECK(!half.is_valid());
  // weight-flipping map is not a morphism
  const CrystalMorphism flip(b1, b1, {{"v1", "v-1"}, {"v-1", "v1"}});
  CHECK(!flip.is_valid());
}

TEST_CASE("eval_diagram satisfies the relations") {
  const PlanarMatching id1 = PlanarMatching::identity(1);
  const PlanarMatching cup = PlanarMatching::cup();
  const PlanarMatching cap = PlanarMatching::cap();

  CHECK(compose(eval_diagram(cap), eval_diagram(cup)) ==
        CrystalMorphism::identity(Crystal::b(0)));
  CHECK(compose(eval_diagram(tensor(id1, cap)), eval_diagram(tensor(cup, id1))).is_zero());
  CHECK(compose(eval_diagram(tensor(cap, id1)), eval_diagram(tensor(id1, cup))).is_zero());
  CHECK(eval_diagram(PlanarMatching::identity(2)) ==
        CrystalMorphism::identity(tensor_power(Crystal::b(1), 2)));

  // the stated slice semantics
  const CrystalMorphism cup_eval = eval_diagram(cup);
  CHECK(*cup_eval.image("v0") == "v-1" + OX + "v1");
  const CrystalMorphism cap_eval = eval_diagram(cap);
  CHECK(*cap_eval.image("v-1" + OX + "v1") == "v0");
  CHECK(!cap_eval.image("v1" + OX + "v-1"));
  CHECK(!cap_eval.image("v1" + OX + "v1"));
  CHECK(!cap_eval.image("v-1" + OX + "v-1"));
}

TEST_CASE("eval_diagram is faithful at small sizes") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 8; ++n) {
      const auto basis = enumerate_matchings(m, n);
      std::vector<CrystalMorphism> images;
      for (const auto& d : basis) {
        const CrystalMorphism ev = eval_diagram(d);
        CHECK(!ev.is_zero());
        CHECK(ev.is_valid());
        images.push_back(ev);
      }
      for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
          CHECK(!(images[i] == images[j]));
    }
}

TEST_CASE("dot output shape") {
  const std::string d1 = to_dot(Crystal::b(1));
  CHECK(d1.find("\"v1\" -> \"v-1\"") != std::string::npos);
  CHECK(d1.find("wt=1") != std::string::npos);

  const std::string d0 = to_dot(Crystal::b(0));
  CHECK(d0.find("->") == std::string::npos);

  // two strings of lengths 3 and 1: 4 nodes, 2 f-arrows
  const std::string sq = to_dot(tensor(Crystal::b(1), Crystal::b(1)));
  std::size_t arrows = 0, pos = 0;
  while ((pos = sq.find("->", pos)) != std::string::npos) {
    ++arrows;
    pos += 2;
  }
  CHECK(arrows == 2);

  // determinism
  CHECK(to_dot(Crystal::b(3)) == to_dot(Crystal::b(3)));
}
