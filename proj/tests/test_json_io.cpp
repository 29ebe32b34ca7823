#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2cat/json_io.hpp"

using namespace sl2cat;

TEST_CASE("diagram round trip") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 8; ++n)
      for (const auto& d : enumerate_matchings(m, n)) {
        const std::string text = to_json(DiagramResult(d));
        const DiagramResult back = parse_diagram(text);
        REQUIRE(!back.is_zero());
        CHECK(back.diagram() == d);
        CHECK(to_json(back) == text);  // emission is canonical
      }
  const std::string zero = to_json(DiagramResult::zero());
  CHECK(parse_diagram(zero).is_zero());
}

TEST_CASE("diagram parse failures") {
  CHECK_THROWS_AS(parse_diagram("not json"), JsonParseError);
  CHECK_THROWS_AS(parse_diagram("{\"bottom\":2}"), JsonParseError);
  CHECK_THROWS_AS(parse_diagram("{\"bottom\":2,\"top\":0,\"pairs\":[[\"b0\",\"x1\"]]}"),
                  JsonParseError);
  // crossing pairing is structurally invalid
  CHECK_THROWS_AS(
      parse_diagram("{\"bottom\":2,\"top\":2,\"pairs\":[[\"b0\",\"t1\"],[\"b1\",\"t0\"]]}"),
      JsonParseError);
}

TEST_CASE("hom element round trip") {
  const auto basis = enumerate_matchings(2, 2);
  const HomElement h = Rational(1, 2) * HomElement::single(basis[0]) +
                       Rational(-7, 3) * HomElement::single(basis[1]);
  const std::string text = to_json(h);
  const HomElement back = parse_hom_element(text);
  CHECK(back == h);
  CHECK(to_json(back) == text);
  CHECK(parse_hom_element("{\"m\":1,\"n\":1,\"terms\":[]}").is_zero());
  CHECK_THROWS_AS(parse_hom_element("{\"m\":1,\"n\":1}"), JsonParseError);
  CHECK_THROWS_AS(
      parse_hom_element("{\"m\":1,\"n\":1,\"terms\":[{\"coeff\":\"1/0\",\"pairs\":[]}]}"),
      JsonParseError);
}

TEST_CASE("crystal round trip recomputes the statistics") {
  for (const Crystal& c : {Crystal::b(0), Crystal::b(3),
                           tensor(Crystal::b(1), Crystal::b(2)),
                           direct_sum({Crystal::b(1), Crystal::b(1)})}) {
    const std::string text = to_json(c);
    const Crystal back = parse_crystal(text);
    CHECK(back == c);
    CHECK(to_json(back) == text);
  }
}

TEST_CASE("crystal parse failures and defect loading") {
  CHECK_THROWS_AS(parse_crystal("[]"), JsonParseError);
  CHECK_THROWS_AS(parse_crystal("{\"elements\":[{\"id\":\"a\"}]}"), JsonParseError);
  CHECK_THROWS_AS(
      parse_crystal("{\"elements\":[{\"id\":\"a\",\"wt\":0}],\"e\":{\"a\":\"zz\"}}"),
      JsonParseError);

  // an e-cycle loads (stats are capped) but fails validation on axiom (5)
  const Crystal cyc = parse_crystal(
      "{\"elements\":[{\"id\":\"a\",\"wt\":0},{\"id\":\"b\",\"wt\":2}],"
      "\"e\":{\"a\":\"b\",\"b\":\"a\"},\"f\":{}}");
  bool axiom5 = false;
  for (const auto& v : cyc.validate())
    if (v.axiom == 5) axiom5 = true;
  CHECK(axiom5);

  // a weight mismatch along e is caught by axiom (2)
  const Crystal skew = parse_crystal(
      "{\"elements\":[{\"id\":\"a\",\"wt\":0},{\"id\":\"b\",\"wt\":3}],"
      "\"e\":{\"a\":\"b\"},\"f\":{\"b\":\"a\"}}");
  bool axiom2 = false;
  for (const auto& v : skew.validate())
    if (v.axiom == 2) axiom2 = true;
  CHECK(axiom2);
}

TEST_CASE("multiplicity object and morphism emission") {
  const CQObject sq = from_crystal(tensor(Crystal::b(1), Crystal::b(1)));
  const std::string text = to_json(sq);
  CHECK(text.find("\"0\"") != std::string::npos);
  CHECK(text.find("\"2\"") != std::string::npos);
  CHECK(text.find("v1⊗v1") != std::string::npos);

  const std::string id_text = to_json(CQMorphism::identity(sq));
  CHECK(id_text.find("\"blocks\"") != std::string::npos);
  CHECK(id_text.find("\"1\"") != std::string::npos);  // the 1x1 identity entry
}

TEST_CASE("graded object round trip") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto samples = sample_objects(seed, 6);
    for (const auto& x : samples) {
      const std::string text = to_json(x);
      const OZObject back = parse_oz_object(text);
      CHECK(back == x);
      CHECK(to_json(back) == text);
    }
  }
}

TEST_CASE("graded object parse failures") {
  CHECK_THROWS_AS(parse_oz_object("{}"), JsonParseError);
  CHECK_THROWS_AS(parse_oz_object("{\"blocks\":{\"-2\":{\"dims\":{}}}}"), JsonParseError);
  // var∘can != 0 must be rejected at the boundary
  const std::string bad =
      "{\"blocks\":{\"0\":{"
      "\"psi\":{\"dims\":{\"0\":1,\"2\":1}},"
      "\"phi\":{\"dims\":{\"1\":1}},"
      "\"var\":{\"1\":[[\"1\"]]},"
      "\"can\":{\"0\":[[\"1\"]]}}}}";
  CHECK_THROWS_AS(parse_oz_object(bad), JsonParseError);
}

TEST_CASE("graded morphism emission") {
  const OZObject x = OZObject::at_block(0, pi_upper(GradedVS::line(0)));
  const std::string text = to_json(eta(x));
  CHECK(text.find("\"blocks\"") != std::string::npos);
  CHECK(text.find("\"psi\"") != std::string::npos);
  CHECK(text.find("\"phi\"") != std::string::npos);
}
