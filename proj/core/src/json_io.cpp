#include "sl2cat/json_io.hpp"

#include <json.hpp>

namespace sl2cat {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw JsonParseError("malformed JSON");
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string point_name(const Point& p) {
  return (p.top ? "t" : "b") + std::to_string(p.index);
}

Point parse_point(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'b' && s[0] != 't'))
    throw JsonParseError("bad point name '" + s + "'");
  try {
    return Point{s[0] == 't', std::stoi(s.substr(1))};
  } catch (const std::exception&) {
    throw JsonParseError("bad point name '" + s + "'");
  }
}

json pairs_to_json(const PlanarMatching& d) {
  json pairs = json::array();
  for (const auto& [a, b] : d.pairs()) pairs.push_back({point_name(a), point_name(b)});
  return pairs;
}

std::vector<std::pair<Point, Point>> parse_pairs(const json& j) {
  if (!j.is_array()) throw JsonParseError("\"pairs\" must be an array");
  std::vector<std::pair<Point, Point>> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw JsonParseError("each pair must be two point names");
    out.push_back({parse_point(p[0].get<std::string>()), parse_point(p[1].get<std::string>())});
  }
  return out;
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw JsonParseError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix parse_matrix(const json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw JsonParseError("matrix row count mismatch");
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw JsonParseError("matrix column count mismatch");
    for (int c = 0; c < cols; ++c) {
      if (!row[static_cast<std::size_t>(c)].is_string())
        throw JsonParseError("matrix entries must be rational strings");
      try {
        m.at(r, c) = Rational::parse(row[static_cast<std::size_t>(c)].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw JsonParseError(e.what());
      }
    }
  }
  return m;
}

json graded_vs_to_json(const GradedVS& v) {
  json dims = json::object();
  for (const auto& [d, n] : v.dims()) dims[std::to_string(d)] = n;
  return json{{"dims", dims}};
}

GradedVS parse_graded_vs(const json& j) {
  if (!j.is_object() || !j.contains("dims") || !j["dims"].is_object())
    throw JsonParseError("graded vector space needs a \"dims\" object");
  std::map<int, int> dims;
  for (const auto& [key, val] : j["dims"].items()) {
    if (!val.is_number_integer() || val.get<int>() < 0)
      throw JsonParseError("dimensions must be nonnegative integers");
    try {
      dims[std::stoi(key)] = val.get<int>();
    } catch (const std::exception&) {
      throw JsonParseError("bad degree key '" + key + "'");
    }
  }
  return GradedVS(std::move(dims));
}

json graded_map_to_json(const GradedMap& m) {
  json blocks = json::object();
  for (const auto& [d, b] : m.stored_blocks()) blocks[std::to_string(d)] = matrix_to_json(b);
  return blocks;
}

GradedMap parse_graded_map(const json& j, const GradedVS& source, const GradedVS& target) {
  if (!j.is_object()) throw JsonParseError("graded map must be an object of degree -> matrix");
  std::map<int, RatMatrix> blocks;
  for (const auto& [key, val] : j.items()) {
    int d = 0;
    try {
      d = std::stoi(key);
    } catch (const std::exception&) {
      throw JsonParseError("bad degree key '" + key + "'");
    }
    blocks.emplace(d, parse_matrix(val, target.dim(d), source.dim(d)));
  }
  try {
    return GradedMap(source, target, std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw JsonParseError(e.what());
  }
}

json block0_to_json(const Block0Object& b) {
  return json{{"psi", graded_vs_to_json(b.psi())},
              {"phi", graded_vs_to_json(b.phi())},
              {"var", graded_map_to_json(b.var())},
              {"can", graded_map_to_json(b.can())}};
}

Block0Object parse_block0(const json& j) {
  if (!j.is_object() || !j.contains("psi") || !j.contains("phi"))
    throw JsonParseError("regular block needs \"psi\" and \"phi\"");
  const GradedVS psi = parse_graded_vs(j["psi"]);
  const GradedVS phi = parse_graded_vs(j["phi"]);
  const GradedMap var = parse_graded_map(j.value("var", json::object()), phi, psi.shift(-1));
  const GradedMap can = parse_graded_map(j.value("can", json::object()), psi, phi.shift(-1));
  try {
    return Block0Object(psi, phi, var, can);
  } catch (const std::invalid_argument& e) {
    throw JsonParseError(e.what());
  }
}

}  // namespace

std::string to_json(const DiagramResult& d) {
  if (d.is_zero()) return dump(json{{"zero", true}});
  return to_json(d.diagram());
}

std::string to_json(const PlanarMatching& d) {
  return dump(json{{"bottom", d.bottom_points()}, {"top", d.top_points()},
                   {"pairs", pairs_to_json(d)}});
}

DiagramResult parse_diagram(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object()) throw JsonParseError("diagram must be a JSON object");
  if (j.value("zero", false)) return DiagramResult::zero();
  const int bottom = require_int(j, "bottom");
  const int top = require_int(j, "top");
  if (!j.contains("pairs")) throw JsonParseError("diagram needs \"pairs\"");
  try {
    return DiagramResult(PlanarMatching(bottom, top, parse_pairs(j["pairs"])));
  } catch (const std::invalid_argument& e) {
    throw JsonParseError(e.what());
  }
}

std::string to_json(const HomElement& h) {
  json terms = json::array();
  for (const auto& [d, c] : h.terms())
    terms.push_back(json{{"coeff", c.str()}, {"pairs", pairs_to_json(d)}});
  return dump(json{{"m", h.source_power()}, {"n", h.target_power()}, {"terms", terms}});
}

HomElement parse_hom_element(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object()) throw JsonParseError("hom element must be a JSON object");
  const int m = require_int(j, "m");
  const int n = require_int(j, "n");
  HomElement out = HomElement::zero(m, n);
  if (!j.contains("terms") || !j["terms"].is_array())
    throw JsonParseError("hom element needs a \"terms\" array");
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string() || !t.contains("pairs"))
      throw JsonParseError("each term needs \"coeff\" and \"pairs\"");
    try {
      out += HomElement::single(PlanarMatching(m, n, parse_pairs(t["pairs"])),
                                Rational::parse(t["coeff"].get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw JsonParseError(e.what());
    }
  }
  return out;
}

std::string to_json(const Crystal& c) {
  json elements = json::array();
  json e_map = json::object(), f_map = json::object();
  for (const auto& l : c.labels()) {
    elements.push_back(json{{"id", l}, {"wt", c.wt(l)}});
    if (auto e = c.e(l)) e_map[l] = *e;
    if (auto f = c.f(l)) f_map[l] = *f;
  }
  return dump(json{{"elements", elements}, {"e", e_map}, {"f", f_map}});
}

Crystal parse_crystal(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw JsonParseError("crystal needs an \"elements\" array");
  CrystalData data;
  std::map<std::string, std::size_t> at;
  for (const auto& el : j["elements"]) {
    if (!el.is_object() || !el.contains("id") || !el["id"].is_string())
      throw JsonParseError("each element needs a string \"id\"");
    CrystalData::Element e;
    e.label = el["id"].get<std::string>();
    e.wt = require_int(el, "wt");
    if (at.count(e.label)) throw JsonParseError("duplicate element '" + e.label + "'");
    at[e.label] = data.elements.size();
    data.elements.push_back(std::move(e));
  }
  auto read_map = [&](const char* key, bool raising) {
    if (!j.contains(key)) return;
    if (!j[key].is_object()) throw JsonParseError(std::string("\"") + key + "\" must be an object");
    for (const auto& [from, to] : j[key].items()) {
      if (!to.is_string()) throw JsonParseError("map targets must be element ids");
      if (!at.count(from) || !at.count(to.get<std::string>()))
        throw JsonParseError("map references unknown element");
      if (raising)
        data.elements[at[from]].e_to = to.get<std::string>();
      else
        data.elements[at[from]].f_to = to.get<std::string>();
    }
  };
  read_map("e", true);
  read_map("f", false);
  // recompute eps/phi from the string lengths (capped walks; validate()
  // reports any cycle as an axiom (5) failure)
  const int cap = static_cast<int>(data.elements.size());
  auto walk = [&](std::size_t start, bool raising) {
    int steps = 0;
    std::size_t cur = start;
    while (steps < cap) {
      const auto& next =
          raising ? data.elements[cur].e_to : data.elements[cur].f_to;
      if (!next) break;
      cur = at[*next];
      ++steps;
    }
    return steps;
  };
  for (std::size_t i = 0; i < data.elements.size(); ++i) {
    data.elements[i].eps = walk(i, true);
    data.elements[i].phi = walk(i, false);
  }
  try {
    return Crystal(std::move(data));
  } catch (const std::invalid_argument& e) {
    throw JsonParseError(e.what());
  }
}

std::string to_json(const CQObject& o) {
  json mult = json::object();
  for (const auto& [n, labels] : o.mult()) mult[std::to_string(n)] = labels;
  return dump(json{{"mult", mult}});
}

std::string to_json(const CQMorphism& m) {
  json blocks = json::object();
  for (const auto& [n, b] : m.stored_blocks()) blocks[std::to_string(n)] = matrix_to_json(b);
  return dump(json{{"blocks", blocks}});
}

std::string to_json(const GradedVS& v) { return dump(graded_vs_to_json(v)); }

std::string to_json(const OZObject& x) {
  json blocks = json::object();
  if (!x.singular().is_zero()) blocks["-1"] = graded_vs_to_json(x.singular());
  for (const auto& [k, b] : x.stored_regular()) blocks[std::to_string(k)] = block0_to_json(b);
  return dump(json{{"blocks", blocks}});
}

OZObject parse_oz_object(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_object())
    throw JsonParseError("graded category object needs a \"blocks\" object");
  GradedVS singular;
  std::map<int, Block0Object> regular;
  for (const auto& [key, val] : j["blocks"].items()) {
    int k = 0;
    try {
      k = std::stoi(key);
    } catch (const std::exception&) {
      throw JsonParseError("bad block key '" + key + "'");
    }
    if (k == -1)
      singular = parse_graded_vs(val);
    else if (k >= 0)
      regular.emplace(k, parse_block0(val));
    else
      throw JsonParseError("block indices are -1 or nonnegative");
  }
  try {
    return OZObject(std::move(singular), std::move(regular));
  } catch (const std::invalid_argument& e) {
    throw JsonParseError(e.what());
  }
}

std::string to_json(const OZMorphism& m) {
  json blocks = json::object();
  if (!m.singular_map().is_zero()) blocks["-1"] = graded_map_to_json(m.singular_map());
  for (int k = 0; k <= std::max(m.source().max_regular_block(),
                                m.target().max_regular_block()); ++k) {
    const Block0Morphism bm = m.regular_map(k);
    if (bm.is_zero()) continue;
    blocks[std::to_string(k)] = json{{"psi", graded_map_to_json(bm.f_psi())},
                                     {"phi", graded_map_to_json(bm.f_phi())}};
  }
  return dump(json{{"blocks", blocks}});
}

}  // namespace sl2cat
