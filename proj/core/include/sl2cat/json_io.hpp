#pragma once

#include <stdexcept>
#include <string>

#include "sl2cat/crystal.hpp"
#include "sl2cat/crystal_q.hpp"
#include "sl2cat/graded_o.hpp"
#include "sl2cat/hom_element.hpp"
#include "sl2cat/planar_matching.hpp"

namespace sl2cat {

/// Raised on malformed input; the CLI maps it to exit code 2.
class JsonParseError : public std::runtime_error {
public:
  explicit JsonParseError(const std::string& what) : std::runtime_error(what) {}
};

// Diagrams: {"bottom": m, "top": n, "pairs": [["b0","t1"], ...]};
// the zero morphism is {"zero": true}.
std::string to_json(const DiagramResult& d);
std::string to_json(const PlanarMatching& d);
DiagramResult parse_diagram(const std::string& text);

// {"m":2,"n":2,"terms":[{"coeff":"1/2","pairs":[...]}]}
std::string to_json(const HomElement& h);
HomElement parse_hom_element(const std::string& text);

// {"elements":[{"id":"v1","wt":1}],"e":{...},"f":{...}};
// eps and phi are recomputed from the string lengths on load.
std::string to_json(const Crystal& c);
Crystal parse_crystal(const std::string& text);

// {"mult":{"0":["a"],"2":["b"]}}
std::string to_json(const CQObject& o);
// {"blocks":{"1":[["1","1"]]}}
std::string to_json(const CQMorphism& m);

// {"dims":{"0":1}}
std::string to_json(const GradedVS& v);

// {"blocks":{"-1":{"dims":...},"0":{"psi":...,"phi":...,"var":...,"can":...}}};
// var and can are per-degree matrices of rational strings.
std::string to_json(const OZObject& x);
OZObject parse_oz_object(const std::string& text);

// {"blocks":{"-1":{...per-degree matrices...},"0":{"psi":{...},"phi":{...}}}}
std::string to_json(const OZMorphism& m);

}  // namespace sl2cat
