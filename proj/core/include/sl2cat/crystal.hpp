#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sl2cat/planar_matching.hpp"

namespace sl2cat {

/// Raw crystal data, unvalidated. Used for construction from JSON and for
/// injecting defects in tests; run validate() to obtain the axiom report.
struct CrystalData {
  struct Element {
    std::string label;
    int wt = 0;
    int eps = 0;
    int phi = 0;
    std::optional<std::string> e_to;
    std::optional<std::string> f_to;
  };
  std::vector<Element> elements;
};

struct AxiomViolation {
  int axiom;  // 1..5, or 0 for structural problems (bad labels, cycles)
  std::string element;
  std::string detail;
};

/// Finite normal sl2-crystal: a finite set with weight function, string
/// lengths eps/phi, and partial raising/lowering maps e, f. Element order is
/// part of the data and fixes all derived orderings downstream.
class Crystal {
public:
  explicit Crystal(CrystalData data);

  /// The (n+1)-element string crystal v_n, v_{n-2}, ..., v_{-n} with
  /// wt(v_k) = k and e(v_k) = v_{k+2} (absent at k = n).
  static Crystal b(int n);

  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_element(const std::string& label) const;

  int wt(const std::string& label) const;
  int eps(const std::string& label) const;
  int phi(const std::string& label) const;
  std::optional<std::string> e(const std::string& label) const;
  std::optional<std::string> f(const std::string& label) const;

  /// k-fold application of e or f; empty when the string runs out.
  std::optional<std::string> e_power(const std::string& label, int k) const;
  std::optional<std::string> f_power(const std::string& label, int k) const;

  /// Checks axioms (1)-(5) for every element; empty report means valid.
  std::vector<AxiomViolation> validate() const;
  bool is_valid() const { return validate().empty(); }

  CrystalData data() const;

  friend bool operator==(const Crystal& a, const Crystal& b);
  friend bool operator!=(const Crystal& a, const Crystal& b) { return !(a == b); }

private:
  struct Elem {
    std::string label;
    int wt, eps, phi;
    int e_to, f_to;  // element indices, -1 = absent
  };
  std::vector<Elem> elems_;
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;

  int idx(const std::string& label) const;
};

/// Kashiwara tensor product. The underlying set is the product, elements
/// labelled "a⊗b"; since the label glue is associative, (A⊗B)⊗C and
/// A⊗(B⊗C) are literally equal crystals.
Crystal tensor(const Crystal& a, const Crystal& b);

/// m-fold tensor power of b; the empty power is the unit crystal b(0).
Crystal tensor_power(const Crystal& b, int m);

/// Disjoint union; labels gain a "<summand>:" prefix to stay unique.
Crystal direct_sum(const std::vector<Crystal>& parts);

/// Renames every element; the map must be injective and total.
Crystal relabel(const Crystal& c, const std::map<std::string, std::string>& names);

/// Where an element sits in the isotypic decomposition: the f^k image of the
/// copy-th highest-weight element of weight n.
struct CrystalAddress {
  int n;
  int copy;
  int k;
  friend bool operator==(const CrystalAddress&, const CrystalAddress&) = default;
};

struct Decomposition {
  /// n -> highest-weight element labels of weight n, in element order.
  std::map<int, std::vector<std::string>> hw;
  std::map<std::string, CrystalAddress> address;
};

/// Isotypic decomposition of a valid crystal. Every element receives a
/// unique address along the f-strings of the highest-weight elements.
Decomposition decompose(const Crystal& c);

/// Map of crystals A -> B: a set map to B ⊔ {0} strictly commuting with e
/// and f (zero absorbing) and preserving wt, eps, phi on surviving elements.
class CrystalMorphism {
public:
  CrystalMorphism(Crystal source, Crystal target,
                  std::map<std::string, std::string> assignment);

  static CrystalMorphism zero(Crystal source, Crystal target);
  static CrystalMorphism identity(const Crystal& c);

  const Crystal& source() const { return source_; }
  const Crystal& target() const { return target_; }

  /// Image of an element; empty means it is killed.
  std::optional<std::string> image(const std::string& label) const;
  bool is_zero() const { return assign_.empty(); }

  /// Equivariance and stat-preservation violations; empty means valid.
  std::vector<std::string> violations() const;
  bool is_valid() const { return violations().empty(); }

  friend bool operator==(const CrystalMorphism& a, const CrystalMorphism& b);
  friend bool operator!=(const CrystalMorphism& a, const CrystalMorphism& b) { return !(a == b); }

private:
  Crystal source_, target_;
  std::map<std::string, std::string> assign_;  // absent key = killed
};

CrystalMorphism compose(const CrystalMorphism& g, const CrystalMorphism& f);
CrystalMorphism tensor(const CrystalMorphism& f, const CrystalMorphism& g);

/// Every morphism A -> B, the zero morphism included, in a deterministic
/// order. The count is prod_n (|W_n| + 1)^{|V_n|} over the decompositions.
std::vector<CrystalMorphism> hom_enumerate(const Crystal& a, const Crystal& b);

/// Number of morphisms A -> B excluding zero.
long long hom_count_nonzero(const Crystal& a, const Crystal& b);

/// Interprets a diagram F^m -> F^n as a crystal morphism
/// b(1)^{⊗m} -> b(1)^{⊗n}: cups insert the pair v_{-1}⊗v_1, caps contract it
/// (killing every other pair), the zero diagram gives the zero morphism.
CrystalMorphism eval_diagram(const DiagramResult& d, int m, int n);
CrystalMorphism eval_diagram(const PlanarMatching& d);

/// DOT digraph of the lowering structure: one node per element (labelled
/// with wt, eps, phi), one edge per f-arrow, in element order.
std::string to_dot(const Crystal& c, const std::string& name = "crystal");

}  // namespace sl2cat
