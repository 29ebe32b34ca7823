#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2cat/crystal.hpp"
#include "sl2cat/karoubi.hpp"
#include "sl2cat/rat_matrix.hpp"

namespace sl2cat {

/// Object of the rational multiplicity-set category: a family of finite
/// ordered label sets V_n, finitely many nonempty. The ordering is part of
/// the data; it fixes the matrix bases of every morphism.
class CQObject {
public:
  CQObject() = default;
  explicit CQObject(std::map<int, std::vector<std::string>> mult);

  static CQObject unit();  // V_0 a singleton

  const std::map<int, std::vector<std::string>>& mult() const { return mult_; }
  const std::vector<std::string>& labels(int n) const;
  int dim(int n) const;
  /// Sum over n of dim(n)^2: the dimension of the endomorphism algebra.
  int end_dimension() const;

  friend bool operator==(const CQObject& a, const CQObject& b) { return a.mult_ == b.mult_; }
  friend bool operator!=(const CQObject& a, const CQObject& b) { return !(a == b); }

private:
  std::map<int, std::vector<std::string>> mult_;
};

/// Morphism: one exact rational matrix per weight, rows indexed by the
/// target labels and columns by the source labels. Missing weights are zero.
class CQMorphism {
public:
  CQMorphism(CQObject source, CQObject target);
  CQMorphism(CQObject source, CQObject target, std::map<int, RatMatrix> blocks);

  static CQMorphism identity(const CQObject& o);
  static CQMorphism zero(const CQObject& source, const CQObject& target) {
    return CQMorphism(source, target);
  }

  const CQObject& source() const { return source_; }
  const CQObject& target() const { return target_; }
  /// Materializes the block at weight n (zero matrix when absent).
  RatMatrix block(int n) const;
  const std::map<int, RatMatrix>& stored_blocks() const { return blocks_; }
  bool is_zero() const { return blocks_.empty(); }

  CQMorphism& operator+=(const CQMorphism& o);
  friend CQMorphism operator+(CQMorphism a, const CQMorphism& b) { return a += b; }
  friend CQMorphism operator*(const Rational& c, const CQMorphism& m);
  friend bool operator==(const CQMorphism& a, const CQMorphism& b);
  friend bool operator!=(const CQMorphism& a, const CQMorphism& b) { return !(a == b); }

private:
  CQObject source_, target_;
  std::map<int, RatMatrix> blocks_;
};

CQMorphism compose(const CQMorphism& g, const CQMorphism& f);

/// Multiplicity sets of a crystal: V_n = highest-weight elements of weight n.
CQObject from_crystal(const Crystal& b);

/// 0/1 matrices of a set-level morphism: entry (w, v) = 1 iff the morphism
/// sends the highest-weight element v to w.
CQMorphism from_crystal_morphism(const CrystalMorphism& beta);

/// V_{ij}^k: highest-weight labels of weight k in b(i)⊗b(j). Memoized;
/// nonempty exactly on the Clebsch-Gordan range |i-j| <= k <= i+j with
/// k = i+j (mod 2), always a singleton there.
const std::map<int, std::vector<std::string>>& multiplicity_table(int i, int j);

/// Tensor product of objects: U_l = ⊔_{i,j} V_i × W_j × V_{ij}^l with labels
/// "a,b,t", ordered lexicographically in (i, j, position of a, position of
/// b, position of t).
CQObject tensor_objects(const CQObject& a, const CQObject& b);

/// Tensor product of morphisms: blockwise f_i ⊗ g_j ⊗ id on each (i, j, l)
/// component, assembled over the disjoint-union label order.
CQMorphism tensor_morphisms(const CQMorphism& f, const CQMorphism& g);

/// The canonical identification tensor_objects(G(A), G(B)) ≅ G(A⊗B) as an
/// invertible 0/1 morphism; the triple (a, b, t) with t = v_x⊗v_y goes to
/// f^s(a) ⊗ f^r(b), the highest-weight element it names inside A⊗B.
CQMorphism tensor_identification(const Crystal& a, const Crystal& b);

/// The associator data φ^l_{ijk}: for each weight l, a bijection between
/// the two bracketed multiplicity sets, matched through the strictly
/// associative triple tensor crystal.
struct AssociatorEntry {
  int alpha;          // weight of the inner pair on the left-bracketed side
  std::string t1, t2; // t1 in V_ij^alpha, t2 in V_{alpha k}^l
  int beta;           // weight of the inner pair on the right-bracketed side
  std::string u1, u2; // u1 in V_{i beta}^l, u2 in V_jk^beta
  std::string flat;   // the highest-weight word both sides name
};
using Associator = std::map<int, std::vector<AssociatorEntry>>;

Associator associator(int i, int j, int k);

/// Pentagon coherence for the associator bijections: the two composite
/// relabelings ((ij)k)l -> i(j(kl)) agree on every weight component.
bool pentagon_check(int i, int j, int k, int l);

/// Image of F^m under the evaluation functor: the multiplicity sets of
/// b(1)^{⊗m}. Cached.
const CQObject& cq_power_object(int m);

/// The faithful monoidal functor from the linearized diagram category:
/// each matching is evaluated as a crystal morphism, converted to matrices,
/// and the result extended ℚ-linearly.
CQMorphism functor_from_c(const HomElement& h);

/// Image of an idempotent: an object W with incl: W -> source and
/// proj: source -> W satisfying incl∘proj = e and proj∘incl = id.
struct SplitImage {
  CQObject object;
  CQMorphism inclusion;
  CQMorphism projection;
};
SplitImage image_object(const CQMorphism& idempotent, const std::string& label_prefix = "im");

/// Functor on Karoubi morphisms: blockwise compression between the images
/// of the block idempotents.
CQMorphism functor_from_c(const CMorphism& f);

struct EquivalencePair {
  int m, n;
  long long dim_diagrams;   // matching count
  long long dim_cq;         // hom dimension in the multiplicity model
  int functor_rank;         // rank of the functor matrix on the hom basis
  bool ok;
};

struct EquivalenceReport {
  std::vector<EquivalencePair> pairs;
  bool essential_surjectivity_ok;
  bool ok;
};

/// Checks, for all m + n <= bound: hom dimensions agree and the functor
/// matrix on the hom bases is invertible; essential surjectivity is
/// witnessed by decompose_object hitting every b(n), n <= bound.
EquivalenceReport verify_equivalence(int bound);

}  // namespace sl2cat
