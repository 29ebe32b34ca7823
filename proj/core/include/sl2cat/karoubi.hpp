#pragma once

#include <utility>
#include <vector>

#include "sl2cat/hom_element.hpp"

namespace sl2cat {

/// Object of the idempotent completion sitting inside a tensor power: a pair
/// (F^m, e) with e an idempotent endomorphism. Idempotency is checked at
/// construction.
class CSummand {
public:
  CSummand(int power, HomElement idempotent);

  int power() const { return power_; }
  const HomElement& idempotent() const { return idem_; }

  friend bool operator==(const CSummand& a, const CSummand& b) {
    return a.power_ == b.power_ && a.idem_ == b.idem_;
  }
  friend bool operator!=(const CSummand& a, const CSummand& b) { return !(a == b); }

private:
  int power_;
  HomElement idem_;
};

/// Formal finite direct sum of summands; the empty sum is the zero object.
class CObject {
public:
  CObject() = default;
  explicit CObject(std::vector<CSummand> summands) : summands_(std::move(summands)) {}

  static CObject power(int m);  // (F^m, id)

  const std::vector<CSummand>& summands() const { return summands_; }
  bool is_zero_object() const { return summands_.empty(); }

  friend bool operator==(const CObject& a, const CObject& b) {
    return a.summands_ == b.summands_;
  }
  friend bool operator!=(const CObject& a, const CObject& b) { return !(a == b); }

private:
  std::vector<CSummand> summands_;
};

/// Morphism between formal sums: a block matrix of HomElements, each block
/// (i, j) compressed by the idempotents, e_i f = f = f e_j.
class CMorphism {
public:
  CMorphism(CObject source, CObject target, std::vector<std::vector<HomElement>> blocks);

  static CMorphism identity(const CObject& o);
  static CMorphism zero(const CObject& source, const CObject& target);

  const CObject& source() const { return source_; }
  const CObject& target() const { return target_; }
  const HomElement& block(int i, int j) const { return blocks_[i][j]; }
  bool is_zero() const;

  CMorphism& operator+=(const CMorphism& o);
  friend CMorphism operator+(CMorphism a, const CMorphism& b) { return a += b; }
  friend bool operator==(const CMorphism& a, const CMorphism& b);
  friend bool operator!=(const CMorphism& a, const CMorphism& b) { return !(a == b); }

private:
  CObject source_, target_;
  std::vector<std::vector<HomElement>> blocks_;  // [target index][source index]
};

CMorphism compose(const CMorphism& g, const CMorphism& f);

/// Splits an idempotent e in End(F^m) off as the summand (F^m, e):
/// returns (projection F^m -> (F^m, e), inclusion (F^m, e) -> F^m) with
/// inclusion∘projection = e and projection∘inclusion the summand identity.
/// Throws std::invalid_argument unless e∘e = e.
std::pair<CMorphism, CMorphism> split_idempotent(const HomElement& e);

/// Complete orthogonal family of primitive idempotents of End(F^m), each
/// tagged with the highest weight of the summand it projects onto. Computed
/// by transporting the coordinate projections of the multiplicity-set model
/// back through the evaluation functor (a linear solve in the diagram
/// basis). Multiplicities match the tensor-power decomposition of L^{⊗m}.
std::vector<std::pair<int, HomElement>> decompose_object(int m);

}  // namespace sl2cat
