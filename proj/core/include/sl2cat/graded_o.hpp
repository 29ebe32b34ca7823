#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sl2cat/graded_vs.hpp"
#include "sl2cat/hom_element.hpp"

namespace sl2cat {

/// Regular-block object: graded spaces Ψ, Φ with degree +1 maps
/// var: Φ -> Ψ<-1> and can: Ψ -> Φ<-1> satisfying var∘can = 0.
/// The constructor checks typing and the relation.
class Block0Object {
public:
  Block0Object();
  Block0Object(GradedVS psi, GradedVS phi, GradedMap var, GradedMap can);

  static Block0Object zero_object() { return Block0Object(); }

  const GradedVS& psi() const { return psi_; }
  const GradedVS& phi() const { return phi_; }
  const GradedMap& var() const { return var_; }
  const GradedMap& can() const { return can_; }
  bool is_zero() const { return psi_.is_zero() && phi_.is_zero(); }

  Block0Object shift(int n) const;

  friend bool operator==(const Block0Object& a, const Block0Object& b);
  friend bool operator!=(const Block0Object& a, const Block0Object& b) { return !(a == b); }

private:
  GradedVS psi_, phi_;
  GradedMap var_, can_;
};

Block0Object direct_sum(const std::vector<Block0Object>& parts);

/// Morphism of regular-block objects: a Ψ-component and a Φ-component
/// intertwining var and can exactly (checked at construction).
class Block0Morphism {
public:
  Block0Morphism(Block0Object source, Block0Object target, GradedMap f_psi, GradedMap f_phi);

  static Block0Morphism zero(const Block0Object& source, const Block0Object& target);
  static Block0Morphism identity(const Block0Object& o);

  const Block0Object& source() const { return source_; }
  const Block0Object& target() const { return target_; }
  const GradedMap& f_psi() const { return f_psi_; }
  const GradedMap& f_phi() const { return f_phi_; }
  bool is_zero() const { return f_psi_.is_zero() && f_phi_.is_zero(); }

  Block0Morphism& operator+=(const Block0Morphism& o);
  friend Block0Morphism operator+(Block0Morphism a, const Block0Morphism& b) { return a += b; }
  friend Block0Morphism operator*(const Rational& c, const Block0Morphism& m);
  friend bool operator==(const Block0Morphism& a, const Block0Morphism& b);
  friend bool operator!=(const Block0Morphism& a, const Block0Morphism& b) { return !(a == b); }

private:
  Block0Object source_, target_;
  GradedMap f_psi_, f_phi_;
};

Block0Morphism compose(const Block0Morphism& g, const Block0Morphism& f);
Block0Morphism b0_injection(const std::vector<Block0Object>& parts, int j);
Block0Morphism b0_projection(const std::vector<Block0Object>& parts, int j);
Block0Morphism direct_sum_maps(const std::vector<Block0Morphism>& maps);

/// Translation off the wall: π*V = (V<1>, V<2> ⊕ V, (0 id), (id 0)^T).
Block0Object pi_upper(const GradedVS& v);
Block0Morphism pi_upper(const GradedMap& g);

/// Translation onto the wall: π_* forgets down to Φ.
GradedVS pi_lower(const Block0Object& m);
GradedMap pi_lower(const Block0Morphism& m);

/// Object of the graded category: one graded vector space at the singular
/// block (index -1) and finitely many regular-block objects at k >= 0.
class OZObject {
public:
  OZObject() = default;
  OZObject(GradedVS singular, std::map<int, Block0Object> regular);

  static OZObject at_singular(GradedVS v);
  static OZObject at_block(int k, Block0Object b);

  const GradedVS& singular() const { return singular_; }
  /// Regular block k, materialized as the zero object when absent.
  Block0Object regular(int k) const;
  const std::map<int, Block0Object>& stored_regular() const { return regular_; }
  int max_regular_block() const;  // -1 when no regular block is present
  bool is_zero() const { return singular_.is_zero() && regular_.empty(); }

  OZObject shift(int n) const;

  friend bool operator==(const OZObject& a, const OZObject& b);
  friend bool operator!=(const OZObject& a, const OZObject& b) { return !(a == b); }

private:
  GradedVS singular_;
  std::map<int, Block0Object> regular_;
};

class OZMorphism {
public:
  OZMorphism(OZObject source, OZObject target, GradedMap singular,
             std::map<int, Block0Morphism> regular);

  static OZMorphism zero(const OZObject& source, const OZObject& target);
  static OZMorphism identity(const OZObject& o);

  const OZObject& source() const { return source_; }
  const OZObject& target() const { return target_; }
  const GradedMap& singular_map() const { return singular_; }
  Block0Morphism regular_map(int k) const;
  const std::map<int, Block0Morphism>& stored_regular() const { return regular_; }
  bool is_zero() const { return singular_.is_zero() && regular_.empty(); }

  OZMorphism& operator+=(const OZMorphism& o);
  friend OZMorphism operator+(OZMorphism a, const OZMorphism& b) { return a += b; }
  friend OZMorphism operator*(const Rational& c, const OZMorphism& m);
  friend bool operator==(const OZMorphism& a, const OZMorphism& b);
  friend bool operator!=(const OZMorphism& a, const OZMorphism& b) { return !(a == b); }

private:
  OZObject source_, target_;
  GradedMap singular_;
  std::map<int, Block0Morphism> regular_;
};

OZMorphism compose(const OZMorphism& g, const OZMorphism& f);

/// The translation endofunctor: block -1 of F(X) is π_*X_0, block 0 is
/// π*X_{-1} ⊕ X_1, and block k >= 1 is X_{k-1} ⊕ X_{k+1}, summands in that
/// order.
OZObject f_obj(const OZObject& x);
OZMorphism f_mor(const OZMorphism& m);
OZObject f_power_obj(const OZObject& x, int k);

/// Which copy of X_k inside F²(X)_k the unit and counit use at regular
/// blocks k >= 1; the choices at blocks -1 and 0 are forced. UpThenDown is
/// the convention that satisfies the zigzag relations; DownThenUp exists to
/// show the other uniform reading fails them.
enum class UnitConvention { UpThenDown, DownThenUp };

/// Unit X -> F²X: blockwise inclusion of X_k into the copy reached by the
/// path k -> k+1 -> k (the identity summand of π_*π* at block -1).
OZMorphism eta(const OZObject& x, UnitConvention conv = UnitConvention::UpThenDown);
/// Counit F²X -> X: projection from exactly the copies eta hits.
OZMorphism eps(const OZObject& x, UnitConvention conv = UnitConvention::UpThenDown);

struct RelationReport {
  bool ok = true;
  int checked = 0;
  std::string first_failure;
};

/// Checks, for every sample X: (i) eps∘eta = id, (ii) F(eps)∘eta_F = 0,
/// (iii) eps_F∘F(eta) = 0, as exact blockwise identities.
RelationReport verify_relations(const std::vector<OZObject>& samples,
                                UnitConvention conv = UnitConvention::UpThenDown);

/// Action of a linearized diagram morphism h: F^m -> F^n on X, as a natural
/// map F^m X -> F^n X. Each basis matching is slice-decomposed; a cup at
/// position a among w strands acts as F^a applied to eta at F^{w-a}X (the
/// leftmost strand is the outermost functor), caps likewise with eps.
OZMorphism act(const HomElement& h, const OZObject& x);

/// Basis of the space of morphisms A -> B, found by solving the exact
/// intertwining conditions degreewise.
std::vector<OZMorphism> hom_space(const OZObject& a, const OZObject& b);

struct AdjunctionReport {
  int left_block_dim = 0, left_vect_dim = 0;
  int right_vect_dim = 0, right_block_dim = 0;
  bool ok = false;
};

/// dim Hom(π*V, M) = dim Hom(V, π_*M) and
/// dim Hom(π_*M, V) = dim Hom(M, π*(V)<-2>).
AdjunctionReport adjunction_check(const GradedVS& v, const Block0Object& m);

/// Deterministic sample objects for the verification suites: every
/// single-block shape (blocks -1..4) with small graded dimensions in degrees
/// [-3, 3] and nonzero var/can where possible, padded with seeded random
/// multi-block objects up to `count`.
std::vector<OZObject> sample_objects(std::uint64_t seed, int count);

/// Random graded vector space with degrees in [-3, 3] and dims <= 3.
GradedVS random_graded_vs(std::uint64_t seed);

/// Random regular-block object: can is free, var is sampled from the exact
/// solution space of var∘can = 0.
Block0Object random_block0(std::uint64_t seed);

}  // namespace sl2cat
