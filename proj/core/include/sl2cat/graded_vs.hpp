#pragma once

#include <map>
#include <vector>

#include "sl2cat/rat_matrix.hpp"

namespace sl2cat {

/// Finite dimensional graded vector space over exact rationals: a finitely
/// supported map degree -> dimension with implicit standard bases.
class GradedVS {
public:
  GradedVS() = default;
  explicit GradedVS(std::map<int, int> dims);

  static GradedVS line(int degree, int dim = 1);

  int dim(int degree) const;
  int total_dim() const;
  bool is_zero() const { return dims_.empty(); }
  const std::map<int, int>& dims() const { return dims_; }
  std::vector<int> degrees() const;

  /// Degree shift: component i of shift(n) is component i - n of this.
  GradedVS shift(int n) const;

  friend bool operator==(const GradedVS& a, const GradedVS& b) { return a.dims_ == b.dims_; }
  friend bool operator!=(const GradedVS& a, const GradedVS& b) { return !(a == b); }

private:
  std::map<int, int> dims_;  // only positive entries
};

GradedVS direct_sum(const std::vector<GradedVS>& parts);

/// Degree-preserving linear map, one rational matrix per degree (absent
/// means zero). Stored blocks are always nonzero and of matching shape.
class GradedMap {
public:
  GradedMap(GradedVS source, GradedVS target);
  GradedMap(GradedVS source, GradedVS target, std::map<int, RatMatrix> blocks);

  static GradedMap identity(const GradedVS& v);
  static GradedMap zero(const GradedVS& source, const GradedVS& target) {
    return GradedMap(source, target);
  }

  const GradedVS& source() const { return source_; }
  const GradedVS& target() const { return target_; }
  /// Materializes the block at a degree (zero matrix when absent).
  RatMatrix block(int degree) const;
  const std::map<int, RatMatrix>& stored_blocks() const { return blocks_; }
  bool is_zero() const { return blocks_.empty(); }

  /// f<n>: source<n> -> target<n>, block at degree i taken from degree i - n.
  GradedMap shift(int n) const;

  GradedMap& operator+=(const GradedMap& o);
  friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
  friend GradedMap operator*(const Rational& c, const GradedMap& m);
  friend bool operator==(const GradedMap& a, const GradedMap& b);
  friend bool operator!=(const GradedMap& a, const GradedMap& b) { return !(a == b); }

private:
  GradedVS source_, target_;
  std::map<int, RatMatrix> blocks_;
};

GradedMap compose(const GradedMap& g, const GradedMap& f);

/// Canonical injection of / projection onto part j of a direct sum.
GradedMap gvs_injection(const std::vector<GradedVS>& parts, int j);
GradedMap gvs_projection(const std::vector<GradedVS>& parts, int j);

/// Block-diagonal sum of maps between the summed spaces.
GradedMap direct_sum_maps(const std::vector<GradedMap>& maps);

/// dim Hom(V, W) for degree-preserving maps: sum over i of dim V_i * dim W_i.
int graded_hom_dim(const GradedVS& v, const GradedVS& w);

}  // namespace sl2cat
