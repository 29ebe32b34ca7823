#pragma once

#include <optional>
#include <vector>

#include "sl2cat/rational.hpp"

namespace sl2cat {

/// Dense matrix over exact rationals. Everything here stays small (at most a
/// few hundred rows), so no attempt is made at sparsity or fraction-free
/// pivoting tricks.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols);
  RatMatrix(int rows, int cols, std::vector<Rational> entries);

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& at(int i, int j) const;
  Rational& at(int i, int j);

  bool is_zero() const;
  bool is_identity() const;

  RatMatrix transpose() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& c, RatMatrix m);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
  int rows_, cols_;
  std::vector<Rational> data_;  // row-major
};

struct RrefResult {
  RatMatrix reduced;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form via Gauss-Jordan elimination. Row space is
/// preserved; applying rref twice is a fixed point.
RrefResult rref(const RatMatrix& m);

int rank(const RatMatrix& m);

/// Basis of the right null space {x : Mx = 0}, one column vector per free
/// column of rref(M). Size is always cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

/// Solves Ax = b exactly; empty when b is not in the column space of A.
std::optional<std::vector<Rational>> solve_linear(const RatMatrix& a,
                                                  const std::vector<Rational>& b);

/// Columnwise multi-right-hand-side solve: AX = B. Empty when any column of B
/// lies outside the image of A.
std::optional<RatMatrix> solve_linear(const RatMatrix& a, const RatMatrix& b);

}  // namespace sl2cat
