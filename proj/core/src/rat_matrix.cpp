#include "sl2cat/rat_matrix.hpp"

#include <stdexcept>

namespace sl2cat {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative shape");
  data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RatMatrix::RatMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative shape");
  if (data_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("RatMatrix: entry count does not match shape");
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

const Rational& RatMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("RatMatrix::at");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

Rational& RatMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("RatMatrix::at");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool RatMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("RatMatrix: shape mismatch in addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("RatMatrix: shape mismatch in subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("RatMatrix: shape mismatch in product");
  RatMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

RatMatrix operator*(const Rational& c, RatMatrix m) {
  for (auto& x : m.data_) x *= c;
  return m;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
    int pivot = -1;
    for (int i = lead; i < r.rows(); ++i)
      if (!r.at(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(pivot, j), r.at(lead, j));
    const Rational inv = Rational(1) / r.at(lead, col);
    for (int j = 0; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead || r.at(i, col).is_zero()) continue;
      const Rational f = r.at(i, col);
      for (int j = 0; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

int rank(const RatMatrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  const auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : rr.pivot_cols) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = Rational(1);
    for (std::size_t row = 0; row < rr.pivot_cols.size(); ++row)
      v[rr.pivot_cols[row]] = -rr.reduced.at(static_cast<int>(row), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_linear(const RatMatrix& a,
                                                  const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve_linear: rhs size does not match row count");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  const auto rr = rref(aug);
  for (int p : rr.pivot_cols)
    if (p == a.cols()) return std::nullopt;  // inconsistent system
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t row = 0; row < rr.pivot_cols.size(); ++row)
    x[rr.pivot_cols[row]] = rr.reduced.at(static_cast<int>(row), a.cols());
  return x;
}

std::optional<RatMatrix> solve_linear(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_linear: rhs row count mismatch");
  RatMatrix x(a.cols(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    std::vector<Rational> col(b.rows());
    for (int i = 0; i < b.rows(); ++i) col[static_cast<std::size_t>(i)] = b.at(i, j);
    auto sol = solve_linear(a, col);
    if (!sol) return std::nullopt;
    for (int i = 0; i < a.cols(); ++i) x.at(i, j) = (*sol)[static_cast<std::size_t>(i)];
  }
  return x;
}

}  // namespace sl2cat
