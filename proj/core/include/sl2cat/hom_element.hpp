#pragma once

#include <map>

#include "sl2cat/planar_matching.hpp"
#include "sl2cat/rational.hpp"

namespace sl2cat {

/// Morphism of the linearized diagram category: a finitely supported
/// ℚ-linear combination of planar matchings of a common shape (m, n).
/// Zero coefficients are never stored.
class HomElement {
public:
  HomElement(int m, int n) : m_(m), n_(n) {}
  HomElement(int m, int n, std::map<PlanarMatching, Rational> coeffs);

  static HomElement zero(int m, int n) { return HomElement(m, n); }
  static HomElement identity(int m);
  static HomElement single(const PlanarMatching& d, const Rational& c = Rational(1));
  /// Zero diagrams embed as the zero element of the given shape.
  static HomElement from_diagram(const DiagramResult& d, int m, int n);

  int source_power() const { return m_; }
  int target_power() const { return n_; }
  const std::map<PlanarMatching, Rational>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(const PlanarMatching& d) const;

  HomElement& operator+=(const HomElement& o);
  HomElement& operator-=(const HomElement& o);
  friend HomElement operator+(HomElement a, const HomElement& b) { return a += b; }
  friend HomElement operator-(HomElement a, const HomElement& b) { return a -= b; }
  friend HomElement operator*(const Rational& c, const HomElement& h);
  friend bool operator==(const HomElement& a, const HomElement& b);
  friend bool operator!=(const HomElement& a, const HomElement& b) { return !(a == b); }

private:
  int m_, n_;
  std::map<PlanarMatching, Rational> coeffs_;
};

/// Diagram basis of Hom(F^m, F^n): all planar matchings of that shape.
std::vector<PlanarMatching> hom_basis(int m, int n);

/// Bilinear extension of diagram composition; composites that die in the
/// diagram category contribute nothing.
HomElement compose_linear(const HomElement& g, const HomElement& f);

/// Bilinear extension of horizontal juxtaposition.
HomElement tensor_linear(const HomElement& f, const HomElement& g);

}  // namespace sl2cat
