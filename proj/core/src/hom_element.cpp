#include "sl2cat/hom_element.hpp"

#include <stdexcept>

namespace sl2cat {

HomElement::HomElement(int m, int n, std::map<PlanarMatching, Rational> coeffs)
    : m_(m), n_(n), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->first.bottom_points() != m_ || it->first.top_points() != n_)
      throw std::invalid_argument("HomElement: matching of wrong shape in support");
    if (it->second.is_zero())
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

HomElement HomElement::identity(int m) { return single(PlanarMatching::identity(m)); }

HomElement HomElement::single(const PlanarMatching& d, const Rational& c) {
  std::map<PlanarMatching, Rational> coeffs;
  if (!c.is_zero()) coeffs[d] = c;
  return HomElement(d.bottom_points(), d.top_points(), std::move(coeffs));
}

HomElement HomElement::from_diagram(const DiagramResult& d, int m, int n) {
  if (d.is_zero()) return zero(m, n);
  return single(d.diagram());
}

Rational HomElement::coefficient(const PlanarMatching& d) const {
  const auto it = coeffs_.find(d);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

HomElement& HomElement::operator+=(const HomElement& o) {
  if (m_ != o.m_ || n_ != o.n_)
    throw std::invalid_argument("HomElement: shape mismatch in addition");
  for (const auto& [d, c] : o.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

HomElement& HomElement::operator-=(const HomElement& o) {
  return *this += Rational(-1) * o;
}

HomElement operator*(const Rational& c, const HomElement& h) {
  HomElement out(h.m_, h.n_);
  if (c.is_zero()) return out;
  for (const auto& [d, x] : h.coeffs_) out.coeffs_[d] = c * x;
  return out;
}

bool operator==(const HomElement& a, const HomElement& b) {
  return a.m_ == b.m_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

std::vector<PlanarMatching> hom_basis(int m, int n) { return enumerate_matchings(m, n); }

HomElement compose_linear(const HomElement& g, const HomElement& f) {
  if (f.target_power() != g.source_power())
    throw std::invalid_argument("compose_linear: shapes not composable");
  HomElement out(f.source_power(), g.target_power());
  for (const auto& [dg, cg] : g.terms())
    for (const auto& [df, cf] : f.terms()) {
      const DiagramResult r = compose(dg, df);
      if (!r.is_zero()) out += HomElement::single(r.diagram(), cg * cf);
    }
  return out;
}

HomElement tensor_linear(const HomElement& f, const HomElement& g) {
  HomElement out(f.source_power() + g.source_power(), f.target_power() + g.target_power());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms())
      out += HomElement::single(tensor(df, dg), cf * cg);
  return out;
}

}  // namespace sl2cat
