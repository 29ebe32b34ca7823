#include "sl2cat/karoubi.hpp"

#include <stdexcept>

#include "sl2cat/crystal_q.hpp"
#include "sl2cat/rat_matrix.hpp"

namespace sl2cat {

namespace {

bool is_idempotent(const HomElement& e) {
  return e.source_power() == e.target_power() && compose_linear(e, e) == e;
}

}  // namespace

CSummand::CSummand(int power, HomElement idempotent)
    : power_(power), idem_(std::move(idempotent)) {
  if (idem_.source_power() != power_ || idem_.target_power() != power_)
    throw std::invalid_argument("CSummand: idempotent shape does not match the power");
  if (!is_idempotent(idem_))
    throw std::invalid_argument("CSummand: endomorphism is not idempotent");
}

CObject CObject::power(int m) { return CObject({CSummand(m, HomElement::identity(m))}); }

CMorphism::CMorphism(CObject source, CObject target,
                     std::vector<std::vector<HomElement>> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  const auto& ss = source_.summands();
  const auto& ts = target_.summands();
  if (blocks_.size() != ts.size())
    throw std::invalid_argument("CMorphism: block row count mismatch");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (blocks_[i].size() != ss.size())
      throw std::invalid_argument("CMorphism: block column count mismatch");
    for (std::size_t j = 0; j < ss.size(); ++j) {
      const HomElement& f = blocks_[i][j];
      if (f.source_power() != ss[j].power() || f.target_power() != ts[i].power())
        throw std::invalid_argument("CMorphism: block shape mismatch");
      // Karoubi condition: e' f = f = f e
      if (compose_linear(ts[i].idempotent(), f) != f ||
          compose_linear(f, ss[j].idempotent()) != f)
        throw std::invalid_argument("CMorphism: block not compressed by the idempotents");
    }
  }
}

CMorphism CMorphism::identity(const CObject& o) {
  const auto& ss = o.summands();
  std::vector<std::vector<HomElement>> blocks;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    std::vector<HomElement> row;
    for (std::size_t j = 0; j < ss.size(); ++j)
      row.push_back(i == j ? ss[i].idempotent()
                           : HomElement::zero(ss[j].power(), ss[i].power()));
    blocks.push_back(std::move(row));
  }
  return CMorphism(o, o, std::move(blocks));
}

CMorphism CMorphism::zero(const CObject& source, const CObject& target) {
  std::vector<std::vector<HomElement>> blocks;
  for (const auto& t : target.summands()) {
    std::vector<HomElement> row;
    for (const auto& s : source.summands())
      row.push_back(HomElement::zero(s.power(), t.power()));
    blocks.push_back(std::move(row));
  }
  return CMorphism(source, target, std::move(blocks));
}

bool CMorphism::is_zero() const {
  for (const auto& row : blocks_)
    for (const auto& b : row)
      if (!b.is_zero()) return false;
  return true;
}

CMorphism& CMorphism::operator+=(const CMorphism& o) {
  if (source_ != o.source_ || target_ != o.target_)
    throw std::invalid_argument("CMorphism: shape mismatch in addition");
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) blocks_[i][j] += o.blocks_[i][j];
  return *this;
}

bool operator==(const CMorphism& a, const CMorphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.blocks_ == b.blocks_;
}

CMorphism compose(const CMorphism& g, const CMorphism& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("compose: CMorphism shapes do not match");
  const auto& mid = g.source().summands();
  std::vector<std::vector<HomElement>> blocks;
  for (std::size_t i = 0; i < g.target().summands().size(); ++i) {
    std::vector<HomElement> row;
    for (std::size_t j = 0; j < f.source().summands().size(); ++j) {
      HomElement acc = HomElement::zero(f.source().summands()[j].power(),
                                        g.target().summands()[i].power());
      for (std::size_t k = 0; k < mid.size(); ++k)
        acc += compose_linear(g.block(static_cast<int>(i), static_cast<int>(k)),
                              f.block(static_cast<int>(k), static_cast<int>(j)));
      row.push_back(std::move(acc));
    }
    blocks.push_back(std::move(row));
  }
  return CMorphism(f.source(), g.target(), std::move(blocks));
}

std::pair<CMorphism, CMorphism> split_idempotent(const HomElement& e) {
  if (!is_idempotent(e))
    throw std::invalid_argument("split_idempotent: input is not idempotent");
  const int m = e.source_power();
  const CObject host = CObject::power(m);
  const CObject summand(e.is_zero() ? std::vector<CSummand>{}
                                    : std::vector<CSummand>{CSummand(m, e)});
  if (e.is_zero())
    return {CMorphism::zero(host, summand), CMorphism::zero(summand, host)};
  CMorphism projection(host, summand, {{e}});
  CMorphism inclusion(summand, host, {{e}});
  return {std::move(projection), std::move(inclusion)};
}

std::vector<std::pair<int, HomElement>> decompose_object(int m) {
  const auto basis = hom_basis(m, m);
  const CQObject& obj = cq_power_object(m);

  // flatten the endomorphism algebra: one column per basis matching
  std::vector<int> weights;
  for (const auto& [n, ls] : obj.mult()) weights.push_back(n);
  const int total = obj.end_dimension();
  RatMatrix mat(total, static_cast<int>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const CQMorphism img = functor_from_c(HomElement::single(basis[col]));
    int off = 0;
    for (const int n : weights) {
      const RatMatrix b = img.block(n);
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
          mat.at(off + r * b.cols() + c, static_cast<int>(col)) = b.at(r, c);
      off += b.rows() * b.cols();
    }
  }

  // right-hand sides: one coordinate projection per multiplicity label
  std::vector<std::pair<int, int>> tags;  // (weight, position)
  for (const int n : weights)
    for (int p = 0; p < obj.dim(n); ++p) tags.push_back({n, p});
  RatMatrix rhs(total, static_cast<int>(tags.size()));
  {
    int col = 0;
    for (const auto& [n, p] : tags) {
      int off = 0;
      for (const int w : weights) {
        if (w == n) rhs.at(off + p * obj.dim(w) + p, col) = Rational(1);
        off += obj.dim(w) * obj.dim(w);
      }
      ++col;
    }
  }

  const auto solved = solve_linear(mat, rhs);
  if (!solved)
    throw std::logic_error("decompose_object: projection is not in the functor image");

  std::vector<std::pair<int, HomElement>> out;
  for (std::size_t t = 0; t < tags.size(); ++t) {
    HomElement e = HomElement::zero(m, m);
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const Rational c = solved->at(static_cast<int>(col), static_cast<int>(t));
      if (!c.is_zero()) e += HomElement::single(basis[col], c);
    }
    out.push_back({tags[t].first, std::move(e)});
  }
  return out;
}

}  // namespace sl2cat
