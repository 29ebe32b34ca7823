#include "sl2cat/graded_vs.hpp"

#include <stdexcept>

namespace sl2cat {

GradedVS::GradedVS(std::map<int, int> dims) : dims_(std::move(dims)) {
  for (auto it = dims_.begin(); it != dims_.end();) {
    if (it->second < 0) throw std::invalid_argument("GradedVS: negative dimension");
    if (it->second == 0)
      it = dims_.erase(it);
    else
      ++it;
  }
}

GradedVS GradedVS::line(int degree, int dim) {
  std::map<int, int> dims;
  dims[degree] = dim;
  return GradedVS(std::move(dims));
}

int GradedVS::dim(int degree) const {
  const auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

int GradedVS::total_dim() const {
  int total = 0;
  for (const auto& [d, n] : dims_) total += n;
  return total;
}

std::vector<int> GradedVS::degrees() const {
  std::vector<int> out;
  for (const auto& [d, n] : dims_) out.push_back(d);
  return out;
}

GradedVS GradedVS::shift(int n) const {
  std::map<int, int> dims;
  for (const auto& [d, k] : dims_) dims[d + n] = k;
  return GradedVS(std::move(dims));
}

GradedVS direct_sum(const std::vector<GradedVS>& parts) {
  std::map<int, int> dims;
  for (const auto& p : parts)
    for (const auto& [d, n] : p.dims()) dims[d] += n;
  return GradedVS(std::move(dims));
}

GradedMap::GradedMap(GradedVS source, GradedVS target)
    : source_(std::move(source)), target_(std::move(target)) {}

GradedMap::GradedMap(GradedVS source, GradedVS target, std::map<int, RatMatrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  for (auto it = blocks_.begin(); it != blocks_.end();) {
    if (it->second.rows() != target_.dim(it->first) ||
        it->second.cols() != source_.dim(it->first))
      throw std::invalid_argument("GradedMap: block shape mismatch at degree " +
                                  std::to_string(it->first));
    if (it->second.is_zero())
      it = blocks_.erase(it);
    else
      ++it;
  }
}

GradedMap GradedMap::identity(const GradedVS& v) {
  std::map<int, RatMatrix> blocks;
  for (const auto& [d, n] : v.dims()) blocks.emplace(d, RatMatrix::identity(n));
  return GradedMap(v, v, std::move(blocks));
}

RatMatrix GradedMap::block(int degree) const {
  const auto it = blocks_.find(degree);
  if (it != blocks_.end()) return it->second;
  return RatMatrix(target_.dim(degree), source_.dim(degree));
}

GradedMap GradedMap::shift(int n) const {
  std::map<int, RatMatrix> blocks;
  for (const auto& [d, m] : blocks_) blocks.emplace(d + n, m);
  return GradedMap(source_.shift(n), target_.shift(n), std::move(blocks));
}

GradedMap& GradedMap::operator+=(const GradedMap& o) {
  if (source_ != o.source_ || target_ != o.target_)
    throw std::invalid_argument("GradedMap: shape mismatch in addition");
  for (const auto& [d, m] : o.blocks_) {
    auto it = blocks_.find(d);
    if (it == blocks_.end()) {
      blocks_.emplace(d, m);
    } else {
      it->second += m;
      if (it->second.is_zero()) blocks_.erase(it);
    }
  }
  return *this;
}

GradedMap operator*(const Rational& c, const GradedMap& m) {
  std::map<int, RatMatrix> blocks;
  if (!c.is_zero())
    for (const auto& [d, b] : m.blocks_) blocks.emplace(d, c * b);
  return GradedMap(m.source_, m.target_, std::move(blocks));
}

bool operator==(const GradedMap& a, const GradedMap& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.blocks_ == b.blocks_;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("compose: GradedMap shapes do not match");
  std::map<int, RatMatrix> blocks;
  for (const auto& [d, gb] : g.stored_blocks()) {
    const auto fit = f.stored_blocks().find(d);
    if (fit == f.stored_blocks().end()) continue;
    RatMatrix prod = gb * fit->second;
    if (!prod.is_zero()) blocks.emplace(d, std::move(prod));
  }
  return GradedMap(f.source(), g.target(), std::move(blocks));
}

GradedMap gvs_injection(const std::vector<GradedVS>& parts, int j) {
  if (j < 0 || j >= static_cast<int>(parts.size()))
    throw std::invalid_argument("gvs_injection: part index out of range");
  const GradedVS total = direct_sum(parts);
  std::map<int, RatMatrix> blocks;
  for (const auto& [d, n] : parts[static_cast<std::size_t>(j)].dims()) {
    RatMatrix m(total.dim(d), n);
    int offset = 0;
    for (int p = 0; p < j; ++p) offset += parts[static_cast<std::size_t>(p)].dim(d);
    for (int c = 0; c < n; ++c) m.at(offset + c, c) = Rational(1);
    blocks.emplace(d, std::move(m));
  }
  return GradedMap(parts[static_cast<std::size_t>(j)], total, std::move(blocks));
}

GradedMap gvs_projection(const std::vector<GradedVS>& parts, int j) {
  if (j < 0 || j >= static_cast<int>(parts.size()))
    throw std::invalid_argument("gvs_projection: part index out of range");
  const GradedVS total = direct_sum(parts);
  std::map<int, RatMatrix> blocks;
  for (const auto& [d, n] : parts[static_cast<std::size_t>(j)].dims()) {
    RatMatrix m(n, total.dim(d));
    int offset = 0;
    for (int p = 0; p < j; ++p) offset += parts[static_cast<std::size_t>(p)].dim(d);
    for (int c = 0; c < n; ++c) m.at(c, offset + c) = Rational(1);
    blocks.emplace(d, std::move(m));
  }
  return GradedMap(total, parts[static_cast<std::size_t>(j)], std::move(blocks));
}

GradedMap direct_sum_maps(const std::vector<GradedMap>& maps) {
  std::vector<GradedVS> sources, targets;
  for (const auto& m : maps) {
    sources.push_back(m.source());
    targets.push_back(m.target());
  }
  GradedMap out = GradedMap::zero(direct_sum(sources), direct_sum(targets));
  for (std::size_t i = 0; i < maps.size(); ++i)
    out += compose(gvs_injection(targets, static_cast<int>(i)),
                   compose(maps[i], gvs_projection(sources, static_cast<int>(i))));
  return out;
}

int graded_hom_dim(const GradedVS& v, const GradedVS& w) {
  int total = 0;
  for (const auto& [d, n] : v.dims()) total += n * w.dim(d);
  return total;
}

}  // namespace sl2cat
