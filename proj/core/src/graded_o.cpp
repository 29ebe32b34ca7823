#include "sl2cat/graded_o.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace sl2cat {

Block0Object::Block0Object()
    : var_(GradedMap::zero(phi_, psi_.shift(-1))), can_(GradedMap::zero(psi_, phi_.shift(-1))) {}

Block0Object::Block0Object(GradedVS psi, GradedVS phi, GradedMap var, GradedMap can)
    : psi_(std::move(psi)), phi_(std::move(phi)), var_(std::move(var)), can_(std::move(can)) {
  if (var_.source() != phi_ || var_.target() != psi_.shift(-1))
    throw std::invalid_argument("Block0Object: var is not a map Phi -> Psi<-1>");
  if (can_.source() != psi_ || can_.target() != phi_.shift(-1))
    throw std::invalid_argument("Block0Object: can is not a map Psi -> Phi<-1>");
  if (!compose(var_.shift(-1), can_).is_zero())
    throw std::invalid_argument("Block0Object: var∘can != 0");
}

Block0Object Block0Object::shift(int n) const {
  return Block0Object(psi_.shift(n), phi_.shift(n), var_.shift(n), can_.shift(n));
}

bool operator==(const Block0Object& a, const Block0Object& b) {
  return a.psi_ == b.psi_ && a.phi_ == b.phi_ && a.var_ == b.var_ && a.can_ == b.can_;
}

Block0Object direct_sum(const std::vector<Block0Object>& parts) {
  std::vector<GradedVS> psis, phis;
  std::vector<GradedMap> vars, cans;
  for (const auto& p : parts) {
    psis.push_back(p.psi());
    phis.push_back(p.phi());
    vars.push_back(p.var());
    cans.push_back(p.can());
  }
  return Block0Object(direct_sum(psis), direct_sum(phis), direct_sum_maps(vars),
                      direct_sum_maps(cans));
}

Block0Morphism::Block0Morphism(Block0Object source, Block0Object target, GradedMap f_psi,
                               GradedMap f_phi)
    : source_(std::move(source)), target_(std::move(target)), f_psi_(std::move(f_psi)),
      f_phi_(std::move(f_phi)) {
  if (f_psi_.source() != source_.psi() || f_psi_.target() != target_.psi())
    throw std::invalid_argument("Block0Morphism: psi component shape mismatch");
  if (f_phi_.source() != source_.phi() || f_phi_.target() != target_.phi())
    throw std::invalid_argument("Block0Morphism: phi component shape mismatch");
  if (compose(target_.var(), f_phi_) != compose(f_psi_.shift(-1), source_.var()))
    throw std::invalid_argument("Block0Morphism: does not intertwine var");
  if (compose(target_.can(), f_psi_) != compose(f_phi_.shift(-1), source_.can()))
    throw std::invalid_argument("Block0Morphism: does not intertwine can");
}

Block0Morphism Block0Morphism::zero(const Block0Object& source, const Block0Object& target) {
  return Block0Morphism(source, target, GradedMap::zero(source.psi(), target.psi()),
                        GradedMap::zero(source.phi(), target.phi()));
}

Block0Morphism Block0Morphism::identity(const Block0Object& o) {
  return Block0Morphism(o, o, GradedMap::identity(o.psi()), GradedMap::identity(o.phi()));
}

Block0Morphism& Block0Morphism::operator+=(const Block0Morphism& o) {
  if (source_ != o.source_ || target_ != o.target_)
    throw std::invalid_argument("Block0Morphism: shape mismatch in addition");
  f_psi_ += o.f_psi_;
  f_phi_ += o.f_phi_;
  return *this;
}

Block0Morphism operator*(const Rational& c, const Block0Morphism& m) {
  return Block0Morphism(m.source_, m.target_, c * m.f_psi_, c * m.f_phi_);
}

bool operator==(const Block0Morphism& a, const Block0Morphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.f_psi_ == b.f_psi_ &&
         a.f_phi_ == b.f_phi_;
}

Block0Morphism compose(const Block0Morphism& g, const Block0Morphism& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("compose: Block0Morphism shapes do not match");
  return Block0Morphism(f.source(), g.target(), compose(g.f_psi(), f.f_psi()),
                        compose(g.f_phi(), f.f_phi()));
}

namespace {

std::vector<GradedVS> psis_of(const std::vector<Block0Object>& parts) {
  std::vector<GradedVS> out;
  for (const auto& p : parts) out.push_back(p.psi());
  return out;
}

std::vector<GradedVS> phis_of(const std::vector<Block0Object>& parts) {
  std::vector<GradedVS> out;
  for (const auto& p : parts) out.push_back(p.phi());
  return out;
}

}  // namespace

Block0Morphism b0_injection(const std::vector<Block0Object>& parts, int j) {
  return Block0Morphism(parts[static_cast<std::size_t>(j)], direct_sum(parts),
                        gvs_injection(psis_of(parts), j), gvs_injection(phis_of(parts), j));
}

Block0Morphism b0_projection(const std::vector<Block0Object>& parts, int j) {
  return Block0Morphism(direct_sum(parts), parts[static_cast<std::size_t>(j)],
                        gvs_projection(psis_of(parts), j), gvs_projection(phis_of(parts), j));
}

Block0Morphism direct_sum_maps(const std::vector<Block0Morphism>& maps) {
  std::vector<Block0Object> sources, targets;
  std::vector<GradedMap> psis, phis;
  for (const auto& m : maps) {
    sources.push_back(m.source());
    targets.push_back(m.target());
    psis.push_back(m.f_psi());
    phis.push_back(m.f_phi());
  }
  return Block0Morphism(direct_sum(sources), direct_sum(targets), direct_sum_maps(psis),
                        direct_sum_maps(phis));
}

Block0Object pi_upper(const GradedVS& v) {
  const GradedVS psi = v.shift(1);
  const std::vector<GradedVS> phi_parts{v.shift(2), v};
  const GradedVS phi = direct_sum(phi_parts);
  // var = (0 id): Phi -> Psi<-1> = V; can = (id 0)^T: Psi -> Phi<-1>
  const GradedMap var = gvs_projection(phi_parts, 1);
  const std::vector<GradedVS> phi_shifted{v.shift(1), v.shift(-1)};
  const GradedMap can = gvs_injection(phi_shifted, 0);
  return Block0Object(psi, phi, var, can);
}

Block0Morphism pi_upper(const GradedMap& g) {
  return Block0Morphism(pi_upper(g.source()), pi_upper(g.target()), g.shift(1),
                        direct_sum_maps({g.shift(2), g}));
}

GradedVS pi_lower(const Block0Object& m) { return m.phi(); }

GradedMap pi_lower(const Block0Morphism& m) { return m.f_phi(); }

OZObject::OZObject(GradedVS singular, std::map<int, Block0Object> regular)
    : singular_(std::move(singular)), regular_(std::move(regular)) {
  for (auto it = regular_.begin(); it != regular_.end();) {
    if (it->first < 0) throw std::invalid_argument("OZObject: negative regular block index");
    if (it->second.is_zero())
      it = regular_.erase(it);
    else
      ++it;
  }
}

OZObject OZObject::at_singular(GradedVS v) { return OZObject(std::move(v), {}); }

OZObject OZObject::at_block(int k, Block0Object b) {
  std::map<int, Block0Object> regular;
  regular.emplace(k, std::move(b));
  return OZObject(GradedVS(), std::move(regular));
}

Block0Object OZObject::regular(int k) const {
  const auto it = regular_.find(k);
  return it == regular_.end() ? Block0Object::zero_object() : it->second;
}

int OZObject::max_regular_block() const {
  return regular_.empty() ? -1 : regular_.rbegin()->first;
}

OZObject OZObject::shift(int n) const {
  std::map<int, Block0Object> regular;
  for (const auto& [k, b] : regular_) regular.emplace(k, b.shift(n));
  return OZObject(singular_.shift(n), std::move(regular));
}

bool operator==(const OZObject& a, const OZObject& b) {
  return a.singular_ == b.singular_ && a.regular_ == b.regular_;
}

OZMorphism::OZMorphism(OZObject source, OZObject target, GradedMap singular,
                       std::map<int, Block0Morphism> regular)
    : source_(std::move(source)), target_(std::move(target)), singular_(std::move(singular)),
      regular_(std::move(regular)) {
  if (singular_.source() != source_.singular() || singular_.target() != target_.singular())
    throw std::invalid_argument("OZMorphism: singular component shape mismatch");
  for (auto it = regular_.begin(); it != regular_.end();) {
    if (it->second.source() != source_.regular(it->first) ||
        it->second.target() != target_.regular(it->first))
      throw std::invalid_argument("OZMorphism: regular component shape mismatch");
    if (it->second.is_zero())
      it = regular_.erase(it);
    else
      ++it;
  }
}

OZMorphism OZMorphism::zero(const OZObject& source, const OZObject& target) {
  return OZMorphism(source, target, GradedMap::zero(source.singular(), target.singular()), {});
}

OZMorphism OZMorphism::identity(const OZObject& o) {
  std::map<int, Block0Morphism> regular;
  for (const auto& [k, b] : o.stored_regular()) regular.emplace(k, Block0Morphism::identity(b));
  return OZMorphism(o, o, GradedMap::identity(o.singular()), std::move(regular));
}

Block0Morphism OZMorphism::regular_map(int k) const {
  const auto it = regular_.find(k);
  if (it != regular_.end()) return it->second;
  return Block0Morphism::zero(source_.regular(k), target_.regular(k));
}

OZMorphism& OZMorphism::operator+=(const OZMorphism& o) {
  if (source_ != o.source_ || target_ != o.target_)
    throw std::invalid_argument("OZMorphism: shape mismatch in addition");
  singular_ += o.singular_;
  for (const auto& [k, m] : o.regular_) {
    auto it = regular_.find(k);
    if (it == regular_.end()) {
      regular_.emplace(k, m);
    } else {
      it->second += m;
      if (it->second.is_zero()) regular_.erase(it);
    }
  }
  return *this;
}

OZMorphism operator*(const Rational& c, const OZMorphism& m) {
  std::map<int, Block0Morphism> regular;
  if (!c.is_zero())
    for (const auto& [k, b] : m.regular_) {
      Block0Morphism scaled = c * b;
      if (!scaled.is_zero()) regular.emplace(k, std::move(scaled));
    }
  return OZMorphism(m.source_, m.target_, c * m.singular_, std::move(regular));
}

bool operator==(const OZMorphism& a, const OZMorphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.singular_ == b.singular_ &&
         a.regular_ == b.regular_;
}

OZMorphism compose(const OZMorphism& g, const OZMorphism& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("compose: OZMorphism shapes do not match");
  std::map<int, Block0Morphism> regular;
  // only blocks where g is nonzero can contribute
  for (const auto& [k, gm] : g.stored_regular()) {
    const Block0Morphism comp = compose(gm, f.regular_map(k));
    if (!comp.is_zero()) regular.emplace(k, comp);
  }
  return OZMorphism(f.source(), g.target(), compose(g.singular_map(), f.singular_map()),
                    std::move(regular));
}

namespace {

// Summand layout of F(X) at regular block k: {π*X_{-1}, X_1} at k = 0,
// {X_{k-1}, X_{k+1}} at k >= 1.
std::vector<Block0Object> fx_parts(const OZObject& x, int k) {
  if (k == 0) return {pi_upper(x.singular()), x.regular(1)};
  return {x.regular(k - 1), x.regular(k + 1)};
}

std::vector<Block0Morphism> fx_parts(const OZMorphism& m, int k) {
  if (k == 0) return {pi_upper(m.singular_map()), m.regular_map(1)};
  return {m.regular_map(k - 1), m.regular_map(k + 1)};
}

}  // namespace

OZObject f_obj(const OZObject& x) {
  std::map<int, Block0Object> regular;
  const int top = x.max_regular_block() + 1;
  for (int k = 0; k <= top; ++k) {
    Block0Object block = direct_sum(fx_parts(x, k));
    if (!block.is_zero()) regular.emplace(k, std::move(block));
  }
  return OZObject(pi_lower(x.regular(0)), std::move(regular));
}

OZMorphism f_mor(const OZMorphism& m) {
  const OZObject fs = f_obj(m.source());
  const OZObject ft = f_obj(m.target());
  std::map<int, Block0Morphism> regular;
  const int top = std::max(m.source().max_regular_block(), m.target().max_regular_block()) + 1;
  for (int k = 0; k <= top; ++k) {
    Block0Morphism block = direct_sum_maps(fx_parts(m, k));
    if (!block.is_zero()) regular.emplace(k, std::move(block));
  }
  return OZMorphism(fs, ft, pi_lower(m.regular_map(0)), std::move(regular));
}

OZObject f_power_obj(const OZObject& x, int k) {
  OZObject out = x;
  for (int i = 0; i < k; ++i) out = f_obj(out);
  return out;
}

namespace {

OZMorphism unit_or_counit(const OZObject& x, UnitConvention conv, bool unit) {
  const OZObject fx = f_obj(x);
  const OZObject f2x = f_obj(fx);

  // singular block: X_{-1} sits as the unshifted summand of π_*π*X_{-1},
  // which is the second piece of the first part of Φ((FX)_0)
  const std::vector<GradedVS> phi_parts{pi_lower(pi_upper(x.singular())),
                                        pi_lower(x.regular(1))};
  const std::vector<GradedVS> pi_star_parts{x.singular().shift(2), x.singular()};
  GradedMap singular = unit
      ? compose(gvs_injection(phi_parts, 0), gvs_injection(pi_star_parts, 1))
      : compose(gvs_projection(pi_star_parts, 1), gvs_projection(phi_parts, 0));

  std::map<int, Block0Morphism> regular;
  for (int k = 0; k <= x.max_regular_block(); ++k) {
    const Block0Object xk = x.regular(k);
    if (xk.is_zero()) continue;
    const std::vector<Block0Object> outer = fx_parts(fx, k);
    Block0Morphism component = Block0Morphism::zero(xk, xk);  // placeholder
    if (conv == UnitConvention::UpThenDown || k == 0) {
      // copy reached via k -> k+1 -> k: first summand of (FX)_{k+1}
      const std::vector<Block0Object> up = fx_parts(x, k + 1);
      component = unit ? compose(b0_injection(outer, 1), b0_injection(up, 0))
                       : compose(b0_projection(up, 0), b0_projection(outer, 1));
    } else {
      // copy reached via k -> k-1 -> k: the X_k summand of (FX)_{k-1}
      const std::vector<Block0Object> down = fx_parts(x, k - 1);
      component = unit ? compose(b0_injection(outer, 0), b0_injection(down, 1))
                       : compose(b0_projection(down, 1), b0_projection(outer, 0));
    }
    if (!component.is_zero()) regular.emplace(k, component);
  }

  if (unit) return OZMorphism(x, f2x, std::move(singular), std::move(regular));
  return OZMorphism(f2x, x, std::move(singular), std::move(regular));
}

}  // namespace

OZMorphism eta(const OZObject& x, UnitConvention conv) { return unit_or_counit(x, conv, true); }

OZMorphism eps(const OZObject& x, UnitConvention conv) { return unit_or_counit(x, conv, false); }

namespace {

// first block and degree where two morphisms of the same shape differ
std::string locate_difference(const OZMorphism& a, const OZMorphism& b) {
  for (const auto& [d, n] : a.source().singular().dims()) {
    (void)n;
    if (a.singular_map().block(d) != b.singular_map().block(d))
      return "block -1, degree " + std::to_string(d);
  }
  const int top = a.source().max_regular_block();
  for (int k = 0; k <= top; ++k) {
    const Block0Morphism am = a.regular_map(k), bm = b.regular_map(k);
    for (const auto& [d, n] : a.source().regular(k).psi().dims()) {
      (void)n;
      if (am.f_psi().block(d) != bm.f_psi().block(d))
        return "block " + std::to_string(k) + ", degree " + std::to_string(d);
    }
    for (const auto& [d, n] : a.source().regular(k).phi().dims()) {
      (void)n;
      if (am.f_phi().block(d) != bm.f_phi().block(d))
        return "block " + std::to_string(k) + ", degree " + std::to_string(d);
    }
  }
  return "no difference found";
}

}  // namespace

RelationReport verify_relations(const std::vector<OZObject>& samples, UnitConvention conv) {
  RelationReport report;
  for (std::size_t idx = 0; idx < samples.size(); ++idx) {
    const OZObject& x = samples[idx];
    const OZObject fx = f_obj(x);
    const OZMorphism unit = eta(x, conv);
    const OZMorphism counit = eps(x, conv);
    std::string failed;
    const OZMorphism round = compose(counit, unit);
    const OZMorphism zig = compose(f_mor(counit), eta(fx, conv));
    const OZMorphism zag = compose(eps(fx, conv), f_mor(unit));
    if (round != OZMorphism::identity(x))
      failed = "(i) eps∘eta != id at " + locate_difference(round, OZMorphism::identity(x));
    else if (!zig.is_zero())
      failed = "(ii) F(eps)∘eta_F != 0 at " +
               locate_difference(zig, OZMorphism::zero(zig.source(), zig.target()));
    else if (!zag.is_zero())
      failed = "(iii) eps_F∘F(eta) != 0 at " +
               locate_difference(zag, OZMorphism::zero(zag.source(), zag.target()));
    ++report.checked;
    if (!failed.empty()) {
      report.ok = false;
      if (report.first_failure.empty()) {
        std::ostringstream os;
        os << "sample " << idx << ": " << failed;
        report.first_failure = os.str();
      }
    }
  }
  return report;
}

namespace {

OZMorphism whisker(OZMorphism m, int times) {
  for (int i = 0; i < times; ++i) m = f_mor(m);
  return m;
}

OZMorphism act_matching(const PlanarMatching& d, const OZObject& x) {
  int width = d.bottom_points();
  OZMorphism cur = OZMorphism::identity(f_power_obj(x, width));
  for (const auto& s : slice_decompose(d)) {
    if (s.kind == Slice::Kind::Cup) {
      const OZMorphism base = eta(f_power_obj(x, width - s.position));
      cur = compose(whisker(base, s.position), cur);
      width += 2;
    } else {
      const OZMorphism base = eps(f_power_obj(x, width - s.position - 2));
      cur = compose(whisker(base, s.position), cur);
      width -= 2;
    }
  }
  return cur;
}

}  // namespace

OZMorphism act(const HomElement& h, const OZObject& x) {
  OZMorphism out = OZMorphism::zero(f_power_obj(x, h.source_power()),
                                    f_power_obj(x, h.target_power()));
  for (const auto& [d, c] : h.terms()) out += c * act_matching(d, x);
  return out;
}

namespace {

// variable bookkeeping for hom_space: each unknown matrix entry gets an index
struct VarTable {
  // key: (block, component, degree, row, col); block -1 = singular (component 0),
  // regular blocks use component 0 = psi, 1 = phi
  std::map<std::tuple<int, int, int, int, int>, int> index;
  int count = 0;
  void add(int block, int comp, int deg, int r, int c) {
    index.emplace(std::make_tuple(block, comp, deg, r, c), count++);
  }
  int get(int block, int comp, int deg, int r, int c) const {
    const auto it = index.find(std::make_tuple(block, comp, deg, r, c));
    if (it == index.end()) throw std::logic_error("hom_space: unenumerated unknown");
    return it->second;
  }
};

}  // namespace

std::vector<OZMorphism> hom_space(const OZObject& a, const OZObject& b) {
  VarTable vars;
  // enumerate unknowns
  for (const auto& [d, n] : a.singular().dims())
    for (int r = 0; r < b.singular().dim(d); ++r)
      for (int c = 0; c < n; ++c) vars.add(-1, 0, d, r, c);
  std::vector<int> blocks;
  for (const auto& [k, bl] : a.stored_regular()) blocks.push_back(k);
  for (const auto& [k, bl] : b.stored_regular())
    if (!a.stored_regular().count(k)) blocks.push_back(k);
  std::sort(blocks.begin(), blocks.end());
  for (const int k : blocks) {
    const Block0Object ak = a.regular(k), bk = b.regular(k);
    for (const auto& [d, n] : ak.psi().dims())
      for (int r = 0; r < bk.psi().dim(d); ++r)
        for (int c = 0; c < n; ++c) vars.add(k, 0, d, r, c);
    for (const auto& [d, n] : ak.phi().dims())
      for (int r = 0; r < bk.phi().dim(d); ++r)
        for (int c = 0; c < n; ++c) vars.add(k, 1, d, r, c);
  }
  const int total_vars = vars.count;

  // intertwining equations per regular block and degree:
  //   varB[d] fphi[d] = fpsi[d+1] varA[d],  canB[d] fpsi[d] = fphi[d+1] canA[d]
  std::vector<std::vector<Rational>> rows;
  auto add_equation_set = [&](int k, const GradedMap& mapA, const GradedMap& mapB,
                              int in_comp, int out_comp) {
    const Block0Object ak = a.regular(k), bk = b.regular(k);
    const GradedVS& a_in = in_comp == 0 ? ak.psi() : ak.phi();
    const GradedVS& b_out = out_comp == 0 ? bk.psi() : bk.phi();
    for (const auto& [d, a_in_dim] : a_in.dims()) {
      const int b_out_dim = b_out.dim(d + 1);
      if (b_out_dim == 0) continue;
      const RatMatrix mb = mapB.block(d);     // b_in_dim(d) -> b_out_dim(d+1)
      const RatMatrix ma = mapA.block(d);     // a_in_dim(d) -> a_out_dim(d+1)
      for (int r = 0; r < b_out_dim; ++r)
        for (int c = 0; c < a_in_dim; ++c) {
          std::vector<Rational> row(static_cast<std::size_t>(total_vars), Rational(0));
          bool nonzero = false;
          // + sum_m mb(r, m) * f_in[d](m, c)
          for (int mcol = 0; mcol < mb.cols(); ++mcol) {
            if (mb.at(r, mcol).is_zero()) continue;
            row[static_cast<std::size_t>(vars.get(k, in_comp, d, mcol, c))] += mb.at(r, mcol);
            nonzero = true;
          }
          // - sum_m f_out[d+1](r, m) * ma(m, c)
          for (int mrow = 0; mrow < ma.rows(); ++mrow) {
            if (ma.at(mrow, c).is_zero()) continue;
            row[static_cast<std::size_t>(vars.get(k, out_comp, d + 1, r, mrow))] -=
                ma.at(mrow, c);
            nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
    }
  };
  for (const int k : blocks) {
    add_equation_set(k, a.regular(k).var(), b.regular(k).var(), 1, 0);
    add_equation_set(k, a.regular(k).can(), b.regular(k).can(), 0, 1);
  }

  RatMatrix system(static_cast<int>(rows.size()), total_vars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < total_vars; ++j) system.at(static_cast<int>(i), j) = rows[i][j];
  const auto kernel = total_vars == 0 ? std::vector<std::vector<Rational>>{}
                                      : kernel_basis(system);

  std::vector<OZMorphism> basis;
  for (const auto& vec : kernel) {
    std::map<int, RatMatrix> sing_blocks;
    for (const auto& [d, n] : a.singular().dims()) {
      const int rows_d = b.singular().dim(d);
      if (rows_d == 0) continue;
      RatMatrix m(rows_d, n);
      for (int r = 0; r < rows_d; ++r)
        for (int c = 0; c < n; ++c)
          m.at(r, c) = vec[static_cast<std::size_t>(vars.get(-1, 0, d, r, c))];
      if (!m.is_zero()) sing_blocks.emplace(d, std::move(m));
    }
    GradedMap sing(a.singular(), b.singular(), std::move(sing_blocks));
    std::map<int, Block0Morphism> regular;
    for (const int k : blocks) {
      const Block0Object ak = a.regular(k), bk = b.regular(k);
      auto collect = [&](int comp, const GradedVS& a_sp, const GradedVS& b_sp) {
        std::map<int, RatMatrix> out;
        for (const auto& [d, n] : a_sp.dims()) {
          const int rows_d = b_sp.dim(d);
          if (rows_d == 0) continue;
          RatMatrix m(rows_d, n);
          for (int r = 0; r < rows_d; ++r)
            for (int c = 0; c < n; ++c)
              m.at(r, c) = vec[static_cast<std::size_t>(vars.get(k, comp, d, r, c))];
          if (!m.is_zero()) out.emplace(d, std::move(m));
        }
        return out;
      };
      Block0Morphism bm(ak, bk, GradedMap(ak.psi(), bk.psi(), collect(0, ak.psi(), bk.psi())),
                        GradedMap(ak.phi(), bk.phi(), collect(1, ak.phi(), bk.phi())));
      if (!bm.is_zero()) regular.emplace(k, std::move(bm));
    }
    basis.emplace_back(OZMorphism(a, b, std::move(sing), std::move(regular)));
  }
  return basis;
}

AdjunctionReport adjunction_check(const GradedVS& v, const Block0Object& m) {
  AdjunctionReport report;
  const OZObject pi_v = OZObject::at_block(0, pi_upper(v));
  const OZObject m_obj = OZObject::at_block(0, m);
  report.left_block_dim = static_cast<int>(hom_space(pi_v, m_obj).size());
  report.left_vect_dim = graded_hom_dim(v, pi_lower(m));
  report.right_vect_dim = graded_hom_dim(pi_lower(m), v);
  const OZObject right_target = OZObject::at_block(0, pi_upper(v).shift(-2));
  report.right_block_dim = static_cast<int>(hom_space(m_obj, right_target).size());
  report.ok = report.left_block_dim == report.left_vect_dim &&
              report.right_vect_dim == report.right_block_dim;
  return report;
}

namespace {

// splitmix64: portable deterministic generator for the sample suites
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

GradedVS random_gvs(Rng& rng) {
  std::map<int, int> dims;
  for (int d = -3; d <= 3; ++d)
    if (rng.range(0, 2) == 0) dims[d] = rng.range(1, 3);
  return GradedVS(std::move(dims));
}

Block0Object random_b0(Rng& rng) {
  const GradedVS psi = random_gvs(rng);
  const GradedVS phi = random_gvs(rng);
  // can: Psi -> Phi<-1>, free choice
  std::map<int, RatMatrix> can_blocks;
  for (const auto& [d, n] : psi.dims()) {
    const int rows = phi.dim(d + 1);
    if (rows == 0) continue;
    RatMatrix m(rows, n);
    bool nonzero = false;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < n; ++c) {
        const int entry = rng.range(-2, 2);
        if (entry != 0) {
          m.at(r, c) = Rational(entry);
          nonzero = true;
        }
      }
    if (nonzero) can_blocks.emplace(d, std::move(m));
  }
  const GradedMap can(psi, phi.shift(-1), std::move(can_blocks));
  // var: Phi -> Psi<-1>, sampled from the solution space of var∘can = 0:
  // rows of var at degree d must annihilate the columns of can at degree d-1
  std::map<int, RatMatrix> var_blocks;
  for (const auto& [d, n] : phi.dims()) {
    const int rows = psi.dim(d + 1);
    if (rows == 0) continue;
    const RatMatrix can_below = can.block(d - 1);  // psi(d-1) -> phi(d)
    const auto left_kernel = kernel_basis(can_below.transpose());
    if (left_kernel.empty()) continue;
    RatMatrix m(rows, n);
    bool nonzero = false;
    for (int r = 0; r < rows; ++r)
      for (const auto& kv : left_kernel) {
        const int coeff = rng.range(-1, 1);
        if (coeff == 0) continue;
        for (int c = 0; c < n; ++c) {
          m.at(r, c) += Rational(coeff) * kv[static_cast<std::size_t>(c)];
        }
        nonzero = true;
      }
    if (nonzero) var_blocks.emplace(d, std::move(m));
  }
  const GradedMap var(phi, psi.shift(-1), std::move(var_blocks));
  return Block0Object(psi, phi, var, can);
}

}  // namespace

GradedVS random_graded_vs(std::uint64_t seed) {
  Rng rng(seed);
  return random_gvs(rng);
}

Block0Object random_block0(std::uint64_t seed) {
  Rng rng(seed);
  return random_b0(rng);
}

std::vector<OZObject> sample_objects(std::uint64_t seed, int count) {
  std::vector<OZObject> out;
  // deterministic single-block shapes
  out.push_back(OZObject::at_singular(GradedVS::line(0)));
  out.push_back(OZObject::at_singular(direct_sum({GradedVS::line(-2), GradedVS::line(1, 2)})));
  for (int k = 0; k <= 4; ++k) {
    out.push_back(OZObject::at_block(k, pi_upper(GradedVS::line(0))));
    out.push_back(OZObject::at_block(k, pi_upper(direct_sum({GradedVS::line(-1), GradedVS::line(2)}))));
  }
  Rng rng(seed);
  while (static_cast<int>(out.size()) < count) {
    const int shape = rng.range(0, 3);
    if (shape == 0) {
      out.push_back(OZObject::at_singular(random_gvs(rng)));
    } else if (shape == 1) {
      out.push_back(OZObject::at_block(rng.range(0, 4), random_b0(rng)));
    } else {
      // multi-block object with a singular part and two regular blocks
      std::map<int, Block0Object> regular;
      const int k1 = rng.range(0, 3);
      const Block0Object b1 = random_b0(rng);
      if (!b1.is_zero()) regular.emplace(k1, b1);
      const int k2 = rng.range(0, 4);
      if (!regular.count(k2)) {
        const Block0Object b2 = random_b0(rng);
        if (!b2.is_zero()) regular.emplace(k2, b2);
      }
      out.push_back(OZObject(shape == 2 ? random_gvs(rng) : GradedVS(), std::move(regular)));
    }
  }
  return out;
}

}  // namespace sl2cat
