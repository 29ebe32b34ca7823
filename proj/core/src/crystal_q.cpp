#include "sl2cat/crystal_q.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "sl2cat/sl2_multiplicities.hpp"

namespace sl2cat {

namespace {

const std::string kOtimes = "⊗";

// parses "v<k>" -> k
int weight_of_basis_label(const std::string& s) {
  if (s.size() < 2 || s[0] != 'v')
    throw std::logic_error("expected a b(n) basis label, got '" + s + "'");
  return std::stoi(s.substr(1));
}

std::pair<std::string, std::string> split_pair_label(const std::string& s) {
  const auto pos = s.find(kOtimes);
  if (pos == std::string::npos)
    throw std::logic_error("expected a tensor pair label, got '" + s + "'");
  return {s.substr(0, pos), s.substr(pos + kOtimes.size())};
}

std::mutex cache_mutex;

const Crystal& cached_pair_tensor(int i, int j) {
  static std::map<std::pair<int, int>, Crystal> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  const auto key = std::make_pair(i, j);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, tensor(Crystal::b(i), Crystal::b(j))).first;
  return it->second;
}

const Crystal& cached_power(int m) {
  static std::map<int, Crystal> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, tensor_power(Crystal::b(1), m)).first;
  return it->second;
}

}  // namespace

CQObject::CQObject(std::map<int, std::vector<std::string>> mult) : mult_(std::move(mult)) {
  for (auto it = mult_.begin(); it != mult_.end();) {
    auto seen = it->second;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw std::invalid_argument("CQObject: duplicate labels at weight " +
                                  std::to_string(it->first));
    if (it->second.empty())
      it = mult_.erase(it);
    else
      ++it;
  }
}

CQObject CQObject::unit() { return CQObject({{0, {"v0"}}}); }

const std::vector<std::string>& CQObject::labels(int n) const {
  static const std::vector<std::string> kEmpty;
  const auto it = mult_.find(n);
  return it == mult_.end() ? kEmpty : it->second;
}

int CQObject::dim(int n) const { return static_cast<int>(labels(n).size()); }

int CQObject::end_dimension() const {
  int total = 0;
  for (const auto& [n, ls] : mult_) total += static_cast<int>(ls.size() * ls.size());
  return total;
}

CQMorphism::CQMorphism(CQObject source, CQObject target)
    : source_(std::move(source)), target_(std::move(target)) {}

CQMorphism::CQMorphism(CQObject source, CQObject target, std::map<int, RatMatrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  for (auto it = blocks_.begin(); it != blocks_.end();) {
    const int n = it->first;
    if (it->second.rows() != target_.dim(n) || it->second.cols() != source_.dim(n))
      throw std::invalid_argument("CQMorphism: block shape mismatch at weight " +
                                  std::to_string(n));
    if (it->second.is_zero())
      it = blocks_.erase(it);
    else
      ++it;
  }
}

CQMorphism CQMorphism::identity(const CQObject& o) {
  std::map<int, RatMatrix> blocks;
  for (const auto& [n, ls] : o.mult())
    blocks.emplace(n, RatMatrix::identity(static_cast<int>(ls.size())));
  return CQMorphism(o, o, std::move(blocks));
}

RatMatrix CQMorphism::block(int n) const {
  const auto it = blocks_.find(n);
  if (it != blocks_.end()) return it->second;
  return RatMatrix(target_.dim(n), source_.dim(n));
}

CQMorphism& CQMorphism::operator+=(const CQMorphism& o) {
  if (source_ != o.source_ || target_ != o.target_)
    throw std::invalid_argument("CQMorphism: shape mismatch in addition");
  for (const auto& [n, m] : o.blocks_) {
    auto it = blocks_.find(n);
    if (it == blocks_.end()) {
      blocks_.emplace(n, m);
    } else {
      it->second += m;
      if (it->second.is_zero()) blocks_.erase(it);
    }
  }
  return *this;
}

CQMorphism operator*(const Rational& c, const CQMorphism& m) {
  std::map<int, RatMatrix> blocks;
  if (!c.is_zero())
    for (const auto& [n, b] : m.blocks_) blocks.emplace(n, c * b);
  return CQMorphism(m.source_, m.target_, std::move(blocks));
}

bool operator==(const CQMorphism& a, const CQMorphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.blocks_ == b.blocks_;
}

CQMorphism compose(const CQMorphism& g, const CQMorphism& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("compose: CQMorphism shapes do not match");
  std::map<int, RatMatrix> blocks;
  for (const auto& [n, gb] : g.stored_blocks()) {
    const auto& fit = f.stored_blocks().find(n);
    if (fit == f.stored_blocks().end()) continue;
    RatMatrix prod = gb * fit->second;
    if (!prod.is_zero()) blocks.emplace(n, std::move(prod));
  }
  return CQMorphism(f.source(), g.target(), std::move(blocks));
}

CQObject from_crystal(const Crystal& b) { return CQObject(decompose(b).hw); }

CQMorphism from_crystal_morphism(const CrystalMorphism& beta) {
  const CQObject src = from_crystal(beta.source());
  const CQObject tgt = from_crystal(beta.target());
  std::map<int, RatMatrix> blocks;
  for (const auto& [n, vs] : src.mult()) {
    const auto& ws = tgt.labels(n);
    RatMatrix m(static_cast<int>(ws.size()), static_cast<int>(vs.size()));
    bool nonzero = false;
    for (std::size_t col = 0; col < vs.size(); ++col) {
      const auto img = beta.image(vs[col]);
      if (!img) continue;
      const auto row = std::find(ws.begin(), ws.end(), *img);
      if (row == ws.end())
        throw std::logic_error("from_crystal_morphism: image is not highest weight");
      m.at(static_cast<int>(row - ws.begin()), static_cast<int>(col)) = Rational(1);
      nonzero = true;
    }
    if (nonzero) blocks.emplace(n, std::move(m));
  }
  return CQMorphism(src, tgt, std::move(blocks));
}

const std::map<int, std::vector<std::string>>& multiplicity_table(int i, int j) {
  static std::map<std::pair<int, int>, std::map<int, std::vector<std::string>>> cache;
  static std::mutex table_mutex;
  std::lock_guard<std::mutex> lock(table_mutex);
  const auto key = std::make_pair(i, j);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, decompose(cached_pair_tensor(i, j)).hw).first;
  return it->second;
}

namespace {

struct Triple {
  int i, j;
  int a_pos, b_pos;  // positions inside the source multiplicity sets
  std::string a, b, t;
};

// Enumerates the (i, j, a, b, t) components of tensor_objects(A, B) at
// weight l, in the canonical order.
std::vector<Triple> tensor_triples(const CQObject& a, const CQObject& b, int l) {
  std::vector<Triple> out;
  for (const auto& [i, as] : a.mult())
    for (const auto& [j, bs] : b.mult()) {
      const auto& table = multiplicity_table(i, j);
      const auto kt = table.find(l);
      if (kt == table.end()) continue;
      for (std::size_t ap = 0; ap < as.size(); ++ap)
        for (std::size_t bp = 0; bp < bs.size(); ++bp)
          for (const auto& t : kt->second)
            out.push_back(Triple{i, j, static_cast<int>(ap), static_cast<int>(bp),
                                 as[ap], bs[bp], t});
    }
  return out;
}

std::vector<int> tensor_weights(const CQObject& a, const CQObject& b) {
  std::vector<int> out;
  for (const auto& [i, as] : a.mult())
    for (const auto& [j, bs] : b.mult())
      for (const auto& [k, ts] : multiplicity_table(i, j)) out.push_back(k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CQObject tensor_objects(const CQObject& a, const CQObject& b) {
  std::map<int, std::vector<std::string>> mult;
  for (const int l : tensor_weights(a, b)) {
    std::vector<std::string> labels;
    for (const auto& tr : tensor_triples(a, b, l))
      labels.push_back(tr.a + "," + tr.b + "," + tr.t);
    if (!labels.empty()) mult[l] = std::move(labels);
  }
  return CQObject(std::move(mult));
}

CQMorphism tensor_morphisms(const CQMorphism& f, const CQMorphism& g) {
  const CQObject src = tensor_objects(f.source(), g.source());
  const CQObject tgt = tensor_objects(f.target(), g.target());
  std::map<int, RatMatrix> blocks;
  for (const auto& [l, src_labels] : src.mult()) {
    const auto src_triples = tensor_triples(f.source(), g.source(), l);
    const auto tgt_triples = tensor_triples(f.target(), g.target(), l);
    RatMatrix m(static_cast<int>(tgt_triples.size()), static_cast<int>(src_triples.size()));
    bool nonzero = false;
    for (std::size_t col = 0; col < src_triples.size(); ++col) {
      const Triple& s = src_triples[col];
      const RatMatrix fb = f.block(s.i);
      const RatMatrix gb = g.block(s.j);
      for (std::size_t row = 0; row < tgt_triples.size(); ++row) {
        const Triple& t = tgt_triples[row];
        if (t.i != s.i || t.j != s.j || t.t != s.t) continue;
        const Rational entry = fb.at(t.a_pos, s.a_pos) * gb.at(t.b_pos, s.b_pos);
        if (!entry.is_zero()) {
          m.at(static_cast<int>(row), static_cast<int>(col)) = entry;
          nonzero = true;
        }
      }
    }
    if (nonzero) blocks.emplace(l, std::move(m));
  }
  return CQMorphism(src, tgt, std::move(blocks));
}

namespace {

// The highest-weight word of A⊗B named by the component (a, b, t):
// t = v_x ⊗ v_y inside b(i)⊗b(j) means lowering a and b accordingly.
std::string flat_label(const Crystal& a, const Crystal& b, int i, int j,
                       const std::string& a_label, const std::string& b_label,
                       const std::string& t) {
  const auto [vx, vy] = split_pair_label(t);
  const int x = weight_of_basis_label(vx);
  const int y = weight_of_basis_label(vy);
  const auto fa = a.f_power(a_label, (i - x) / 2);
  const auto fb = b.f_power(b_label, (j - y) / 2);
  if (!fa || !fb) throw std::logic_error("flat_label: string ran out while lowering");
  return *fa + kOtimes + *fb;
}

}  // namespace

CQMorphism tensor_identification(const Crystal& a, const Crystal& b) {
  const CQObject src = tensor_objects(from_crystal(a), from_crystal(b));
  const CQObject tgt = from_crystal(tensor(a, b));
  std::map<int, RatMatrix> blocks;
  for (const auto& [l, labels] : src.mult()) {
    const auto triples = tensor_triples(from_crystal(a), from_crystal(b), l);
    const auto& tgt_labels = tgt.labels(l);
    if (triples.size() != tgt_labels.size())
      throw std::logic_error("tensor_identification: multiplicity mismatch");
    RatMatrix m(static_cast<int>(tgt_labels.size()), static_cast<int>(triples.size()));
    std::vector<bool> hit(tgt_labels.size(), false);
    for (std::size_t col = 0; col < triples.size(); ++col) {
      const Triple& tr = triples[col];
      const std::string flat = flat_label(a, b, tr.i, tr.j, tr.a, tr.b, tr.t);
      const auto row = std::find(tgt_labels.begin(), tgt_labels.end(), flat);
      if (row == tgt_labels.end())
        throw std::logic_error("tensor_identification: flat label not highest weight");
      const auto r = static_cast<std::size_t>(row - tgt_labels.begin());
      if (hit[r]) throw std::logic_error("tensor_identification: not a bijection");
      hit[r] = true;
      m.at(static_cast<int>(r), static_cast<int>(col)) = Rational(1);
    }
    blocks.emplace(l, std::move(m));
  }
  return CQMorphism(src, tgt, std::move(blocks));
}

namespace {

Associator build_associator(int i, int j, int k) {
  const Crystal& ab = cached_pair_tensor(i, j);
  const Crystal& bc = cached_pair_tensor(j, k);
  const Crystal triple = tensor(ab, Crystal::b(k));
  const auto triple_hw = decompose(triple).hw;

  struct Side {
    int inner_weight;
    std::string first, second, flat;
  };
  std::map<int, std::vector<Side>> lhs, rhs;
  for (const auto& [alpha, t1s] : multiplicity_table(i, j))
    for (const auto& t1 : t1s)
      for (const auto& [l, t2s] : multiplicity_table(alpha, k))
        for (const auto& t2 : t2s) {
          const auto [vp, vq] = split_pair_label(t2);
          const int p = weight_of_basis_label(vp);
          const auto low = ab.f_power(t1, (alpha - p) / 2);
          if (!low) throw std::logic_error("associator: lowering ran out on the left");
          lhs[l].push_back({alpha, t1, t2, *low + kOtimes + vq});
        }
  for (const auto& [beta, u2s] : multiplicity_table(j, k))
    for (const auto& u2 : u2s)
      for (const auto& [l, u1s] : multiplicity_table(i, beta))
        for (const auto& u1 : u1s) {
          const auto [vx, vy] = split_pair_label(u1);
          const int y = weight_of_basis_label(vy);
          const auto low = bc.f_power(u2, (beta - y) / 2);
          if (!low) throw std::logic_error("associator: lowering ran out on the right");
          rhs[l].push_back({beta, u1, u2, vx + kOtimes + *low});
        }

  Associator out;
  for (const auto& [l, left] : lhs) {
    const auto rit = rhs.find(l);
    if (rit == rhs.end() || rit->second.size() != left.size())
      throw std::logic_error("associator: side cardinalities disagree");
    const auto hw_it = triple_hw.find(l);
    if (hw_it == triple_hw.end() || hw_it->second.size() != left.size())
      throw std::logic_error("associator: cardinality differs from the triple tensor");
    std::vector<AssociatorEntry> entries;
    for (const auto& ls : left) {
      if (std::find(hw_it->second.begin(), hw_it->second.end(), ls.flat) == hw_it->second.end())
        throw std::logic_error("associator: left flat label is not highest weight");
      const auto match = std::find_if(rit->second.begin(), rit->second.end(),
                                      [&](const Side& r) { return r.flat == ls.flat; });
      if (match == rit->second.end())
        throw std::logic_error("associator: unmatched flat label");
      entries.push_back(AssociatorEntry{ls.inner_weight, ls.first, ls.second,
                                        match->inner_weight, match->first, match->second,
                                        ls.flat});
    }
    out[l] = std::move(entries);
  }
  if (rhs.size() != out.size())
    throw std::logic_error("associator: right side has extra weights");
  return out;
}

}  // namespace

Associator associator(int i, int j, int k) {
  static std::map<std::tuple<int, int, int>, Associator> cache;
  static std::mutex assoc_mutex;
  std::lock_guard<std::mutex> lock(assoc_mutex);
  const auto key = std::make_tuple(i, j, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_associator(i, j, k)).first;
  return it->second;
}

namespace {

struct PentagonTuple {
  int w1, w2;  // the two inner weights of the bracketing
  std::string x1, x2, x3;
  friend bool operator==(const PentagonTuple&, const PentagonTuple&) = default;
};

// φ^l applied to (alpha, t1, t2): the matching right-bracketed component.
std::tuple<int, std::string, std::string> apply_assoc(const Associator& phi, int l, int alpha,
                                                      const std::string& t1,
                                                      const std::string& t2) {
  const auto it = phi.find(l);
  if (it == phi.end()) throw std::logic_error("apply_assoc: weight not present");
  for (const auto& e : it->second)
    if (e.alpha == alpha && e.t1 == t1 && e.t2 == t2) return {e.beta, e.u1, e.u2};
  throw std::logic_error("apply_assoc: entry not found");
}

}  // namespace

bool pentagon_check(int i, int j, int k, int l) {
  // tuples of ((ij)k)l at weight w: t1 in V_ij^a, t2 in V_ak^b, t3 in V_bl^w
  for (const auto& [a, t1s] : multiplicity_table(i, j))
    for (const auto& [b, t2s] : multiplicity_table(a, k))
      for (const auto& [w, t3s] : multiplicity_table(b, l))
        for (const auto& t1 : t1s)
          for (const auto& t2 : t2s)
            for (const auto& t3 : t3s) {
              // path 1: associate (i j k), then (i, jk, l), then (j k l)
              const auto [g1, u1, u2] = apply_assoc(associator(i, j, k), b, a, t1, t2);
              const auto [d1, p1, p2] = apply_assoc(associator(i, g1, l), w, b, u1, t3);
              const auto [e1, q1, q2] = apply_assoc(associator(j, k, l), d1, g1, u2, p2);
              const PentagonTuple via1{e1, d1, q2, q1, p1};
              // path 2: associate (ij, k, l), then (i, j, kl)
              const auto [e2, r1, r2] = apply_assoc(associator(a, k, l), w, b, t2, t3);
              const auto [d2, s1, s2] = apply_assoc(associator(i, j, e2), w, a, t1, r1);
              const PentagonTuple via2{e2, d2, r2, s2, s1};
              if (!(via1 == via2)) return false;
            }
  return true;
}

const CQObject& cq_power_object(int m) {
  static std::map<int, CQObject> cache;
  static std::mutex power_mutex;
  std::lock_guard<std::mutex> lock(power_mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, from_crystal(cached_power(m))).first;
  return it->second;
}

CQMorphism functor_from_c(const HomElement& h) {
  CQMorphism out(cq_power_object(h.source_power()), cq_power_object(h.target_power()));
  for (const auto& [d, c] : h.terms())
    out += c * from_crystal_morphism(eval_diagram(d));
  return out;
}

SplitImage image_object(const CQMorphism& idempotent, const std::string& label_prefix) {
  if (idempotent.source() != idempotent.target())
    throw std::invalid_argument("image_object: not an endomorphism");
  if (compose(idempotent, idempotent) != idempotent)
    throw std::invalid_argument("image_object: not idempotent");
  std::map<int, std::vector<std::string>> mult;
  std::map<int, RatMatrix> incl_blocks, proj_blocks;
  for (const auto& [n, b] : idempotent.stored_blocks()) {
    const auto rr = rref(b);
    const int r = static_cast<int>(rr.pivot_cols.size());
    if (r == 0) continue;
    RatMatrix incl(b.rows(), r);  // pivot columns of the idempotent
    for (int c = 0; c < r; ++c)
      for (int row = 0; row < b.rows(); ++row)
        incl.at(row, c) = b.at(row, rr.pivot_cols[static_cast<std::size_t>(c)]);
    RatMatrix proj(r, b.cols());  // nonzero rows of the reduced form
    for (int row = 0; row < r; ++row)
      for (int c = 0; c < b.cols(); ++c) proj.at(row, c) = rr.reduced.at(row, c);
    if (!(proj * incl == RatMatrix::identity(r)))
      throw std::logic_error("image_object: factorization failed");
    std::vector<std::string> labels;
    for (int c = 0; c < r; ++c)
      labels.push_back(label_prefix + "_" + std::to_string(n) + "_" + std::to_string(c));
    mult[n] = std::move(labels);
    incl_blocks.emplace(n, std::move(incl));
    proj_blocks.emplace(n, std::move(proj));
  }
  CQObject obj(std::move(mult));
  CQMorphism inclusion(obj, idempotent.source(), std::move(incl_blocks));
  CQMorphism projection(idempotent.source(), obj, std::move(proj_blocks));
  if (compose(inclusion, projection) != idempotent)
    throw std::logic_error("image_object: inclusion∘projection is not the idempotent");
  return SplitImage{std::move(obj), std::move(inclusion), std::move(projection)};
}

namespace {

// object part of the functor on the completion: the image of each summand
// idempotent, labels determined by the summand position alone so that equal
// objects get equal images
std::vector<SplitImage> cq_images_of(const CObject& o) {
  std::vector<SplitImage> out;
  for (std::size_t j = 0; j < o.summands().size(); ++j)
    out.push_back(image_object(functor_from_c(o.summands()[j].idempotent()),
                               "k" + std::to_string(j)));
  return out;
}

}  // namespace

CQMorphism functor_from_c(const CMorphism& f) {
  const std::vector<SplitImage> srcs = cq_images_of(f.source());
  const std::vector<SplitImage> tgts = cq_images_of(f.target());

  auto sum_object = [](const std::vector<SplitImage>& parts) {
    std::map<int, std::vector<std::string>> mult;
    for (const auto& p : parts)
      for (const auto& [n, ls] : p.object.mult())
        mult[n].insert(mult[n].end(), ls.begin(), ls.end());
    return CQObject(std::move(mult));
  };
  const CQObject src = sum_object(srcs);
  const CQObject tgt = sum_object(tgts);

  std::map<int, RatMatrix> blocks;
  // weights present in either side
  std::vector<int> weights;
  for (const auto& [n, ls] : src.mult()) weights.push_back(n);
  for (const auto& [n, ls] : tgt.mult()) weights.push_back(n);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

  for (const int n : weights) {
    RatMatrix m(tgt.dim(n), src.dim(n));
    bool nonzero = false;
    int row_off = 0;
    for (std::size_t i = 0; i < tgts.size(); ++i) {
      int col_off = 0;
      for (std::size_t j = 0; j < srcs.size(); ++j) {
        const CQMorphism img = functor_from_c(f.block(static_cast<int>(i), static_cast<int>(j)));
        const RatMatrix sub =
            compose(compose(tgts[i].projection, img), srcs[j].inclusion).block(n);
        for (int r = 0; r < sub.rows(); ++r)
          for (int c = 0; c < sub.cols(); ++c)
            if (!sub.at(r, c).is_zero()) {
              m.at(row_off + r, col_off + c) = sub.at(r, c);
              nonzero = true;
            }
        col_off += srcs[j].object.dim(n);
      }
      row_off += tgts[i].object.dim(n);
    }
    if (nonzero) blocks.emplace(n, std::move(m));
  }
  return CQMorphism(src, tgt, std::move(blocks));
}

EquivalenceReport verify_equivalence(int bound) {
  EquivalenceReport report;
  report.ok = true;
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; m + n <= bound; ++n) {
      const auto basis = hom_basis(m, n);
      const CQObject& src = cq_power_object(m);
      const CQObject& tgt = cq_power_object(n);
      long long dim_cq = 0;
      std::vector<int> weights;
      for (const auto& [k, ls] : src.mult()) {
        dim_cq += static_cast<long long>(ls.size()) * tgt.dim(k);
        if (tgt.dim(k) > 0) weights.push_back(k);
      }
      // functor matrix: one flattened column per basis matching
      int total_entries = 0;
      for (const int k : weights) total_entries += src.dim(k) * tgt.dim(k);
      RatMatrix mat(total_entries, static_cast<int>(basis.size()));
      for (std::size_t col = 0; col < basis.size(); ++col) {
        const CQMorphism img = functor_from_c(HomElement::single(basis[col]));
        int off = 0;
        for (const int k : weights) {
          const RatMatrix b = img.block(k);
          for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c)
              mat.at(off + r * b.cols() + c, static_cast<int>(col)) = b.at(r, c);
          off += tgt.dim(k) * src.dim(k);
        }
      }
      const int fr = rank(mat);
      EquivalencePair pair{m, n, static_cast<long long>(basis.size()), dim_cq, fr,
                           static_cast<long long>(basis.size()) == dim_cq &&
                               fr == static_cast<int>(basis.size())};
      report.ok = report.ok && pair.ok;
      report.pairs.push_back(pair);
    }

  report.essential_surjectivity_ok = true;
  const int witness_bound = std::min(bound, 6);
  for (int n = 0; n <= witness_bound; ++n) {
    const auto family = decompose_object(n);
    int hits = 0;
    for (const auto& [tag, e] : family)
      if (tag == n) ++hits;
    if (hits != 1) report.essential_surjectivity_ok = false;
  }
  for (int n = 0; n <= bound; ++n)
    if (cq_power_object(n).dim(n) != 1) report.essential_surjectivity_ok = false;
  report.ok = report.ok && report.essential_surjectivity_ok;
  return report;
}

}  // namespace sl2cat
