#include "sl2cat/crystal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sl2cat {

namespace {

const std::string kOtimes = "⊗";  // ⊗

std::vector<std::string> split_word(const std::string& label) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = label.find(kOtimes, start);
    if (pos == std::string::npos) {
      parts.push_back(label.substr(start));
      return parts;
    }
    parts.push_back(label.substr(start, pos - start));
    start = pos + kOtimes.size();
  }
}

std::string join_word(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += kOtimes;
    out += parts[i];
  }
  return out;
}

}  // namespace

int Crystal::idx(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end())
    throw std::invalid_argument("Crystal: unknown element '" + label + "'");
  return it->second;
}

Crystal::Crystal(CrystalData data) {
  for (const auto& e : data.elements) {
    if (index_.count(e.label))
      throw std::invalid_argument("Crystal: duplicate label '" + e.label + "'");
    index_[e.label] = static_cast<int>(elems_.size());
    elems_.push_back(Elem{e.label, e.wt, e.eps, e.phi, -1, -1});
    labels_.push_back(e.label);
  }
  for (std::size_t i = 0; i < data.elements.size(); ++i) {
    const auto& e = data.elements[i];
    if (e.e_to) elems_[i].e_to = idx(*e.e_to);
    if (e.f_to) elems_[i].f_to = idx(*e.f_to);
  }
}

Crystal Crystal::b(int n) {
  if (n < 0) throw std::invalid_argument("Crystal::b: negative highest weight");
  CrystalData data;
  for (int k = n; k >= -n; k -= 2) {
    CrystalData::Element e;
    e.label = "v" + std::to_string(k);
    e.wt = k;
    e.eps = (n - k) / 2;
    e.phi = (n + k) / 2;
    if (k < n) e.e_to = "v" + std::to_string(k + 2);
    if (k > -n) e.f_to = "v" + std::to_string(k - 2);
    data.elements.push_back(std::move(e));
  }
  return Crystal(std::move(data));
}

bool Crystal::has_element(const std::string& label) const { return index_.count(label) > 0; }

int Crystal::wt(const std::string& label) const { return elems_[idx(label)].wt; }
int Crystal::eps(const std::string& label) const { return elems_[idx(label)].eps; }
int Crystal::phi(const std::string& label) const { return elems_[idx(label)].phi; }

std::optional<std::string> Crystal::e(const std::string& label) const {
  const int to = elems_[idx(label)].e_to;
  if (to < 0) return std::nullopt;
  return elems_[to].label;
}

std::optional<std::string> Crystal::f(const std::string& label) const {
  const int to = elems_[idx(label)].f_to;
  if (to < 0) return std::nullopt;
  return elems_[to].label;
}

std::optional<std::string> Crystal::e_power(const std::string& label, int k) const {
  std::optional<std::string> cur = label;
  for (int i = 0; i < k && cur; ++i) cur = e(*cur);
  return cur;
}

std::optional<std::string> Crystal::f_power(const std::string& label, int k) const {
  std::optional<std::string> cur = label;
  for (int i = 0; i < k && cur; ++i) cur = f(*cur);
  return cur;
}

std::vector<AxiomViolation> Crystal::validate() const {
  std::vector<AxiomViolation> out;
  const int cap = size() + 1;
  auto chain_length = [&](int start, bool raising) -> int {
    int steps = 0, cur = start;
    while (steps <= cap) {
      const int next = raising ? elems_[cur].e_to : elems_[cur].f_to;
      if (next < 0) return steps;
      cur = next;
      ++steps;
    }
    return -1;  // cycle
  };
  for (const auto& el : elems_) {
    if (el.phi != el.eps + el.wt)
      out.push_back({1, el.label, "phi != eps + wt"});
    if (el.e_to >= 0) {
      const Elem& up = elems_[el.e_to];
      if (up.wt != el.wt + 2 || up.eps != el.eps - 1 || up.phi != el.phi + 1)
        out.push_back({2, el.label, "stats do not shift by (+2,-1,+1) along e"});
    }
    if (el.f_to >= 0) {
      const Elem& down = elems_[el.f_to];
      if (down.wt != el.wt - 2 || down.eps != el.eps + 1 || down.phi != el.phi - 1)
        out.push_back({3, el.label, "stats do not shift by (-2,+1,-1) along f"});
    }
  }
  // axiom (4): b = e b' iff f b = b'
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const auto& el = elems_[i];
    if (el.e_to >= 0 && elems_[el.e_to].f_to != static_cast<int>(i))
      out.push_back({4, el.label, "f(e b) != b"});
    if (el.f_to >= 0 && elems_[el.f_to].e_to != static_cast<int>(i))
      out.push_back({4, el.label, "e(f b) != b"});
  }
  // axiom (5): eps and phi measure the string lengths
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const auto& el = elems_[i];
    const int up = chain_length(static_cast<int>(i), true);
    const int down = chain_length(static_cast<int>(i), false);
    if (up < 0 || down < 0) {
      out.push_back({5, el.label, "e/f chain does not terminate"});
      continue;
    }
    if (el.eps != up) out.push_back({5, el.label, "eps != max{n : e^n b != 0}"});
    if (el.phi != down) out.push_back({5, el.label, "phi != max{n : f^n b != 0}"});
  }
  return out;
}

CrystalData Crystal::data() const {
  CrystalData d;
  for (const auto& el : elems_) {
    CrystalData::Element e;
    e.label = el.label;
    e.wt = el.wt;
    e.eps = el.eps;
    e.phi = el.phi;
    if (el.e_to >= 0) e.e_to = elems_[el.e_to].label;
    if (el.f_to >= 0) e.f_to = elems_[el.f_to].label;
    d.elements.push_back(std::move(e));
  }
  return d;
}

bool operator==(const Crystal& a, const Crystal& b) {
  if (a.elems_.size() != b.elems_.size()) return false;
  for (std::size_t i = 0; i < a.elems_.size(); ++i) {
    const auto& x = a.elems_[i];
    const auto& y = b.elems_[i];
    if (x.label != y.label || x.wt != y.wt || x.eps != y.eps || x.phi != y.phi ||
        x.e_to != y.e_to || x.f_to != y.f_to)
      return false;
  }
  return true;
}

Crystal tensor(const Crystal& a, const Crystal& b) {
  CrystalData data;
  for (const auto& x : a.labels()) {
    for (const auto& y : b.labels()) {
      CrystalData::Element el;
      el.label = x + kOtimes + y;
      el.wt = a.wt(x) + b.wt(y);
      el.eps = std::max(b.eps(y), a.eps(x) - b.wt(y));
      el.phi = std::max(a.phi(x), b.phi(y) + a.wt(x));
      if (a.eps(x) > b.phi(y)) {
        if (auto ex = a.e(x)) el.e_to = *ex + kOtimes + y;
      } else {
        if (auto ey = b.e(y)) el.e_to = x + kOtimes + *ey;
      }
      if (a.eps(x) >= b.phi(y)) {
        if (auto fx = a.f(x)) el.f_to = *fx + kOtimes + y;
      } else {
        if (auto fy = b.f(y)) el.f_to = x + kOtimes + *fy;
      }
      data.elements.push_back(std::move(el));
    }
  }
  return Crystal(std::move(data));
}

Crystal tensor_power(const Crystal& b, int m) {
  if (m < 0) throw std::invalid_argument("tensor_power: negative power");
  if (m == 0) return Crystal::b(0);
  Crystal acc = b;
  for (int i = 1; i < m; ++i) acc = tensor(acc, b);
  return acc;
}

Crystal direct_sum(const std::vector<Crystal>& parts) {
  CrystalData data;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    const std::string prefix = std::to_string(s) + ":";
    for (const auto& e : parts[s].data().elements) {
      CrystalData::Element el = e;
      el.label = prefix + e.label;
      if (el.e_to) el.e_to = prefix + *el.e_to;
      if (el.f_to) el.f_to = prefix + *el.f_to;
      data.elements.push_back(std::move(el));
    }
  }
  return Crystal(std::move(data));
}

Crystal relabel(const Crystal& c, const std::map<std::string, std::string>& names) {
  CrystalData data;
  auto rename = [&](const std::string& l) {
    const auto it = names.find(l);
    if (it == names.end()) throw std::invalid_argument("relabel: missing name for '" + l + "'");
    return it->second;
  };
  for (const auto& e : c.data().elements) {
    CrystalData::Element el = e;
    el.label = rename(e.label);
    if (el.e_to) el.e_to = rename(*el.e_to);
    if (el.f_to) el.f_to = rename(*el.f_to);
    data.elements.push_back(std::move(el));
  }
  return Crystal(std::move(data));
}

Decomposition decompose(const Crystal& c) {
  Decomposition d;
  for (const auto& label : c.labels()) {
    if (c.eps(label) == 0) {
      const int n = c.wt(label);
      if (n != c.phi(label))
        throw std::logic_error("decompose: highest-weight element with phi != wt");
      d.hw[n].push_back(label);
    }
  }
  for (const auto& [n, hws] : d.hw) {
    for (std::size_t copy = 0; copy < hws.size(); ++copy) {
      std::optional<std::string> cur = hws[copy];
      for (int k = 0; k <= n; ++k) {
        if (!cur) throw std::logic_error("decompose: f-string shorter than the weight");
        if (d.address.count(*cur))
          throw std::logic_error("decompose: element reached from two strings");
        d.address[*cur] = CrystalAddress{n, static_cast<int>(copy), k};
        cur = c.f(*cur);
      }
      if (cur) throw std::logic_error("decompose: f-string longer than the weight");
    }
  }
  if (static_cast<int>(d.address.size()) != c.size())
    throw std::logic_error("decompose: strings do not cover the crystal");
  return d;
}

CrystalMorphism::CrystalMorphism(Crystal source, Crystal target,
                                 std::map<std::string, std::string> assignment)
    : source_(std::move(source)), target_(std::move(target)), assign_(std::move(assignment)) {
  for (const auto& [from, to] : assign_) {
    if (!source_.has_element(from))
      throw std::invalid_argument("CrystalMorphism: unknown source element '" + from + "'");
    if (!target_.has_element(to))
      throw std::invalid_argument("CrystalMorphism: unknown target element '" + to + "'");
  }
}

CrystalMorphism CrystalMorphism::zero(Crystal source, Crystal target) {
  return CrystalMorphism(std::move(source), std::move(target), {});
}

CrystalMorphism CrystalMorphism::identity(const Crystal& c) {
  std::map<std::string, std::string> assign;
  for (const auto& l : c.labels()) assign[l] = l;
  return CrystalMorphism(c, c, std::move(assign));
}

std::optional<std::string> CrystalMorphism::image(const std::string& label) const {
  const auto it = assign_.find(label);
  if (it == assign_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> CrystalMorphism::violations() const {
  std::vector<std::string> out;
  for (const auto& b : source_.labels()) {
    const auto img = image(b);
    if (img) {
      if (source_.wt(b) != target_.wt(*img) || source_.eps(b) != target_.eps(*img) ||
          source_.phi(b) != target_.phi(*img))
        out.push_back("stats not preserved at '" + b + "'");
    }
    for (const bool raising : {true, false}) {
      const auto step_src = raising ? source_.e(b) : source_.f(b);
      std::optional<std::string> expected;  // (e/f)(image(b)), zero absorbing
      if (img) expected = raising ? target_.e(*img) : target_.f(*img);
      if (!step_src) {
        if (expected)
          out.push_back(std::string(raising ? "e" : "f") + " not annihilated at '" + b + "'");
        continue;
      }
      const auto actual = image(*step_src);
      if (actual != expected)
        out.push_back(std::string("image does not commute with ") + (raising ? "e" : "f") +
                      " at '" + b + "'");
    }
  }
  return out;
}

bool operator==(const CrystalMorphism& a, const CrystalMorphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.assign_ == b.assign_;
}

CrystalMorphism compose(const CrystalMorphism& g, const CrystalMorphism& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("compose: crystal morphism shapes do not match");
  std::map<std::string, std::string> assign;
  for (const auto& a : f.source().labels()) {
    const auto mid = f.image(a);
    if (!mid) continue;
    const auto end = g.image(*mid);
    if (end) assign[a] = *end;
  }
  return CrystalMorphism(f.source(), g.target(), std::move(assign));
}

CrystalMorphism tensor(const CrystalMorphism& f, const CrystalMorphism& g) {
  const Crystal src = tensor(f.source(), g.source());
  const Crystal tgt = tensor(f.target(), g.target());
  std::map<std::string, std::string> assign;
  for (const auto& a : f.source().labels()) {
    const auto fa = f.image(a);
    if (!fa) continue;
    for (const auto& b : g.source().labels()) {
      const auto gb = g.image(b);
      if (!gb) continue;
      assign[a + kOtimes + b] = *fa + kOtimes + *gb;
    }
  }
  return CrystalMorphism(src, tgt, std::move(assign));
}

std::vector<CrystalMorphism> hom_enumerate(const Crystal& a, const Crystal& b) {
  const Decomposition da = decompose(a);
  const Decomposition db = decompose(b);
  struct Slot {
    std::string hw;
    int n;
    const std::vector<std::string>* targets;
  };
  std::vector<Slot> slots;
  long long total = 1;
  static const std::vector<std::string> kNone;
  for (const auto& [n, hws] : da.hw) {
    const auto it = db.hw.find(n);
    const auto* targets = it == db.hw.end() ? &kNone : &it->second;
    for (const auto& v : hws) {
      slots.push_back({v, n, targets});
      total *= static_cast<long long>(targets->size()) + 1;
      if (total > 200000)
        throw std::invalid_argument("hom_enumerate: morphism space too large to list");
    }
  }
  std::vector<CrystalMorphism> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> choice(slots.size(), 0);  // 0 = kill, i+1 = targets[i]
  while (true) {
    std::map<std::string, std::string> assign;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (choice[s] == 0) continue;
      const std::string& w = (*slots[s].targets)[choice[s] - 1];
      for (int k = 0; k <= slots[s].n; ++k)
        assign[*a.f_power(slots[s].hw, k)] = *b.f_power(w, k);
    }
    out.emplace_back(CrystalMorphism(a, b, std::move(assign)));
    // mixed-radix increment, last slot fastest
    std::size_t s = slots.size();
    while (s > 0) {
      --s;
      if (++choice[s] <= slots[s].targets->size()) break;
      choice[s] = 0;
      if (s == 0) return out;
    }
    if (slots.empty()) return out;
  }
}

long long hom_count_nonzero(const Crystal& a, const Crystal& b) {
  const Decomposition da = decompose(a);
  const Decomposition db = decompose(b);
  long long total = 1;
  for (const auto& [n, hws] : da.hw) {
    const auto it = db.hw.find(n);
    const long long w = it == db.hw.end() ? 0 : static_cast<long long>(it->second.size());
    for (std::size_t i = 0; i < hws.size(); ++i) total *= (w + 1);
  }
  return total - 1;
}

namespace {

CrystalMorphism eval_slice(const Slice& s) {
  const Crystal src = tensor_power(Crystal::b(1), s.width);
  const int out_width = s.width + (s.kind == Slice::Kind::Cup ? 2 : -2);
  const Crystal tgt = tensor_power(Crystal::b(1), out_width);
  std::map<std::string, std::string> assign;
  for (const auto& label : src.labels()) {
    std::vector<std::string> word = s.width == 0 ? std::vector<std::string>{} : split_word(label);
    if (s.kind == Slice::Kind::Cup) {
      word.insert(word.begin() + s.position, {"v-1", "v1"});
    } else {
      if (word[static_cast<std::size_t>(s.position)] != "v-1" ||
          word[static_cast<std::size_t>(s.position) + 1] != "v1")
        continue;  // cap kills every pair except v_{-1}⊗v_1
      word.erase(word.begin() + s.position, word.begin() + s.position + 2);
    }
    assign[label] = word.empty() ? "v0" : join_word(word);
  }
  return CrystalMorphism(src, tgt, std::move(assign));
}

}  // namespace

CrystalMorphism eval_diagram(const DiagramResult& d, int m, int n) {
  const Crystal src = tensor_power(Crystal::b(1), m);
  const Crystal tgt = tensor_power(Crystal::b(1), n);
  if (d.is_zero()) return CrystalMorphism::zero(src, tgt);
  const PlanarMatching& pm = d.diagram();
  if (pm.bottom_points() != m || pm.top_points() != n)
    throw std::invalid_argument("eval_diagram: diagram shape mismatch");
  CrystalMorphism cur = CrystalMorphism::identity(src);
  for (const auto& s : slice_decompose(pm)) cur = compose(eval_slice(s), cur);
  return cur;
}

CrystalMorphism eval_diagram(const PlanarMatching& d) {
  return eval_diagram(DiagramResult(d), d.bottom_points(), d.top_points());
}

std::string to_dot(const Crystal& c, const std::string& name) {
  auto escape = [](const std::string& s) {
    std::string out;
    for (const char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out;
  };
  std::ostringstream os;
  os << "digraph \"" << escape(name) << "\" {\n";
  os << "  rankdir=TB;\n  node [shape=box];\n";
  for (const auto& l : c.labels()) {
    os << "  \"" << escape(l) << "\" [label=\"" << escape(l) << "\\nwt=" << c.wt(l)
       << " eps=" << c.eps(l) << " phi=" << c.phi(l) << "\"];\n";
  }
  for (const auto& l : c.labels())
    if (auto fl = c.f(l)) os << "  \"" << escape(l) << "\" -> \"" << escape(*fl) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace sl2cat
