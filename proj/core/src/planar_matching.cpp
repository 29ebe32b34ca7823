#include "sl2cat/planar_matching.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sl2cat {

int PlanarMatching::point_id(const Point& p) const {
  if (p.index < 0) throw std::invalid_argument("PlanarMatching: negative point index");
  if (!p.top) {
    if (p.index >= bottom_) throw std::invalid_argument("PlanarMatching: bottom index out of range");
    return p.index;
  }
  if (p.index >= top_) throw std::invalid_argument("PlanarMatching: top index out of range");
  return bottom_ + p.index;
}

Point PlanarMatching::id_point(int id) const {
  if (id < bottom_) return Point{false, id};
  return Point{true, id - bottom_};
}

namespace {

// Position of a point on the boundary circle: bottom row left to right, then
// top row right to left.
int circle_pos(int id, int bottom, int top) {
  if (id < bottom) return id;
  return bottom + (top - 1 - (id - bottom));
}

}  // namespace

PlanarMatching::PlanarMatching(int bottom, int top,
                               const std::vector<std::pair<Point, Point>>& pairs)
    : bottom_(bottom), top_(top) {
  if (bottom < 0 || top < 0)
    throw std::invalid_argument("PlanarMatching: negative point count");
  const int total = bottom + top;
  if (total % 2 != 0)
    throw std::invalid_argument("PlanarMatching: odd total point count");
  if (static_cast<int>(pairs.size()) * 2 != total)
    throw std::invalid_argument("PlanarMatching: pair count does not cover all points");
  partner_.assign(static_cast<std::size_t>(total), -1);
  for (const auto& [a, b] : pairs) {
    const int ia = point_id(a), ib = point_id(b);
    if (ia == ib) throw std::invalid_argument("PlanarMatching: point paired with itself");
    if (partner_[ia] != -1 || partner_[ib] != -1)
      throw std::invalid_argument("PlanarMatching: point appears in two pairs");
    partner_[ia] = ib;
    partner_[ib] = ia;
  }
  // noncrossing: no two chords interleave on the boundary circle
  for (int a = 0; a < total; ++a) {
    if (partner_[a] < a) continue;
    int lo = circle_pos(a, bottom_, top_);
    int hi = circle_pos(partner_[a], bottom_, top_);
    if (lo > hi) std::swap(lo, hi);
    for (int c = 0; c < total; ++c) {
      if (partner_[c] < c || (c == a)) continue;
      const int p = circle_pos(c, bottom_, top_);
      const int q = circle_pos(partner_[c], bottom_, top_);
      const bool p_in = (p > lo && p < hi);
      const bool q_in = (q > lo && q < hi);
      if (p_in != q_in)
        throw std::invalid_argument("PlanarMatching: crossing strands");
    }
  }
}

PlanarMatching PlanarMatching::identity(int m) {
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pairs.push_back({Point{false, i}, Point{true, i}});
  return PlanarMatching(m, m, pairs);
}

PlanarMatching PlanarMatching::cup() {
  return PlanarMatching(0, 2, {{Point{true, 0}, Point{true, 1}}});
}

PlanarMatching PlanarMatching::cap() {
  return PlanarMatching(2, 0, {{Point{false, 0}, Point{false, 1}}});
}

Point PlanarMatching::partner(const Point& p) const { return id_point(partner_[point_id(p)]); }

std::vector<std::pair<Point, Point>> PlanarMatching::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (int id = 0; id < static_cast<int>(partner_.size()); ++id)
    if (partner_[id] > id) out.push_back({id_point(id), id_point(partner_[id])});
  return out;
}

bool operator==(const PlanarMatching& a, const PlanarMatching& b) {
  return a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.partner_ == b.partner_;
}

bool operator<(const PlanarMatching& a, const PlanarMatching& b) {
  if (a.bottom_ != b.bottom_) return a.bottom_ < b.bottom_;
  if (a.top_ != b.top_) return a.top_ < b.top_;
  return a.partner_ < b.partner_;
}

std::string PlanarMatching::describe() const {
  std::ostringstream os;
  os << "(" << bottom_ << "->" << top_ << ")";
  for (const auto& [a, b] : pairs())
    os << " " << (a.top ? "t" : "b") << a.index << "-" << (b.top ? "t" : "b") << b.index;
  return os.str();
}

const PlanarMatching& DiagramResult::diagram() const {
  if (!d_) throw std::logic_error("DiagramResult: zero has no diagram");
  return *d_;
}

namespace {

// Noncrossing perfect matchings of the linear position sequence [lo, hi).
void gen_matchings(int lo, int hi, std::vector<int>& partner,
                   std::vector<std::vector<int>>& out) {
  if (lo >= hi) {
    out.push_back(partner);
    return;
  }
  for (int k = lo + 1; k < hi; k += 2) {
    partner[lo] = k;
    partner[k] = lo;
    // inner segment [lo+1, k), then outer [k+1, hi)
    std::vector<int> saved = partner;
    std::vector<std::vector<int>> inner_done;
    gen_matchings(lo + 1, k, partner, inner_done);
    for (auto& pi : inner_done) {
      partner = pi;
      gen_matchings(k + 1, hi, partner, out);
    }
    partner = saved;
  }
}

}  // namespace

std::vector<PlanarMatching> enumerate_matchings(int m, int n) {
  std::vector<PlanarMatching> result;
  if (m < 0 || n < 0) throw std::invalid_argument("enumerate_matchings: negative count");
  const int total = m + n;
  if (total % 2 != 0) return result;
  std::vector<int> partner(static_cast<std::size_t>(total), -1);
  std::vector<std::vector<int>> raw;
  gen_matchings(0, total, partner, raw);
  auto pos_to_point = [&](int pos) {
    return pos < m ? Point{false, pos} : Point{true, n - 1 - (pos - m)};
  };
  for (const auto& pm : raw) {
    std::vector<std::pair<Point, Point>> pairs;
    for (int pos = 0; pos < total; ++pos)
      if (pm[pos] > pos) pairs.push_back({pos_to_point(pos), pos_to_point(pm[pos])});
    result.emplace_back(PlanarMatching(m, n, pairs));
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

// Nodes of the glued picture: outer bottom points of f, interface points, and
// outer top points of g.
enum class NodeKind { OuterBottom, Middle, OuterTop };
struct Node {
  NodeKind kind;
  int index;
  friend bool operator==(const Node&, const Node&) = default;
};

}  // namespace

DiagramResult compose(const PlanarMatching& g, const PlanarMatching& f) {
  if (f.top_points() != g.bottom_points())
    throw std::invalid_argument("compose: interface widths disagree");
  const int m = f.bottom_points(), n = f.top_points(), p = g.top_points();

  // neighbour through an f-edge / g-edge
  auto f_step = [&](const Point& pt) -> Node {
    const Point q = f.partner(pt);
    return q.top ? Node{NodeKind::Middle, q.index} : Node{NodeKind::OuterBottom, q.index};
  };
  auto g_step = [&](const Point& pt) -> Node {
    const Point q = g.partner(pt);
    return q.top ? Node{NodeKind::OuterTop, q.index} : Node{NodeKind::Middle, q.index};
  };

  std::vector<bool> mid_visited(static_cast<std::size_t>(n), false);
  std::vector<std::pair<Node, Node>> path_ends;

  auto walk_from_outer = [&](Node start) {
    Node cur = start;
    bool came_via_f = false;  // meaningful only at middle nodes
    int crossings = 0;
    while (true) {
      Node next{};
      if (cur.kind == NodeKind::OuterBottom) {
        next = f_step(Point{false, cur.index});
        came_via_f = true;
      } else if (cur.kind == NodeKind::OuterTop) {
        next = g_step(Point{true, cur.index});
        came_via_f = false;
      } else {
        if (came_via_f) {
          next = g_step(Point{false, cur.index});
          came_via_f = false;
        } else {
          next = f_step(Point{true, cur.index});
          came_via_f = true;
        }
      }
      if (next.kind == NodeKind::Middle) {
        mid_visited[static_cast<std::size_t>(next.index)] = true;
        ++crossings;
        cur = next;
      } else {
        path_ends.push_back({start, next});
        return crossings;
      }
    }
  };

  std::vector<bool> outer_done(static_cast<std::size_t>(m + p), false);
  int max_crossings = 0;
  for (int i = 0; i < m + p; ++i) {
    if (outer_done[static_cast<std::size_t>(i)]) continue;
    const Node start = i < m ? Node{NodeKind::OuterBottom, i} : Node{NodeKind::OuterTop, i - m};
    const int c = walk_from_outer(start);
    max_crossings = std::max(max_crossings, c);
    const Node end = path_ends.back().second;
    const int end_id = end.kind == NodeKind::OuterBottom ? end.index : m + end.index;
    outer_done[static_cast<std::size_t>(i)] = true;
    outer_done[static_cast<std::size_t>(end_id)] = true;
  }

  // remaining interface points lie on closed loops
  for (int t = 0; t < n; ++t) {
    if (mid_visited[static_cast<std::size_t>(t)]) continue;
    int crossings = 0;
    Node cur{NodeKind::Middle, t};
    bool leave_via_f = true;
    do {
      mid_visited[static_cast<std::size_t>(cur.index)] = true;
      ++crossings;
      const Node next = leave_via_f ? f_step(Point{true, cur.index})
                                    : g_step(Point{false, cur.index});
      if (next.kind != NodeKind::Middle)
        throw std::logic_error("compose: loop escaped the interface");
      leave_via_f = !leave_via_f;
      cur = next;
    } while (!(cur.index == t));
    max_crossings = std::max(max_crossings, crossings);
  }

  if (max_crossings >= 3) return DiagramResult::zero();

  std::vector<std::pair<Point, Point>> pairs;
  auto as_point = [&](const Node& nd) {
    return nd.kind == NodeKind::OuterBottom ? Point{false, nd.index} : Point{true, nd.index};
  };
  for (const auto& [a, b] : path_ends) pairs.push_back({as_point(a), as_point(b)});
  return DiagramResult(PlanarMatching(m, p, pairs));
}

DiagramResult compose(const DiagramResult& g, const DiagramResult& f) {
  if (g.is_zero() || f.is_zero()) return DiagramResult::zero();
  return compose(g.diagram(), f.diagram());
}

PlanarMatching tensor(const PlanarMatching& f, const PlanarMatching& g) {
  const int mb = f.bottom_points(), mt = f.top_points();
  std::vector<std::pair<Point, Point>> pairs = f.pairs();
  for (const auto& [a, b] : g.pairs()) {
    auto shift = [&](const Point& pt) {
      return Point{pt.top, pt.index + (pt.top ? mt : mb)};
    };
    pairs.push_back({shift(a), shift(b)});
  }
  return PlanarMatching(mb + g.bottom_points(), mt + g.top_points(), pairs);
}

DiagramResult tensor(const DiagramResult& f, const DiagramResult& g) {
  if (f.is_zero() || g.is_zero()) return DiagramResult::zero();
  return DiagramResult(tensor(f.diagram(), g.diagram()));
}

namespace {

// slice_decompose bookkeeping: every boundary point becomes a token in the
// widest intermediate configuration (all cups fired, no caps yet).
struct Token {
  enum class Kind { BottomPair, Through, TopPair } kind;
  int index;  // bottom index, through rank, or top index
};

}  // namespace

std::vector<Slice> slice_decompose(const PlanarMatching& d) {
  const int m = d.bottom_points(), n = d.top_points();
  std::vector<std::pair<int, int>> bottom_pairs, top_pairs, through;
  for (const auto& [a, b] : d.pairs()) {
    if (!a.top && !b.top) bottom_pairs.push_back({std::min(a.index, b.index), std::max(a.index, b.index)});
    else if (a.top && b.top) top_pairs.push_back({std::min(a.index, b.index), std::max(a.index, b.index)});
    else if (!a.top) through.push_back({a.index, b.index});
    else through.push_back({b.index, a.index});
  }
  std::sort(through.begin(), through.end());
  for (std::size_t i = 1; i < through.size(); ++i)
    if (through[i].second < through[i - 1].second)
      throw std::logic_error("slice_decompose: through strands out of order");

  // token order in the widest configuration: per through-gap, bottom pair
  // points first (ascending), then top pair points (ascending)
  const int k = static_cast<int>(through.size());
  std::map<std::pair<int, int>, int> order;  // (kind tag, index) -> rank; tags: 0 bottom, 1 through, 2 top
  {
    int rank = 0;
    std::vector<int> bpts, tpts;
    for (const auto& [i1, i2] : bottom_pairs) { bpts.push_back(i1); bpts.push_back(i2); }
    for (const auto& [j1, j2] : top_pairs) { tpts.push_back(j1); tpts.push_back(j2); }
    std::sort(bpts.begin(), bpts.end());
    std::sort(tpts.begin(), tpts.end());
    std::size_t bi = 0, ti = 0;
    for (int gap = 0; gap <= k; ++gap) {
      const int b_hi = gap < k ? through[static_cast<std::size_t>(gap)].first : m;
      const int t_hi = gap < k ? through[static_cast<std::size_t>(gap)].second : n;
      while (bi < bpts.size() && bpts[bi] < b_hi) order[{0, bpts[bi++]}] = rank++;
      while (ti < tpts.size() && tpts[ti] < t_hi) order[{2, tpts[ti++]}] = rank++;
      if (gap < k) order[{1, gap}] = rank++;
    }
  }

  // current strand configuration, as token ranks; starts as the bottom row
  std::vector<int> current;
  {
    std::vector<std::pair<int, int>> row;  // (bottom index, rank)
    for (const auto& [key, rank] : order) {
      if (key.first == 0) row.push_back({key.second, rank});
      if (key.first == 1) row.push_back({through[static_cast<std::size_t>(key.second)].first, rank});
    }
    std::sort(row.begin(), row.end());
    for (const auto& [idx, rank] : row) current.push_back(rank);
  }

  std::vector<Slice> slices;

  // cups: outermost first (ascending left endpoint)
  std::sort(top_pairs.begin(), top_pairs.end());
  for (const auto& [j1, j2] : top_pairs) {
    const int r1 = order[{2, j1}], r2 = order[{2, j2}];
    int pos = 0;
    while (pos < static_cast<int>(current.size()) && current[static_cast<std::size_t>(pos)] < r1) ++pos;
    if (pos < static_cast<int>(current.size()) && current[static_cast<std::size_t>(pos)] < r2)
      throw std::logic_error("slice_decompose: cup insertion not adjacent");
    slices.push_back(Slice{Slice::Kind::Cup, pos, static_cast<int>(current.size())});
    current.insert(current.begin() + pos, {r1, r2});
  }

  // caps: innermost first (ascending right endpoint)
  std::sort(bottom_pairs.begin(), bottom_pairs.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  for (const auto& [i1, i2] : bottom_pairs) {
    const int r1 = order[{0, i1}], r2 = order[{0, i2}];
    int pos = 0;
    while (pos < static_cast<int>(current.size()) && current[static_cast<std::size_t>(pos)] != r1) ++pos;
    if (pos + 1 >= static_cast<int>(current.size()) ||
        current[static_cast<std::size_t>(pos) + 1] != r2)
      throw std::logic_error("slice_decompose: cap strands not adjacent");
    slices.push_back(Slice{Slice::Kind::Cap, pos, static_cast<int>(current.size())});
    current.erase(current.begin() + pos, current.begin() + pos + 2);
  }

  if (static_cast<int>(current.size()) != n)
    throw std::logic_error("slice_decompose: final width mismatch");
  return slices;
}

PlanarMatching slice_matching(const Slice& s) {
  std::vector<std::pair<Point, Point>> pairs;
  if (s.kind == Slice::Kind::Cup) {
    for (int i = 0; i < s.position; ++i) pairs.push_back({Point{false, i}, Point{true, i}});
    pairs.push_back({Point{true, s.position}, Point{true, s.position + 1}});
    for (int i = s.position; i < s.width; ++i)
      pairs.push_back({Point{false, i}, Point{true, i + 2}});
    return PlanarMatching(s.width, s.width + 2, pairs);
  }
  for (int i = 0; i < s.position; ++i) pairs.push_back({Point{false, i}, Point{true, i}});
  pairs.push_back({Point{false, s.position}, Point{false, s.position + 1}});
  for (int i = s.position + 2; i < s.width; ++i)
    pairs.push_back({Point{false, i}, Point{true, i - 2}});
  return PlanarMatching(s.width, s.width - 2, pairs);
}

DiagramResult compose_slices(int m, const std::vector<Slice>& slices) {
  DiagramResult r(PlanarMatching::identity(m));
  for (const auto& s : slices) r = compose(DiagramResult(slice_matching(s)), r);
  return r;
}

}  // namespace sl2cat
