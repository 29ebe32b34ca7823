#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sl2cat {

/// Boundary point of a rectangle diagram: bottom points 0..m-1 and top
/// points 0..n-1, both counted left to right.
struct Point {
  bool top;
  int index;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A noncrossing perfect pairing of m bottom and n top points: the nonzero
/// morphisms F^m -> F^n of the diagram category. Two diagrams are equal
/// exactly when they induce the same pairing.
class PlanarMatching {
public:
  /// Throws std::invalid_argument unless the pairs form a perfect matching
  /// and the noncrossing condition holds (points on a circle in order
  /// bottom 0..m-1 then top n-1..0, no two chords interleaved).
  PlanarMatching(int bottom, int top, const std::vector<std::pair<Point, Point>>& pairs);

  static PlanarMatching identity(int m);
  static PlanarMatching cup();  // unit -> F^2
  static PlanarMatching cap();  // F^2 -> unit

  int bottom_points() const { return bottom_; }
  int top_points() const { return top_; }

  /// Partner of a point under the pairing.
  Point partner(const Point& p) const;

  /// All pairs, each listed once, in canonical order.
  std::vector<std::pair<Point, Point>> pairs() const;

  friend bool operator==(const PlanarMatching& a, const PlanarMatching& b);
  friend bool operator!=(const PlanarMatching& a, const PlanarMatching& b) { return !(a == b); }
  friend bool operator<(const PlanarMatching& a, const PlanarMatching& b);

  std::string describe() const;

private:
  PlanarMatching() = default;
  // unified point ids: bottom i -> i, top j -> bottom_ + j
  int point_id(const Point& p) const;
  Point id_point(int id) const;

  int bottom_ = 0, top_ = 0;
  std::vector<int> partner_;

  friend std::vector<PlanarMatching> enumerate_matchings(int m, int n);
};

/// A morphism of the diagram category: either zero or a planar matching.
/// Zero absorbs under both composition and tensor.
class DiagramResult {
public:
  DiagramResult() = default;  // zero
  DiagramResult(PlanarMatching d) : d_(std::move(d)) {}
  static DiagramResult zero() { return DiagramResult(); }

  bool is_zero() const { return !d_.has_value(); }
  const PlanarMatching& diagram() const;

  friend bool operator==(const DiagramResult& a, const DiagramResult& b) {
    return a.d_ == b.d_;
  }
  friend bool operator!=(const DiagramResult& a, const DiagramResult& b) { return !(a == b); }

private:
  std::optional<PlanarMatching> d_;
};

/// All planar matchings of shape (m, n), in a deterministic order. The count
/// is Catalan((m+n)/2) when m + n is even, otherwise the list is empty.
std::vector<PlanarMatching> enumerate_matchings(int m, int n);

/// Vertical composition g . f for f: m -> n, g: n -> p. Glues f's top row to
/// g's bottom row and traces connected components. A component crossing the
/// glued interface three or more times contains a zigzag, so the composite is
/// zero; closed loops cross exactly twice and are deleted with factor 1.
/// Throws std::invalid_argument when the interface widths disagree.
DiagramResult compose(const PlanarMatching& g, const PlanarMatching& f);
DiagramResult compose(const DiagramResult& g, const DiagramResult& f);

/// Horizontal juxtaposition; g's points are shifted past f's widths.
DiagramResult tensor(const DiagramResult& f, const DiagramResult& g);
PlanarMatching tensor(const PlanarMatching& f, const PlanarMatching& g);

/// Elementary slice of a diagram: a cup inserts an adjacent paired couple of
/// points at `position` among `width` strands (width -> width + 2); a cap
/// joins strands position, position + 1 (width -> width - 2).
struct Slice {
  enum class Kind { Cup, Cap };
  Kind kind;
  int position;
  int width;

  friend bool operator==(const Slice&, const Slice&) = default;
};

/// Writes d as a composite of elementary slices, cups first (in order of
/// creation, outermost pair first), then caps (innermost pair first), ties
/// broken left to right. Recomposing the slices onto the identity of F^m
/// reproduces d exactly.
std::vector<Slice> slice_decompose(const PlanarMatching& d);

/// The slice as a planar matching of shape (width, width +/- 2).
PlanarMatching slice_matching(const Slice& s);

/// Left-to-right composition of slices applied on top of id_{F^m}.
DiagramResult compose_slices(int m, const std::vector<Slice>& slices);

}  // namespace sl2cat
