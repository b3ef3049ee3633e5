#pragma once

/*
 * Finite unions of rational geodesic segments (plus isolated points) on the
 * r-torus, kept in a canonical form so that set equality is equality of
 * representations.
 *
 * Canonical form. A segment with cover endpoints a != b lies on the closed
 * geodesic through a with direction b - a. Writing b - a = L * v with v a
 * primitive integer vector (first nonzero entry positive) and L > 0, the
 * geodesic is {base + t v : t in R/Z}, where `base` is the
 * lexicographically least torus point of the geodesic whose coordinate
 * `anchor_axis(v)` is zero. The segment is then an arc [start, start + L]
 * of the parameter circle R/Z (full circle when L >= 1). Arcs on the same
 * geodesic are merged into maximal disjoint arcs; isolated points lying on
 * an arc are dropped.
 */

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "soltower/exact_arith.hpp"
#include "soltower/torus.hpp"

namespace soltower {

// A straight piece of the cover, projected to the torus. start != end.
struct TorusSegment {
  CoverVector start;
  CoverVector end;

  TorusSegment(CoverVector start, CoverVector end);

  std::size_t dimension() const { return start.size(); }
  friend bool operator==(const TorusSegment&, const TorusSegment&) = default;
};

// A closed geodesic {base + t * direction}.
struct Geodesic {
  std::vector<Integer> direction;
  TorusPoint base;

  friend bool operator==(const Geodesic&, const Geodesic&) = default;
};
std::strong_ordering operator<=>(const Geodesic& a, const Geodesic& b);

// Arc of the parameter circle; 0 < length <= 1, and length == 1 (full
// circle) only with start == 0.
struct Arc {
  Rational start;
  Rational length;

  bool full() const { return length == 1; }
  bool contains(const Rational& t) const;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct GeodesicPiece {
  Geodesic line;
  Arc arc;

  CoverVector cover_at(const Rational& t) const;  // base + t * direction
  CoverVector cover_start() const { return cover_at(arc.start); }
  CoverVector cover_end() const { return cover_at(arc.start + arc.length); }
  TorusSegment segment() const { return {cover_start(), cover_end()}; }

  friend bool operator==(const GeodesicPiece&, const GeodesicPiece&) = default;
};

class SegmentSet {
 public:
  explicit SegmentSet(std::size_t dimension) : dimension_(dimension) {}

  static SegmentSet from_segments(std::size_t dimension,
                                  std::span<const TorusSegment> segments,
                                  std::span<const TorusPoint> points = {});
  static SegmentSet from_pieces(std::size_t dimension,
                                std::vector<GeodesicPiece> pieces,
                                std::vector<TorusPoint> points = {});
  static SegmentSet single_point(const TorusPoint& p);

  std::size_t dimension() const { return dimension_; }
  const std::vector<GeodesicPiece>& pieces() const { return pieces_; }
  const std::vector<TorusPoint>& points() const { return points_; }
  // One canonical cover representative per maximal piece.
  std::vector<TorusSegment> segments() const;
  bool empty() const { return pieces_.empty() && points_.empty(); }

  bool contains(const TorusPoint& p) const;
  // Subset test.
  bool contains(const SegmentSet& other) const;
  SegmentSet united(const SegmentSet& other) const;

  friend bool operator==(const SegmentSet&, const SegmentSet&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<GeodesicPiece> pieces_;  // sorted by (line, arc.start)
  std::vector<TorusPoint> points_;     // sorted, none on a piece
};

// The coordinate whose zero set picks the canonical base of a geodesic:
// the first index with minimal nonzero |direction_i|.
std::size_t anchor_axis(std::span<const Integer> direction);

// Canonical piece for a single segment.
GeodesicPiece canonical_piece(const TorusSegment& segment);

bool piece_contains(const GeodesicPiece& piece, const TorusPoint& p);

// Exact common points of two segments: the overlap arcs when they run
// along the same geodesic, otherwise finitely many crossing points.
SegmentSet segment_intersections(const TorusSegment& a, const TorusSegment& b);
SegmentSet intersect_pieces(const GeodesicPiece& a, const GeodesicPiece& b);
bool pieces_meet(const GeodesicPiece& a, const GeodesicPiece& b);

// Connected components (pieces linked when they share a point). Output
// order follows the canonical order of each component's first element.
std::vector<SegmentSet> components(const SegmentSet& set);

// f(S) and the full preimage f^{-1}(S).
SegmentSet image_under_f(const SegmentSet& set, const Moduli& moduli);
SegmentSet preimage_set(const SegmentSet& set, const Moduli& moduli);
// The prod m_i lifted copies of every segment, before canonicalization.
std::vector<TorusSegment> raw_preimage_segments(const SegmentSet& set,
                                                const Moduli& moduli);

// Deterministic points spread over the set: `count` points cycling through
// the pieces at interior parameters, then the isolated points.
std::vector<TorusPoint> sample_points(const SegmentSet& set, std::size_t count);
// Points along every piece such that consecutive ones are within
// `max_gap` in torus distance (both arc endpoints included).
std::vector<TorusPoint> grid_points(const SegmentSet& set, const Rational& max_gap);

// CSV: header "start_1,..,start_r,end_1,..,end_r", one row per segment as
// "p/q" strings; isolated points are rows with start == end.
std::string to_csv(const SegmentSet& set);
SegmentSet parse_csv(const std::string& text);

}  // namespace soltower
