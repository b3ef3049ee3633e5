#include "soltower/segment_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include "soltower/errors.hpp"

namespace soltower {

namespace {

std::strong_ordering compare_integers(std::span<const Integer> a,
                                      std::span<const Integer> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c <=> 0;
  }
  return a.size() <=> b.size();
}

bool piece_less(const GeodesicPiece& a, const GeodesicPiece& b) {
  const auto c = a.line <=> b.line;
  if (c != 0) return c < 0;
  return a.arc.start < b.arc.start;
}

struct Interval {
  Rational lo;
  Rational hi;
};

// Arc as one or two closed intervals of [0, 1].
std::vector<Interval> unwrap(const Arc& arc) {
  const Rational end = arc.start + arc.length;
  if (end <= 1) return {{arc.start, end}};
  return {{arc.start, Rational(1)}, {Rational(0), Rational(end - 1)}};
}

// Merged maximal arcs for one geodesic.
std::vector<Arc> merge_arcs(std::vector<Arc> arcs) {
  std::vector<Interval> intervals;
  for (const Arc& arc : arcs) {
    if (arc.full()) return {Arc{0, 1}};
    for (Interval& iv : unwrap(arc)) intervals.push_back(std::move(iv));
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (Interval& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
    } else {
      merged.push_back(std::move(iv));
    }
  }
  if (merged.size() == 1 && merged.front().lo == 0 && merged.front().hi == 1)
    return {Arc{0, 1}};
  std::vector<Arc> out;
  if (merged.size() >= 2 && merged.front().lo == 0 && merged.back().hi == 1) {
    // The first and last intervals meet at 0 == 1.
    const Interval first = merged.front();
    const Interval last = merged.back();
    for (std::size_t i = 1; i + 1 < merged.size(); ++i)
      out.push_back({merged[i].lo, merged[i].hi - merged[i].lo});
    out.push_back({last.lo, (1 - last.lo) + first.hi});
    return out;
  }
  for (const Interval& iv : merged) out.push_back({iv.lo, iv.hi - iv.lo});
  return out;
}

// Primitive integer vector v and L > 0 with d = L * v.
std::pair<std::vector<Integer>, Rational> primitive_direction(const CoverVector& d) {
  Integer den = 1;
  for (const Rational& x : d) den = lcm(den, x.get_den());
  std::vector<Integer> v;
  v.reserve(d.size());
  Integer g = 0;
  for (const Rational& x : d) {
    v.push_back(x.get_num() * (den / x.get_den()));
    g = gcd(g, v.back());
  }
  for (Integer& x : v) x /= g;
  return {std::move(v), make_rational(g, den)};
}

bool is_point_of_line(const Geodesic& line, const TorusPoint& p, Rational& param_out,
                      const Arc* arc) {
  const std::vector<Integer>& v = line.direction;
  const std::size_t c = anchor_axis(v);
  const Integer vc = v[c];
  const Integer count = vc < 0 ? Integer(-vc) : vc;
  // base_c == 0, so t * v_c = p_c (mod 1) has |v_c| solutions in [0, 1).
  for (Integer k = 0; k < count; ++k) {
    const Rational t = frac(Rational((p[c].value() + k) / vc));
    if (arc && !arc->contains(t)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < v.size() && ok; ++i) {
      if (i == c) continue;
      ok = frac(Rational(line.base[i].value() + t * v[i])) == p[i].value();
    }
    if (ok) {
      param_out = t;
      return true;
    }
  }
  return false;
}

// Calls visit(t, u) for every pair with t in [0, La], u in [0, Lb] and
// P + t v = Q + u w (mod Z^r); stops early when visit returns false.
// Requires independent directions.
template <class Visit>
void for_each_crossing(const GeodesicPiece& a, const GeodesicPiece& b, Visit visit) {
  const std::vector<Integer>& v = a.line.direction;
  const std::vector<Integer>& w = b.line.direction;
  const std::size_t r = v.size();
  const CoverVector p = a.cover_start();
  const CoverVector q = b.cover_start();
  CoverVector diff(r);
  for (std::size_t k = 0; k < r; ++k) diff[k] = q[k] - p[k];

  // The 2x2 minor with the smallest nonzero determinant keeps the lattice
  // enumeration short.
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_det;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const Integer det = w[i] * v[j] - v[i] * w[j];
      if (det == 0) continue;
      const Integer mag = det < 0 ? Integer(-det) : det;
      if (!best || mag < (best_det < 0 ? Integer(-best_det) : best_det)) {
        best = {i, j};
        best_det = det;
      }
    }
  if (!best) return;
  const auto [i, j] = *best;
  const Integer& det = best_det;

  // Solutions of the (i, j) subsystem: x0 + A^{-1} Z^2, with A^{-1} Z^2
  // spanned by (g, h1)/det and (0, -det/g)/det.
  const Rational t0 = Rational(-w[j] * diff[i] + w[i] * diff[j]) / det;
  const Rational u0 = Rational(-v[j] * diff[i] + v[i] * diff[j]) / det;
  const ExtendedGcd e = extended_gcd(Integer(-w[j]), w[i]);
  const Integer& g = e.g;
  const Integer h1 = e.x * (-v[j]) + e.y * v[i];
  const Rational t_step = Rational(g) / det;
  const Rational u_shift = Rational(h1) / det;

  const Rational& la = a.arc.length;
  const Rational& lb = b.arc.length;
  Integer a_lo, a_hi;
  if (t_step > 0) {
    a_lo = ceil(Rational(-t0 / t_step));
    a_hi = floor(Rational((la - t0) / t_step));
  } else {
    a_lo = ceil(Rational((la - t0) / t_step));
    a_hi = floor(Rational(-t0 / t_step));
  }
  for (Integer ai = a_lo; ai <= a_hi; ++ai) {
    const Rational t = t0 + ai * t_step;
    const Rational ua = u0 + ai * u_shift;
    // u = ua - bi / g, 0 <= u <= lb.
    const Integer b_lo = ceil(Rational((ua - lb) * g));
    const Integer b_hi = floor(Rational(ua * g));
    for (Integer bi = b_lo; bi <= b_hi; ++bi) {
      const Rational u = ua - Rational(bi) / g;
      bool ok = true;
      for (std::size_t k = 0; k < r && ok; ++k) {
        if (k == i || k == j) continue;
        ok = is_integer(Rational(t * v[k] - u * w[k] - diff[k]));
      }
      if (ok && !visit(t, u)) return;
    }
  }
}

SegmentSet arc_overlap(const GeodesicPiece& a, const GeodesicPiece& b) {
  std::vector<GeodesicPiece> pieces;
  std::vector<TorusPoint> points;
  for (const Interval& x : unwrap(a.arc))
    for (const Interval& y : unwrap(b.arc)) {
      const Rational lo = x.lo > y.lo ? x.lo : y.lo;
      const Rational hi = x.hi < y.hi ? x.hi : y.hi;
      if (lo < hi)
        pieces.push_back({a.line, Arc{lo, hi - lo}});
      else if (lo == hi)
        points.push_back(TorusPoint::from_cover(a.cover_at(lo)));
    }
  return SegmentSet::from_pieces(a.line.base.dimension(), std::move(pieces),
                                 std::move(points));
}

bool arcs_meet(const Arc& a, const Arc& b) {
  for (const Interval& x : unwrap(a))
    for (const Interval& y : unwrap(b))
      if ((x.lo > y.lo ? x.lo : y.lo) <= (x.hi < y.hi ? x.hi : y.hi)) return true;
  return false;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<Integer>> index_vectors(const Moduli& moduli) {
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> j(moduli.size(), 0);
  while (true) {
    out.push_back(j);
    std::size_t i = j.size();
    while (i > 0) {
      --i;
      if (++j[i] < moduli[i]) break;
      j[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TorusSegment::TorusSegment(CoverVector s, CoverVector e)
    : start(std::move(s)), end(std::move(e)) {
  if (start.size() != end.size())
    throw Error(Errc::DimensionMismatch, "segment endpoints differ in dimension");
  if (start.empty()) throw Error(Errc::InvalidInput, "segment of dimension 0");
  if (start == end) throw Error(Errc::InvalidInput, "zero-length segment");
}

std::strong_ordering operator<=>(const Geodesic& a, const Geodesic& b) {
  const auto c = compare_integers(a.direction, b.direction);
  if (c != 0) return c;
  return a.base <=> b.base;
}

bool Arc::contains(const Rational& t) const {
  if (full()) return true;
  return frac(Rational(t - start)) <= length;
}

CoverVector GeodesicPiece::cover_at(const Rational& t) const {
  CoverVector out(line.direction.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = line.base[i].value() + t * line.direction[i];
  return out;
}

std::size_t anchor_axis(std::span<const Integer> direction) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < direction.size(); ++i) {
    if (direction[i] == 0) continue;
    if (!best || abs(direction[i]) < abs(direction[*best])) best = i;
  }
  if (!best) throw Error(Errc::InvalidInput, "zero direction vector");
  return *best;
}

GeodesicPiece canonical_piece(const TorusSegment& segment) {
  const std::size_t r = segment.dimension();
  CoverVector d(r);
  for (std::size_t i = 0; i < r; ++i) d[i] = segment.end[i] - segment.start[i];
  auto [v, length] = primitive_direction(d);
  const CoverVector* origin = &segment.start;
  const auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) {
    for (Integer& x : v) x = -x;
    origin = &segment.end;
  }

  // Among the |v_c| points of the line with coordinate c equal to 0, take
  // the lexicographically least as base.
  const std::size_t c = anchor_axis(v);
  const Integer count = abs(v[c]);
  std::optional<TorusPoint> base;
  Rational base_t;
  for (Integer k = 0; k < count; ++k) {
    const Rational t = Rational((k - (*origin)[c]) / v[c]);
    CoverVector q(r);
    for (std::size_t i = 0; i < r; ++i) q[i] = (*origin)[i] + t * v[i];
    TorusPoint candidate = TorusPoint::from_cover(q);
    if (!base || candidate < *base) {
      base = std::move(candidate);
      base_t = t;
    }
  }
  Arc arc = length >= 1 ? Arc{0, 1} : Arc{frac(Rational(-base_t)), length};
  return {Geodesic{std::move(v), std::move(*base)}, std::move(arc)};
}

bool piece_contains(const GeodesicPiece& piece, const TorusPoint& p) {
  if (p.dimension() != piece.line.direction.size()) return false;
  Rational t;
  return is_point_of_line(piece.line, p, t, &piece.arc);
}

SegmentSet SegmentSet::from_segments(std::size_t dimension,
                                     std::span<const TorusSegment> segments,
                                     std::span<const TorusPoint> points) {
  std::vector<GeodesicPiece> pieces;
  pieces.reserve(segments.size());
  for (const TorusSegment& s : segments) {
    if (s.dimension() != dimension)
      throw Error(Errc::DimensionMismatch, "segment dimension differs from set");
    pieces.push_back(canonical_piece(s));
  }
  return from_pieces(dimension, std::move(pieces),
                     std::vector<TorusPoint>(points.begin(), points.end()));
}

SegmentSet SegmentSet::from_pieces(std::size_t dimension,
                                   std::vector<GeodesicPiece> pieces,
                                   std::vector<TorusPoint> points) {
  SegmentSet out(dimension);
  std::sort(pieces.begin(), pieces.end(), piece_less);
  for (std::size_t lo = 0; lo < pieces.size();) {
    std::size_t hi = lo;
    std::vector<Arc> arcs;
    while (hi < pieces.size() && pieces[hi].line == pieces[lo].line)
      arcs.push_back(pieces[hi++].arc);
    for (Arc& arc : merge_arcs(std::move(arcs)))
      out.pieces_.push_back({pieces[lo].line, std::move(arc)});
    lo = hi;
  }
  for (const TorusPoint& p : points)
    if (p.dimension() != dimension)
      throw Error(Errc::DimensionMismatch, "point dimension differs from set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (TorusPoint& p : points)
    if (!out.contains(p)) out.points_.push_back(std::move(p));
  return out;
}

SegmentSet SegmentSet::single_point(const TorusPoint& p) {
  SegmentSet out(p.dimension());
  out.points_.push_back(p);
  return out;
}

std::vector<TorusSegment> SegmentSet::segments() const {
  std::vector<TorusSegment> out;
  out.reserve(pieces_.size());
  for (const GeodesicPiece& piece : pieces_) out.push_back(piece.segment());
  return out;
}

bool SegmentSet::contains(const TorusPoint& p) const {
  if (std::binary_search(points_.begin(), points_.end(), p)) return true;
  return std::any_of(pieces_.begin(), pieces_.end(),
                     [&](const GeodesicPiece& piece) { return piece_contains(piece, p); });
}

bool SegmentSet::contains(const SegmentSet& other) const {
  if (other.dimension_ != dimension_) return false;
  for (const GeodesicPiece& piece : other.pieces_) {
    // A positive-length arc meets other geodesics in finitely many points,
    // so it must sit inside one maximal arc of the same geodesic.
    const auto range = std::equal_range(
        pieces_.begin(), pieces_.end(), piece,
        [](const GeodesicPiece& a, const GeodesicPiece& b) { return (a.line <=> b.line) < 0; });
    const bool covered = std::any_of(range.first, range.second, [&](const GeodesicPiece& mine) {
      if (mine.arc.full()) return true;
      if (piece.arc.full()) return false;
      const Rational offset = frac(Rational(piece.arc.start - mine.arc.start));
      return offset + piece.arc.length <= mine.arc.length;
    });
    if (!covered) return false;
  }
  return std::all_of(other.points_.begin(), other.points_.end(),
                     [&](const TorusPoint& p) { return contains(p); });
}

SegmentSet SegmentSet::united(const SegmentSet& other) const {
  if (other.dimension_ != dimension_)
    throw Error(Errc::DimensionMismatch, "union of sets of different dimension");
  std::vector<GeodesicPiece> pieces = pieces_;
  pieces.insert(pieces.end(), other.pieces_.begin(), other.pieces_.end());
  std::vector<TorusPoint> points = points_;
  points.insert(points.end(), other.points_.begin(), other.points_.end());
  return from_pieces(dimension_, std::move(pieces), std::move(points));
}

SegmentSet intersect_pieces(const GeodesicPiece& a, const GeodesicPiece& b) {
  const std::size_t r = a.line.direction.size();
  if (b.line.direction.size() != r)
    throw Error(Errc::DimensionMismatch, "intersecting pieces of different dimension");
  if (a.line == b.line) return arc_overlap(a, b);
  if (a.line.direction == b.line.direction) return SegmentSet(r);
  std::vector<TorusPoint> points;
  const CoverVector p = a.cover_start();
  for_each_crossing(a, b, [&](const Rational& t, const Rational&) {
    CoverVector x(r);
    for (std::size_t k = 0; k < r; ++k) x[k] = p[k] + t * a.line.direction[k];
    points.push_back(TorusPoint::from_cover(x));
    return true;
  });
  return SegmentSet::from_pieces(r, {}, std::move(points));
}

bool pieces_meet(const GeodesicPiece& a, const GeodesicPiece& b) {
  if (a.line == b.line) return arcs_meet(a.arc, b.arc);
  if (a.line.direction == b.line.direction) return false;
  bool found = false;
  for_each_crossing(a, b, [&](const Rational&, const Rational&) {
    found = true;
    return false;
  });
  return found;
}

SegmentSet segment_intersections(const TorusSegment& a, const TorusSegment& b) {
  return intersect_pieces(canonical_piece(a), canonical_piece(b));
}

std::vector<SegmentSet> components(const SegmentSet& set) {
  const std::vector<GeodesicPiece>& pieces = set.pieces();
  const std::size_t n = pieces.size();
  UnionFind uf(n);

  // Shared endpoints settle most path images without any crossing search.
  std::map<TorusPoint, std::size_t> endpoint_owner;
  for (std::size_t i = 0; i < n; ++i) {
    if (pieces[i].arc.full()) continue;
    for (const CoverVector& end : {pieces[i].cover_start(), pieces[i].cover_end()}) {
      auto [it, inserted] = endpoint_owner.emplace(TorusPoint::from_cover(end), i);
      if (!inserted) uf.unite(it->second, i);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (uf.find(i) != uf.find(j) && pieces_meet(pieces[i], pieces[j])) uf.unite(i, j);

  std::vector<SegmentSet> out;
  std::map<std::size_t, std::vector<GeodesicPiece>> groups;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = uf.find(i);
    if (!groups.count(root)) order.push_back(root);
    groups[root].push_back(pieces[i]);
  }
  for (std::size_t root : order)
    out.push_back(SegmentSet::from_pieces(set.dimension(), std::move(groups[root])));
  for (const TorusPoint& p : set.points()) out.push_back(SegmentSet::single_point(p));
  return out;
}

SegmentSet image_under_f(const SegmentSet& set, const Moduli& moduli) {
  if (set.dimension() != moduli.size())
    throw Error(Errc::DimensionMismatch, "set and moduli differ in dimension");
  std::vector<TorusSegment> segments;
  for (const GeodesicPiece& piece : set.pieces()) {
    CoverVector a = piece.cover_start();
    CoverVector b = piece.cover_end();
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] *= moduli[i];
      b[i] *= moduli[i];
    }
    segments.emplace_back(std::move(a), std::move(b));
  }
  std::vector<TorusPoint> points;
  for (const TorusPoint& p : set.points()) points.push_back(apply_f(p, moduli));
  return SegmentSet::from_segments(set.dimension(), segments, points);
}

std::vector<TorusSegment> raw_preimage_segments(const SegmentSet& set,
                                                const Moduli& moduli) {
  if (set.dimension() != moduli.size())
    throw Error(Errc::DimensionMismatch, "set and moduli differ in dimension");
  const auto shifts = index_vectors(moduli);
  std::vector<TorusSegment> out;
  out.reserve(set.pieces().size() * shifts.size());
  for (const GeodesicPiece& piece : set.pieces()) {
    const CoverVector a = piece.cover_start();
    const CoverVector b = piece.cover_end();
    for (const auto& j : shifts) {
      CoverVector s(a.size()), e(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        s[i] = (a[i] + j[i]) / moduli[i];
        e[i] = (b[i] + j[i]) / moduli[i];
      }
      out.emplace_back(std::move(s), std::move(e));
    }
  }
  return out;
}

SegmentSet preimage_set(const SegmentSet& set, const Moduli& moduli) {
  const std::vector<TorusSegment> segments = raw_preimage_segments(set, moduli);
  std::vector<TorusPoint> points;
  for (const TorusPoint& p : set.points())
    for (TorusPoint& q : f_preimages(p, moduli)) points.push_back(std::move(q));
  return SegmentSet::from_segments(set.dimension(), segments, points);
}

std::vector<TorusPoint> sample_points(const SegmentSet& set, std::size_t count) {
  std::vector<TorusPoint> out;
  const auto& pieces = set.pieces();
  if (!pieces.empty()) {
    const std::size_t np = pieces.size();
    const std::size_t per = (count + np - 1) / np;
    for (std::size_t i = 0; i < count; ++i) {
      const GeodesicPiece& piece = pieces[i % np];
      const Rational t = piece.arc.start +
                         piece.arc.length * make_rational(Integer(static_cast<unsigned long>(i / np + 1)),
                                                        Integer(static_cast<unsigned long>(per + 1)));
      out.push_back(TorusPoint::from_cover(piece.cover_at(t)));
    }
    return out;
  }
  const auto& points = set.points();
  for (std::size_t i = 0; i < count && !points.empty(); ++i)
    out.push_back(points[i % points.size()]);
  return out;
}

std::vector<TorusPoint> grid_points(const SegmentSet& set, const Rational& max_gap) {
  if (max_gap <= 0) throw Error(Errc::InvalidInput, "grid spacing must be positive");
  std::vector<TorusPoint> out;
  for (const GeodesicPiece& piece : set.pieces()) {
    Integer vmax = 0;
    for (const Integer& x : piece.line.direction)
      if (abs(x) > vmax) vmax = abs(x);
    // Parameter step h moves every coordinate by at most h * vmax.
    const Integer steps = ceil(Rational(piece.arc.length * vmax / max_gap));
    for (Integer k = 0; k <= steps; ++k) {
      const Rational t = piece.arc.start + piece.arc.length * Rational(k) / steps;
      out.push_back(TorusPoint::from_cover(piece.cover_at(t)));
    }
  }
  out.insert(out.end(), set.points().begin(), set.points().end());
  return out;
}

std::string to_csv(const SegmentSet& set) {
  std::ostringstream os;
  const std::size_t r = set.dimension();
  for (std::size_t i = 0; i < r; ++i) os << (i ? "," : "") << "start_" << i + 1;
  for (std::size_t i = 0; i < r; ++i) os << ",end_" << i + 1;
  os << '\n';
  auto row = [&](const CoverVector& a, const CoverVector& b) {
    for (std::size_t i = 0; i < r; ++i) os << (i ? "," : "") << to_string(a[i]);
    for (std::size_t i = 0; i < r; ++i) os << ',' << to_string(b[i]);
    os << '\n';
  };
  for (const TorusSegment& s : set.segments()) row(s.start, s.end);
  for (const TorusPoint& p : set.points()) row(p.cover(), p.cover());
  return os.str();
}

SegmentSet parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw Error(Errc::InvalidInput, "empty CSV");
  const std::size_t columns = split(line, ',').size();
  if (columns == 0 || columns % 2 != 0)
    throw Error(Errc::InvalidInput, "CSV header must have 2r columns");
  const std::size_t r = columns / 2;
  std::vector<TorusSegment> segments;
  std::vector<TorusPoint> points;
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    const auto fields = split(line, ',');
    if (fields.size() != columns)
      throw Error(Errc::InvalidInput, "CSV row has " + std::to_string(fields.size()) +
                                          " fields, expected " + std::to_string(columns));
    CoverVector a(r), b(r);
    for (std::size_t i = 0; i < r; ++i) {
      a[i] = parse_rational(fields[i]);
      b[i] = parse_rational(fields[r + i]);
    }
    if (a == b)
      points.push_back(TorusPoint::from_cover(a));
    else
      segments.emplace_back(std::move(a), std::move(b));
  }
  return SegmentSet::from_segments(r, segments, points);
}

}  // namespace soltower
