#include "soltower/lifting.hpp"

#include <algorithm>

#include "soltower/errors.hpp"

namespace soltower {

namespace {

void require_dimension(const PLLoop& loop, const Moduli& moduli) {
  if (loop.dimension() != moduli.size())
    throw Error(Errc::DimensionMismatch, "loop dimension differs from moduli");
}

void require_dimension(const WindingVector& s, const Moduli& moduli) {
  if (s.size() != moduli.size())
    throw Error(Errc::DimensionMismatch, "winding dimension differs from moduli");
}

CoverVector difference(const CoverVector& a, const CoverVector& b) {
  CoverVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// d_next = lambda * d_cur with lambda > 0.
bool same_ray(const CoverVector& cur, const CoverVector& next) {
  std::size_t c = 0;
  while (c < cur.size() && cur[c] == 0) ++c;
  if (c == cur.size()) return false;
  const Rational lambda = next[c] / cur[c];
  if (lambda <= 0) return false;
  for (std::size_t i = 0; i < cur.size(); ++i)
    if (next[i] != lambda * cur[i]) return false;
  return true;
}

}  // namespace

bool WindingVector::admissible() const {
  return !s_.empty() &&
         std::none_of(s_.begin(), s_.end(), [](const Integer& x) { return x == 0; });
}

PLLoop::PLLoop(std::vector<CoverVector> breakpoints) : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.size() < 2)
    throw Error(Errc::InvalidInput, "a loop needs at least two breakpoints");
  const std::size_t r = breakpoints_.front().size();
  if (r == 0) throw Error(Errc::InvalidInput, "loop of dimension 0");
  for (const CoverVector& b : breakpoints_)
    if (b.size() != r) throw Error(Errc::DimensionMismatch, "breakpoints differ in dimension");
  for (const Rational& x : breakpoints_.front())
    if (x != 0) throw Error(Errc::InvalidInput, "loop must start at the cover origin");
  for (const Rational& x : breakpoints_.back())
    if (!is_integer(x)) throw Error(Errc::InvalidInput, "loop must end at an integer vector");
}

PLLoop PLLoop::constant(std::size_t dimension) {
  return PLLoop({CoverVector(dimension, Rational(0)), CoverVector(dimension, Rational(0))});
}

PLLoop PLLoop::straight(const WindingVector& s) {
  CoverVector end;
  for (const Integer& x : s.values()) end.emplace_back(x);
  return PLLoop({CoverVector(s.size(), Rational(0)), std::move(end)});
}

PLLoop PLLoop::then(const PLLoop& next) const {
  if (next.dimension() != dimension())
    throw Error(Errc::DimensionMismatch, "concatenating loops of different dimension");
  std::vector<CoverVector> out = breakpoints_;
  const CoverVector& shift = breakpoints_.back();
  for (std::size_t k = 1; k < next.breakpoints_.size(); ++k) {
    CoverVector b = next.breakpoints_[k];
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += shift[i];
    out.push_back(std::move(b));
  }
  return PLLoop(std::move(out));
}

PLLoop PLLoop::reversed() const {
  const CoverVector& end = breakpoints_.back();
  std::vector<CoverVector> out;
  out.reserve(breakpoints_.size());
  for (auto it = breakpoints_.rbegin(); it != breakpoints_.rend(); ++it)
    out.push_back(difference(*it, end));
  return PLLoop(std::move(out));
}

WindingVector winding(const PLLoop& loop) {
  std::vector<Integer> s;
  for (const Rational& x : loop.breakpoints().back()) s.push_back(x.get_num());
  return WindingVector(std::move(s));
}

bool liftable(const PLLoop& loop, std::size_t coordinate) {
  if (coordinate >= loop.dimension())
    throw Error(Errc::InvalidInput, "coordinate out of range");
  return loop.breakpoints().back()[coordinate] == 0;
}

CoverPath extend_periodic(const PLLoop& loop, std::uint64_t horizon) {
  if (horizon < 1) throw Error(Errc::InvalidInput, "horizon must be >= 1");
  const auto& b = loop.breakpoints();
  const CoverVector& s = b.back();
  CoverPath out;
  out.block_size = loop.segment_count();
  out.horizon = horizon;
  out.breakpoints.reserve(horizon * out.block_size + 1);
  out.breakpoints.push_back(b.front());
  CoverVector offset(s.size(), Rational(0));
  for (std::uint64_t block = 0; block < horizon; ++block) {
    for (std::size_t k = 1; k < b.size(); ++k) {
      CoverVector x = b[k];
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += offset[i];
      out.breakpoints.push_back(std::move(x));
    }
    for (std::size_t i = 0; i < s.size(); ++i) offset[i] += s[i];
  }
  return out;
}

const CoverVector& LiftedPath::at_integer_time(std::uint64_t k) const {
  if (k > path.horizon) throw Error(Errc::InvalidInput, "time beyond horizon");
  return path.breakpoints[k * path.block_size];
}

CoverVector LiftedPath::cover_at(const Rational& t) const {
  if (t < 0 || t > path.horizon) throw Error(Errc::InvalidInput, "time outside [0, horizon]");
  const Rational scaled = t * path.block_size;
  Integer idx = floor(scaled);
  if (idx == Integer(path.breakpoints.size() - 1)) return path.breakpoints.back();
  const std::size_t k = idx.get_ui();
  const Rational lambda = scaled - idx;
  const CoverVector& a = path.breakpoints[k];
  const CoverVector& b = path.breakpoints[k + 1];
  CoverVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + lambda * (b[i] - a[i]);
  return out;
}

LiftedPath lift(const PLLoop& loop, unsigned long n, const Moduli& moduli,
                std::uint64_t horizon) {
  require_dimension(loop, moduli);
  CoverPath path = extend_periodic(loop, horizon);
  std::vector<Integer> scale;
  for (const Integer& m : moduli.values()) scale.push_back(pow(m, n));
  for (CoverVector& x : path.breakpoints)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] /= scale[i];
  return LiftedPath{loop, n, std::move(path)};
}

TorusPoint sigma_point(const WindingVector& s, unsigned long n, const Moduli& moduli,
                       const Integer& k) {
  require_dimension(s, moduli);
  std::vector<Angle> coords;
  coords.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    coords.emplace_back(make_rational(s[i] * k, pow(moduli[i], n)));
  return TorusPoint(std::move(coords));
}

std::vector<TorusPoint> sigma_points(const WindingVector& s, unsigned long n,
                                     const Moduli& moduli, std::uint64_t count) {
  require_dimension(s, moduli);
  std::vector<TorusPoint> out;
  out.reserve(count + 1);
  for (std::uint64_t k = 0; k <= count; ++k)
    out.push_back(sigma_point(s, n, moduli, Integer(static_cast<unsigned long>(k))));
  return out;
}

Integer image_period(const WindingVector& s, unsigned long n, const Moduli& moduli) {
  require_dimension(s, moduli);
  Integer period = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Integer mn = pow(moduli[i], n);
    period = lcm(period, mn / gcd(s[i], mn));
  }
  return period;
}

SegmentSet image_set(const PLLoop& loop, unsigned long n, const Moduli& moduli,
                     std::optional<std::uint64_t> horizon) {
  require_dimension(loop, moduli);
  const WindingVector s = winding(loop);
  std::uint64_t blocks = 0;
  if (horizon) {
    if (*horizon < 1) throw Error(Errc::InvalidInput, "horizon must be >= 1");
    blocks = *horizon;
  } else {
    if (!s.admissible())
      throw Error(Errc::NonperiodicWithoutHorizon,
                  "winding has a zero entry; supply an explicit horizon");
    blocks = to_u64(image_period(s, n, moduli));
  }

  const std::size_t r = loop.dimension();
  std::vector<Integer> scale;
  for (const Integer& m : moduli.values()) scale.push_back(pow(m, n));
  const auto& b = loop.breakpoints();

  // Walk the lifted path, fusing consecutive collinear pieces so straight
  // loops produce one long segment instead of one per block.
  std::vector<TorusSegment> segments;
  std::optional<CoverVector> run_start;
  CoverVector run_dir;
  CoverVector prev(r, Rational(0));
  CoverVector offset(r, Rational(0));
  for (std::uint64_t block = 0; block < blocks; ++block) {
    for (std::size_t k = 1; k < b.size(); ++k) {
      CoverVector x(r);
      for (std::size_t i = 0; i < r; ++i) x[i] = (b[k][i] + offset[i]) / scale[i];
      CoverVector d = difference(x, prev);
      const bool moves = std::any_of(d.begin(), d.end(), [](const Rational& v) { return v != 0; });
      if (moves && !(run_start && same_ray(run_dir, d))) {
        if (run_start) segments.emplace_back(*run_start, prev);
        run_start = prev;
        run_dir = std::move(d);
      }
      prev = std::move(x);
    }
    for (std::size_t i = 0; i < r; ++i) offset[i] += b.back()[i];
  }
  if (run_start) segments.emplace_back(*run_start, prev);

  if (segments.empty())
    return SegmentSet::single_point(TorusPoint::base(r));
  return SegmentSet::from_segments(r, segments);
}

std::vector<TorusPoint> integer_time_points(const PLLoop& loop, unsigned long n,
                                            const Moduli& moduli, std::uint64_t count) {
  const LiftedPath lifted = lift(loop, n, moduli, std::max<std::uint64_t>(count, 1));
  std::vector<TorusPoint> out;
  out.reserve(count + 1);
  for (std::uint64_t k = 0; k <= count; ++k)
    out.push_back(TorusPoint::from_cover(lifted.at_integer_time(k)));
  return out;
}

}  // namespace soltower
