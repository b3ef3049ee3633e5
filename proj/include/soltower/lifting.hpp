#pragma once

/*
 * Loops at the base point of the torus and their lifts through f^n.
 *
 * A PLLoop is recorded by universal-cover breakpoints b_0 = 0, ..., b_p = s
 * with s an integer vector (the winding vector); the loop traverses
 * segment k during times [k/p, (k+1)/p]. Homotopy classes of loops are
 * exactly the winding vectors.
 *
 * For a loop gamma and n >= 0, gamma^(n) is the unique lift through f^n,
 * starting at 1^-, of the periodic extension gamma*(t) = gamma(t - i + 1)
 * on [i-1, i]. In cover coordinates the periodic extension is
 * b(t - i + 1) + (i - 1) s, and the lift divides coordinate i by m_i^n.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "soltower/exact_arith.hpp"
#include "soltower/segment_set.hpp"
#include "soltower/torus.hpp"

namespace soltower {

class WindingVector {
 public:
  WindingVector() = default;
  explicit WindingVector(std::vector<Integer> s) : s_(std::move(s)) {}

  std::size_t size() const { return s_.size(); }
  const Integer& operator[](std::size_t i) const { return s_[i]; }
  const std::vector<Integer>& values() const { return s_; }
  // All entries nonzero.
  bool admissible() const;

  friend bool operator==(const WindingVector&, const WindingVector&) = default;

 private:
  std::vector<Integer> s_;
};

class PLLoop {
 public:
  // Throws InvalidInput unless there are >= 2 breakpoints of one dimension,
  // the first is zero, and the last is integral.
  explicit PLLoop(std::vector<CoverVector> breakpoints);

  static PLLoop constant(std::size_t dimension);
  // lambda_{s_1} x ... x lambda_{s_r}: the straight loop 0 -> s.
  static PLLoop straight(const WindingVector& s);

  std::size_t dimension() const { return breakpoints_.front().size(); }
  std::size_t segment_count() const { return breakpoints_.size() - 1; }
  const std::vector<CoverVector>& breakpoints() const { return breakpoints_; }

  // This loop followed by `next`.
  PLLoop then(const PLLoop& next) const;
  PLLoop reversed() const;

  friend bool operator==(const PLLoop&, const PLLoop&) = default;

 private:
  std::vector<CoverVector> breakpoints_;
};

WindingVector winding(const PLLoop& loop);

// Coordinate `coordinate` (0-based) of the loop lifts through (R, e) iff its
// degree is zero.
bool liftable(const PLLoop& loop, std::size_t coordinate);

// Breakpoints of a path over [0, horizon], `block_size` segments per unit
// of time; breakpoint k sits at time k / block_size.
struct CoverPath {
  std::vector<CoverVector> breakpoints;
  std::size_t block_size = 1;
  std::uint64_t horizon = 1;
};

CoverPath extend_periodic(const PLLoop& loop, std::uint64_t horizon);

struct LiftedPath {
  PLLoop source;
  unsigned long exponent;
  CoverPath path;

  // Cover coordinates at integer time k <= horizon.
  const CoverVector& at_integer_time(std::uint64_t k) const;
  // Cover coordinates at any time t in [0, horizon].
  CoverVector cover_at(const Rational& t) const;
};

LiftedPath lift(const PLLoop& loop, unsigned long n, const Moduli& moduli,
                std::uint64_t horizon);

// sigma(s, n)(k) for k = 0..count: coordinate i is s_i k / m_i^n mod 1.
std::vector<TorusPoint> sigma_points(const WindingVector& s, unsigned long n,
                                     const Moduli& moduli, std::uint64_t count);
TorusPoint sigma_point(const WindingVector& s, unsigned long n, const Moduli& moduli,
                       const Integer& k);

// Least P >= 1 with s_i P = 0 (mod m_i^n) for all i.
Integer image_period(const WindingVector& s, unsigned long n, const Moduli& moduli);

// Im(gamma^(n)) over one image period (or over [0, horizon] when given).
// Throws NonperiodicWithoutHorizon for a non-admissible winding without a
// horizon.
SegmentSet image_set(const PLLoop& loop, unsigned long n, const Moduli& moduli,
                     std::optional<std::uint64_t> horizon = std::nullopt);

// gamma^(n)(k) for k = 0..count, read off the lift.
std::vector<TorusPoint> integer_time_points(const PLLoop& loop, unsigned long n,
                                            const Moduli& moduli, std::uint64_t count);

}  // namespace soltower
