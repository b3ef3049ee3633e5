#pragma once

// Points of the circle R/Z and of the r-torus, with the covering map
// f(z_1, ..., z_r) = (z_1^{m_1}, ..., z_r^{m_r}) written additively.

#include <compare>
#include <vector>

#include "soltower/exact_arith.hpp"

namespace soltower {

// Universal-cover coordinates (one rational per torus factor).
using CoverVector = std::vector<Rational>;

// A point of S^1 stored as its angle in [0, 1); the point is e(value).
class Angle {
 public:
  Angle() = default;
  // Reduces any rational mod 1.
  explicit Angle(const Rational& any) : value_(frac(any)) {}

  const Rational& value() const { return value_; }

  friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  Rational value_;
};

class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<Angle> coords) : coords_(std::move(coords)) {}

  // Projection of a cover point.
  static TorusPoint from_cover(const CoverVector& cover);
  // The base point 1^- (all angles zero).
  static TorusPoint base(std::size_t dimension);

  std::size_t dimension() const { return coords_.size(); }
  const Angle& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Angle>& coords() const { return coords_; }
  bool is_base() const;
  // The canonical cover representative (coordinates in [0, 1)).
  CoverVector cover() const;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend std::strong_ordering operator<=>(const TorusPoint& a, const TorusPoint& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Angle> coords_;
};

// Coordinate i becomes m_i * angle_i mod 1. Throws DimensionMismatch.
TorusPoint apply_f(const TorusPoint& p, const Moduli& moduli);
// f applied `times` times.
TorusPoint apply_f_power(const TorusPoint& p, const Moduli& moduli, unsigned long times);

// All prod m_i points q with f(q) == p, in ascending lexicographic order.
std::vector<TorusPoint> f_preimages(const TorusPoint& p, const Moduli& moduli);

// Normalized arc distance min(|a - b|, 1 - |a - b|), at most 1/2.
Rational arc_distance(const Angle& a, const Angle& b);
// Max over coordinates of the arc distance.
Rational torus_distance(const TorusPoint& a, const TorusPoint& b);

}  // namespace soltower
