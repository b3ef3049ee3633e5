#pragma once

// Depth-K truncations of points of the inverse limit of (T^r, f).

#include <vector>

#include "soltower/exact_arith.hpp"
#include "soltower/torus.hpp"

namespace soltower {

// Levels z_1, ..., z_K with f(z_{k+1}) == z_k. Coherence is checked on
// construction (IncoherentSequence), so every instance is a valid prefix of
// a point of the solenoid product.
class SolenoidPoint {
 public:
  SolenoidPoint(Moduli moduli, std::vector<TorusPoint> levels);

  // The point (1^-, 1^-, ...) truncated at `depth`.
  static SolenoidPoint base(const Moduli& moduli, std::size_t depth);

  std::size_t depth() const { return levels_.size(); }
  // 1-based, as z_1 is the first coordinate of the sequence.
  const TorusPoint& level(std::size_t k) const { return levels_.at(k - 1); }
  const std::vector<TorusPoint>& levels() const { return levels_; }
  const Moduli& moduli() const { return moduli_; }

  friend bool operator==(const SolenoidPoint&, const SolenoidPoint&) = default;

 private:
  Moduli moduli_;
  std::vector<TorusPoint> levels_;
};

struct SolenoidDistance {
  Rational truncated;   // sum_{n=1..K} 2^{-n} d_T(x_n, y_n)
  Rational tail_bound;  // 2^{-K} * 1/2 bounds the unseen levels
  Rational upper_bound() const { return truncated + tail_bound; }
};

// Throws DepthMismatch when depths differ.
SolenoidDistance solenoid_distance(const SolenoidPoint& x, const SolenoidPoint& y);

}  // namespace soltower
