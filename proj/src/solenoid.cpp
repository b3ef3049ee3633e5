#include "soltower/solenoid.hpp"

#include "soltower/errors.hpp"

namespace soltower {

SolenoidPoint::SolenoidPoint(Moduli moduli, std::vector<TorusPoint> levels)
    : moduli_(std::move(moduli)), levels_(std::move(levels)) {
  if (levels_.empty()) throw Error(Errc::InvalidInput, "solenoid point of depth 0");
  for (const TorusPoint& z : levels_)
    if (z.dimension() != moduli_.size())
      throw Error(Errc::DimensionMismatch, "level dimension differs from moduli");
  for (std::size_t k = 0; k + 1 < levels_.size(); ++k)
    if (apply_f(levels_[k + 1], moduli_) != levels_[k])
      throw Error(Errc::IncoherentSequence,
                  "f(z_" + std::to_string(k + 2) + ") != z_" + std::to_string(k + 1));
}

SolenoidPoint SolenoidPoint::base(const Moduli& moduli, std::size_t depth) {
  return SolenoidPoint(moduli, std::vector<TorusPoint>(depth, TorusPoint::base(moduli.size())));
}

SolenoidDistance solenoid_distance(const SolenoidPoint& x, const SolenoidPoint& y) {
  if (x.depth() != y.depth())
    throw Error(Errc::DepthMismatch, "depths " + std::to_string(x.depth()) + " and " +
                                         std::to_string(y.depth()));
  SolenoidDistance out{0, 0};
  Rational weight(1, 2);
  for (std::size_t n = 1; n <= x.depth(); ++n) {
    out.truncated += weight * torus_distance(x.level(n), y.level(n));
    weight /= 2;
  }
  // weight is now 2^{-K-1} = 2^{-K} * 1/2.
  out.tail_bound = weight;
  return out;
}

}  // namespace soltower
