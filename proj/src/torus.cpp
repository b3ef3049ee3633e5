#include "soltower/torus.hpp"

#include <algorithm>

#include "soltower/errors.hpp"

namespace soltower {

namespace {

void require_dimension(const TorusPoint& p, const Moduli& moduli) {
  if (p.dimension() != moduli.size())
    throw Error(Errc::DimensionMismatch,
                "point has " + std::to_string(p.dimension()) + " coordinates, moduli " +
                    std::to_string(moduli.size()));
}

}  // namespace

TorusPoint TorusPoint::from_cover(const CoverVector& cover) {
  std::vector<Angle> coords;
  coords.reserve(cover.size());
  for (const Rational& x : cover) coords.emplace_back(x);
  return TorusPoint(std::move(coords));
}

TorusPoint TorusPoint::base(std::size_t dimension) {
  return TorusPoint(std::vector<Angle>(dimension));
}

bool TorusPoint::is_base() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Angle& a) { return a.value() == 0; });
}

CoverVector TorusPoint::cover() const {
  CoverVector out;
  out.reserve(coords_.size());
  for (const Angle& a : coords_) out.push_back(a.value());
  return out;
}

TorusPoint apply_f(const TorusPoint& p, const Moduli& moduli) {
  require_dimension(p, moduli);
  std::vector<Angle> coords;
  coords.reserve(p.dimension());
  for (std::size_t i = 0; i < p.dimension(); ++i)
    coords.emplace_back(Rational(p[i].value() * moduli[i]));
  return TorusPoint(std::move(coords));
}

TorusPoint apply_f_power(const TorusPoint& p, const Moduli& moduli, unsigned long times) {
  require_dimension(p, moduli);
  std::vector<Angle> coords;
  coords.reserve(p.dimension());
  for (std::size_t i = 0; i < p.dimension(); ++i)
    coords.emplace_back(Rational(p[i].value() * pow(moduli[i], times)));
  return TorusPoint(std::move(coords));
}

std::vector<TorusPoint> f_preimages(const TorusPoint& p, const Moduli& moduli) {
  require_dimension(p, moduli);
  const std::size_t r = p.dimension();
  // Per coordinate the m_i roots (angle + j)/m_i, already ascending in j.
  std::vector<std::vector<Angle>> roots(r);
  for (std::size_t i = 0; i < r; ++i) {
    const unsigned long m = moduli[i].get_ui();
    roots[i].reserve(m);
    for (unsigned long j = 0; j < m; ++j)
      roots[i].emplace_back(Rational((p[i].value() + j) / moduli[i]));
  }
  std::vector<TorusPoint> out;
  std::vector<std::size_t> index(r, 0);
  while (true) {
    std::vector<Angle> coords(r);
    for (std::size_t i = 0; i < r; ++i) coords[i] = roots[i][index[i]];
    out.emplace_back(std::move(coords));
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (++index[i] < roots[i].size()) break;
      index[i] = 0;
      if (i == 0) return out;
    }
  }
}

Rational arc_distance(const Angle& a, const Angle& b) {
  Rational d = abs(Rational(a.value() - b.value()));
  Rational other = 1 - d;
  return d < other ? d : other;
}

Rational torus_distance(const TorusPoint& a, const TorusPoint& b) {
  if (a.dimension() != b.dimension())
    throw Error(Errc::DimensionMismatch, "torus_distance between different dimensions");
  Rational out = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    Rational d = arc_distance(a[i], b[i]);
    if (d > out) out = d;
  }
  return out;
}

}  // namespace soltower
