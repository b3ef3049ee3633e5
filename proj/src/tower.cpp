#include "soltower/tower.hpp"

#include <algorithm>

#include "soltower/errors.hpp"

namespace soltower {

namespace {

void guard_count(const Integer& count, const SizeGuard& guard, const std::string& what) {
  if (count > Integer(static_cast<unsigned long>(guard.limit)))
    throw Error(Errc::SizeGuardExceeded, what + " = " + count.get_str() + " exceeds size guard " +
                                             std::to_string(guard.limit));
}

SegmentSet guarded_preimage(const SegmentSet& set, const Moduli& moduli, const SizeGuard& guard) {
  guard_count(Integer(static_cast<unsigned long>(set.pieces().size() + set.points().size())) *
                  moduli.product_power(1),
              guard, "preimage segment count");
  return preimage_set(set, moduli);
}

SegmentSet guarded_image(const PLLoop& loop, unsigned long n, const Moduli& moduli,
                         const SizeGuard& guard) {
  const WindingVector s = winding(loop);
  guard_count(image_period(s, n, moduli) * Integer(static_cast<unsigned long>(loop.segment_count())),
              guard, "image period at n = " + std::to_string(n));
  return image_set(loop, n, moduli);
}

}  // namespace

unsigned long choose_N0(const Rational& epsilon) {
  const Rational eps = epsilon > 1 ? Rational(1) : epsilon;
  if (eps <= 0) throw Error(Errc::InvalidInput, "epsilon must be positive");
  unsigned long n = 1;
  Rational p(1, 2);
  while (!(p < eps / 2)) {
    ++n;
    p /= 2;
  }
  return n;
}

TowerParams choose_params(const Rational& epsilon, const Moduli& moduli, const WindingVector& s,
                          unsigned long depth) {
  if (epsilon <= 0) throw Error(Errc::InvalidInput, "epsilon must be positive");
  if (s.size() != moduli.size())
    throw Error(Errc::DimensionMismatch, "winding dimension differs from moduli");
  if (!s.admissible())
    throw Error(Errc::PreconditionViolated, "winding vector has a zero entry");
  TowerParams p;
  p.epsilon_clamped = epsilon > 1;
  p.epsilon = p.epsilon_clamped ? Rational(1) : epsilon;
  p.N0 = choose_N0(p.epsilon);
  const Rational modulus = p.epsilon / 2 / Rational(pow(moduli.max(), p.N0));
  p.delta = std::min(p.epsilon, modulus);
  p.depth = depth;
  try {
    p.paper_level = paper_level(s, moduli);
  } catch (const Error& e) {
    if (e.code() != Errc::NoDecomposition) throw;
  }
  p.minimal_level = minimal_level(s, moduli, level_search_bound(s));
  unsigned long n1 = std::max(p.minimal_level, 1ul);
  if (p.paper_level) n1 = std::max<unsigned long>(n1, to_u64(*p.paper_level));
  p.N1 = n1;
  return p;
}

const char* level_kind_name(LevelKind kind) {
  switch (kind) {
    case LevelKind::Forward: return "forward";
    case LevelKind::Lift: return "lift";
    case LevelKind::Preimage: return "preimage";
  }
  return "unknown";
}

Tower build_tower(const PLLoop& base_loop, const TowerParams& params, const Moduli& moduli,
                  const SizeGuard& guard) {
  if (base_loop.dimension() != moduli.size())
    throw Error(Errc::DimensionMismatch, "loop dimension differs from moduli");
  if (!winding(base_loop).admissible())
    throw Error(Errc::PreconditionViolated, "base loop winding has a zero entry");
  if (params.N0 < 1) throw Error(Errc::InvalidInput, "N0 must be >= 1");

  Tower t{{}, {}, base_loop, params, moduli};
  const std::size_t total = params.N0 + params.N1 + params.depth;
  t.levels.reserve(total);

  // Forward part, filled from L_{N0} down to L_1 and then reversed.
  std::vector<SegmentSet> forward{guarded_image(base_loop, 0, moduli, guard)};
  for (unsigned long j = 1; j < params.N0; ++j)
    forward.push_back(image_under_f(forward.back(), moduli));
  for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
    t.levels.push_back(std::move(*it));
    t.kinds.push_back(LevelKind::Forward);
  }

  for (unsigned long j = 1; j <= params.N1; ++j) {
    t.levels.push_back(guarded_image(base_loop, j, moduli, guard));
    t.kinds.push_back(LevelKind::Lift);
  }

  for (unsigned long j = 1; j <= params.depth; ++j) {
    SegmentSet next = guarded_preimage(t.levels.back(), moduli, guard);
    t.levels.push_back(std::move(next));
    t.kinds.push_back(LevelKind::Preimage);
  }
  return t;
}

TowerReport verify_tower(const Tower& tower, const SizeGuard& guard) {
  TowerReport out{{}, tower.params.N1 > tower.params.N0, true};
  const TorusPoint base = TorusPoint::base(tower.moduli.size());
  const std::size_t first_preimage = tower.params.N0 + tower.params.N1 + 1;
  for (std::size_t n = 1; n <= tower.size(); ++n) {
    const SegmentSet& level = tower.level(n);
    LevelReport r{n, tower.kinds.at(n - 1), level.pieces().size(), level.points().size(),
                  0, false, level.contains(base), {}, {}, {}};
    r.components = components(level).size();
    r.connected = r.components == 1;
    if (n < tower.size()) {
      const SegmentSet image = image_under_f(tower.level(n + 1), tower.moduli);
      r.bonding_contained = level.contains(image);
      if (n < tower.params.N0) r.bonding_equal = image == level;
    }
    if (n >= first_preimage) {
      // f^{-j}(Im gamma^(N1)) against f^{-1}(Im gamma^(N1 + j - 1)).
      const unsigned long j = n - first_preimage + 1;
      const SegmentSet lifted =
          guarded_image(tower.base_loop, tower.params.N1 + j - 1, tower.moduli, guard);
      r.recipe_identity = guarded_preimage(lifted, tower.moduli, guard) == level;
    }
    const bool ok = r.connected && r.contains_base && r.bonding_contained.value_or(true) &&
                    r.bonding_equal.value_or(true) && r.recipe_identity.value_or(true);
    out.all_ok = out.all_ok && ok;
    out.levels.push_back(std::move(r));
  }
  return out;
}

SolenoidPoint coherent_point_through(const Tower& tower, std::size_t n, const TorusPoint& v,
                                     std::size_t depth) {
  if (n < 1 || n > tower.size()) throw Error(Errc::InvalidInput, "level out of range");
  if (depth < 1 || depth > tower.size())
    throw Error(Errc::InvalidInput, "depth must be between 1 and the tower size");
  if (!tower.level(n).contains(v))
    throw Error(Errc::MembershipFails, "point is not in L_" + std::to_string(n));

  std::vector<TorusPoint> z(std::max(n, depth));
  z[n - 1] = v;
  for (std::size_t k = n - 1; k >= 1; --k) {
    z[k - 1] = apply_f(z[k], tower.moduli);
    if (!tower.level(k).contains(z[k - 1]))
      throw Error(Errc::NoPreimageInLevel, "f(z_" + std::to_string(k + 1) + ") is not in L_" +
                                               std::to_string(k));
  }
  for (std::size_t k = n + 1; k <= depth; ++k) {
    const SegmentSet& level = tower.level(k);
    const std::vector<TorusPoint> candidates = f_preimages(z[k - 2], tower.moduli);
    const auto it = std::find_if(candidates.begin(), candidates.end(),
                                 [&](const TorusPoint& q) { return level.contains(q); });
    if (it == candidates.end())
      throw Error(Errc::NoPreimageInLevel,
                  "no f-preimage of z_" + std::to_string(k - 1) + " in L_" + std::to_string(k));
    z[k - 1] = *it;
  }
  z.resize(depth);
  return SolenoidPoint(tower.moduli, std::move(z));
}

EpsilonCheck epsilon_bound_check(const Tower& tower, const std::vector<SolenoidPoint>& base_points,
                                 const std::vector<SolenoidPoint>& candidates) {
  const TowerParams& p = tower.params;
  auto check_depth = [&](const SolenoidPoint& x) {
    if (x.depth() < p.N0)
      throw Error(Errc::DepthTooSmall, "point depth " + std::to_string(x.depth()) +
                                           " is below N0 = " + std::to_string(p.N0));
  };
  for (const SolenoidPoint& z : base_points) check_depth(z);
  for (const SolenoidPoint& w : candidates) check_depth(w);

  EpsilonCheck out{true, candidates.size(), 0, 0, 0, 0};
  const Rational half = p.epsilon / 2;
  for (const SolenoidPoint& w : candidates) {
    // Among the delta-close base points take the one nearest in the metric.
    std::optional<SolenoidDistance> best;
    Rational best_levels = 0;
    for (const SolenoidPoint& z : base_points) {
      if (z.depth() != w.depth()) continue;
      if (!(torus_distance(w.level(p.N0), z.level(p.N0)) < p.delta)) continue;
      Rational levels = 0;
      for (std::size_t i = 1; i <= p.N0; ++i)
        levels = std::max(levels, torus_distance(w.level(i), z.level(i)));
      const SolenoidDistance d = solenoid_distance(w, z);
      if (!best || d.upper_bound() < best->upper_bound()) {
        best = d;
        best_levels = levels;
      }
    }
    if (!best) {
      out.ok = false;
      continue;
    }
    ++out.matched;
    out.max_level_distance = std::max(out.max_level_distance, best_levels);
    out.max_distance = std::max(out.max_distance, best->truncated);
    out.max_upper_bound = std::max(out.max_upper_bound, best->upper_bound());
    if (!(best_levels < half) || !(best->upper_bound() < p.epsilon)) out.ok = false;
  }
  return out;
}

std::vector<SolenoidPoint> tower_base_points(const Tower& tower) {
  std::vector<SolenoidPoint> out;
  const std::size_t n = tower.params.N0;
  for (const TorusPoint& v : grid_points(tower.level(n), tower.params.delta))
    out.push_back(coherent_point_through(tower, n, v, tower.size()));
  return out;
}

std::vector<SolenoidPoint> tower_candidates(const Tower& tower, std::size_t count) {
  std::vector<SolenoidPoint> out;
  const std::size_t n = tower.size();
  for (const TorusPoint& v : sample_points(tower.level(n), count))
    out.push_back(coherent_point_through(tower, n, v, n));
  return out;
}

}  // namespace soltower
