#include "soltower/hitting.hpp"

#include <algorithm>
#include <set>

#include "soltower/errors.hpp"
#include "soltower/segment_set.hpp"

namespace soltower {

namespace {

void require_admissible(const WindingVector& s, const Moduli& moduli) {
  if (s.size() != moduli.size())
    throw Error(Errc::DimensionMismatch, "winding dimension differs from moduli");
  if (!s.admissible())
    throw Error(Errc::PreconditionViolated, "winding vector has a zero entry");
}

void check_guard(const Moduli& moduli, unsigned long n, const SizeGuard& guard) {
  const Integer points = moduli.product_power(n + 1);
  if (points > Integer(static_cast<unsigned long>(guard.limit)))
    throw Error(Errc::SizeGuardExceeded,
                "prod m_i^(n+1) = " + points.get_str() + " exceeds size guard " +
                    std::to_string(guard.limit));
}

TorusPoint target_point(const std::vector<Integer>& j, const Moduli& moduli) {
  std::vector<Angle> coords;
  for (std::size_t i = 0; i < j.size(); ++i) coords.emplace_back(make_rational(j[i], moduli[i]));
  return TorusPoint(std::move(coords));
}

std::optional<Integer> congruence_witness(const WindingVector& s, const Moduli& moduli,
                                          unsigned long n, const std::vector<Integer>& j) {
  std::vector<Integer> residues, mods;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Integer mn = pow(moduli[i], n);
    const Integer mn1 = mn * moduli[i];
    const Integer g = gcd(s[i], mn1);
    const Integer rhs = j[i] * mn;
    if (rhs % g != 0) return std::nullopt;
    const Integer mod = mn1 / g;
    const auto inv = mod_inverse(Integer(s[i] / g), mod);
    if (!inv) return std::nullopt;
    residues.push_back(mod_floor(Integer(rhs / g * *inv), mod));
    mods.push_back(mod);
  }
  return crt_solve(residues, mods);
}

std::vector<std::vector<Integer>> all_targets(const Moduli& moduli) {
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

}  // namespace

MAdicLevel madic_level_details(const WindingVector& s, const Moduli& moduli) {
  require_admissible(s, moduli);
  MAdicLevel out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.parts.push_back(paper_decomposition(s[i], moduli[i]));
    out.alpha = std::max(out.alpha, out.parts.back().alpha);
  }
  out.level = moduli.product_power(out.alpha);
  return out;
}

Integer paper_level(const WindingVector& s, const Moduli& moduli) {
  return madic_level_details(s, moduli).level;
}

bool level_condition(const WindingVector& s, const Moduli& moduli, unsigned long n) {
  if (s.size() != moduli.size())
    throw Error(Errc::DimensionMismatch, "winding dimension differs from moduli");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!gcd_certificate_condition(s[i], moduli[i], n)) return false;
  return true;
}

unsigned long minimal_level(const WindingVector& s, const Moduli& moduli,
                            unsigned long n_max) {
  require_admissible(s, moduli);
  for (unsigned long n = 0; n <= n_max; ++n)
    if (level_condition(s, moduli, n)) return n;
  throw Error(Errc::NotFoundWithin, "no certificate level n <= " + std::to_string(n_max));
}

unsigned long level_search_bound(const WindingVector& s) {
  // gcd(s, m^{n+1}) stabilizes at a divisor g of s with g | m^e for some
  // e <= log2 |s|.
  unsigned long bits = 0;
  for (const Integer& x : s.values())
    bits = std::max<unsigned long>(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  return bits + 1;
}

const char* route_name(WitnessRoute route) {
  switch (route) {
    case WitnessRoute::MAdicRecipe: return "madic_recipe";
    case WitnessRoute::Congruence: return "congruence";
    case WitnessRoute::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

std::optional<RecipeBookkeeping> recipe_bookkeeping(const WindingVector& s,
                                                    const Moduli& moduli,
                                                    unsigned long n) {
  RecipeBookkeeping out;
  try {
    for (const MAdicDecomposition& part : madic_level_details(s, moduli).parts) {
      if (part.alpha > n) return std::nullopt;
      out.alphas.push_back(part.alpha);
      out.qs.push_back(part.q);
      out.betas.push_back(n - part.alpha);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::NoDecomposition) return std::nullopt;
    throw;
  }
  out.u = 1;
  for (std::size_t i = 0; i < s.size(); ++i) out.u *= pow(moduli[i], out.betas[i]);
  for (std::size_t i = 0; i < s.size(); ++i)
    out.u_parts.push_back(out.u / pow(moduli[i], out.betas[i]));
  return out;
}

HittingWitness crt_witness(const WindingVector& s, const Moduli& moduli, unsigned long n,
                           const std::vector<Integer>& target) {
  require_admissible(s, moduli);
  if (target.size() != moduli.size())
    throw Error(Errc::InvalidInput, "target index has wrong length");
  for (std::size_t i = 0; i < target.size(); ++i)
    if (target[i] < 0 || target[i] >= moduli[i])
      throw Error(Errc::InvalidInput, "target index out of range");
  if (!level_condition(s, moduli, n))
    throw Error(Errc::ConditionFails, "gcd criterion fails at n = " + std::to_string(n));

  if (const auto book = recipe_bookkeeping(s, moduli, n)) {
    // u_i q_i x = j_i (mod m_i), then k = u x.
    std::vector<Integer> residues;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto inv = mod_inverse(Integer(book->u_parts[i] * book->qs[i]), moduli[i]);
      if (!inv) break;
      residues.push_back(mod_floor(Integer(target[i] * *inv), moduli[i]));
    }
    if (residues.size() == s.size()) {
      const Integer x = crt_solve(residues, moduli.values());
      HittingWitness w{target, book->u * x, WitnessRoute::MAdicRecipe, x};
      if (verify_witness(s, moduli, n, w)) return w;
    }
  }

  if (const auto k = congruence_witness(s, moduli, n, target)) {
    HittingWitness w{target, *k, WitnessRoute::Congruence, std::nullopt};
    if (verify_witness(s, moduli, n, w)) return w;
  }

  const TorusPoint goal = target_point(target, moduli);
  const Integer period = image_period(s, n + 1, moduli);
  for (Integer k = 0; k < period; ++k)
    if (sigma_point(s, n + 1, moduli, k) == goal)
      return HittingWitness{target, k, WitnessRoute::Exhaustive, std::nullopt};
  throw Error(Errc::ConditionFails, "target not hit within one period");
}

bool verify_witness(const WindingVector& s, const Moduli& moduli, unsigned long n,
                    const HittingWitness& witness) {
  if (witness.k < 0) return false;
  return sigma_point(s, n + 1, moduli, witness.k) == target_point(witness.target, moduli);
}

HittingCertificate certify_hitting(const WindingVector& s, const Moduli& moduli,
                                   unsigned long n) {
  HittingCertificate out{s, moduli, n, {}, recipe_bookkeeping(s, moduli, n)};
  for (const auto& j : all_targets(moduli))
    out.witnesses.push_back(crt_witness(s, moduli, n, j));
  return out;
}

std::size_t hit_count(const WindingVector& s, const Moduli& moduli, unsigned long n,
                      const SizeGuard& guard) {
  require_admissible(s, moduli);
  check_guard(moduli, n, guard);
  const std::vector<TorusPoint> targets = f_preimages(TorusPoint::base(s.size()), moduli);
  const std::set<TorusPoint> wanted(targets.begin(), targets.end());
  std::set<TorusPoint> hit;
  const Integer period = image_period(s, n + 1, moduli);
  std::vector<Integer> denominators;
  for (const Integer& m : moduli.values()) denominators.push_back(pow(m, n + 1));
  for (Integer k = 0; k < period && hit.size() < wanted.size(); ++k) {
    // sigma(s, n+1)(k), with the powers hoisted out of the sweep.
    std::vector<Angle> coords;
    coords.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      coords.emplace_back(make_rational(s[i] * k, denominators[i]));
    TorusPoint p(std::move(coords));
    if (wanted.count(p)) hit.insert(std::move(p));
  }
  return hit.size();
}

bool hitting_check(const WindingVector& s, const Moduli& moduli, unsigned long n,
                   const SizeGuard& guard) {
  return hit_count(s, moduli, n, guard) == static_cast<std::size_t>(moduli.product_power(1).get_ui());
}

PreimageComparison compare_preimage(const PLLoop& loop, const Moduli& moduli,
                                    unsigned long n, const SizeGuard& guard) {
  check_guard(moduli, n, guard);
  const SegmentSet preimage = preimage_set(image_set(loop, n, moduli), moduli);
  const SegmentSet next = image_set(loop, n + 1, moduli);
  return {preimage == next, preimage.contains(next)};
}

bool preimage_equality_check(const PLLoop& loop, const Moduli& moduli, unsigned long n,
                             const SizeGuard& guard) {
  return compare_preimage(loop, moduli, n, guard).equal;
}

bool preimage_equality_check(const WindingVector& s, const Moduli& moduli, unsigned long n,
                             const SizeGuard& guard) {
  require_admissible(s, moduli);
  return preimage_equality_check(PLLoop::straight(s), moduli, n, guard);
}

ConnectednessVerdict preimage_connected_check(const PLLoop& loop, const Moduli& moduli,
                                              unsigned long n, const SizeGuard& guard) {
  check_guard(moduli, n, guard);
  const std::size_t count = components(preimage_set(image_set(loop, n, moduli), moduli)).size();
  return {count == 1, count};
}

ConnectednessVerdict preimage_connected_check(const WindingVector& s, const Moduli& moduli,
                                              unsigned long n, const SizeGuard& guard) {
  require_admissible(s, moduli);
  return preimage_connected_check(PLLoop::straight(s), moduli, n, guard);
}

}  // namespace soltower
