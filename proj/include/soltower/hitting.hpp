#pragma once

/*
 * Certificates that f^{-1}(Im gamma^(n)) = Im gamma^(n+1) and that this set
 * is connected, for every loop gamma with winding vector s.
 *
 * Two level criteria are available and cross-checked:
 *   - the m-adic recipe: s_i = m_i^{alpha_i} q_i, N = (m_1 ... m_r)^alpha
 *     with alpha = max alpha_i (undefined when some split fails);
 *   - the gcd criterion: gcd(s_i, m_i^{n+1}) | m_i^n for every i, which is
 *     exactly solvability of s_i k = j_i m_i^n (mod m_i^{n+1}).
 * Hitting witnesses are integer times k with
 * sigma(s, n+1)(k) = (j_1/m_1, ..., j_r/m_r).
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "soltower/exact_arith.hpp"
#include "soltower/lifting.hpp"

namespace soltower {

struct SizeGuard {
  // Bound on prod m_i^{n+1} (number of torus points swept per check).
  std::uint64_t limit = 1'000'000;
};

struct MAdicLevel {
  std::vector<MAdicDecomposition> parts;
  unsigned long alpha = 0;  // max alpha_i
  Integer level;            // (m_1 ... m_r)^alpha
};

// Throws NoDecomposition when some s_i has no m_i-adic split.
MAdicLevel madic_level_details(const WindingVector& s, const Moduli& moduli);
Integer paper_level(const WindingVector& s, const Moduli& moduli);

bool level_condition(const WindingVector& s, const Moduli& moduli, unsigned long n);
// Least n <= n_max satisfying the gcd criterion; throws NotFoundWithin.
unsigned long minimal_level(const WindingVector& s, const Moduli& moduli,
                            unsigned long n_max);
// An n_max that always contains the minimal level (max bit length of s_i).
unsigned long level_search_bound(const WindingVector& s);

enum class WitnessRoute { MAdicRecipe, Congruence, Exhaustive };
const char* route_name(WitnessRoute route);

struct HittingWitness {
  std::vector<Integer> target;  // j, 0 <= j_i < m_i
  Integer k;
  WitnessRoute route = WitnessRoute::Congruence;
  std::optional<Integer> x;  // the CRT solution when route == MAdicRecipe
};

// beta_i = n - alpha_i, u = prod m_i^{beta_i}, u_i = u / m_i^{beta_i}.
struct RecipeBookkeeping {
  std::vector<unsigned long> alphas;
  std::vector<Integer> qs;
  std::vector<unsigned long> betas;
  Integer u;
  std::vector<Integer> u_parts;
};

// Defined when every split exists and n >= alpha_i for all i.
std::optional<RecipeBookkeeping> recipe_bookkeeping(const WindingVector& s,
                                                    const Moduli& moduli,
                                                    unsigned long n);

struct HittingCertificate {
  WindingVector s;
  Moduli moduli;
  unsigned long n;
  std::vector<HittingWitness> witnesses;  // one per target, lexicographic
  std::optional<RecipeBookkeeping> bookkeeping;
};

// Throws ConditionFails when the gcd criterion fails at n, InvalidInput on
// a malformed target.
HittingWitness crt_witness(const WindingVector& s, const Moduli& moduli, unsigned long n,
                           const std::vector<Integer>& target);
bool verify_witness(const WindingVector& s, const Moduli& moduli, unsigned long n,
                    const HittingWitness& witness);
HittingCertificate certify_hitting(const WindingVector& s, const Moduli& moduli,
                                   unsigned long n);

// Sweep of sigma(s, n+1) over one image period: true iff every point of
// f^{-1}(1^-) is hit. Throws SizeGuardExceeded.
bool hitting_check(const WindingVector& s, const Moduli& moduli, unsigned long n,
                   const SizeGuard& guard = {});
// Number of points of f^{-1}(1^-) hit by that sweep.
std::size_t hit_count(const WindingVector& s, const Moduli& moduli, unsigned long n,
                      const SizeGuard& guard = {});

struct PreimageComparison {
  bool equal;      // f^{-1}(Im gamma^(n)) == Im gamma^(n+1)
  bool contained;  // Im gamma^(n+1) within f^{-1}(Im gamma^(n)); always expected
};

PreimageComparison compare_preimage(const PLLoop& loop, const Moduli& moduli,
                                    unsigned long n, const SizeGuard& guard = {});
bool preimage_equality_check(const PLLoop& loop, const Moduli& moduli, unsigned long n,
                             const SizeGuard& guard = {});
bool preimage_equality_check(const WindingVector& s, const Moduli& moduli, unsigned long n,
                             const SizeGuard& guard = {});

struct ConnectednessVerdict {
  bool connected;
  std::size_t components;
};

ConnectednessVerdict preimage_connected_check(const PLLoop& loop, const Moduli& moduli,
                                              unsigned long n, const SizeGuard& guard = {});
ConnectednessVerdict preimage_connected_check(const WindingVector& s, const Moduli& moduli,
                                              unsigned long n, const SizeGuard& guard = {});

}  // namespace soltower
