#pragma once

/*
 * The inverse sequence of torus continua {L_n} built around a base loop
 * gamma:
 *   L_{N0 - j}      = f^j(Im gamma)              j = 0..N0-1
 *   L_{N0 + j}      = Im gamma^(j)               j = 1..N1
 *   L_{N0 + N1 + j} = f^{-j}(Im gamma^(N1))      j = 1..depth
 * together with finite-depth checks that it is an inverse sequence of
 * continua through 1^- whose limit stays within epsilon of the coherent
 * lifts of the base loop.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "soltower/exact_arith.hpp"
#include "soltower/hitting.hpp"
#include "soltower/lifting.hpp"
#include "soltower/segment_set.hpp"
#include "soltower/solenoid.hpp"

namespace soltower {

struct TowerParams {
  Rational epsilon;
  bool epsilon_clamped = false;
  unsigned long N0 = 1;
  Rational delta;
  unsigned long N1 = 1;
  unsigned long depth = 0;
  std::optional<Integer> paper_level;  // absent when no m-adic split exists
  unsigned long minimal_level = 0;
};

// Least N0 >= 1 with 2^{-N0} < epsilon / 2, epsilon clamped to <= 1.
unsigned long choose_N0(const Rational& epsilon);
// epsilon in (0, 1] after clamping; throws InvalidInput when epsilon <= 0,
// PreconditionViolated for a non-admissible winding.
TowerParams choose_params(const Rational& epsilon, const Moduli& moduli,
                          const WindingVector& s, unsigned long depth);

enum class LevelKind { Forward, Lift, Preimage };
const char* level_kind_name(LevelKind kind);

struct Tower {
  std::vector<SegmentSet> levels;  // L_1, ..., L_{N0 + N1 + depth}
  std::vector<LevelKind> kinds;
  PLLoop base_loop;
  TowerParams params;
  Moduli moduli;

  std::size_t size() const { return levels.size(); }
  // 1-based.
  const SegmentSet& level(std::size_t n) const { return levels.at(n - 1); }
};

// N1 = 0 is accepted (the tower then has no lift levels). Throws
// SizeGuardExceeded when an image period or a preimage step would sweep more
// than guard.limit segments.
Tower build_tower(const PLLoop& base_loop, const TowerParams& params, const Moduli& moduli,
                  const SizeGuard& guard = {});

struct LevelReport {
  std::size_t n;
  LevelKind kind;
  std::size_t pieces;
  std::size_t points;
  std::size_t components;
  bool connected;
  bool contains_base;
  std::optional<bool> bonding_contained;   // f(L_{n+1}) within L_n
  std::optional<bool> bonding_equal;       // f(L_{n+1}) == L_n, for n < N0
  std::optional<bool> recipe_identity;     // preimage levels only
};

struct TowerReport {
  std::vector<LevelReport> levels;
  bool n1_exceeds_n0;
  bool all_ok;
};

TowerReport verify_tower(const Tower& tower, const SizeGuard& guard = {});

// A coherent point z_1, ..., z_depth with z_k in L_k, through v at level n.
// Throws MembershipFails when v is not in L_n, NoPreimageInLevel when no
// f-preimage of z_k lies in L_{k+1}.
SolenoidPoint coherent_point_through(const Tower& tower, std::size_t n, const TorusPoint& v,
                                     std::size_t depth);

struct EpsilonCheck {
  bool ok;
  std::size_t candidates;
  std::size_t matched;          // candidates with a delta-close base point
  Rational max_level_distance;  // max d_T(w_i, z_i) over i <= N0
  Rational max_distance;        // max truncated solenoid distance
  Rational max_upper_bound;     // same plus the tail bound
};

// Throws DepthTooSmall when some point has depth < N0.
EpsilonCheck epsilon_bound_check(const Tower& tower, const std::vector<SolenoidPoint>& base_points,
                                 const std::vector<SolenoidPoint>& candidates);

// Base points through grid_points(L_{N0}, delta); candidates through
// `count` sample points of the deepest level.
std::vector<SolenoidPoint> tower_base_points(const Tower& tower);
std::vector<SolenoidPoint> tower_candidates(const Tower& tower, std::size_t count);

}  // namespace soltower
