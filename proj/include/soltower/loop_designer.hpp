#pragma once

// Combining loops by repeated concatenation until every winding coordinate
// is nonzero: gamma_{k+1} = zeta * ... * zeta * gamma_k (zeta l times).
//
// Stages are counted as in the induction: at stage k the coordinates
// 1..k (0-based indices 0..k-1) are already nonzero and coordinate k+1
// (index k) is being fixed.

#include <vector>

#include "soltower/exact_arith.hpp"
#include "soltower/lifting.hpp"

namespace soltower {

struct CombineStep {
  std::size_t stage;
  Integer l;
  WindingVector before;
  WindingVector injected;
  WindingVector after;
};

// max{|before_1|, ..., |before_{k+1}|} + 1. Throws ZeroInjection when
// injected_target == 0.
Integer choose_l(const WindingVector& before, std::size_t stage,
                 const Integer& injected_target);

// after_i = l * injected_i + before_i for every i. Throws
// PreconditionViolated when the stage hypotheses or the bound on l fail.
WindingVector combine(const WindingVector& before, const WindingVector& injected,
                      std::size_t stage, const Integer& l);

struct LoopDesign {
  std::vector<Integer> coefficients;  // final = sum_i coefficients[i] * loops[i]
  std::vector<CombineStep> steps;
  WindingVector final_winding;
  PLLoop concatenation;
};

// loops[i][i] != 0 for every i (BadInputFamily otherwise).
LoopDesign design_all_nonzero(const std::vector<WindingVector>& loops);

}  // namespace soltower
