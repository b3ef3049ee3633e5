#include "soltower/loop_designer.hpp"

#include "soltower/errors.hpp"

namespace soltower {

namespace {

Integer tracked_max(const WindingVector& before, std::size_t stage) {
  Integer out = 0;
  for (std::size_t i = 0; i <= stage && i < before.size(); ++i)
    if (abs(before[i]) > out) out = abs(before[i]);
  return out;
}

}  // namespace

Integer choose_l(const WindingVector& before, std::size_t stage,
                 const Integer& injected_target) {
  if (injected_target == 0)
    throw Error(Errc::ZeroInjection, "injected loop has zero winding in the new coordinate");
  if (stage < 1 || stage >= before.size())
    throw Error(Errc::PreconditionViolated, "stage out of range");
  return tracked_max(before, stage) + 1;
}

WindingVector combine(const WindingVector& before, const WindingVector& injected,
                      std::size_t stage, const Integer& l) {
  if (before.size() != injected.size())
    throw Error(Errc::PreconditionViolated, "winding vectors differ in length");
  if (stage < 1 || stage >= before.size())
    throw Error(Errc::PreconditionViolated, "stage out of range");
  if (injected[stage] == 0)
    throw Error(Errc::PreconditionViolated, "injected coordinate is zero");
  for (std::size_t i = 0; i < stage; ++i)
    if (before[i] == 0)
      throw Error(Errc::PreconditionViolated, "coordinate " + std::to_string(i + 1) +
                                                  " of the current loop is zero");
  if (l <= tracked_max(before, stage))
    throw Error(Errc::PreconditionViolated, "l does not exceed the tracked windings");

  std::vector<Integer> after;
  for (std::size_t i = 0; i < before.size(); ++i) after.push_back(l * injected[i] + before[i]);
  WindingVector out(std::move(after));
  for (std::size_t i = 0; i <= stage; ++i)
    if (out[i] == 0)
      throw Error(Errc::PreconditionViolated, "combined winding vanished");  // unreachable
  return out;
}

LoopDesign design_all_nonzero(const std::vector<WindingVector>& loops) {
  const std::size_t r = loops.size();
  if (r == 0) throw Error(Errc::BadInputFamily, "empty loop family");
  for (std::size_t i = 0; i < r; ++i) {
    if (loops[i].size() != r)
      throw Error(Errc::BadInputFamily, "loop " + std::to_string(i + 1) + " has " +
                                            std::to_string(loops[i].size()) +
                                            " coordinates, expected " + std::to_string(r));
    if (loops[i][i] == 0)
      throw Error(Errc::BadInputFamily,
                  "loop " + std::to_string(i + 1) + " has zero winding in coordinate " +
                      std::to_string(i + 1));
  }

  LoopDesign out{{Integer(1)}, {}, loops[0], PLLoop::straight(loops[0])};
  for (std::size_t stage = 1; stage < r; ++stage) {
    const WindingVector& zeta = loops[stage];
    const Integer l = choose_l(out.final_winding, stage, zeta[stage]);
    WindingVector after = combine(out.final_winding, zeta, stage, l);

    // zeta repeated l times: breakpoints c * zeta for c = 0..l.
    std::vector<CoverVector> prefix;
    for (Integer c = 0; c <= l; ++c) {
      CoverVector b;
      for (std::size_t i = 0; i < r; ++i) b.emplace_back(c * zeta[i]);
      prefix.push_back(std::move(b));
    }
    out.concatenation = PLLoop(std::move(prefix)).then(out.concatenation);

    out.steps.push_back({stage, l, out.final_winding, zeta, after});
    out.coefficients.push_back(l);
    out.final_winding = std::move(after);
  }
  return out;
}

}  // namespace soltower
