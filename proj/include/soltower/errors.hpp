#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace soltower {

enum class Errc {
  InvalidInput,
  ModuliNotCoprime,
  NoDecomposition,
  DimensionMismatch,
  DepthMismatch,
  IncoherentSequence,
  NonperiodicWithoutHorizon,
  NotFoundWithin,
  ConditionFails,
  SizeGuardExceeded,
  ZeroInjection,
  PreconditionViolated,
  BadInputFamily,
  MembershipFails,
  NoPreimageInLevel,
  DepthTooSmall,
  Io,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace soltower
