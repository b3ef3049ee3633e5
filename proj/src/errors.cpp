#include "soltower/errors.hpp"

namespace soltower {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::ModuliNotCoprime: return "ModuliNotCoprime";
    case Errc::NoDecomposition: return "NoDecomposition";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DepthMismatch: return "DepthMismatch";
    case Errc::IncoherentSequence: return "IncoherentSequence";
    case Errc::NonperiodicWithoutHorizon: return "NonperiodicWithoutHorizon";
    case Errc::NotFoundWithin: return "NotFoundWithin";
    case Errc::ConditionFails: return "ConditionFails";
    case Errc::SizeGuardExceeded: return "SizeGuardExceeded";
    case Errc::ZeroInjection: return "ZeroInjection";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::BadInputFamily: return "BadInputFamily";
    case Errc::MembershipFails: return "MembershipFails";
    case Errc::NoPreimageInLevel: return "NoPreimageInLevel";
    case Errc::DepthTooSmall: return "DepthTooSmall";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace soltower
