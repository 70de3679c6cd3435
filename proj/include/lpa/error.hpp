#ifndef LPA_ERROR_HPP_
#define LPA_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpa {

  enum class Errc {
    ValidationError,
    UnknownVertex,
    UnknownBundle,
    CycleThroughOmegaBundle,
    CapExceeded,
    NotHereditarySaturated,
    InvalidAdmissiblePair,
    InvalidPath,
    NotACycle,
    RangeMismatch,
    GraphMismatch,
    NotABreakingVertex,
    DuplicatePath,
    PathEndpointMismatch,
    TargetOnClosedPath,
    PathContainsCycle,
    CycleHasExit,
    NotAnExit,
    EmptyFamily,
    UnverifiedUnits,
    PreconditionUnbounded,
    NotRowFinite,
    LaurentFactorPresent,
    ResourceLimit,
    ExplosionGuard,
    SyntaxError,
    UnknownIdent,
    OmegaBundleNeedsIndex,
    BundleNeedsIndex,
    EmptyIdentity,
    Internal,
  };

  constexpr std::string_view errc_name(Errc c) noexcept {
    switch (c) {
      case Errc::ValidationError: return "ValidationError";
      case Errc::UnknownVertex: return "UnknownVertex";
      case Errc::UnknownBundle: return "UnknownBundle";
      case Errc::CycleThroughOmegaBundle: return "CycleThroughOmegaBundle";
      case Errc::CapExceeded: return "CapExceeded";
      case Errc::NotHereditarySaturated: return "NotHereditarySaturated";
      case Errc::InvalidAdmissiblePair: return "InvalidAdmissiblePair";
      case Errc::InvalidPath: return "InvalidPath";
      case Errc::NotACycle: return "NotACycle";
      case Errc::RangeMismatch: return "RangeMismatch";
      case Errc::GraphMismatch: return "GraphMismatch";
      case Errc::NotABreakingVertex: return "NotABreakingVertex";
      case Errc::DuplicatePath: return "DuplicatePath";
      case Errc::PathEndpointMismatch: return "PathEndpointMismatch";
      case Errc::TargetOnClosedPath: return "TargetOnClosedPath";
      case Errc::PathContainsCycle: return "PathContainsCycle";
      case Errc::CycleHasExit: return "CycleHasExit";
      case Errc::NotAnExit: return "NotAnExit";
      case Errc::EmptyFamily: return "EmptyFamily";
      case Errc::UnverifiedUnits: return "UnverifiedUnits";
      case Errc::PreconditionUnbounded: return "PreconditionUnbounded";
      case Errc::NotRowFinite: return "NotRowFinite";
      case Errc::LaurentFactorPresent: return "LaurentFactorPresent";
      case Errc::ResourceLimit: return "ResourceLimit";
      case Errc::ExplosionGuard: return "ExplosionGuard";
      case Errc::SyntaxError: return "SyntaxError";
      case Errc::UnknownIdent: return "UnknownIdent";
      case Errc::OmegaBundleNeedsIndex: return "OmegaBundleNeedsIndex";
      case Errc::BundleNeedsIndex: return "BundleNeedsIndex";
      case Errc::EmptyIdentity: return "EmptyIdentity";
      case Errc::Internal: return "Internal";
    }
    return "Unknown";
  }

  // True for the error kinds that abort on a resource bound rather than on
  // bad input.
  constexpr bool is_resource_error(Errc c) noexcept {
    return c == Errc::ResourceLimit || c == Errc::ExplosionGuard
           || c == Errc::CapExceeded;
  }

  class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

   private:
    Errc code_;
  };

}  // namespace lpa

#endif  // LPA_ERROR_HPP_
