#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyassoc {

enum class ErrorCode {
  InvalidNumber,
  InvalidInput,
  TooFewVertices,
  NotSimple,
  CollinearTriple,
  InvalidHole,
  DegenerateInput,
  HolesUnsupported,
  SameVertex,
  NotADiagonal,
  CrossingDiagonals,
  NotConvexDiagonalization,
  NotATriangulation,
  NotABoundaryEdge,
  NotABridgeDiagonal,
  RegionTooLarge,
  Timeout,
  CertificateNotFound,
  NotAFace,
  NotStar,
  MismatchedN,
  TargetEqualsVertex,
  BrokenChain,
  UnknownProduct,
};

/// Stable name used in JSON error payloads and CLI messages.
const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

/// Raised when an enumeration would exceed its face cap. Carries the cap
/// and how far the enumeration got before stopping.
class RegionTooLarge : public Error {
 public:
  RegionTooLarge(std::size_t cap, std::size_t reached)
      : Error(ErrorCode::RegionTooLarge,
              "enumeration exceeded cap of " + std::to_string(cap) +
                  " (reached " + std::to_string(reached) + ")"),
        cap_(cap),
        reached_(reached) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t cap_;
  std::size_t reached_;
};

}  // namespace polyassoc
