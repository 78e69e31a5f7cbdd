#include "polyassoc/error.hpp"

namespace polyassoc {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidNumber: return "InvalidNumber";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::CollinearTriple: return "CollinearTriple";
    case ErrorCode::InvalidHole: return "InvalidHole";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::HolesUnsupported: return "HolesUnsupported";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::NotADiagonal: return "NotADiagonal";
    case ErrorCode::CrossingDiagonals: return "CrossingDiagonals";
    case ErrorCode::NotConvexDiagonalization: return "NotConvexDiagonalization";
    case ErrorCode::NotATriangulation: return "NotATriangulation";
    case ErrorCode::NotABoundaryEdge: return "NotABoundaryEdge";
    case ErrorCode::NotABridgeDiagonal: return "NotABridgeDiagonal";
    case ErrorCode::RegionTooLarge: return "RegionTooLarge";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::CertificateNotFound: return "CertificateNotFound";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotStar: return "NotStar";
    case ErrorCode::MismatchedN: return "MismatchedN";
    case ErrorCode::TargetEqualsVertex: return "TargetEqualsVertex";
    case ErrorCode::BrokenChain: return "BrokenChain";
    case ErrorCode::UnknownProduct: return "UnknownProduct";
  }
  return "Unknown";
}

}  // namespace polyassoc
