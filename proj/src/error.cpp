#include "slitsqueeze/error.hpp"

namespace slitsqueeze {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptyHoleList: return "EmptyHoleList";
    case ErrorKind::HoleOutsideDisc: return "HoleOutsideDisc";
    case ErrorKind::HolesOverlap: return "HolesOverlap";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::InvalidBoundaryIndex: return "InvalidBoundaryIndex";
    case ErrorKind::BasePointOutsideDomain: return "BasePointOutsideDomain";
    case ErrorKind::PointOutsideAnnulus: return "PointOutsideAnnulus";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DenominatorZero: return "DenominatorZero";
    case ErrorKind::ProfileDegenerate: return "ProfileDegenerate";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace slitsqueeze
