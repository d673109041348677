#include "qgsmooth/error.hpp"

namespace qgs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::Name: return "NameError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::UnknownCurve: return "UnknownCurve";
    case ErrorKind::MissingPointData: return "MissingPointData";
    case ErrorKind::ExcessMultiplicity: return "ExcessMultiplicity";
    case ErrorKind::NegativeGenus: return "NegativeGenus";
    case ErrorKind::UnknownTag: return "UnknownTag";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::InvalidFraction: return "InvalidFraction";
    case ErrorKind::NotClassT: return "NotClassT";
    case ErrorKind::PlanInvalid: return "PlanInvalid";
    case ErrorKind::CurveContracted: return "CurveContracted";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
  }
  return "Error";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Schema:
    case ErrorKind::Name:
    case ErrorKind::Validation:
    case ErrorKind::Io:
    case ErrorKind::UnknownCurve:
    case ErrorKind::MissingPointData:
    case ErrorKind::ExcessMultiplicity:
    case ErrorKind::NegativeGenus:
    case ErrorKind::UnknownTag:
    case ErrorKind::InvalidChain:
    case ErrorKind::InvalidFraction:
    case ErrorKind::UnknownExample:
      return true;
    default:
      return false;
  }
}

}  // namespace qgs
