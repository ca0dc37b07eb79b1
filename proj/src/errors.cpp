#include "trb/errors.hpp"

namespace trb {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DuplicateAssignment: return "DuplicateAssignment";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotLie: return "NotLie";
    case ErrorKind::NotRepresentation: return "NotRepresentation";
    case ErrorKind::NotNijenhuis: return "NotNijenhuis";
    case ErrorKind::NotTwistedRB: return "NotTwistedRB";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotDerivation: return "NotDerivation";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::NotNsLie: return "NotNsLie";
    case ErrorKind::NotAssocNs: return "NotAssocNs";
    case ErrorKind::NonzeroH: return "NonzeroH";
    case ErrorKind::NotGcs: return "NotGcs";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

MathError::MathError(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw MathError(kind, what); }

bool Verdict::note(const std::string& identity, const std::vector<std::size_t>& tuple, const Vec& value) {
  if (is_zero(value)) return true;
  if (holds) {
    holds = false;
    witness = Defect{identity, tuple, value};
  }
  return false;
}

void Verdict::merge(const Verdict& other) {
  if (!other.holds && holds) {
    holds = false;
    witness = other.witness;
  }
}

std::string Verdict::describe() const {
  if (holds) return "holds";
  if (!witness) return "fails";
  std::string t = "(";
  for (std::size_t i = 0; i < witness->tuple.size(); ++i) {
    if (i) t += ",";
    t += std::to_string(witness->tuple[i]);
  }
  t += ")";
  return "fails: " + witness->identity + " at " + t + ", defect " + to_string(witness->value);
}

}  // namespace trb
