#include "bandlink/error.hpp"

namespace bandlink {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedPermutation: return "MalformedPermutation";
    case ErrorKind::GenusMismatch: return "GenusMismatch";
    case ErrorKind::OddEuler: return "OddEuler";
    case ErrorKind::BadValence: return "BadValence";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::ZeroSubdivision: return "ZeroSubdivision";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ConstructionStuck: return "ConstructionStuck";
    case ErrorKind::UnverifiedWitness: return "UnverifiedWitness";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

static std::string located(const std::string& source, std::size_t line, const std::string& message) {
  std::string where = source;
  if (line > 0) where += ":" + std::to_string(line);
  return where.empty() ? message : where + ": " + message;
}

ParseError::ParseError(std::string source, std::size_t line, const std::string& message)
    : Error(ErrorKind::Parse, located(source, line, message)), source_(std::move(source)), line_(line) {}

}  // namespace bandlink
