#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bandlink {

enum class ErrorKind {
  MalformedPermutation,
  GenusMismatch,
  OddEuler,
  BadValence,
  Parse,
  ZeroSubdivision,
  InvalidSpec,
  UnknownVertex,
  BudgetExceeded,
  ConstructionStuck,
  UnverifiedWitness,
  NonPlanar,
  Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Input-file error carrying the offending line (1-based, 0 when not line-bound).
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace bandlink
