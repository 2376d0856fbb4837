#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace takegrant {

enum class ErrorCode {
  DuplicateName,
  InvalidName,
  UnknownVertex,
  EmptyRights,
  ParseError,
  NotASubject,
  SameVertex,
  SameIsland,
  TooLarge,
  EmptySpec,
  InvalidSpec,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateName: return "duplicate name";
    case ErrorCode::InvalidName: return "invalid name";
    case ErrorCode::UnknownVertex: return "unknown vertex";
    case ErrorCode::EmptyRights: return "empty rights";
    case ErrorCode::ParseError: return "parse error";
    case ErrorCode::NotASubject: return "not a subject";
    case ErrorCode::SameVertex: return "same vertex";
    case ErrorCode::SameIsland: return "same island";
    case ErrorCode::TooLarge: return "too large";
    case ErrorCode::EmptySpec: return "empty spec";
    case ErrorCode::InvalidSpec: return "invalid spec";
  }
  return "unknown error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the TGG reader; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace takegrant
