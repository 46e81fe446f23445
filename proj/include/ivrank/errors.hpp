#pragma once

#include <stdexcept>
#include <string>

namespace ivrank {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedInterval : Error {
  using Error::Error;
};

struct CycleDetected : Error {
  using Error::Error;
};

struct TooSmall : Error {
  using Error::Error;
};

struct DuplicateId : Error {
  using Error::Error;
};

struct UnknownElement : Error {
  using Error::Error;
};

struct NotComparable : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

struct IncompleteAssignment : Error {
  using Error::Error;
};

struct PosetTooLarge : Error {
  using Error::Error;
};

struct ChainCapExceeded : Error {
  using Error::Error;
};

}  // namespace ivrank
