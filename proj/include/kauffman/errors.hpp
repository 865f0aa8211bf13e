#ifndef KAUFFMAN_ERRORS_HPP
#define KAUFFMAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kauffman {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input text could not be parsed; position is a 0-based byte offset
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct BadRank : Error {
  using Error::Error;
};

struct RankMismatch : Error {
  using Error::Error;
};

struct NotPerfectMatching : Error {
  using Error::Error;
};

struct TooManyTWires : Error {
  using Error::Error;
};

struct OddRank : Error {
  using Error::Error;
};

struct AlphabetTooLarge : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct UnassignedLetter : Error {
  using Error::Error;
};

}  // namespace kauffman

#endif
