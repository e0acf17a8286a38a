#ifndef BRUHAT_ERRORS_HPP
#define BRUHAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bruhat {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed one-line notation or cycle text, or invalid window contents.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Operation on permutations of different ranks.
class RankMismatch : public Error {
 public:
  explicit RankMismatch(const std::string& what) : Error(what) {}
};

// Requested an interval [u,v] with u not below v.
class NotComparable : public Error {
 public:
  explicit NotComparable(const std::string& what) : Error(what) {}
};

// A set of permutations has no unique minimum.
class NoMinimum : public Error {
 public:
  explicit NoMinimum(const std::string& what) : Error(what) {}
};

// An element lies outside the interval a computation requires it in.
class ElementOutsideInterval : public Error {
 public:
  explicit ElementOutsideInterval(const std::string& what) : Error(what) {}
};

// A cycle pair fed to phi/psi violates the expected chain shape.
class MalformedPair : public Error {
 public:
  explicit MalformedPair(const std::string& what) : Error(what) {}
};

}  // namespace bruhat

#endif  // BRUHAT_ERRORS_HPP
