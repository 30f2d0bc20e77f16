#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace runcube {

/// Raised by the factorizers when a word is not in the language generated by
/// the requested alphabet. `position` is the 0-based offset of the earliest
/// character at which no letter can match.
class NotInLanguage : public std::runtime_error {
 public:
  NotInLanguage(std::size_t position, const std::string& what)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConstantTermNonzero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VertexNotInGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Unreachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownId : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedFamily : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a requested enumeration exceeds the configured size caps.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace runcube
