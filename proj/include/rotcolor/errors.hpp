#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotcolor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed parameters: ranges, coprimality, unknown names.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

/// A value needs a cyclotomic level the caller did not provide (or the cap forbids).
class LevelError : public Error {
 public:
  LevelError(const std::string& what, int required_level)
      : Error(what), required_level_(required_level) {}
  int required_level() const noexcept { return required_level_; }

 private:
  int required_level_;
};

class NotIntegral : public Error {
 public:
  using Error::Error;
};

/// Enumeration or search exceeded its configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t frontier = 0)
      : Error(what), frontier_(frontier) {}
  std::size_t frontier() const noexcept { return frontier_; }

 private:
  std::size_t frontier_;
};

/// An internal invariant failed. Seeing one means a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class InstanceMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace rotcolor
