#pragma once

#include <stdexcept>
#include <string>

namespace kmps {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: unparsable JSON, bad matrix shape, unknown graph name.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Operation outside its domain (division by zero, d = 0 bracket, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// A rational function that cannot be expanded at t = 0.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(what) {}
};

// Enumeration work or memory budget exceeded.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace kmps
