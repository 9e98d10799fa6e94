#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ospbi {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Operands live in tensor powers of different arity, or an arity-1 element
/// was required.
class ArityError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "arity"; }
};

/// Leg, subset or transposition index outside its admissible range.
class IndexError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "index"; }
};

/// A caller-supplied object violates a documented precondition.
class ContractError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "contract"; }
};

/// Requested dense evaluation exceeds the configured memory budget.
class BudgetError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "budget"; }
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line), column_(column) {}
  const char* kind() const noexcept override { return "parse"; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace ospbi
