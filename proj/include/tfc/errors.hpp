#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfc {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// An iterative scheme (quadrature refinement, series summation) hit its
/// budget before meeting the requested tolerance.
class NonConvergentError : public Error {
  public:
    explicit NonConvergentError(const std::string& what) : Error(what) {}
};

/// Evaluation at (or too near) a pole.
class PoleError : public Error {
  public:
    explicit PoleError(const std::string& what) : Error(what) {}
};

/// A function handle does not declare enough smoothness for the operation.
class RegularityError : public Error {
  public:
    explicit RegularityError(const std::string& what) : Error(what) {}
};

class SynchronyError : public Error {
  public:
    explicit SynchronyError(const std::string& what) : Error(what) {}
};

class MonotonicityError : public Error {
  public:
    explicit MonotonicityError(const std::string& what) : Error(what) {}
};

class PositivityError : public Error {
  public:
    explicit PositivityError(const std::string& what) : Error(what) {}
};

/// Composed evaluation would exceed the configured effort budget.
class CostExceededError : public Error {
  public:
    explicit CostExceededError(const std::string& what) : Error(what) {}
};

/// Lazy evaluation error inside a compiled expression (e.g. 0^negative).
class EvalError : public Error {
  public:
    explicit EvalError(const std::string& what) : Error(what) {}
};

/// Syntax error with the byte offset of the failure and the tokens that
/// would have been accepted there.
class ParseError : public Error {
  public:
    ParseError(std::size_t offset, std::string expected, const std::string& what)
        : Error(what), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

  private:
    std::size_t offset_;
    std::string expected_;
};

}  // namespace tfc
