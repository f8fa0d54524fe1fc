#pragma once

#include <stdexcept>
#include <string>

namespace minuscule {

/// Precondition violated by the caller (bad index, wrong shape, non-palindromic input, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size or work budget would be exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two exact routes that must agree did not. Always a bug, never a verdict.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minuscule
