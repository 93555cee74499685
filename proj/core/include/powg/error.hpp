#pragma once

#include <stdexcept>
#include <string>

namespace powg {

/// A caller violated an operation's precondition (bad argument, wrong position shape).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The p-adic valuation of zero was requested.
class InfiniteValuation : public std::domain_error {
 public:
  InfiniteValuation() : std::domain_error("infinite valuation: nu_p(0) is +inf") {}
};

/// A search or enumeration ran past its configured node/tuple budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A player made an illegal move; side() names the offender.
class IllegalMove : public std::runtime_error {
 public:
  IllegalMove(std::string side, const std::string& what)
      : std::runtime_error(side + ": " + what), side_(std::move(side)) {}
  const std::string& side() const { return side_; }

 private:
  std::string side_;
};

}  // namespace powg
