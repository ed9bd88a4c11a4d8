#pragma once

#include <stdexcept>
#include <string>

namespace oddcycle {

/// Bad argument to a pure function (vertex out of range, inconsistent sizes).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation not valid in the current game state (e.g. querying a claimed edge).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A move or offer broke a rule of the game. `rule()` names the clause.
class RuleViolation : public std::runtime_error {
 public:
  RuleViolation(std::string rule, const std::string& detail)
      : std::runtime_error(rule + ": " + detail), rule_(std::move(rule)) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

/// Replayed transcript does not reproduce its recorded digest or result.
class CorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or enumeration guard was exceeded.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, long long nodes = 0)
      : std::runtime_error(what), nodes_(nodes) {}
  long long nodes_explored() const { return nodes_; }

 private:
  long long nodes_;
};

/// An assert-mode invariant hook failed.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oddcycle
