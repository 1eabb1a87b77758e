#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tcover {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed .cg / .hg / JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An object violates its type invariants (duplicate edge, colour out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A search would exceed its configured enumeration budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InfeasibleArity : public Error {
 public:
  using Error::Error;
};

/// Requested cover number is larger than the cover number of the input.
class TargetUnreachable : public Error {
 public:
  using Error::Error;
};

class InputNotACover : public Error {
 public:
  using Error::Error;
};

/// An edge assignment maps the ends of a graph edge to disjoint hyperedges.
class IncompatibleAssignment : public Error {
 public:
  IncompatibleAssignment(int u, int v)
      : Error("edge " + std::to_string(u) + "-" + std::to_string(v) +
              " is mapped to disjoint hyperedges"),
        u_(u),
        v_(v) {}

  int u() const { return u_; }
  int v() const { return v_; }

 private:
  int u_;
  int v_;
};

/// The refined-components implication failed. Always a library bug.
class RefinementViolation : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  PreconditionViolated(std::string which, std::string witness)
      : Error(which + ": " + witness), which_(std::move(which)), witness_(std::move(witness)) {}

  const std::string& which() const { return which_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string which_;
  std::string witness_;
};

/// Coverability searches assume k >= r.
class ArityTooSmall : public Error {
 public:
  using Error::Error;
};

/// A bounded refutation search found an instance it must not find.
class CounterexampleFound : public Error {
 public:
  CounterexampleFound(const std::string& what, std::string certificate)
      : Error(what), certificate_(std::move(certificate)) {}

  /// The offending hypergraph in .hg text form.
  const std::string& certificate() const { return certificate_; }

 private:
  std::string certificate_;
};

/// A case analysis that is meant to be exhaustive found no applicable case.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tcover
