#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cqt {

/// Base class for every error raised by the toolkit. `code()` is the stable
/// machine-readable identifier used in service error envelopes.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& label)
      : Error("unknown-vertex", "unknown vertex '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class InvalidQuiver : public Error {
 public:
  explicit InvalidQuiver(const std::string& message) : Error("invalid-quiver", message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse-error", message) {}
};

class InvalidParameters : public Error {
 public:
  explicit InvalidParameters(const std::string& message) : Error("invalid-parameters", message) {}
};

/// Raised when an operation that requires a multiplicity-free quiver sees a
/// multiple arrow.
class MultipleArrows : public Error {
 public:
  explicit MultipleArrows(const std::string& message) : Error("multiple-arrows", message) {}
};

class ArrowNotPresent : public Error {
 public:
  ArrowNotPresent(const std::string& from, const std::string& to)
      : Error("arrow-not-present", "no arrow " + from + " -> " + to) {}
};

/// An arrow i -> j admits three or more shortest return paths j ~> i. This
/// cannot happen for the quiver of a cluster-tilted algebra of finite type.
class ThreeOrMoreShortestPaths : public Error {
 public:
  ThreeOrMoreShortestPaths(std::string from, std::string to,
                           std::vector<std::vector<std::string>> paths)
      : Error("three-or-more-shortest-paths",
              "arrow " + from + " -> " + to + " has " + std::to_string(paths.size()) +
                  " shortest return paths"),
        from_(std::move(from)),
        to_(std::move(to)),
        paths_(std::move(paths)) {}

  const std::string& from() const noexcept { return from_; }
  const std::string& to() const noexcept { return to_; }
  const std::vector<std::vector<std::string>>& paths() const noexcept { return paths_; }

 private:
  std::string from_;
  std::string to_;
  std::vector<std::vector<std::string>> paths_;
};

class CompletionBudgetExceeded : public Error {
 public:
  explicit CompletionBudgetExceeded(const std::string& message)
      : Error("completion-budget-exceeded", message) {}
};

class NotNakayama : public Error {
 public:
  NotNakayama() : Error("not-nakayama", "quiver is not an oriented cycle or a linearly oriented line") {}
};

/// The finite-type check refuted finite type (or could not establish it
/// within budget) and the caller did not force synthesis.
class InfiniteType : public Error {
 public:
  explicit InfiniteType(const std::string& message) : Error("infinite-type", message) {}
};

class TypeUndetermined : public Error {
 public:
  explicit TypeUndetermined(const std::string& message) : Error("type-undetermined", message) {}
};

}  // namespace cqt
