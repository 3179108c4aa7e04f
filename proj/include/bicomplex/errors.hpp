#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bicx {

/// Base for every domain error raised by the library.  `name()` is the
/// stable structured identifier surfaced by the CLI (e.g. "DoesNotSplit");
/// `fields()` carries the machine-readable payload.
class Error : public std::runtime_error {
 public:
  using Field = std::pair<std::string, std::string>;

  Error(std::string name, const std::string& message, std::vector<Field> fields = {})
      : std::runtime_error(message), name_(std::move(name)), fields_(std::move(fields)) {}

  const std::string& name() const noexcept { return name_; }
  const std::vector<Field>& fields() const noexcept { return fields_; }

 private:
  std::string name_;
  std::vector<Field> fields_;
};

/// Which idempotent component(s) of a scalar or matrix failed a test.
enum class Component { first = 1, second = 2, both = 3 };

inline std::string to_string(Component c) {
  switch (c) {
    case Component::first: return "1";
    case Component::second: return "2";
    case Component::both: return "both";
  }
  return "?";
}

inline Component component_from_flags(bool first, bool second) {
  if (first && second) return Component::both;
  return first ? Component::first : Component::second;
}

class NotInvertible : public Error {
 public:
  explicit NotInvertible(Component which)
      : Error("NotInvertible", "bicomplex scalar has a vanishing idempotent component (" + to_string(which) + ")",
              {{"component", to_string(which)}}),
        which_(which) {}
  Component which() const noexcept { return which_; }

 private:
  Component which_;
};

class SingularComponent : public Error {
 public:
  explicit SingularComponent(Component which)
      : Error("SingularComponent", "idempotent component matrix is singular (" + to_string(which) + ")",
              {{"which", to_string(which)}}),
        which_(which) {}
  Component which() const noexcept { return which_; }

 private:
  Component which_;
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error("ShapeMismatch", what) {}
};

class NotSquare : public Error {
 public:
  NotSquare(std::size_t rows, std::size_t cols)
      : Error("NotSquare", "matrix is " + std::to_string(rows) + "x" + std::to_string(cols) + ", expected square",
              {{"rows", std::to_string(rows)}, {"cols", std::to_string(cols)}}) {}
};

class EmptySet : public Error {
 public:
  EmptySet() : Error("EmptySet", "infimum of an empty set of hyperbolic values") {}
};

class UnsupportedOnExactBackend : public Error {
 public:
  explicit UnsupportedOnExactBackend(const std::string& what) : Error("UnsupportedOnExactBackend", what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("InvalidArgument", what) {}
};

class DoesNotSplit : public Error {
 public:
  DoesNotSplit(const std::string& remaining, std::size_t component = 0)
      : Error("DoesNotSplit",
              "characteristic polynomial does not split over the Gaussian rationals; remaining factor " + remaining,
              component == 0 ? std::vector<Field>{{"remaining", remaining}}
                             : std::vector<Field>{{"remaining", remaining}, {"component", std::to_string(component)}}),
        remaining_(remaining) {}
  const std::string& remaining() const noexcept { return remaining_; }

 private:
  std::string remaining_;
};

/// Raised by the eigenvalue set on the exact backend: the same condition as
/// DoesNotSplit, surfaced under the matrix-level name.
class EigenvalueFieldError : public Error {
 public:
  EigenvalueFieldError(const std::string& remaining, std::size_t component)
      : Error("EigenvalueFieldError",
              "component " + std::to_string(component) +
                  " has eigenvalues outside the Gaussian rationals; remaining factor " + remaining,
              {{"remaining", remaining}, {"component", std::to_string(component)}}) {}
};

class ConsistencyFailure : public Error {
 public:
  explicit ConsistencyFailure(const std::string& what) : Error("ConsistencyFailure", what) {}
};

class NotSelfAdjoint : public Error {
 public:
  explicit NotSelfAdjoint(const std::string& what) : Error("NotSelfAdjoint", what) {}
};

class NoConvergence : public Error {
 public:
  explicit NoConvergence(int sweeps)
      : Error("NoConvergence", "Jacobi iteration did not converge after " + std::to_string(sweeps) + " sweeps",
              {{"sweeps", std::to_string(sweeps)}}) {}
};

class DegenerateSpectrum : public Error {
 public:
  explicit DegenerateSpectrum(const std::string& what) : Error("DegenerateSpectrum", what) {}
};

class SubspaceIsFull : public Error {
 public:
  explicit SubspaceIsFull(Component which)
      : Error("SubspaceIsFull", "subspace component equals the whole space (" + to_string(which) + ")",
              {{"component", to_string(which)}}) {}
};

class ZeroSubspace : public Error {
 public:
  explicit ZeroSubspace(Component which)
      : Error("ZeroSubspace", "subspace component is {0}; a nonzero subspace is required (" + to_string(which) + ")",
              {{"component", to_string(which)}}) {}
};

}  // namespace bicx
