#pragma once

#include <stdexcept>
#include <string>

namespace kornlab {

// Typed failures surfaced across the library. Each maps to a distinct
// precondition or solver state so callers can branch (the CLI turns them
// into exit codes).

struct NonPositiveThickness : std::runtime_error {
  explicit NonPositiveThickness(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySelector : std::runtime_error {
  explicit EmptySelector(const std::string& what) : std::runtime_error(what) {}
};

struct NotElliptic : std::runtime_error {
  explicit NotElliptic(const std::string& what) : std::runtime_error(what) {}
};

struct MixedTermsPresent : std::runtime_error {
  explicit MixedTermsPresent(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownDescriptor : std::runtime_error {
  explicit UnknownDescriptor(const std::string& what) : std::runtime_error(what) {}
};

struct PeriodicIncompatibleProfiles : std::runtime_error {
  explicit PeriodicIncompatibleProfiles(const std::string& what) : std::runtime_error(what) {}
};

struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct BadInterval : std::runtime_error {
  explicit BadInterval(const std::string& what) : std::runtime_error(what) {}
};

struct CutoffMissing : std::runtime_error {
  explicit CutoffMissing(const std::string& what) : std::runtime_error(what) {}
};

struct BoundaryConditionViolated : std::runtime_error {
  explicit BoundaryConditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveInput : std::runtime_error {
  explicit NonPositiveInput(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kornlab
