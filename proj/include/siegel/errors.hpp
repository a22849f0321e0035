#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

// A Gamma pole collides with a quotient; signals an invalid
// weight/partition combination upstream.
struct PoleOrZeroError : std::domain_error {
  explicit PoleOrZeroError(const std::string& what) : std::domain_error(what) {}
};

struct OutOfRangeError : std::domain_error {
  explicit OutOfRangeError(const std::string& what) : std::domain_error(what) {}
};

struct InvalidRankError : std::domain_error {
  explicit InvalidRankError(const std::string& what) : std::domain_error(what) {}
};

struct TooManyRowsError : std::domain_error {
  explicit TooManyRowsError(const std::string& what) : std::domain_error(what) {}
};

// Must not occur; signals an implementation bug in the triangular
// basis change.
struct SingularEliminationError : std::logic_error {
  explicit SingularEliminationError(const std::string& what) : std::logic_error(what) {}
};

// Inputs outside the range where the formulas are proven (k_n <= n+1 or
// N <= 2).  A force flag evaluates the formula anyway.
struct OutOfProvenRangeError : std::domain_error {
  explicit OutOfProvenRangeError(const std::string& what) : std::domain_error(what) {}
};

// Integrality is a theorem-level consistency check; failure means a bug.
struct NonIntegerResultError : std::logic_error {
  explicit NonIntegerResultError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace siegel
