#pragma once

#include <map>
#include <vector>

#include "siegel/partition.hpp"
#include "siegel/rational.hpp"

namespace siegel {

struct LexGreater {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

using CoeffMap = std::map<Partition, Rational, LexGreater>;

/// Homogeneous symmetric polynomial in r variables, stored in the
/// monomial-symmetric basis m_lambda.  No explicit zero coefficients;
/// all keys have at most r parts.
class SymmetricPolynomial {
 public:
  SymmetricPolynomial() : num_vars_(0) {}
  explicit SymmetricPolynomial(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  Rational coeff(const Partition& p) const;
  void add(const Partition& p, const Rational& c);

  /// Sum of coefficients times monomial-orbit sizes.
  Rational evaluate_at_ones() const;

  friend bool operator==(const SymmetricPolynomial&, const SymmetricPolynomial&) = default;

 private:
  int num_vars_;
  CoeffMap coeffs_;
};

/// Number of distinct rearrangements of mu padded with zeros to r entries.
Int monomial_orbit_size(const Partition& mu, int r);

/// Kostka number: semistandard tableaux of shape `shape` and content
/// `content`.  Memoized; safe for concurrent use.
Int kostka(const Partition& shape, const Partition& content);

/// Schur polynomial s_b in r variables (monomial expansion with Kostka
/// coefficients).  Throws TooManyRowsError if l(b) > r.
SymmetricPolynomial schur(const Partition& b, int r);

/// Normalized zonal polynomial (Jack alpha=2 in the P-normalization,
/// rescaled to take the value 1 at the all-ones point).
SymmetricPolynomial spherical(const Partition& m, int r);

/// c_{m,r} = prod over cells (i,j) of the diagram of (r - i + 2j - 1).
Int c_factor(const Partition& m, int r);

/// Row of the Schur -> spherical transition:
/// s_b = sum_m entries[m] * spherical(m, r).
struct TransitionRow {
  Partition source;
  int num_vars;
  CoeffMap entries;
};

/// Coefficients n_{b,m,r} by dominance-descending triangular elimination.
TransitionRow schur_to_spherical(const Partition& b, int r);

}  // namespace siegel
