#pragma once

#include <string>
#include <utility>
#include <vector>

#include "siegel/partition.hpp"
#include "siegel/rational.hpp"

namespace siegel {

enum class Path {
  t115,
  c12,
  closed,
  vector,
};

std::string path_name(Path p);

/// Inputs, per-rank term breakdown and exact total of one dimension
/// evaluation.  In the proven range (k_n > n+1, N > 2) the total is a
/// nonnegative integer.
struct DimensionReport {
  int degree = 0;
  std::vector<long> weights;
  long level = 0;
  Path path = Path::t115;
  std::vector<std::pair<int, Rational>> terms;  // (r, term), r = 0..n
  Rational total;
  bool proven_range = true;
};

struct AsymptoticReport {
  Rational main_term;  // the r = 0 term
  Rational remainder;  // total - main_term
  long level_exponent = 0;   // predicted N-exponent of the remainder
  long weight_exponent = 0;  // predicted k-exponent of the remainder
};

/// Group index [Gamma_n(1) : Gamma_n(N)] =
/// N^{n(2n+1)} prod_{p | N} prod_{l=1}^n (1 - p^{-2l}).
Int index_principal(int n, long N);

/// Scalar archimedean factor 2^{-2n+r} prod_{t=1}^{n-r} prod_{u=t+r}^{n} (2k-t-u).
Rational c_scalar(long k, int n, int r);

/// Vector-valued archimedean factor assembled from branching
/// multiplicities, Schur -> spherical transition coefficients and exact
/// Gamma-quotients; the transcendental prefactors cancel identically.
/// Requires k_n > n+1 unless force is set (rational continuation down to
/// k_n > 0; Gamma poles surface as PoleOrZeroError).
Rational c_vector(const WeightVector& k, int r, bool force = false);

/// The packaged rational I(n, r) of the explicit scalar formula.
Rational i_factor(int n, int r);

/// Explicit scalar formula (Bernoulli form).
DimensionReport dim_scalar(int n, long k, long N, bool force = false);

/// Independent path through the Shintani special values.
DimensionReport dim_scalar_via_c12(int n, long k, long N, bool force = false);

/// Vector-valued dimension.
DimensionReport dim_vector(const WeightVector& k, long N, bool force = false);

/// The classical printed closed forms for n = 1, 2, 3 (third path).
Rational closed_form_low_degree(int n, long k, long N, bool force = false);

/// Splits a scalar report into main term and remainder, with the
/// predicted remainder exponents by parity of n.
AsymptoticReport asymptotics(int n, long k, long N);

}  // namespace siegel
