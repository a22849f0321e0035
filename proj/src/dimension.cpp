#include "siegel/dimension.hpp"

#include <algorithm>

#include "siegel/errors.hpp"
#include "siegel/shintani.hpp"
#include "siegel/symfunc.hpp"

namespace siegel {

std::string path_name(Path p) {
  switch (p) {
    case Path::t115: return "t115";
    case Path::c12: return "c12";
    case Path::closed: return "closed";
    case Path::vector: return "vector";
  }
  return "?";
}

Int index_principal(int n, long N) {
  if (n < 1 || N < 1) throw OutOfRangeError("index_principal requires n >= 1, N >= 1");
  Rational v = Rational(Int(N)).pow(static_cast<long>(n) * (2 * n + 1));
  // Trial division; N is a level, realistically small.
  long M = N;
  for (long p = 2; p * p <= M; ++p) {
    if (M % p != 0) continue;
    while (M % p == 0) M /= p;
    for (int l = 1; l <= n; ++l)
      v *= Rational(1) - Rational(Int(1), Rational(Int(p)).pow(2 * l).num());
  }
  if (M > 1) {
    for (int l = 1; l <= n; ++l)
      v *= Rational(1) - Rational(Int(1), Rational(Int(M)).pow(2 * l).num());
  }
  if (!v.is_integer())
    throw NonIntegerResultError("index_principal produced a non-integer");
  return v.num();
}

namespace {

// prod_{t=1}^{n-r} prod_{u=t+r}^{n} (2k - t - u)
Rational weight_product(long k, int n, int r) {
  Rational v(1);
  for (int t = 1; t <= n - r; ++t)
    for (int u = t + r; u <= n; ++u) v *= Rational(2 * k - t - u);
  return v;
}

// prod_{1 <= t <= u <= n} (k_t + k_u - t - u)
Rational pair_product(const std::vector<long>& k) {
  int n = static_cast<int>(k.size());
  Rational v(1);
  for (int t = 1; t <= n; ++t)
    for (int u = t; u <= n; ++u) v *= Rational(k[t - 1] + k[u - 1] - t - u);
  return v;
}

// prod_{j=1}^{m} (-1)^j (j-1)!/(2j-1)! zeta(1-2j)
Rational zeta_factor(int m) {
  Rational v(1);
  for (int j = 1; j <= m; ++j) {
    Rational f(factorial(static_cast<unsigned>(j - 1)),
               factorial(static_cast<unsigned>(2 * j - 1)));
    if (j % 2 == 1) f = -f;
    v *= f * zeta_negative_odd(static_cast<unsigned>(j));
  }
  return v;
}

void check_proven_scalar(int n, long k, long N, bool force) {
  if (n < 1) throw OutOfRangeError("degree must be >= 1");
  if (!force && !(k > n + 1 && N > 2))
    throw OutOfProvenRangeError("formula proven only for k > n+1 and N > 2");
}

DimensionReport finalize(DimensionReport rep, bool force) {
  Rational tot(0);
  for (const auto& [r, t] : rep.terms) tot += t;
  rep.total = Rational(index_principal(rep.degree, rep.level)) * tot;
  if (rep.proven_range && (!rep.total.is_integer() || rep.total.sign() < 0))
    throw NonIntegerResultError("dimension total is not a nonnegative integer");
  (void)force;
  return rep;
}

}  // namespace

Rational c_scalar(long k, int n, int r) {
  if (r < 0 || r > n) throw OutOfRangeError("c_scalar requires 0 <= r <= n");
  return Rational::pow2(-2 * n + r) * weight_product(k, n, r);
}

Rational i_factor(int n, int r) {
  if (r < 0 || r > n) throw OutOfRangeError("i_factor requires 0 <= r <= n");
  if (r % 2 == 1) {
    int R = (r - 1) / 2;
    Rational v = Rational(((n + 1) / 2) % 2 == 0 ? 1 : -1) *
                 Rational::pow2(-2 * n + R + 1);
    for (int j = 1; j <= R; ++j) v *= bernoulli(static_cast<unsigned>(2 * j)).abs();
    v *= bernoulli(static_cast<unsigned>(n - R)).abs();
    for (int l = 1; l <= R; ++l)
      v *= bernoulli(static_cast<unsigned>(2 * n - 2 * r + 2 * l)).abs();
    v /= Rational(factorial(static_cast<unsigned>(R)));
    for (int m = 1; m <= R + 1; ++m) v /= Rational(n - r + m);
    return v;
  }
  int Rp = r / 2;
  int sign_exp = Rp * (1 + (n == r ? 1 : 0));
  Rational v = Rational(sign_exp % 2 == 0 ? 1 : -1) * Rational::pow2(-3 * n + 3 * Rp);
  v *= bernoulli(static_cast<unsigned>(Rp)).abs();
  for (int j = 1; j <= Rp - 1; ++j) v *= bernoulli(static_cast<unsigned>(2 * j)).abs();
  for (int l = 1; l <= Rp; ++l)
    v *= bernoulli(static_cast<unsigned>(2 * n - 2 * r + 2 * l)).abs();
  v /= Rational(factorial(static_cast<unsigned>(Rp)));
  for (int m = 1; m <= Rp; ++m) v /= Rational(n - r + m);
  return v;
}

Rational c_vector(const WeightVector& k, int r, bool force) {
  int n = static_cast<int>(k.degree());
  if (r < 0 || r > n) throw OutOfRangeError("c_vector requires 0 <= r <= n");
  if (!force && !k.in_proven_range())
    throw OutOfProvenRangeError("c_vector proven only for k_n > n+1");
  if (k.lowest() <= 0)
    throw OutOfRangeError("c_vector requires a polynomial weight (k_n > 0)");
  Rational pref = pair_product(k.weights());
  if (r == 0) return Rational::pow2(-2 * n) * Rational(weyl_dim(k)) * pref;
  Rational sum(0);
  for (const auto& [b, mult] : branching_support(k, r, k.lowest())) {
    TransitionRow row = schur_to_spherical(b, r);
    for (const auto& [m, coeff] : row.entries) {
      // Gamma_Omega(m + (r-1)/2 - n) / Gamma_Omega(m) as a product of
      // integer-gap Gamma quotients at half-integer arguments.
      Rational g(1);
      for (int j = 1; j <= r; ++j) {
        HalfInteger a(Int(2 * m.part(static_cast<std::size_t>(r - j)) - 2 * n + (j - 1)));
        HalfInteger bb(Int(2 * m.part(static_cast<std::size_t>(j - 1)) - (j - 1)));
        g *= gamma_ratio(a, bb);
      }
      sum += Rational(mult) * coeff * g;
    }
  }
  long e = -2L * n - static_cast<long>(n) * r + static_cast<long>(r) * (r + 1) / 2;
  return Rational::pow2(e) * pref * sum;
}

DimensionReport dim_scalar(int n, long k, long N, bool force) {
  check_proven_scalar(n, k, N, force);
  DimensionReport rep;
  rep.degree = n;
  rep.weights.assign(static_cast<std::size_t>(n), k);
  rep.level = N;
  rep.path = Path::t115;
  rep.proven_range = k > n + 1 && N > 2;
  for (int r = 0; r <= n; ++r) {
    Rational term = Rational(Int(N)).pow(static_cast<long>(r) * (r - 1) / 2 -
                                         static_cast<long>(r) * n);
    term *= weight_product(k, n, r);
    for (int j = 1; j <= n - r; ++j) {
      term *= Rational(factorial(static_cast<unsigned>(j - 1)),
                       factorial(static_cast<unsigned>(2 * j - 1))) *
              bernoulli(static_cast<unsigned>(2 * j)).abs() / Rational(j);
    }
    term *= i_factor(n, r);
    rep.terms.emplace_back(r, term);
  }
  return finalize(std::move(rep), force);
}

DimensionReport dim_scalar_via_c12(int n, long k, long N, bool force) {
  check_proven_scalar(n, k, N, force);
  DimensionReport rep;
  rep.degree = n;
  rep.weights.assign(static_cast<std::size_t>(n), k);
  rep.level = N;
  rep.path = Path::c12;
  rep.proven_range = k > n + 1 && N > 2;
  for (int r = 0; r <= n; ++r) {
    Rational term = shintani_special(r, n) * level_scale(r, n, N) *
                    zeta_factor(n - r) * c_scalar(k, n, r);
    rep.terms.emplace_back(r, term);
  }
  return finalize(std::move(rep), force);
}

DimensionReport dim_vector(const WeightVector& k, long N, bool force) {
  int n = static_cast<int>(k.degree());
  if (!force && !(k.in_proven_range() && N > 2))
    throw OutOfProvenRangeError("formula proven only for k_n > n+1 and N > 2");
  DimensionReport rep;
  rep.degree = n;
  rep.weights = k.weights();
  rep.level = N;
  rep.path = Path::vector;
  rep.proven_range = k.in_proven_range() && N > 2;
  for (int r = 0; r <= n; ++r) {
    Rational term = shintani_special(r, n) * level_scale(r, n, N) *
                    zeta_factor(n - r) * c_vector(k, r, force);
    rep.terms.emplace_back(r, term);
  }
  return finalize(std::move(rep), force);
}

Rational closed_form_low_degree(int n, long k, long N, bool force) {
  if (n < 1 || n > 3)
    throw OutOfRangeError("closed_form_low_degree supports n = 1, 2, 3 only");
  check_proven_scalar(n, k, N, force);
  Rational idx(index_principal(n, N));
  Rational nn{Int(N)};
  if (n == 1) {
    return idx * (Rational(2 * k - 2, 48) - Rational(1) / (Rational(4) * nn));
  }
  if (n == 2) {
    Rational brace =
        Rational(Int(2 * k - 2) * Int(2 * k - 3) * Int(2 * k - 4), Int(1) << 10) /
            Rational(27 * 5) -
        Rational(2 * k - 3) / (Rational(Int(1) << 6) * Rational(9) * nn.pow(2)) +
        Rational(1) / (Rational(Int(1) << 5) * Rational(3) * nn.pow(3));
    return idx * brace;
  }
  Rational poly = Rational(2 * k - 2) * Rational(2 * k - 3) *
                  Rational(2 * k - 4).pow(2) * Rational(2 * k - 5) *
                  Rational(2 * k - 6);
  Rational brace =
      poly / (Rational(Int(1) << 16) * Rational(Int(729)) * Rational(25 * 7)) -
      Rational(2 * k - 4) / (Rational(Int(1) << 10) * Rational(9 * 5) * nn.pow(5)) +
      Rational(1) / (Rational(Int(1) << 8) * Rational(27) * nn.pow(6));
  return idx * brace;
}

AsymptoticReport asymptotics(int n, long k, long N) {
  DimensionReport rep = dim_scalar(n, k, N);
  AsymptoticReport out;
  out.main_term = rep.terms.front().second * Rational(index_principal(n, N));
  out.remainder = rep.total - out.main_term;
  if (n % 2 == 0) {
    out.level_exponent = 2L * n * n;
    out.weight_exponent = static_cast<long>(n) * (n - 1) / 2;
  } else {
    out.level_exponent = 2L * n * n - n + 1;
    out.weight_exponent = static_cast<long>(n - 1) * (n - 2) / 2;
  }
  return out;
}

}  // namespace siegel
