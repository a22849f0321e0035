#include "siegel/shintani.hpp"

#include "siegel/errors.hpp"

namespace siegel {

Rational shintani_special(int r, int n) {
  if (n < 1 || r < 0 || r > n)
    throw OutOfRangeError("shintani_special requires 0 <= r <= n, n >= 1");
  if (r == 0) return Rational(1);
  if (r == 1) return -bernoulli(static_cast<unsigned>(n)) / Rational(2 * n);
  if (r == 2) {
    if (n == 2) return Rational(1, 96);
    // -(-1)^n B_{2n-2} / (2^{2n} (n-1))
    Rational v = bernoulli(static_cast<unsigned>(2 * n - 2));
    v = -Rational(n % 2 == 0 ? 1 : -1) * v;
    return v / (Rational::pow2(2 * n) * Rational(n - 1));
  }
  if (r % 2 == 1) {
    int R = (r - 1) / 2;
    Rational v = Rational((R + 1) % 2 == 0 ? 1 : -1) *
                 Rational::pow2(-(R * (2 * n - 2 * r + 1) + r));
    for (int j = 1; j <= R; ++j) v *= bernoulli(static_cast<unsigned>(2 * j)).abs();
    v *= bernoulli(static_cast<unsigned>(n - R));
    for (int l = 1; l <= R; ++l)
      v *= bernoulli(static_cast<unsigned>(2 * n - 2 * r + 2 * l));
    v /= Rational(factorial(static_cast<unsigned>(R)));
    for (int t = 1; t <= R + 1; ++t) v /= Rational(n - r + t);
    return v;
  }
  int Rp = r / 2;
  int sign_exp = Rp / 2 + Rp * (n - r + 1);
  Rational v = Rational(sign_exp % 2 == 0 ? 1 : -1) *
               Rational::pow2(-(r * (n - r + 1) + Rp));
  v *= bernoulli(static_cast<unsigned>(Rp)).abs();
  for (int j = 1; j <= Rp - 1; ++j) v *= bernoulli(static_cast<unsigned>(2 * j)).abs();
  for (int l = 1; l <= Rp; ++l)
    v *= bernoulli(static_cast<unsigned>(2 * n - 2 * r + 2 * l));
  v /= Rational(factorial(static_cast<unsigned>(Rp)));
  for (int t = 1; t <= Rp; ++t) v /= Rational(n - r + t);
  return v;
}

Rational level_scale(int r, int n, long N) {
  if (n < 1 || r < 0 || r > n || N < 1)
    throw OutOfRangeError("level_scale requires 0 <= r <= n and N >= 1");
  Rational v = Rational::pow2(r - r * r + r * n);
  return v * Rational(Int(N)).pow(static_cast<long>(r) * (r - 1) / 2 -
                                  static_cast<long>(r) * n);
}

}  // namespace siegel
