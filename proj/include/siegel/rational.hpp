#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <utility>

#include "siegel/errors.hpp"

namespace siegel {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction in canonical lowest terms.
/// Invariants: gcd(|num|, den) = 1 and den >= 1.  All arithmetic is exact.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(Int v) : num_(std::move(v)), den_(1) {}
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw PoleOrZeroError("division by zero rational");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// Integer power, negative exponents allowed.
  Rational pow(long e) const;

  /// "p/q", or just "p" when the value is an integer.
  std::string str() const;

  double approx() const;

  /// 2^e as an exact rational, e may be negative.
  static Rational pow2(long e);

 private:
  struct raw_tag {};
  Rational(Int num, Int den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

  void canonicalize();

  Int num_;
  Int den_;  // always >= 1
};

Int factorial(unsigned m);
Int binomial(unsigned n, unsigned k);

/// B_m with the generating function t e^t/(e^t - 1), so B_1 = +1/2 and
/// B_m = 0 for odd m >= 3.  Memoized; safe for concurrent use.
Rational bernoulli(unsigned m);

/// zeta(1 - 2j) = -B_{2j}/(2j), exact.
Rational zeta_negative_odd(unsigned j);

/// Exactly the set Z u (Z + 1/2), stored as twice the value.
struct HalfInteger {
  Int twice;

  HalfInteger() : twice(0) {}
  explicit HalfInteger(Int twice_value) : twice(std::move(twice_value)) {}

  static HalfInteger whole(const Int& v) { return HalfInteger(2 * v); }
  static HalfInteger halves(const Int& t) { return HalfInteger(t); }

  bool is_integer() const { return twice % 2 == 0; }
  Rational value() const { return Rational(twice, 2); }

  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

/// Gamma(a)/Gamma(b) for a - b in Z, via the telescoped product
/// prod_{t=0}^{a-b-1}(b+t) (or its reciprocal when a < b).  Never
/// evaluates Gamma itself, so the result is an exact rational.
/// Throws PoleOrZeroError if any factor of the defining product is 0.
Rational gamma_ratio(const HalfInteger& a, const HalfInteger& b);

}  // namespace siegel
