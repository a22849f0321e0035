#include "siegel/rational.hpp"

#include <mutex>
#include <sstream>
#include <vector>

namespace siegel {

void Rational::canonicalize() {
  if (den_ == 0) throw PoleOrZeroError("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::pow(long e) const {
  Rational base = *this;
  if (e < 0) {
    base = Rational(1) / base;
    e = -e;
  }
  Rational out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Rational Rational::pow2(long e) {
  return Rational(2).pow(e);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << "/" << den_;
  return os.str();
}

double Rational::approx() const {
  using boost::multiprecision::cpp_rational;
  return static_cast<double>(cpp_rational(num_, den_));
}

Int factorial(unsigned m) {
  Int out = 1;
  for (unsigned i = 2; i <= m; ++i) out *= i;
  return out;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

namespace {
std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_memo = {Rational(1)};
}  // namespace

Rational bernoulli(unsigned m) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  // Defining recurrence: sum_{j=0}^{m} C(m+1,j) B_j = m+1.
  while (bernoulli_memo.size() <= m) {
    unsigned t = static_cast<unsigned>(bernoulli_memo.size());
    Rational sum(0);
    for (unsigned j = 0; j < t; ++j)
      sum += Rational(binomial(t + 1, j)) * bernoulli_memo[j];
    bernoulli_memo.push_back((Rational(Int(t + 1)) - sum) /
                             Rational(binomial(t + 1, t)));
  }
  return bernoulli_memo[m];
}

Rational zeta_negative_odd(unsigned j) {
  if (j < 1) throw OutOfRangeError("zeta_negative_odd requires j >= 1");
  return -bernoulli(2 * j) / Rational(Int(2 * j));
}

Rational gamma_ratio(const HalfInteger& a, const HalfInteger& b) {
  Int diff2 = a.twice - b.twice;
  if (diff2 % 2 != 0)
    throw OutOfRangeError("gamma_ratio requires a - b to be an integer");
  bool invert = diff2 < 0;
  const HalfInteger& lo = invert ? a : b;
  Int steps = boost::multiprecision::abs(diff2) / 2;
  Rational prod(1);
  Int t2 = lo.twice;
  for (Int t = 0; t < steps; ++t, t2 += 2) {
    if (t2 == 0)
      throw PoleOrZeroError("gamma_ratio: zero factor in telescoped product");
    prod *= Rational(t2, 2);
  }
  return invert ? Rational(1) / prod : prod;
}

}  // namespace siegel
