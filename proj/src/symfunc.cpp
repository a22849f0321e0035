#include "siegel/symfunc.hpp"

#include <algorithm>
#include <mutex>

#include "siegel/errors.hpp"

namespace siegel {

Rational SymmetricPolynomial::coeff(const Partition& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymmetricPolynomial::add(const Partition& p, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Rational SymmetricPolynomial::evaluate_at_ones() const {
  Rational out(0);
  for (const auto& [p, c] : coeffs_) out += c * Rational(monomial_orbit_size(p, num_vars_));
  return out;
}

Int monomial_orbit_size(const Partition& mu, int r) {
  Int out = factorial(static_cast<unsigned>(r));
  long run = 1;
  long zeros = r - static_cast<long>(mu.length());
  const auto& parts = mu.parts();
  for (std::size_t i = 1; i <= parts.size(); ++i) {
    if (i < parts.size() && parts[i] == parts[i - 1]) {
      ++run;
    } else {
      out /= factorial(static_cast<unsigned>(run));
      run = 1;
    }
  }
  out /= factorial(static_cast<unsigned>(zeros));
  return out;
}

namespace {

std::mutex kostka_mutex;
std::map<std::pair<Partition, Partition>, Int> kostka_memo;

// nu <= shape with shape/nu a horizontal strip of size s.
void horizontal_strips(const std::vector<long>& shape, long s, std::size_t i,
                       long rem, std::vector<long>& acc,
                       std::vector<Partition>& out) {
  if (i == shape.size()) {
    if (rem == 0) out.push_back(Partition(acc));
    return;
  }
  long lo = i + 1 < shape.size() ? shape[i + 1] : 0;
  long hi = shape[i];
  long prev = i > 0 ? acc[i - 1] : hi;
  hi = std::min(hi, prev);
  for (long v = std::max(lo, shape[i] - rem); v <= hi; ++v) {
    acc.push_back(v);
    horizontal_strips(shape, s, i + 1, rem - (shape[i] - v), acc, out);
    acc.pop_back();
  }
}

Int kostka_impl(const Partition& shape, const Partition& content) {
  if (content.empty()) return shape.empty() ? 1 : 0;
  if (shape.weight() != content.weight()) return 0;
  auto key = std::make_pair(shape, content);
  {
    std::lock_guard<std::mutex> lock(kostka_mutex);
    auto it = kostka_memo.find(key);
    if (it != kostka_memo.end()) return it->second;
  }
  // Peel the last content entry as a horizontal strip.
  std::vector<long> rest(content.parts().begin(), content.parts().end() - 1);
  long s = content.parts().back();
  Partition content_rest(rest);
  std::vector<Partition> strips;
  std::vector<long> acc;
  horizontal_strips(shape.parts(), s, 0, s, acc, strips);
  Int total = 0;
  for (const auto& nu : strips) total += kostka_impl(nu, content_rest);
  std::lock_guard<std::mutex> lock(kostka_mutex);
  kostka_memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Int kostka(const Partition& shape, const Partition& content) {
  return kostka_impl(shape, content);
}

SymmetricPolynomial schur(const Partition& b, int r) {
  if (b.length() > static_cast<std::size_t>(r))
    throw TooManyRowsError("schur: partition has more than r rows");
  SymmetricPolynomial out(r);
  for (const auto& m : partitions_of(b.weight(), static_cast<std::size_t>(r))) {
    Int k = kostka(b, m);
    if (k != 0) out.add(m, Rational(k));
  }
  return out;
}

namespace {

// Eigenvalue of the alpha=2 Laplace-Beltrami operator:
// rho(p) = sum_i p_i (p_i - i).
long rho2(const Partition& p) {
  long out = 0;
  for (std::size_t i = 0; i < p.length(); ++i)
    out += p.parts()[i] * (p.parts()[i] - static_cast<long>(i) - 1);
  return out;
}

std::mutex jack_mutex;
std::map<std::pair<Partition, int>, CoeffMap> jack_memo;

// Monomial coefficients of the Jack alpha=2 polynomial P_kappa, keys
// restricted to at most r parts.  Dominance-triangular with c_{kappa,kappa}=1;
// coefficients below kappa come from the eigenfunction recurrence
//   c_mu = [sum over box moves mu -> nu of (mu_i - mu_j + 2t) c_nu]
//          / (rho(kappa) - rho(mu)).
// Moving a box up never increases length, so the truncation to r parts is
// closed under the recurrence.
CoeffMap jack_coeffs(const Partition& kappa, int r) {
  auto key = std::make_pair(kappa, r);
  {
    std::lock_guard<std::mutex> lock(jack_mutex);
    auto it = jack_memo.find(key);
    if (it != jack_memo.end()) return it->second;
  }
  CoeffMap c;
  c.emplace(kappa, Rational(1));
  auto all = partitions_of(kappa.weight(), static_cast<std::size_t>(r));
  // Lexicographically decreasing order is a linear extension of dominance.
  std::sort(all.begin(), all.end(), LexGreater{});
  long rk = rho2(kappa);
  for (const auto& mu : all) {
    if (mu == kappa || !dominates(kappa, mu)) continue;
    Rational tot(0);
    const auto& mp = mu.parts();
    std::size_t len = mp.size();
    std::vector<long> nu(mp.begin(), mp.end());
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 1; j < len; ++j) {
        for (long t = 1; t <= mp[j]; ++t) {
          nu.assign(mp.begin(), mp.end());
          nu[i] += t;
          nu[j] -= t;
          std::sort(nu.begin(), nu.end(), std::greater<long>());
          Partition cand(nu);
          if (cand == mu) continue;
          auto it = c.find(cand);
          if (it == c.end()) continue;  // not dominated by kappa (or zero)
          tot += Rational(mp[i] - mp[j] + 2 * t) * it->second;
        }
      }
    }
    if (!tot.is_zero()) c.emplace(mu, tot / Rational(rk - rho2(mu)));
  }
  std::lock_guard<std::mutex> lock(jack_mutex);
  jack_memo.emplace(std::move(key), c);
  return c;
}

}  // namespace

SymmetricPolynomial spherical(const Partition& m, int r) {
  if (m.length() > static_cast<std::size_t>(r))
    throw TooManyRowsError("spherical: partition has more than r rows");
  SymmetricPolynomial p(r);
  for (const auto& [mu, coeff] : jack_coeffs(m, r)) p.add(mu, coeff);
  Rational at_ones = p.evaluate_at_ones();
  SymmetricPolynomial out(r);
  for (const auto& [mu, coeff] : p.coeffs()) out.add(mu, coeff / at_ones);
  return out;
}

Int c_factor(const Partition& m, int r) {
  if (m.length() > static_cast<std::size_t>(r))
    throw TooManyRowsError("c_factor: partition has more than r rows");
  Int out = 1;
  for (std::size_t i = 0; i < m.length(); ++i)
    for (long j = 1; j <= m.parts()[i]; ++j)
      out *= Int(r) - Int(i + 1) + 2 * Int(j) - 1;
  return out;
}

TransitionRow schur_to_spherical(const Partition& b, int r) {
  SymmetricPolynomial residual = schur(b, r);
  TransitionRow row{b, r, {}};
  for (const auto& m : partitions_of(b.weight(), static_cast<std::size_t>(r))) {
    Rational c = residual.coeff(m);
    if (c.is_zero()) continue;
    SymmetricPolynomial sph = spherical(m, r);
    Rational lead = sph.coeff(m);
    if (lead.is_zero())
      throw SingularEliminationError("vanishing leading spherical coefficient");
    Rational n = c / lead;
    row.entries.emplace(m, n);
    for (const auto& [mu, v] : sph.coeffs()) residual.add(mu, -(n * v));
  }
  if (!residual.coeffs().empty())
    throw SingularEliminationError("nonzero residual after elimination");
  return row;
}

}  // namespace siegel
