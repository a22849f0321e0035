// End-to-end acceptance suite.  Prints one PASS/FAIL line per criterion
// and exits nonzero if any criterion fails.
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "siegel/dimension.hpp"
#include "siegel/errors.hpp"
#include "siegel/shintani.hpp"
#include "siegel/symfunc.hpp"
#include "siegel/tables.hpp"

using namespace siegel;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << " (" << name
            << ")";
  if (!ok && !detail.empty()) std::cout << ": " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

const std::vector<long> kLevels = {3, 4, 5, 7, 9, 12};

void criterion_1_tables() {
  bool ok = true;
  std::string detail;
  long cells = 0;
  for (const TableSpec& table : reference_tables()) {
    for (const CellResult& cell : verify_table(table, "all")) {
      ++cells;
      if (!cell.ok) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += cell.table_id + " k=" + std::to_string(cell.k) + " N=" +
                  std::to_string(cell.level) + " path=" + path_name(cell.path) +
                  " expected " + cell.expected.str() + " computed " +
                  cell.computed.str();
      }
    }
  }
  report(1, "table reproduction, " + std::to_string(cells) + " cell evaluations", ok,
         detail);
}

void criterion_2_path_agreement() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 6 && ok; ++n)
    for (long k = n + 2; k <= n + 8 && ok; ++k)
      for (long N : kLevels) {
        Rational a = dim_scalar(n, k, N).total;
        Rational b = dim_scalar_via_c12(n, k, N).total;
        bool here = a == b;
        if (here && n <= 3) here = a == closed_form_low_degree(n, k, N);
        if (!here) {
          ok = false;
          detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " N=" + std::to_string(N);
          break;
        }
      }
  report(2, "path agreement", ok, detail);
}

void criterion_3_vector_scalar() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 4 && ok; ++n)
    for (long k = n + 2; k <= n + 8 && ok; ++k) {
      WeightVector w(std::vector<long>(static_cast<std::size_t>(n), k));
      for (int r = 0; r <= n; ++r) {
        if (c_vector(w, r) != c_scalar(k, n, r)) {
          ok = false;
          detail = "c factors differ at n=" + std::to_string(n) +
                   " k=" + std::to_string(k) + " r=" + std::to_string(r);
          break;
        }
      }
      if (!ok) break;
      for (long N : kLevels) {
        if (dim_vector(w, N).total != dim_scalar(n, k, N).total) {
          ok = false;
          detail = "totals differ at n=" + std::to_string(n) +
                   " k=" + std::to_string(k) + " N=" + std::to_string(N);
          break;
        }
      }
    }
  report(3, "vector/scalar consistency", ok, detail);
}

void criterion_4_integrality() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 6 && ok; ++n)
    for (long k = n + 2; k <= n + 8 && ok; ++k)
      for (long N : kLevels) {
        Rational t = dim_scalar(n, k, N).total;
        if (!t.is_integer() || t.sign() < 0) {
          ok = false;
          detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " N=" + std::to_string(N) + " total " + t.str();
          break;
        }
      }
  report(4, "integrality and nonnegativity", ok, detail);
}

void criterion_5_special_values() {
  bool ok = shintani_special(2, 2) == Rational(1, 96);
  for (int n = 3; n <= 15 && ok; n += 2) ok = shintani_special(1, n) == Rational(0);
  for (unsigned m = 0; m <= 200 && ok; ++m) {
    Rational s(0);
    for (unsigned j = 0; j <= m; ++j)
      s += Rational(binomial(m + 1, j)) * bernoulli(j);
    ok = s == Rational(Int(m + 1));
  }
  for (unsigned m = 2; m <= 200 && ok; m += 2) {
    Int d = 1;
    for (unsigned p = 2; p <= m + 1; ++p) {
      bool prime = true;
      for (unsigned q = 2; q * q <= p; ++q)
        if (p % q == 0) prime = false;
      if (prime && m % (p - 1) == 0) d *= p;
    }
    ok = bernoulli(m).den() == d;
  }
  report(5, "Bernoulli and Shintani spot values", ok, "");
}

void criterion_6_symfunc() {
  bool ok = true;
  std::string detail;
  for (int r = 1; r <= 4 && ok; ++r)
    for (long w = 0; w <= 8 && ok; ++w)
      for (const Partition& p : partitions_of(w, static_cast<std::size_t>(r))) {
        SymmetricPolynomial sph = spherical(p, r);
        bool here = sph.evaluate_at_ones() == Rational(1);
        Rational scale(c_factor(p, r));
        for (const auto& [mu, c] : sph.coeffs()) here = here && (scale * c).sign() >= 0;
        here = here && oracles::to_dense(schur(p, r)) == oracles::jacobi_trudi(p, r);
        Rational total(0);
        for (const auto& [m, c] : schur_to_spherical(p, r).entries) total += c;
        here = here && total == Rational(weyl_dim(p, static_cast<std::size_t>(r)));
        if (!here) {
          ok = false;
          detail = "r=" + std::to_string(r) + " partition " + p.str();
          break;
        }
      }
  report(6, "symmetric-function kernel", ok, detail);
}

void criterion_7_branching() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 5 && ok; ++n)
    for (long w = 0; w <= 12 && ok; ++w)
      for (const Partition& kp : partitions_of(w, static_cast<std::size_t>(n))) {
        std::vector<long> kv(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < kp.length(); ++i) kv[i] = kp.parts()[i];
        WeightVector k(kv);
        for (int r = 1; r <= n; ++r) {
          Int total = 0;
          bool here = true;
          for (const auto& [b, mult] : branching_support(k, r, 0)) {
            here = here && mult == oracles::gt_oracle(k, b, r);
            total += mult * weyl_dim(b, static_cast<std::size_t>(r));
          }
          here = here && total == weyl_dim(k);
          if (!here) {
            ok = false;
            detail = "k=" + kp.str() + " r=" + std::to_string(r);
            break;
          }
        }
        if (!ok) break;
      }
  report(7, "branching vs Gelfand-Tsetlin oracle", ok, detail);
}

void criterion_8_asymptotics() {
  bool ok = true;
  std::string detail;
  for (long N = 3; N <= 12; ++N) {
    AsymptoticReport rep = asymptotics(2, 10, N);
    // |remainder| / N^{2n^2} must stay below 1/10 on this range.
    Rational scaled = rep.remainder.abs() / Rational(Int(N)).pow(rep.level_exponent);
    if (scaled > Rational(1, 10)) {
      ok = false;
      detail = "scaled remainder " + scaled.str() + " at N=" + std::to_string(N);
    }
  }
  AsymptoticReport at12 = asymptotics(2, 10, 12);
  Rational total = at12.main_term + at12.remainder;
  if (Rational(100) * at12.remainder.abs() > total) {
    ok = false;
    detail = "main term below 99% of total at N=12";
  }
  report(8, "asymptotics sanity", ok, detail);
}

}  // namespace

int main() {
  criterion_1_tables();
  criterion_2_path_agreement();
  criterion_3_vector_scalar();
  criterion_4_integrality();
  criterion_5_special_values();
  criterion_6_symfunc();
  criterion_7_branching();
  criterion_8_asymptotics();
  if (failures == 0) {
    std::cout << "all criteria passed\n";
  } else {
    std::cout << failures << " criteria failed\n";
  }
  return failures == 0 ? 0 : 1;
}
