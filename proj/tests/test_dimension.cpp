#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/dimension.hpp"
#include "siegel/errors.hpp"
#include "siegel/tables.hpp"

using namespace siegel;

TEST_CASE("index of the principal congruence subgroup") {
  for (int n = 1; n <= 6; ++n) CHECK(index_principal(n, 1) == 1);
  CHECK(index_principal(1, 3) == 24);
  CHECK(index_principal(2, 4) == 737280);
  CHECK(index_principal(1, 2) == 6);
  // multiplicative in coprime levels
  CHECK(index_principal(2, 12) == index_principal(2, 4) * index_principal(2, 3));
  CHECK(index_principal(3, 15) == index_principal(3, 3) * index_principal(3, 5));
  CHECK_THROWS_AS(index_principal(0, 3), OutOfRangeError);
}

TEST_CASE("scalar archimedean factor") {
  for (int n = 1; n <= 5; ++n)
    CHECK(c_scalar(9, n, n) == Rational::pow2(-n));
  CHECK(c_scalar(4, 1, 0) == Rational(6, 4));
  CHECK(c_scalar(4, 2, 1) == Rational(5, 8));
  CHECK_THROWS_AS(c_scalar(4, 2, 3), OutOfRangeError);
}

TEST_CASE("i_factor") {
  for (int n = 1; n <= 6; ++n) CHECK(i_factor(n, 0) == Rational::pow2(-3 * n));
  CHECK(i_factor(1, 1) == Rational(-1, 4));
  for (int n = 1; n <= 10; ++n)
    for (int r = 1; r <= n; r += 2) {
      int R = (r - 1) / 2;
      if ((n - R) % 2 == 1 && n - R > 1) CHECK(i_factor(n, r) == Rational(0));
    }
  CHECK_THROWS_AS(i_factor(2, -1), OutOfRangeError);
}

TEST_CASE("scalar dimensions") {
  CHECK(dim_scalar(1, 4, 3).total == Rational(1));
  CHECK(dim_scalar(3, 5, 3).total == Rational(41132));
  CHECK(dim_scalar_via_c12(2, 4, 3).total == Rational(15));
  CHECK(dim_scalar_via_c12(4, 6, 4).total == Rational(Int("103260267479040")));
  CHECK(dim_scalar_via_c12(5, 7, 5).total ==
        Rational(Int("95447256764961220187148437500")));

  DimensionReport rep = dim_scalar(2, 4, 3);
  CHECK(rep.terms.size() == 3);
  Rational s(0);
  for (const auto& [r, v] : rep.terms) s += v;
  CHECK(Rational(index_principal(2, 3)) * s == rep.total);
  CHECK(rep.proven_range);
}

TEST_CASE("range gate") {
  CHECK_THROWS_AS(dim_scalar(1, 2, 3), OutOfProvenRangeError);
  CHECK_THROWS_AS(dim_scalar(2, 5, 2), OutOfProvenRangeError);
  CHECK_THROWS_AS(dim_vector(WeightVector({4, 4, 4}), 3), OutOfProvenRangeError);
  DimensionReport forced = dim_scalar(1, 2, 3, true);
  CHECK(!forced.proven_range);
}

TEST_CASE("vector dimensions") {
  CHECK(dim_vector(WeightVector({6, 5, 5}), 3).total == Rational(210210));
  CHECK(dim_vector(WeightVector({9, 8, 8}), 5).total ==
        Rational(Int("630209284250")));
}

TEST_CASE("closed forms for low degree") {
  CHECK(closed_form_low_degree(1, 5, 4) == Rational(5));
  CHECK(closed_form_low_degree(2, 6, 5) == Rational(43680));
  CHECK(closed_form_low_degree(3, 8, 4) == Rational(1048957952));
  CHECK_THROWS_AS(closed_form_low_degree(4, 8, 3), OutOfRangeError);
}

TEST_CASE("path agreement on a small grid") {
  for (int n = 1; n <= 3; ++n)
    for (long k = n + 2; k <= n + 5; ++k)
      for (long N : {3L, 4L, 5L}) {
        Rational a = dim_scalar(n, k, N).total;
        CHECK(a == dim_scalar_via_c12(n, k, N).total);
        CHECK(a == closed_form_low_degree(n, k, N));
        CHECK(a == dim_vector(WeightVector(std::vector<long>(
                                  static_cast<std::size_t>(n), k)),
                              N)
                       .total);
      }
}

TEST_CASE("vector factor specializes to the scalar one") {
  for (int n = 1; n <= 4; ++n)
    for (long k = n + 2; k <= n + 4; ++k) {
      WeightVector w(std::vector<long>(static_cast<std::size_t>(n), k));
      for (int r = 0; r <= n; ++r)
        CHECK(c_vector(w, r) == c_scalar(k, n, r));
      CHECK(c_vector(w, n) == Rational::pow2(-n) * Rational(weyl_dim(w)));
    }
  WeightVector w({7, 6, 5});
  CHECK(c_vector(w, 3) == Rational::pow2(-3) * Rational(weyl_dim(w)));
}

TEST_CASE("asymptotics") {
  AsymptoticReport rep = asymptotics(3, 6, 5);
  CHECK(rep.level_exponent == 16);
  CHECK(rep.weight_exponent == 1);
  CHECK(rep.main_term + rep.remainder == dim_scalar(3, 6, 5).total);
  AsymptoticReport even = asymptotics(2, 10, 3);
  CHECK(even.level_exponent == 8);
  CHECK(even.weight_exponent == 1);
}

TEST_CASE("table data shape") {
  const auto& tabs = reference_tables();
  REQUIRE(tabs.size() == 7);
  std::size_t cells = 0;
  for (const auto& t : tabs) {
    CHECK(t.levels.size() == t.expected.size());
    for (const auto& row : t.expected) CHECK(row.size() == t.k_values.size());
    cells += t.levels.size() * t.k_values.size();
  }
  CHECK(cells == 51 + 24 + 12 + 9 + 6 + 3 + 12);
}

TEST_CASE("verify_table on the first table") {
  const TableSpec& n1 = reference_tables().front();
  auto cells = verify_table(n1, "closed");
  CHECK(cells.size() == 51);
  for (const auto& c : cells) CHECK(c.ok);
}
