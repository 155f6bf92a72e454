#include <doctest.h>

#include <random>

#include "extcong/congruence.hpp"
#include "extcong/error.hpp"
#include "extcong/qseries.hpp"

using namespace extcong;

namespace {

QSeries monomials(std::size_t B, std::initializer_list<std::pair<std::size_t, long>> terms,
                  std::optional<Integer> m = std::nullopt) {
  std::vector<Integer> c(B, 0);
  for (auto [n, a] : terms) c[n - 1] = a;
  return QSeries(c, m);
}

QSeries random_series(std::mt19937& rng, std::size_t B) {
  std::uniform_int_distribution<long> d(-20, 20);
  std::vector<Integer> c(B);
  for (auto& x : c) x = d(rng);
  return QSeries(c);
}

}  // namespace

TEST_CASE("theta examples") {
  CHECK(theta(monomials(8, {{1, 1}})) == monomials(8, {{1, 1}}));
  CHECK(theta(monomials(8, {{6, 5}})).coeff(6) == 30);
  const auto s = theta(monomials(8, {{3, 1}, {6, 2}}, Integer(3)));
  CHECK(s.is_zero());
  CHECK(s.modulus() == Integer(3));
}

TEST_CASE("modulus keeps coefficients canonical") {
  const QSeries s({-1, 7, -9}, Integer(4));
  CHECK(s.coeff(1) == 3);
  CHECK(s.coeff(2) == 3);
  CHECK(s.coeff(3) == 3);
  CHECK(QSeries({5, -5}).reduced(3) == QSeries({2, 1}, Integer(3)));
  CHECK_THROWS_AS(QSeries({}), Error);
  CHECK_THROWS_AS(s.coeff(4), Error);
  CHECK_THROWS_AS(s.coeff(0), Error);
}

TEST_CASE("restrict_support examples") {
  std::mt19937 rng(1);
  const auto s = random_series(rng, 30);
  CHECK(restrict_support(s, 1) == s);
  CHECK(restrict_support(monomials(3, {{1, 1}, {2, 1}, {3, 1}}), 6) == monomials(3, {{1, 1}}));
  CHECK(restrict_support(restrict_support(s, 30), 30) == restrict_support(s, 30));
}

TEST_CASE("kernel mod l examples") {
  CHECK(theta_kernel_mod(QSeries::zero(10), 3).in_kernel);
  CHECK(theta_kernel_mod(monomials(12, {{5, 1}, {10, 1}}), 5).in_kernel);
  const auto k = theta_kernel_mod(monomials(6, {{2, 1}}), 3);
  CHECK(!k.in_kernel);
  CHECK(k.witness == std::size_t{2});
  CHECK_THROWS_AS(theta_kernel_mod(QSeries::zero(4), 2), Error);
  CHECK_THROWS_AS(theta_kernel_mod(QSeries::zero(4), 9), Error);
}

TEST_CASE("congruence ladder examples") {
  std::mt19937 rng(2);
  const auto f = random_series(rng, 20);
  const auto same = congruence_lift_check(f, f, 3, 4);
  CHECK(same.achieved == 4);
  CHECK(same.ladder.size() == 4);
  const auto g = f - monomials(20, {{1, 3}});
  const auto r = congruence_lift_check(f, g, 3, 2);
  CHECK(r.achieved == 1);
  REQUIRE(r.ladder.size() == 2);
  CHECK(r.ladder[0].holds);
  CHECK(!r.ladder[1].holds);
  CHECK(r.ladder[1].witness == std::size_t{1});
  try {
    congruence_lift_check(f, random_series(rng, 19), 3, 1);
    FAIL("precision mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrecisionMismatch);
  }
}

TEST_CASE("90a1 against 90c1 as series climbs one step mod 3") {
  const std::vector<std::uint64_t> bad{2, 3, 5};
  const auto fa = QSeries::from_table(
      coefficient_table(RationalECurve(Weierstrass{1, -1, 0, 6, 0}), 1000, bad), 1000);
  const auto fc = QSeries::from_table(
      coefficient_table(RationalECurve(Weierstrass{1, -1, 1, 13, -61}), 1000, bad), 1000);
  const auto r = congruence_lift_check(restrict_support(fa, 30), restrict_support(fc, 30), 3, 1);
  CHECK(r.achieved == 1);
  CHECK(congruence_lift_check(restrict_support(fa, 30), restrict_support(fc, 30), 3, 3).achieved ==
        1);
  CHECK(theta_kernel_mod(restrict_support(fa - fc, 30), 3).in_kernel);
}

TEST_CASE("theta properties on random series") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t B = 1 + rng() % 40;
    const auto s = random_series(rng, B), t = random_series(rng, B);
    CHECK(theta(s + t) == theta(s) + theta(t));
    const auto lhs = theta(s * t);
    const auto rhs = s * theta(t) + theta(s) * t;
    CHECK(lhs == rhs);
    const Integer M = 1 + rng() % 60;
    CHECK(theta(restrict_support(s, M)) == restrict_support(theta(s), M));
    for (long ell : {3L, 5L, 7L}) {
      const bool zero = restrict_support(s, ell).reduced(ell).is_zero();
      CHECK(theta_kernel_mod(s, ell).in_kernel == zero);
    }
  }
}
