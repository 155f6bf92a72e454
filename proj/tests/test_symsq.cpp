#include <doctest.h>

#include <cmath>

#include "extcong/error.hpp"
#include "extcong/symsq.hpp"

using namespace extcong;

namespace {

const RationalECurve e11(Weierstrass{0, -1, 1, -10, -20}, "11a1", Integer(11));
const RationalECurve e90c(Weierstrass{1, -1, 1, 13, -61}, "90c1", Integer(90));
const RationalECurve e37(Weierstrass{0, 0, 1, -1, 0}, "37a1", Integer(37));

// λ_{p^k} = Σ_j p^j h_{k-j}(α², β²), with h_m = (x + y) h_{m-1} - x y h_{m-2}.
std::vector<Integer> prime_power_oracle(const Integer& a, const Integer& p, unsigned K) {
  const Integer s = a * a - 2 * p, q = p * p;
  std::vector<Integer> h{1, s};
  for (unsigned m = 2; m <= K; ++m) h.push_back(s * h[m - 1] - q * h[m - 2]);
  std::vector<Integer> lam(K + 1, 0);
  for (unsigned k = 0; k <= K; ++k) {
    Integer pj = 1;
    for (unsigned j = 0; j <= k; ++j) {
      lam[k] += pj * h[k - j];
      pj *= p;
    }
  }
  return lam;
}

}  // namespace

TEST_CASE("Euler factor") {
  const auto f = symsq_euler_factor(FrobeniusData::from_trace(5, 1, -3));
  CHECK(f[0] == 1);
  CHECK(-f[1] == 4);
  CHECK(f[2] == 5 * 9 - 25);
  CHECK(f[3] == -125);
  const auto ss = symsq_euler_factor(FrobeniusData::from_trace(7, 1, 0));
  CHECK(-ss[1] == -7);
  CHECK_THROWS_AS(symsq_euler_factor(FrobeniusData::from_trace(5, 2, 1)), Error);
  CHECK(symsq_prime_power_coefficients(FrobeniusData::from_trace(5, 1, -3), 1)[1] == 4);
}

TEST_CASE("prime-power coefficients match the symmetric-function oracle") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 101L}) {
    const long w = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(p))));
    for (long a = -w; a <= w; ++a) {
      const auto lam = symsq_prime_power_coefficients(FrobeniusData::from_trace(p, 1, a), 6);
      CHECK(lam == prime_power_oracle(a, p, 6));
    }
  }
}

TEST_CASE("coefficients of 11a1") {
  const auto s = symsq_coefficients(e11, 2000);
  CHECK(s.lambda(1) == 1);
  CHECK(s.bad_primes == std::vector<std::uint64_t>{11});
  CHECK(s.approximate_at_bad_primes);
  const std::vector<long> first{1, 2, -2, 0, -4, -4, -3, 0, 10, -8};
  for (std::uint64_t n = 1; n <= 10; ++n) CHECK(s.lambda(n) == first[n - 1]);
  CHECK(s.lambda(15) == s.lambda(3) * s.lambda(5));
  CHECK(s.lambda(11) == 0);
  CHECK(s.lambda(22) == 0);
  // every λ_n is the product of its prime-power parts
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    Integer prod = 1;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; m > 1; ++p) {
      if (m % p) continue;
      unsigned k = 0;
      while (m % p == 0) {
        m /= p;
        ++k;
      }
      if (p == 11) {
        prod = 0;
        continue;
      }
      prod *= symsq_prime_power_coefficients(ap(e11, p), k)[k];
    }
    CHECK(s.lambda(n) == prod);
  }
}

TEST_CASE("lambda_p = a_p^2 - p at good primes") {
  for (const auto* e : {&e11, &e90c, &e37}) {
    const auto s = symsq_coefficients(*e, 3000);
    for (std::uint64_t p : primes_up_to(3000)) {
      if (!e->has_good_reduction(p)) {
        CHECK(s.lambda(p) == 0);
        continue;
      }
      const Integer a = ap(*e, p).trace;
      CHECK(s.lambda(p) == a * a - Integer(static_cast<unsigned long>(p)));
    }
  }
}

TEST_CASE("partial sums") {
  SymSqSeries zero;
  zero.n_max = 1000;
  zero.terms.assign(1000, 0);
  CHECK(symsq_partial_sum(zero).value == 0.0);
  CHECK_THROWS_AS(symsq_lvalue(e11, 999), Error);
  const auto v1 = symsq_lvalue(e11, 10000);
  const auto v2 = symsq_lvalue(e11, 20000);
  CHECK(v1.envelope_horizon == 100000);
  CHECK(std::abs(v1.value - v2.value) < v1.envelope);
  CHECK(v1.envelope == doctest::Approx(divisor_tail(10000, 100000)));
  CHECK(v1.approximate_at_bad_primes);
}

TEST_CASE("divisor tail") {
  CHECK(divisor_tail(0, 1) == 1.0);
  CHECK(divisor_tail(1, 4) == doctest::Approx(2.0 / 2 + 2.0 / 3 + 3.0 / 4));
  CHECK(divisor_tail(5, 5) == 0.0);
}
