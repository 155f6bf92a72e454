#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "extcong/error.hpp"
#include "extcong/milne.hpp"

using namespace extcong;

namespace {

WeilPolynomial ec_poly(long a, long q) { return WeilPolynomial({1, -a, q}, q); }

using cd = std::complex<long double>;

std::vector<cd> quadratic_roots(long a, long q) {
  const cd disc = std::sqrt(cd(static_cast<long double>(a * a - 4 * q), 0));
  return {(cd(a) + disc) / 2.0L, (cd(a) - disc) / 2.0L};
}

// q^{dA dB} ∏_{a_i ≠ b_j} |1 - a_i/b_j| in floating point.
long double float_order(const std::vector<cd>& ra, const std::vector<cd>& rb, long q) {
  long double v = std::pow(static_cast<long double>(q), (ra.size() / 2) * (rb.size() / 2));
  for (const auto& x : ra)
    for (const auto& y : rb) {
      if (std::abs(x - y) < 1e-9L) continue;
      v *= std::abs(1.0L - x / y);
    }
  return v;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("order formula examples") {
  const auto r = ext_order_ff(ec_poly(-3, 5), ec_poly(-2, 5));
  CHECK(r.value == 1);
  CHECK(r.sign_ambiguous);
  CHECK(r.excluded_pairs == 0);
  const auto same = ext_order_ff(ec_poly(-3, 5), ec_poly(-3, 5));
  CHECK(same.value == 11);
  CHECK(same.excluded_pairs == 2);
  CHECK(ext_order_ff(ec_poly(-3, 5), ec_poly(-3, 5), 2).value == Rational(11, 2));
}

TEST_CASE("Weil polynomial validation") {
  CHECK(code_of([] { WeilPolynomial({1, 3, 2}, 2); }) == ErrorCode::InvalidWeilPolynomial);
  CHECK_NOTHROW(WeilPolynomial({1, 2, 2}, 2));  // 2^2 <= 4*2
  CHECK(code_of([] { WeilPolynomial({1, 0, 6}, 6); }) == ErrorCode::InvalidWeilPolynomial);
  CHECK(code_of([] { WeilPolynomial({2, 0, 5}, 5); }) == ErrorCode::InvalidWeilPolynomial);
  CHECK(code_of([] { WeilPolynomial({1, 1, 1, 5}, 5); }) == ErrorCode::InvalidWeilPolynomial);
  CHECK(code_of([] { WeilPolynomial({1, 1, 7}, 5); }) == ErrorCode::InvalidWeilPolynomial);
  CHECK_NOTHROW(WeilPolynomial({1, 0, 0, 0, 25}, 5));
  CHECK_NOTHROW(WeilPolynomial({1, 0, 9}, 9));
}

TEST_CASE("mismatched fields and repeated roots") {
  CHECK(code_of([] { ext_order_ff(ec_poly(1, 5), ec_poly(1, 7)); }) ==
        ErrorCode::MismatchedField);
  // (T^2 + T + 2)^2 over F_2
  const WeilPolynomial sq({1, 2, 5, 4, 4}, 2);
  CHECK(code_of([&] { ext_order_ff(sq, ec_poly(1, 2)); }) == ErrorCode::RepeatedRoot);
  const auto a = FrobeniusData::from_trace(5, 1, 1);
  const auto b = FrobeniusData::from_trace(7, 1, 1);
  CHECK(code_of([&] { ext_order_nonisogenous_ec(a, b); }) == ErrorCode::MismatchedField);
  CHECK(code_of([&] { sha_exponent_bound(a, base_change(a, 2)); }) ==
        ErrorCode::MismatchedField);
}

TEST_CASE("elliptic specialization") {
  const auto a = FrobeniusData::from_trace(5, 1, -3);  // count 9
  const auto b = FrobeniusData::from_trace(5, 1, -2);  // count 8
  CHECK(ext_order_nonisogenous_ec(a, b) == 1);
  CHECK(sha_exponent_bound(a, b) == 1);
  CHECK(ext_order_nonisogenous_ec(a, a) == 0);
  CHECK(sha_exponent_bound(a, a) == 0);
  CHECK(ext_order_ff(WeilPolynomial::from_frobenius(a), WeilPolynomial::from_frobenius(b)).value ==
        Rational(ext_order_nonisogenous_ec(a, b)));
}

TEST_CASE("resultant identity, exhaustive for small p") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
    const long w = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(p))));
    for (long s = -w; s <= w; ++s)
      for (long t = -w; t <= w; ++t) {
        if (s == t) continue;
        const auto r = ext_order_ff(ec_poly(s, p), ec_poly(t, p));
        CHECK(r.value == Rational((s - t) * (s - t)));
        const auto e = sha_exponent_bound(FrobeniusData::from_trace(p, 1, s),
                                          FrobeniusData::from_trace(p, 1, t));
        CHECK(e * e == ext_order_nonisogenous_ec(FrobeniusData::from_trace(p, 1, s),
                                                 FrobeniusData::from_trace(p, 1, t)));
      }
  }
}

TEST_CASE("agreement with floating-point eigenvalues in dimension two") {
  std::mt19937 rng(3);
  const std::vector<long> primes{5, 7, 11, 13};
  for (int trial = 0; trial < 60; ++trial) {
    const long q = primes[rng() % primes.size()];
    const long w = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(q))));
    std::uniform_int_distribution<long> tr(-w, w);
    const long a1 = tr(rng), a2 = tr(rng), b = tr(rng);
    if (a1 == a2) continue;
    // abelian surface with Frobenius polynomial (T^2 - a1 T + q)(T^2 - a2 T + q)
    const auto fa = Polynomial::from_descending({1, -a1, q}) * Polynomial::from_descending({1, -a2, q});
    std::vector<Integer> desc;
    for (int k = fa.degree(); k >= 0; --k) desc.push_back(fa.coeff(k).get_num());
    const WeilPolynomial A(desc, q);
    auto ra = quadratic_roots(a1, q);
    for (const auto& z : quadratic_roots(a2, q)) ra.push_back(z);
    const auto rb = quadratic_roots(b, q);
    const auto r = ext_order_ff(A, ec_poly(b, q));
    const long double expected = float_order(ra, rb, q);
    CHECK(std::abs(r.value.get_d() - static_cast<double>(expected)) < 1e-6 * (1 + expected));
    CHECK((r.excluded_pairs == 0) == (b != a1 && b != a2));
  }
}

TEST_CASE("symmetric product is a rational square") {
  for (long s = -4; s <= 4; ++s)
    for (long t = -4; t <= 4; ++t) {
      const auto x = ext_order_ff(ec_poly(s, 5), ec_poly(t, 5)).value;
      const auto y = ext_order_ff(ec_poly(t, 5), ec_poly(s, 5)).value;
      const Rational prod = x * y;
      CHECK(mpz_perfect_square_p(prod.get_num_mpz_t()));
      CHECK(mpz_perfect_square_p(prod.get_den_mpz_t()));
    }
}
