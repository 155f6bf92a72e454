#include "extcong/symsq.hpp"

#include "extcong/error.hpp"

namespace extcong {

std::array<Integer, 4> symsq_euler_factor(const FrobeniusData& fd) {
  if (fd.n != 1) throw Error(ErrorCode::InvalidArgument, "Euler factor needs degree-1 data");
  const Integer& a = fd.trace;
  const Integer& p = fd.p;
  const Integer e1 = a * a - p;
  const Integer e2 = p * a * a - p * p;
  const Integer e3 = p * p * p;
  return {Integer(1), -e1, e2, -e3};
}

std::vector<Integer> symsq_prime_power_coefficients(const FrobeniusData& fd, unsigned K) {
  const auto c = symsq_euler_factor(fd);
  // 1/(1 + c1 X + c2 X^2 + c3 X^3)
  std::vector<Integer> lam(K + 1);
  lam[0] = 1;
  for (unsigned k = 1; k <= K; ++k) {
    Integer v = 0;
    for (unsigned j = 1; j <= 3 && j <= k; ++j) v -= c[j] * lam[k - j];
    lam[k] = v;
  }
  return lam;
}

SymSqSeries symsq_coefficients(const RationalECurve& curve, std::uint64_t n_max) {
  if (n_max == 0) throw Error(ErrorCode::InvalidArgument, "n_max must be positive");
  SymSqSeries s;
  s.label = curve.label();
  s.n_max = n_max;
  s.terms.assign(n_max, Integer(0));

  std::vector<std::uint64_t> spf(n_max + 1, 0);
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t j = i; j <= n_max; j += i) {
      if (!spf[j]) spf[j] = i;
    }
  }

  s.terms[0] = 1;
  for (std::uint64_t p = 2; p <= n_max; ++p) {
    if (spf[p] != p) continue;
    if (!curve.has_good_reduction(p)) {
      s.bad_primes.push_back(p);
      continue;
    }
    unsigned K = 0;
    for (std::uint64_t q = p; q <= n_max; q *= p) {
      ++K;
      if (q > n_max / p) break;
    }
    const auto lam = symsq_prime_power_coefficients(ap(curve, p), K);
    std::uint64_t q = 1;
    for (unsigned k = 1; k <= K; ++k) {
      q *= p;
      s.terms[q - 1] = lam[k];
    }
  }
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint64_t p = spf[n];
    std::uint64_t q = 1, m = n;
    while (m % p == 0) {
      m /= p;
      q *= p;
    }
    if (m == 1) continue;
    s.terms[n - 1] = s.terms[q - 1] * s.terms[m - 1];
  }
  return s;
}

double divisor_tail(std::uint64_t a, std::uint64_t b) {
  if (b <= a) return 0;
  std::vector<std::uint32_t> d(b + 1, 0);
  for (std::uint64_t i = 1; i <= b; ++i) {
    for (std::uint64_t j = i; j <= b; j += i) ++d[j];
  }
  double sum = 0;
  for (std::uint64_t n = b; n > a; --n) sum += static_cast<double>(d[n]) / static_cast<double>(n);
  return sum;
}

SymSqValue symsq_partial_sum(const SymSqSeries& series) {
  SymSqValue v;
  v.n_max = series.n_max;
  v.envelope_horizon = 10 * series.n_max;
  v.approximate_at_bad_primes = series.approximate_at_bad_primes;
  long double sum = 0;
  for (std::uint64_t n = series.n_max; n >= 1; --n) {
    const long double nn = static_cast<long double>(n);
    sum += static_cast<long double>(series.terms[n - 1].get_d()) / (nn * nn);
  }
  v.value = static_cast<double>(sum);
  v.envelope = divisor_tail(series.n_max, v.envelope_horizon);
  return v;
}

SymSqValue symsq_lvalue(const RationalECurve& curve, std::uint64_t n_max) {
  if (n_max < 1000) throw Error(ErrorCode::InvalidArgument, "n_max must be at least 1000");
  return symsq_partial_sum(symsq_coefficients(curve, n_max));
}

}  // namespace extcong
