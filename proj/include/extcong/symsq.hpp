#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "extcong/ec_core.hpp"
#include "extcong/integer.hpp"

namespace extcong {

/// Coefficients [1, -e1, e2, -e3] of (1 - α²X)(1 - pX)(1 - β²X) where
/// α + β = a_p, αβ = p: e1 = a² - p, e2 = p a² - p², e3 = p³.
/// Requires extension degree 1.
std::array<Integer, 4> symsq_euler_factor(const FrobeniusData& fd);

/// λ_{p^k} for k = 0..K from the inverse of the Euler factor.
std::vector<Integer> symsq_prime_power_coefficients(const FrobeniusData& fd, unsigned K);

struct SymSqSeries {
  std::string label;
  std::uint64_t n_max = 0;
  std::vector<Integer> terms;             // terms[n - 1] = λ_n
  std::vector<std::uint64_t> bad_primes;  // factors set to 1 here
  bool approximate_at_bad_primes = true;

  const Integer& lambda(std::uint64_t n) const { return terms.at(n - 1); }
};

/// λ_n for n <= n_max. Bad primes are those dividing the model discriminant;
/// their Euler factors are taken as 1, so λ_n = 0 whenever n meets one.
SymSqSeries symsq_coefficients(const RationalECurve& curve, std::uint64_t n_max);

struct SymSqValue {
  double value = 0;     // Σ_{n <= n_max} λ_n n^{-2}
  double envelope = 0;  // Σ_{n_max < n <= 10 n_max} d(n)/n
  std::uint64_t n_max = 0;
  std::uint64_t envelope_horizon = 0;
  bool approximate_at_bad_primes = true;
};

/// Partial sum at s = 2 of an already computed series.
SymSqValue symsq_partial_sum(const SymSqSeries& series);

/// Requires n_max >= 1000 (InvalidArgument).
SymSqValue symsq_lvalue(const RationalECurve& curve, std::uint64_t n_max);

/// Σ_{a < n <= b} d(n)/n.
double divisor_tail(std::uint64_t a, std::uint64_t b);

}  // namespace extcong
