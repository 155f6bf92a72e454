#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace extcong {

using Integer = mpz_class;
using Rational = mpq_class;

/// Prime factorization entry p^e.
struct PrimePower {
  Integer prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Factor |n| by trial division followed by Pollard rho on the cofactor.
/// Factors are returned in increasing order; n = 0 yields an empty list.
std::vector<PrimePower> factor(const Integer& n);

/// Product of the distinct primes dividing n; rad(0) = 0, rad(±1) = 1.
Integer radical(const Integer& n);

/// Distinct prime divisors of n, increasing.
std::vector<Integer> prime_divisors(const Integer& n);

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// All primes p <= limit.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// ℓ-adic valuation of n; `v(0)` is reported as UINT32_MAX.
unsigned valuation(const Integer& n, const Integer& prime);

/// If n = p^k for a prime p and k >= 1 returns true and fills p, k.
bool prime_power_decompose(const Integer& n, Integer& p, unsigned& k);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

bool fits_i64(const Integer& n);
bool fits_u64(const Integer& n);
std::int64_t to_i64(const Integer& n);
std::uint64_t to_u64(const Integer& n);
Integer from_u64(std::uint64_t v);
Integer from_i64(std::int64_t v);

/// Parse a decimal integer with optional sign; throws Error(InvalidArgument).
Integer parse_integer(const std::string& text);

/// Floor of the square root for n >= 0.
Integer isqrt(const Integer& n);

}  // namespace extcong
