#include "extcong/integer.hpp"

#include <algorithm>
#include <limits>

#include "extcong/error.hpp"

namespace extcong {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::InvalidConductor: return "InvalidConductor";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::PrimeTooLarge: return "PrimeTooLarge";
    case ErrorCode::InvalidWeilPolynomial: return "InvalidWeilPolynomial";
    case ErrorCode::MismatchedField: return "MismatchedField";
    case ErrorCode::RepeatedRoot: return "RepeatedRoot";
    case ErrorCode::EmptySweep: return "EmptySweep";
    case ErrorCode::MissingPrime: return "MissingPrime";
    case ErrorCode::PrecisionMismatch: return "PrecisionMismatch";
    case ErrorCode::PrecisionBelowSturm: return "PrecisionBelowSturm";
    case ErrorCode::MissingForm: return "MissingForm";
    case ErrorCode::NoConstraint: return "NoConstraint";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

constexpr unsigned long kTrialLimit = 10000;

// Pollard rho (Brent variant) on a composite odd n; returns a nontrivial factor.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1, q = 1, ys;
    unsigned long r = 1;
    auto step = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(128UL, r - k); ++i) {
          y = step(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += 128;
      } while (k < r && d == 1);
      r *= 2;
    } while (d == 1);
    if (d == n) {
      do {
        ys = step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<PrimePower> factor(const Integer& n) {
  std::vector<PrimePower> result;
  if (n == 0) return result;
  Integer m = abs(n);
  for (unsigned long p = 2; p <= kTrialLimit && m > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      result.push_back({Integer(p), e});
    }
    if (Integer(p) * p > m) break;
  }
  if (m > 1) {
    std::vector<Integer> primes;
    factor_into(m, primes);
    std::sort(primes.begin(), primes.end());
    for (const auto& p : primes) {
      if (!result.empty() && result.back().prime == p) {
        ++result.back().exponent;
      } else {
        result.push_back({p, 1});
      }
    }
  }
  return result;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& pp : factor(n)) out.push_back(pp.prime);
  return out;
}

Integer radical(const Integer& n) {
  if (n == 0) return 0;
  Integer r = 1;
  for (const auto& pp : factor(n)) r *= pp.prime;
  return r;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime(std::uint64_t n) { return is_prime(from_u64(n)); }

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

unsigned valuation(const Integer& n, const Integer& prime) {
  if (n == 0) return std::numeric_limits<unsigned>::max();
  Integer m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t());
    ++v;
  }
  return v;
}

bool prime_power_decompose(const Integer& n, Integer& p, unsigned& k) {
  if (n < 2) return false;
  auto f = factor(n);
  if (f.size() != 1) return false;
  p = f[0].prime;
  k = f[0].exponent;
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_i64(const Integer& n) {
  static const Integer lo = from_i64(std::numeric_limits<std::int64_t>::min());
  static const Integer hi = from_i64(std::numeric_limits<std::int64_t>::max());
  return n >= lo && n <= hi;
}

bool fits_u64(const Integer& n) {
  static const Integer hi = from_u64(std::numeric_limits<std::uint64_t>::max());
  return n >= 0 && n <= hi;
}

std::int64_t to_i64(const Integer& n) {
  if (!fits_i64(n)) {
    throw Error(ErrorCode::InvalidArgument,
                "integer " + n.get_str() + " exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(n.get_si());
}

std::uint64_t to_u64(const Integer& n) {
  if (!fits_u64(n)) {
    throw Error(ErrorCode::InvalidArgument,
                "integer " + n.get_str() + " outside unsigned 64-bit range");
  }
  return static_cast<std::uint64_t>(n.get_ui());
}

static_assert(sizeof(long) == 8, "LP64 data model required");

Integer from_u64(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

Integer from_i64(std::int64_t v) { return Integer(static_cast<long>(v)); }

Integer parse_integer(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) {
    throw Error(ErrorCode::InvalidArgument, "expected integer, got '" + text + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorCode::InvalidArgument,
                  "expected integer, got '" + text + "'");
    }
  }
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative value");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace extcong
