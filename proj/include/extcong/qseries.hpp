#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "extcong/integer.hpp"

namespace extcong {

class CoefficientTable;

/// Truncated cuspidal q-expansion Σ_{n=1}^{B} a_n q^n. When a modulus m is
/// attached, coefficients are kept canonically in [0, m).
class QSeries {
 public:
  /// coeffs[i] is the coefficient of q^{i+1}; precision = coeffs.size() >= 1.
  explicit QSeries(std::vector<Integer> coeffs, std::optional<Integer> modulus = std::nullopt);

  static QSeries zero(std::size_t precision, std::optional<Integer> modulus = std::nullopt);
  /// Entries absent from the table (bad indices) become 0.
  static QSeries from_table(const CoefficientTable& table, std::size_t precision);

  std::size_t precision() const noexcept { return coeffs_.size(); }
  /// Coefficient of q^n, 1 <= n <= precision.
  const Integer& coeff(std::size_t n) const;
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  const std::optional<Integer>& modulus() const noexcept { return modulus_; }

  QSeries reduced(const Integer& m) const;
  bool is_zero() const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  /// Product truncated to the common precision (starts at q^2).
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  std::vector<Integer> coeffs_;
  std::optional<Integer> modulus_;
};

/// Θ = q d/dq: a_n ↦ n a_n.
QSeries theta(const QSeries& s);

/// Zero every a_n with gcd(n, M) > 1. This is the coefficient-level effect
/// of twisting twice by quadratic characters ramified at the primes of M.
QSeries restrict_support(const QSeries& s, const Integer& M);

struct KernelResult {
  bool in_kernel = true;
  std::optional<std::size_t> witness;  // least n with n a_n ≢ 0 (mod ℓ)
};

/// Whether Θ(s) ≡ 0 (mod ℓ). ℓ must be an odd prime.
KernelResult theta_kernel_mod(const QSeries& s, const Integer& ell);

struct LadderStep {
  unsigned k;
  bool holds;
  std::optional<std::size_t> witness;
};

struct LiftReport {
  Integer ell;
  unsigned requested = 0;
  unsigned achieved = 0;  // largest k with f ≡ g (mod ℓ^k) on gcd(n, ℓ) = 1
  std::vector<LadderStep> ladder;
};

/// Climb f ≡ g (mod ℓ), (mod ℓ^2), ... on the support gcd(n, ℓ) = 1: step k
/// holds when (f - g)/ℓ^{k-1} is integral there and vanishes mod ℓ. This is
/// the coefficient-level consequence of Θ being injective mod ℓ on weight-2
/// forms, not a test of injectivity itself. Throws PrecisionMismatch.
LiftReport congruence_lift_check(const QSeries& f, const QSeries& g, const Integer& ell,
                                 unsigned m);

}  // namespace extcong
