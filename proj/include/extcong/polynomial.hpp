#pragma once

#include <string>
#include <utility>
#include <vector>

#include "extcong/integer.hpp"

namespace extcong {

/// Dense univariate polynomial over Q, coefficients stored lowest degree
/// first with no trailing zeros. The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  /// From integer coefficients listed highest degree first, e.g. {1, 3, 5}
  /// is T^2 + 3T + 5.
  static Polynomial from_descending(const std::vector<Integer>& coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(int k) const;
  Rational leading() const;

  Polynomial derivative() const;
  Polynomial monic() const;
  Rational evaluate(const Rational& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Res(a, b) = lc(a)^deg b · ∏_{a(α)=0} b(α), by the Euclidean remainder
/// sequence over Q.
Rational resultant(const Polynomial& a, const Polynomial& b);

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
Rational discriminant(const Polynomial& f);

bool is_squarefree(const Polynomial& f);

}  // namespace extcong
