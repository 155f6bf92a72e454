#pragma once

#include <vector>

#include "extcong/ec_core.hpp"
#include "extcong/integer.hpp"
#include "extcong/polynomial.hpp"

namespace extcong {

/// Characteristic polynomial of Frobenius of an abelian variety over F_q:
/// monic, integral, of even degree 2d with constant term q^d.
class WeilPolynomial {
 public:
  /// `descending` lists coefficients from the leading one down, e.g.
  /// {1, 3, 5} for T^2 + 3T + 5. Throws InvalidWeilPolynomial when q is not a
  /// prime power, the polynomial is not monic of even degree, the constant
  /// term differs from q^d, or (degree 2) the middle coefficient exceeds
  /// 2√q in absolute value.
  WeilPolynomial(std::vector<Integer> descending, Integer q);

  /// T^2 - t T + p^n.
  static WeilPolynomial from_frobenius(const FrobeniusData& fd);

  const Integer& q() const noexcept { return q_; }
  unsigned dimension() const noexcept { return dimension_; }
  const Polynomial& polynomial() const noexcept { return poly_; }
  const std::vector<Integer>& descending() const noexcept { return descending_; }

 private:
  Integer q_;
  unsigned dimension_;
  std::vector<Integer> descending_;
  Polynomial poly_;
};

struct ExtOrderResult {
  Rational value;               // absolute value of the order formula
  bool sign_ambiguous = true;   // the ± of the formula is never resolved
  unsigned excluded_pairs = 0;  // eigenvalue pairs with a_i = b_j
  Integer D = 1;
};

/// |Ext^1(A, B)| over F_q from the Frobenius polynomials f_A, f_B:
///   q^{d_A d_B} / D · ∏_{a_i ≠ b_j} (1 - a_i / b_j)
/// evaluated exactly through resultants. With g = gcd(f_A, f_B) the product
/// of (b_j - a_i) over non-equal pairs is |Res(f_A/g, f_B) Res(g, f_B/g)
/// disc(g)| and the product of the b_j over those pairs is
/// q^{d_B deg f_A} / |g(0)|.
///
/// D (discriminant of the trace pairing on Hom(A, B)) is supplied by the
/// caller; D = 1 is correct when Hom(A, B) = 0. The normalization of the
/// trace map for isogenous factors is not fixed here, so for g ≠ 1 the
/// value may be non-integral for some choices of D.
///
/// Throws MismatchedField for different q and RepeatedRoot when either
/// polynomial is not square-free.
ExtOrderResult ext_order_ff(const WeilPolynomial& fA, const WeilPolynomial& fB,
                            const Integer& D = 1);

/// (#A(F_q) - #B(F_q))^2 for elliptic curves with Hom = 0.
Integer ext_order_nonisogenous_ec(const FrobeniusData& a, const FrobeniusData& b);

/// |#A(F_q) - #B(F_q)|; the exponent of Ext^1 over F_q divides it.
Integer sha_exponent_bound(const FrobeniusData& a, const FrobeniusData& b);

}  // namespace extcong
