#include "extcong/milne.hpp"

#include "extcong/error.hpp"

namespace extcong {

namespace {

Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void require_same_field(const FrobeniusData& a, const FrobeniusData& b) {
  if (a.p != b.p || a.n != b.n) {
    throw Error(ErrorCode::MismatchedField,
                "Frobenius data over different fields (p^n = " + a.p.get_str() + "^" +
                    std::to_string(a.n) + " vs " + b.p.get_str() + "^" +
                    std::to_string(b.n) + ")");
  }
}

}  // namespace

WeilPolynomial::WeilPolynomial(std::vector<Integer> descending, Integer q)
    : q_(std::move(q)), dimension_(0), descending_(std::move(descending)) {
  Integer base;
  unsigned k = 0;
  if (!prime_power_decompose(q_, base, k)) {
    throw Error(ErrorCode::InvalidWeilPolynomial, "q = " + q_.get_str() + " is not a prime power");
  }
  while (!descending_.empty() && descending_.front() == 0) descending_.erase(descending_.begin());
  if (descending_.empty() || descending_.front() != 1) {
    throw Error(ErrorCode::InvalidWeilPolynomial, "Weil polynomial must be monic");
  }
  const std::size_t degree = descending_.size() - 1;
  if (degree == 0 || degree % 2 != 0) {
    throw Error(ErrorCode::InvalidWeilPolynomial, "Weil polynomial must have even positive degree");
  }
  dimension_ = static_cast<unsigned>(degree / 2);
  if (descending_.back() != power(q_, dimension_)) {
    throw Error(ErrorCode::InvalidWeilPolynomial,
                "constant term " + descending_.back().get_str() + " differs from q^d = " +
                    power(q_, dimension_).get_str());
  }
  if (degree == 2 && descending_[1] * descending_[1] > 4 * q_) {
    throw Error(ErrorCode::InvalidWeilPolynomial,
                "middle coefficient " + descending_[1].get_str() + " exceeds 2*sqrt(q)");
  }
  poly_ = Polynomial::from_descending(descending_);
}

WeilPolynomial WeilPolynomial::from_frobenius(const FrobeniusData& fd) {
  return WeilPolynomial({Integer(1), -fd.trace, fd.norm()}, fd.norm());
}

ExtOrderResult ext_order_ff(const WeilPolynomial& fA, const WeilPolynomial& fB,
                            const Integer& D) {
  if (fA.q() != fB.q()) {
    throw Error(ErrorCode::MismatchedField,
                "Weil polynomials over F_" + fA.q().get_str() + " and F_" + fB.q().get_str());
  }
  if (D == 0) throw Error(ErrorCode::InvalidArgument, "D must be nonzero");
  const Polynomial& a = fA.polynomial();
  const Polynomial& b = fB.polynomial();
  if (!is_squarefree(a) || !is_squarefree(b)) {
    throw Error(ErrorCode::RepeatedRoot,
                "Weil polynomial with a repeated root (unsupported multiplicity)");
  }

  const Polynomial g = gcd(a, b);
  Rational numerator;
  Rational root_product = 1;  // ∏ of the common roots, up to sign
  if (g.degree() == 0) {
    numerator = resultant(a, b);
  } else {
    const Polynomial hA = divmod(a, g).first;
    const Polynomial hB = divmod(b, g).first;
    numerator = resultant(hA, b) * resultant(g, hB);
    if (g.degree() >= 2) numerator *= discriminant(g);
    root_product = g.coeff(0);
  }

  const Integer q = fA.q();
  const Rational scale(power(q, static_cast<unsigned long>(fA.dimension()) * fB.dimension()));
  const Rational all_b(power(q, static_cast<unsigned long>(fB.dimension()) * a.degree()));
  const Rational denominator = all_b / abs(root_product);

  ExtOrderResult result;
  result.value = abs(scale * numerator / denominator / Rational(D));
  result.value.canonicalize();
  result.excluded_pairs = static_cast<unsigned>(g.degree());
  result.D = D;
  return result;
}

Integer ext_order_nonisogenous_ec(const FrobeniusData& a, const FrobeniusData& b) {
  require_same_field(a, b);
  const Integer diff = a.count - b.count;
  return diff * diff;
}

Integer sha_exponent_bound(const FrobeniusData& a, const FrobeniusData& b) {
  require_same_field(a, b);
  return abs(a.count - b.count);
}

}  // namespace extcong
