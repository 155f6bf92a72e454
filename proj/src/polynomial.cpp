#include "extcong/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "extcong/error.hpp"

namespace extcong {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

Polynomial Polynomial::from_descending(const std::vector<Integer>& coeffs) {
  std::vector<Rational> asc;
  asc.reserve(coeffs.size());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) asc.emplace_back(*it);
  return Polynomial(std::move(asc));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational lc = leading();
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x /= lc;
  return Polynomial(std::move(c));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const Rational mag = abs(c);
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k >= 1) out << "T";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Polynomial{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1));
  const Rational lc = b.leading();
  for (int k = da; k >= db; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / lc;
    quo[static_cast<std::size_t>(k - db)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  // res(a, b) = (-1)^{mn} res(b, a); res(b, a) = lc(b)^{m - r} res(b, a mod b).
  Polynomial x = a, y = b;
  Rational acc = 1;
  while (true) {
    const int m = x.degree();
    const int n = y.degree();
    if (n == 0) {
      Rational c = y.leading();
      Rational p = 1;
      for (int i = 0; i < m; ++i) p *= c;
      return acc * p;
    }
    if (m == 0) {
      Rational c = x.leading();
      Rational p = 1;
      for (int i = 0; i < n; ++i) p *= c;
      return acc * p;
    }
    Polynomial r = divmod(x, y).second;
    if (r.is_zero()) return 0;
    const int rd = r.degree();
    if ((static_cast<long>(m) * n) % 2 != 0) acc = -acc;
    const Rational lc = y.leading();
    for (int i = 0; i < m - rd; ++i) acc *= lc;
    x = std::move(y);
    y = std::move(r);
  }
}

Rational discriminant(const Polynomial& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "discriminant of a constant");
  Rational d = resultant(f, f.derivative()) / f.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

bool is_squarefree(const Polynomial& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace extcong
