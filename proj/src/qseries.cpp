#include "extcong/qseries.hpp"

#include <algorithm>

#include "extcong/congruence.hpp"
#include "extcong/error.hpp"

namespace extcong {

namespace {

void canonicalize(std::vector<Integer>& coeffs, const std::optional<Integer>& m) {
  if (!m) return;
  for (auto& c : coeffs) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m->get_mpz_t());
}

void require_compatible(const QSeries& a, const QSeries& b) {
  if (a.precision() != b.precision()) {
    throw Error(ErrorCode::PrecisionMismatch,
                "series precisions differ (" + std::to_string(a.precision()) + " vs " +
                    std::to_string(b.precision()) + ")");
  }
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::InvalidArgument, "series carry different moduli");
  }
}

void require_odd_prime(const Integer& ell) {
  if (ell == 2) {
    throw Error(ErrorCode::InvalidArgument, "the even prime is not supported (ℓ must be odd)");
  }
  if (!is_prime(ell)) {
    throw Error(ErrorCode::InvalidArgument, ell.get_str() + " is not an odd prime");
  }
}

}  // namespace

QSeries::QSeries(std::vector<Integer> coeffs, std::optional<Integer> modulus)
    : coeffs_(std::move(coeffs)), modulus_(std::move(modulus)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "series precision must be >= 1");
  if (modulus_ && *modulus_ < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 1");
  canonicalize(coeffs_, modulus_);
}

QSeries QSeries::zero(std::size_t precision, std::optional<Integer> modulus) {
  return QSeries(std::vector<Integer>(precision), std::move(modulus));
}

QSeries QSeries::from_table(const CoefficientTable& table, std::size_t precision) {
  if (precision > table.precision()) {
    throw Error(ErrorCode::PrecisionMismatch, "table shorter than requested precision");
  }
  std::vector<Integer> coeffs(precision);
  for (std::size_t n = 1; n <= precision; ++n) {
    if (table.has(n)) coeffs[n - 1] = table.at(n);
  }
  return QSeries(std::move(coeffs));
}

const Integer& QSeries::coeff(std::size_t n) const {
  if (n < 1 || n > coeffs_.size()) {
    throw Error(ErrorCode::InvalidArgument, "index " + std::to_string(n) + " outside series");
  }
  return coeffs_[n - 1];
}

QSeries QSeries::reduced(const Integer& m) const { return QSeries(coeffs_, m); }

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  require_compatible(a, b);
  std::vector<Integer> c(a.precision());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return QSeries(std::move(c), a.modulus_);
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  require_compatible(a, b);
  std::vector<Integer> c(a.precision());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return QSeries(std::move(c), a.modulus_);
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  require_compatible(a, b);
  const std::size_t B = a.precision();
  std::vector<Integer> c(B);
  for (std::size_t i = 1; i < B; ++i) {
    if (a.coeffs_[i - 1] == 0) continue;
    for (std::size_t j = 1; i + j <= B; ++j) c[i + j - 1] += a.coeffs_[i - 1] * b.coeffs_[j - 1];
  }
  return QSeries(std::move(c), a.modulus_);
}

QSeries theta(const QSeries& s) {
  std::vector<Integer> c(s.precision());
  for (std::size_t n = 1; n <= c.size(); ++n) c[n - 1] = s.coeff(n) * static_cast<unsigned long>(n);
  return QSeries(std::move(c), s.modulus());
}

QSeries restrict_support(const QSeries& s, const Integer& M) {
  if (M < 1) throw Error(ErrorCode::InvalidArgument, "support modulus must be positive");
  std::vector<Integer> c = s.coeffs();
  Integer g;
  for (std::size_t n = 1; n <= c.size(); ++n) {
    mpz_gcd_ui(g.get_mpz_t(), M.get_mpz_t(), n);
    if (g != 1) c[n - 1] = 0;
  }
  return QSeries(std::move(c), s.modulus());
}

KernelResult theta_kernel_mod(const QSeries& s, const Integer& ell) {
  require_odd_prime(ell);
  KernelResult result;
  for (std::size_t n = 1; n <= s.precision(); ++n) {
    const Integer v = s.coeff(n) * static_cast<unsigned long>(n);
    if (!mpz_divisible_p(v.get_mpz_t(), ell.get_mpz_t())) {
      result.in_kernel = false;
      result.witness = n;
      return result;
    }
  }
  return result;
}

LiftReport congruence_lift_check(const QSeries& f, const QSeries& g, const Integer& ell,
                                 unsigned m) {
  require_odd_prime(ell);
  if (f.precision() != g.precision()) {
    throw Error(ErrorCode::PrecisionMismatch,
                "series precisions differ (" + std::to_string(f.precision()) + " vs " +
                    std::to_string(g.precision()) + ")");
  }
  LiftReport report;
  report.ell = ell;
  report.requested = m;

  // Differences on the support coprime to ℓ, divided down one step at a time.
  std::vector<std::pair<std::size_t, Integer>> diff;
  for (std::size_t n = 1; n <= f.precision(); ++n) {
    if (mpz_cmp_ui(ell.get_mpz_t(), n) <= 0 && n % mpz_get_ui(ell.get_mpz_t()) == 0) continue;
    diff.emplace_back(n, f.coeff(n) - g.coeff(n));
  }
  bool climbing = true;
  for (unsigned k = 1; k <= m; ++k) {
    LadderStep step{k, climbing, std::nullopt};
    if (climbing) {
      for (auto& [n, d] : diff) {
        if (!mpz_divisible_p(d.get_mpz_t(), ell.get_mpz_t())) {
          step.holds = false;
          step.witness = n;
          break;
        }
      }
      if (step.holds) {
        for (auto& [n, d] : diff) mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), ell.get_mpz_t());
        report.achieved = k;
      } else {
        climbing = false;
      }
    }
    report.ladder.push_back(step);
  }
  return report;
}

}  // namespace extcong
