#include "extcong/modulus.hpp"

#include <algorithm>
#include <map>

#include "extcong/error.hpp"

namespace extcong {

Integer gamma0_index(const Integer& N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "level must be positive");
  Integer index = N;
  for (const auto& p : prime_divisors(N)) {
    index /= p;
    index *= p + 1;
  }
  return index;
}

Integer sturm_bound(const Integer& N, unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "weight must be positive");
  Integer num = gamma0_index(N) * k;
  Integer bound;
  mpz_cdiv_q_ui(bound.get_mpz_t(), num.get_mpz_t(), 12);
  return bound;
}

namespace {

const Eigenform& select_form(const EigenformDataset& forms, const std::string& label) {
  return label.empty() ? forms.distinguished() : forms.find(label);
}

void check_precision(const EigenformDataset& forms, std::size_t B) {
  if (B > forms.precision()) {
    throw Error(ErrorCode::PrecisionMismatch,
                "requested precision " + std::to_string(B) + " exceeds dataset precision " +
                    std::to_string(forms.precision()));
  }
  const Integer sturm = sturm_bound(forms.level());
  if (from_u64(B) < sturm) {
    throw Error(ErrorCode::PrecisionBelowSturm,
                "precision " + std::to_string(B) + " is below the Sturm bound " +
                    sturm.get_str() + " for level " + forms.level().get_str());
  }
}

std::vector<Integer> truncate(const std::vector<Integer>& v, std::size_t B) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(B)};
}

std::vector<Integer> pick(const std::vector<Integer>& v, const std::vector<std::size_t>& coords) {
  std::vector<Integer> out;
  out.reserve(coords.size());
  for (auto c : coords) out.push_back(v[c]);
  return out;
}

Integer require_constraint(const std::optional<Integer>& m, const std::string& label) {
  if (!m) {
    throw Error(ErrorCode::NoConstraint,
                "form " + label + " lies in the span of its complement; no finite modulus");
  }
  return *m;
}

}  // namespace

std::vector<std::size_t> restricted_coordinates(std::size_t B, const Integer& N) {
  const Integer twoN = 2 * N;
  std::vector<std::size_t> coords;
  Integer g;
  for (std::size_t n = 1; n <= B; ++n) {
    mpz_gcd_ui(g.get_mpz_t(), twoN.get_mpz_t(), n);
    if (g == 1) coords.push_back(n - 1);
  }
  return coords;
}

IntMatrix complement_generators(const EigenformDataset& forms, const std::string& f_label,
                                std::size_t B) {
  const Eigenform& f = select_form(forms, f_label);
  std::vector<std::vector<Integer>> rows;
  for (const auto& g : forms.forms()) {
    if (&g == &f) continue;
    rows.push_back(truncate(g.coefficients, B));
  }
  return IntMatrix::from_rows(rows, B);
}

IntegerLattice complement_lattice(const EigenformDataset& forms, const std::string& f_label,
                                  std::size_t B) {
  return saturate(IntegerLattice::from_generators(complement_generators(forms, f_label, B)));
}

Integer modulus_from_generators(const IntMatrix& complement_rows, std::span<const Integer> f) {
  const IntegerLattice L = saturate(IntegerLattice::from_generators(complement_rows));
  return require_constraint(image_order_divisor(L, f), "f");
}

Integer congruence_modulus(const EigenformDataset& forms, const std::string& f_label,
                           std::size_t B) {
  check_precision(forms, B);
  const Eigenform& f = select_form(forms, f_label);
  const IntegerLattice L = complement_lattice(forms, f.label, B);
  return require_constraint(image_order_divisor(L, truncate(f.coefficients, B)), f.label);
}

Integer restricted_congruence_modulus(const EigenformDataset& forms, const std::string& f_label,
                                      std::size_t B, const Integer& N) {
  check_precision(forms, B);
  const Eigenform& f = select_form(forms, f_label);
  const IntegerLattice L = complement_lattice(forms, f.label, B);
  const std::vector<std::size_t> coords = restricted_coordinates(B, N);
  const IntegerLattice projected =
      IntegerLattice::from_generators(project_columns(L.basis(), coords));
  return require_constraint(
      image_order_divisor(projected, pick(truncate(f.coefficients, B), coords)), f.label);
}

namespace {

DivisibilityAudit audit(const std::string& relation, const Integer& a,
                        const std::optional<Integer>& b, bool informational = false) {
  DivisibilityAudit out;
  out.relation = relation;
  out.informational = informational;
  if (!b) return out;  // unconstrained right-hand side: nothing to check
  out.evaluated = true;
  out.holds = mpz_divisible_p(b->get_mpz_t(), a.get_mpz_t()) != 0;
  return out;
}

Sandwich sandwich(const std::string& quantity, const Integer& lower,
                  const std::optional<Integer>& upper) {
  constexpr unsigned long kListLimit = 1000000;
  Sandwich s;
  s.quantity = quantity;
  s.lower = lower;
  s.upper = upper;
  if (!upper) return s;
  s.consistent = mpz_divisible_p(upper->get_mpz_t(), lower.get_mpz_t()) != 0;
  if (!s.consistent || *upper > kListLimit) return s;
  // divisors x of upper with lower | x
  std::vector<Integer> divisors{1};
  for (const auto& [p, e] : factor(*upper)) {
    const std::size_t count = divisors.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  for (const auto& x : divisors) {
    if (mpz_divisible_p(x.get_mpz_t(), lower.get_mpz_t())) s.candidates.push_back(x);
  }
  if (s.candidates.size() == 1) s.forced = s.candidates.front();
  return s;
}

bool is_squarefree(const Integer& n) {
  const auto f = factor(n);
  return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

}  // namespace

bool ModulusReport::all_pass() const {
  return std::all_of(audits.begin(), audits.end(), [](const DivisibilityAudit& a) {
    return a.informational || !a.evaluated || a.holds;
  });
}

ModulusReport divisibility_report(const Integer& d_A, const std::optional<Integer>& m_A,
                                  const std::optional<Integer>& r_A,
                                  const std::optional<Integer>& gcd_bound_e,
                                  const std::optional<Integer>& level) {
  if (d_A < 1) throw Error(ErrorCode::InvalidArgument, "d_A must be positive");
  for (const auto* v : {&m_A, &r_A}) {
    if (*v && **v < 1) throw Error(ErrorCode::InvalidArgument, "moduli must be positive");
  }
  ModulusReport report;
  report.d_A = d_A;
  report.m_A = m_A;
  report.r_A = r_A;
  report.gcd_bound_e = gcd_bound_e;
  report.level = level;
  report.audits.push_back(audit("d_A | m_A", d_A, m_A));
  if (m_A) {
    report.audits.push_back(audit("m_A | r_A", *m_A, r_A));
  } else {
    report.audits.push_back({"m_A | r_A", false, false, false});
  }
  report.audits.push_back(audit("d_A | gcd_bound_e", d_A, gcd_bound_e, true));
  report.e_A = sandwich("e_A", d_A, r_A);
  report.e_A_T = sandwich("e_A_T", d_A, m_A);
  if (level) {
    report.squarefree_level = is_squarefree(*level);
    if (report.squarefree_level && m_A) report.squarefree_prediction_holds = (*m_A == d_A);
  }
  return report;
}

}  // namespace extcong
