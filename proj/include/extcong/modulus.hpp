#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extcong/forms.hpp"
#include "extcong/integer.hpp"
#include "extcong/lattice.hpp"

namespace extcong {

/// ceil(k · [SL2(Z) : Γ0(N)] / 12) with index N ∏_{p | N} (1 + 1/p).
Integer sturm_bound(const Integer& N, unsigned k = 2);

/// Index of Γ0(N) in SL2(Z).
Integer gamma0_index(const Integer& N);

/// The congruence modulus m_f: the largest m such that some integral form
/// g in the span of the other forms of the dataset satisfies b_n ≡ a_n
/// (mod m) for all n <= B. The complement lattice is the saturation of the
/// span of the other coefficient vectors truncated to B.
///
/// Requires B >= sturm_bound(level) (PrecisionBelowSturm) and
/// B <= dataset precision (PrecisionMismatch). An empty label selects the
/// distinguished form. Throws MissingForm and NoConstraint.
Integer congruence_modulus(const EigenformDataset& forms, const std::string& f_label,
                           std::size_t B);

/// Restricted modulus r_f: as above with the congruence required only on
/// n coprime to 2N. The saturated complement lattice (in all B coordinates)
/// and f are projected onto those coordinates.
Integer restricted_congruence_modulus(const EigenformDataset& forms, const std::string& f_label,
                                      std::size_t B, const Integer& N);

/// Indices n <= B (0-based coordinates n - 1) with gcd(n, 2N) = 1.
std::vector<std::size_t> restricted_coordinates(std::size_t B, const Integer& N);

/// Coefficient vectors (truncated to B) of every form except f, one per row.
IntMatrix complement_generators(const EigenformDataset& forms, const std::string& f_label,
                                std::size_t B);

/// image_order_divisor(saturate(span of rows), f); throws NoConstraint.
/// Applied to projected rows this computes a restricted modulus directly on
/// the restricted coordinates.
Integer modulus_from_generators(const IntMatrix& complement_rows, std::span<const Integer> f);

/// Saturated complement lattice (Petersson complement realized as the span
/// of every other form and translate).
IntegerLattice complement_lattice(const EigenformDataset& forms, const std::string& f_label,
                                  std::size_t B);

/// Both sides of an audited divisibility a | b.
struct DivisibilityAudit {
  std::string relation;
  bool evaluated = false;  // false when an input is missing or unconstrained
  bool holds = false;
  // Not implied by a theorem (d_A concerns Ext(A, C), G bounds Ext(A, B)).
  bool informational = false;
};

/// Set {x : lower | x, x | upper} housing an unobservable exponent.
struct Sandwich {
  std::string quantity;
  Integer lower;
  std::optional<Integer> upper;  // nullopt: unconstrained above
  std::vector<Integer> candidates;  // listed when upper is finite and small
  bool consistent = true;           // lower | upper
  std::optional<Integer> forced;    // the unique candidate, if any
};

struct ModulusReport {
  Integer d_A;
  std::optional<Integer> m_A;  // nullopt = NoConstraint
  std::optional<Integer> r_A;
  std::optional<Integer> gcd_bound_e;
  std::optional<Integer> level;
  std::vector<DivisibilityAudit> audits;
  Sandwich e_A;      // d_A | e_A | r_A
  Sandwich e_A_T;    // d_A | e_{A,T} | m_A
  // Square-free level: d_A = e_{A,T} = m_A is predicted.
  bool squarefree_level = false;
  std::optional<bool> squarefree_prediction_holds;

  /// Every evaluated, non-informational audit holds.
  bool all_pass() const;
};

/// Audit d | m, m | r and d | G on externally supplied d_A.
ModulusReport divisibility_report(const Integer& d_A, const std::optional<Integer>& m_A,
                                  const std::optional<Integer>& r_A,
                                  const std::optional<Integer>& gcd_bound_e,
                                  const std::optional<Integer>& level = std::nullopt);

}  // namespace extcong
