#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extcong/ec_core.hpp"
#include "extcong/integer.hpp"

namespace extcong {

/// S = 2 · rad(M N) over Q, where M and N are the conductors when supplied
/// and rad(Δ) of the given model otherwise. Over Q the ramification
/// condition e(p) >= p - 1 only holds at p = 2, hence the extra factor.
Integer compute_S(const RationalECurve& a, const RationalECurve& b);

/// "conductor", "radical_discriminant" or "mixed".
std::string s_convention(const RationalECurve& a, const RationalECurve& b);

struct CongruenceReport {
  Integer S;
  std::string s_convention;
  std::uint64_t p_max = 0;
  std::vector<std::uint64_t> primes_used;
  std::map<std::uint64_t, Integer> differences;  // #A~(F_p) - #B~(F_p)
  std::map<std::uint64_t, Integer> traces_a;
  std::map<std::uint64_t, Integer> traces_b;
  // Primes coprime to S at which a given (non-minimal) model still reduces badly.
  std::vector<std::uint64_t> skipped_bad_model;
  Integer gcd_bound;  // 0 when every difference vanished

  bool no_constraint() const { return gcd_bound == 0; }
  std::string interpretation() const;
};

/// Sweep all primes p <= p_max coprime to S, record #A~(F_p) - #B~(F_p) and
/// their gcd G. The exponent e of Ext^1_Q(A, B) divides G (G = 0 means no
/// constraint). The sweep may be split across `threads` workers; the report
/// does not depend on the split. Throws EmptySweep when no prime qualifies.
CongruenceReport ext_exponent_gcd_bound(const RationalECurve& a, const RationalECurve& b,
                                        std::uint64_t p_max, unsigned threads = 1);

/// Fourier coefficients a_n, n <= B, of a Hecke eigenform, defined on n
/// coprime to the declared bad primes.
class CoefficientTable {
 public:
  CoefficientTable(std::uint64_t precision, std::vector<std::uint64_t> bad_primes,
                   std::vector<std::optional<Integer>> values);

  std::uint64_t precision() const noexcept { return precision_; }
  const std::vector<std::uint64_t>& bad_primes() const noexcept { return bad_; }
  bool has(std::uint64_t n) const;
  /// Throws InvalidArgument when n is absent.
  const Integer& at(std::uint64_t n) const;

  /// Audits a_1 = 1, multiplicativity on coprime stored pairs and the
  /// prime-power recurrence; describes the first failure, if any.
  std::optional<std::string> coherence_failure() const;

 private:
  std::uint64_t precision_;
  std::vector<std::uint64_t> bad_;
  std::vector<std::optional<Integer>> values_;  // index n, slot 0 unused
};

/// a_1 = 1, a_{p^{k+1}} = a_p a_{p^k} - p a_{p^{k-1}}, a_{mn} = a_m a_n for
/// coprime m, n; entries at n sharing a factor with `bad` stay undefined.
/// Throws MissingPrime when a required a_p is absent.
CoefficientTable hecke_expand(const std::map<std::uint64_t, Integer>& ap,
                              const std::vector<std::uint64_t>& bad, std::uint64_t B);

/// a_p for all primes p <= B not in `bad` (each must be of good reduction).
std::map<std::uint64_t, Integer> trace_map(const RationalECurve& curve, std::uint64_t B,
                                           const std::vector<std::uint64_t>& bad);

/// Convenience: hecke_expand(trace_map(curve, B, bad), bad, B).
CoefficientTable coefficient_table(const RationalECurve& curve, std::uint64_t B,
                                   const std::vector<std::uint64_t>& bad);

/// Full q-expansion a_1..a_B of the newform attached to a curve whose model
/// is minimal at every bad prime (as in Cremona's tables). Bad-prime
/// coefficients come from reduction_trace and satisfy a_{p^k} = a_p^k.
std::vector<Integer> newform_coefficients(const RationalECurve& curve, std::uint64_t B);

/// Which indices a congruence is required on.
class IndexFilter {
 public:
  static IndexFilter all();
  static IndexFilter coprime_to(const Integer& modulus);
  static IndexFilter mask(std::function<bool(std::uint64_t)> predicate, std::string name);

  bool accepts(std::uint64_t n) const;
  const std::string& description() const noexcept { return description_; }

 private:
  std::function<bool(std::uint64_t)> predicate_;
  std::string description_;
};

struct CongruenceViolation {
  std::uint64_t n;
  Integer a;
  Integer b;

  bool operator==(const CongruenceViolation&) const = default;
};

struct CongruenceCheck {
  Integer modulus;
  std::string filter;
  std::uint64_t tested_up_to = 0;   // min of the two precisions
  std::uint64_t indices_tested = 0;
  std::uint64_t indices_missing = 0;  // filtered indices absent from a table
  std::vector<CongruenceViolation> violations;

  bool holds() const { return violations.empty(); }
};

/// a_n ≡ b_n (mod m) on every n <= min precision accepted by the filter.
CongruenceCheck verify_congruence(const CoefficientTable& a, const CoefficientTable& b,
                                  const Integer& m, const IndexFilter& filter);

}  // namespace extcong
