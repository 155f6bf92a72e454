#include "extcong/congruence.hpp"

#include <algorithm>
#include <thread>

#include "extcong/error.hpp"

namespace extcong {

namespace {

std::vector<std::uint64_t> smallest_prime_factors(std::uint64_t B) {
  std::vector<std::uint64_t> spf(B + 1, 0);
  for (std::uint64_t i = 2; i <= B; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= B; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

bool divisible_by_any(std::uint64_t n, const std::vector<std::uint64_t>& primes) {
  return std::any_of(primes.begin(), primes.end(), [n](std::uint64_t p) { return n % p == 0; });
}

struct SweepEntry {
  enum class Kind { Used, SkippedBadModel, NotAdmissible } kind = Kind::NotAdmissible;
  Integer trace_a, trace_b, difference;
};

}  // namespace

Integer compute_S(const RationalECurve& a, const RationalECurve& b) {
  return 2 * radical(a.conductor_or_radical() * b.conductor_or_radical());
}

std::string s_convention(const RationalECurve& a, const RationalECurve& b) {
  const bool ca = a.conductor().has_value();
  const bool cb = b.conductor().has_value();
  if (ca && cb) return "conductor";
  if (!ca && !cb) return "radical_discriminant";
  return "mixed";
}

std::string CongruenceReport::interpretation() const {
  if (no_constraint()) return "no constraint (all differences vanish)";
  return "e divides " + gcd_bound.get_str();
}

CongruenceReport ext_exponent_gcd_bound(const RationalECurve& a, const RationalECurve& b,
                                        std::uint64_t p_max, unsigned threads) {
  if (p_max < 3) throw Error(ErrorCode::InvalidArgument, "p_max must be at least 3");
  tier_for_prime(p_max);  // reject sweeps beyond the counting limit up front

  CongruenceReport report;
  report.S = compute_S(a, b);
  report.s_convention = s_convention(a, b);
  report.p_max = p_max;

  const std::vector<std::uint64_t> primes = primes_up_to(p_max);
  std::vector<SweepEntry> entries(primes.size());
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < primes.size(); i += stride) {
      const std::uint64_t p = primes[i];
      if (mpz_divisible_ui_p(report.S.get_mpz_t(), p)) continue;
      SweepEntry& e = entries[i];
      if (!a.has_good_reduction(p) || !b.has_good_reduction(p)) {
        e.kind = SweepEntry::Kind::SkippedBadModel;
        continue;
      }
      const FrobeniusData fa = ap(a, p);
      const FrobeniusData fb = ap(b, p);
      e.kind = SweepEntry::Kind::Used;
      e.trace_a = fa.trace;
      e.trace_b = fb.trace;
      e.difference = fa.count - fb.count;
    }
  };
  const unsigned workers = std::max(1U, threads);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
  }

  Integer g = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const SweepEntry& e = entries[i];
    if (e.kind == SweepEntry::Kind::SkippedBadModel) {
      report.skipped_bad_model.push_back(primes[i]);
    } else if (e.kind == SweepEntry::Kind::Used) {
      report.primes_used.push_back(primes[i]);
      report.differences.emplace(primes[i], e.difference);
      report.traces_a.emplace(primes[i], e.trace_a);
      report.traces_b.emplace(primes[i], e.trace_b);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.difference.get_mpz_t());
    }
  }
  if (report.primes_used.empty()) {
    throw Error(ErrorCode::EmptySweep,
                "no prime <= " + std::to_string(p_max) + " is coprime to S = " +
                    report.S.get_str());
  }
  report.gcd_bound = g;
  return report;
}

CoefficientTable::CoefficientTable(std::uint64_t precision, std::vector<std::uint64_t> bad_primes,
                                   std::vector<std::optional<Integer>> values)
    : precision_(precision), bad_(std::move(bad_primes)), values_(std::move(values)) {
  if (values_.size() != precision_ + 1) {
    throw Error(ErrorCode::LengthMismatch, "coefficient table length does not match precision");
  }
}

bool CoefficientTable::has(std::uint64_t n) const {
  return n >= 1 && n <= precision_ && values_[n].has_value();
}

const Integer& CoefficientTable::at(std::uint64_t n) const {
  if (!has(n)) {
    throw Error(ErrorCode::InvalidArgument, "coefficient a_" + std::to_string(n) + " is undefined");
  }
  return *values_[n];
}

std::optional<std::string> CoefficientTable::coherence_failure() const {
  if (has(1) && at(1) != 1) return "a_1 = " + at(1).get_str() + " (not normalized)";
  for (std::uint64_t m = 2; m <= precision_; ++m) {
    if (!has(m)) continue;
    for (std::uint64_t k = m + 1; k * m <= precision_; ++k) {
      if (!has(k) || gcd_u64(m, k) != 1) continue;
      if (at(m * k) != at(m) * at(k)) {
        return "multiplicativity fails at " + std::to_string(m) + " * " + std::to_string(k);
      }
    }
  }
  for (std::uint64_t p : primes_up_to(precision_)) {
    if (!has(p)) continue;
    std::uint64_t prev2 = 1, prev = p;
    while (prev <= precision_ / p) {
      const std::uint64_t next = prev * p;
      const Integer expected = at(p) * at(prev) - from_u64(p) * at(prev2);
      if (at(next) != expected) {
        return "prime-power recurrence fails at " + std::to_string(next);
      }
      prev2 = prev;
      prev = next;
    }
  }
  return std::nullopt;
}

CoefficientTable hecke_expand(const std::map<std::uint64_t, Integer>& ap,
                              const std::vector<std::uint64_t>& bad, std::uint64_t B) {
  std::vector<std::optional<Integer>> values(B + 1);
  if (B == 0) return CoefficientTable(0, bad, std::move(values));
  const auto spf = smallest_prime_factors(B);
  values[1] = Integer(1);
  for (std::uint64_t n = 2; n <= B; ++n) {
    if (divisible_by_any(n, bad)) continue;
    const std::uint64_t p = spf[n];
    std::uint64_t m = n, pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    if (m > 1) {
      values[n] = *values[pk] * *values[m];
      continue;
    }
    // n = p^k
    auto it = ap.find(p);
    if (it == ap.end()) {
      throw Error(ErrorCode::MissingPrime, "a_p missing for p = " + std::to_string(p));
    }
    if (n == p) {
      values[n] = it->second;
    } else {
      values[n] = it->second * *values[n / p] - from_u64(p) * *values[n / p / p];
    }
  }
  return CoefficientTable(B, bad, std::move(values));
}

std::map<std::uint64_t, Integer> trace_map(const RationalECurve& curve, std::uint64_t B,
                                           const std::vector<std::uint64_t>& bad) {
  std::map<std::uint64_t, Integer> out;
  for (std::uint64_t p : primes_up_to(B)) {
    if (std::find(bad.begin(), bad.end(), p) != bad.end()) continue;
    out.emplace(p, ap(curve, p).trace);
  }
  return out;
}

CoefficientTable coefficient_table(const RationalECurve& curve, std::uint64_t B,
                                   const std::vector<std::uint64_t>& bad) {
  return hecke_expand(trace_map(curve, B, bad), bad, B);
}

std::vector<Integer> newform_coefficients(const RationalECurve& curve, std::uint64_t B) {
  std::map<std::uint64_t, Integer> good;
  std::map<std::uint64_t, Integer> bad;
  for (std::uint64_t p : primes_up_to(B)) {
    if (curve.has_good_reduction(p)) {
      good.emplace(p, ap(curve, p).trace);
    } else {
      bad.emplace(p, reduction_trace(curve, p));
    }
  }
  std::vector<std::uint64_t> bad_list;
  for (const auto& [p, _] : bad) bad_list.push_back(p);
  const CoefficientTable table = hecke_expand(good, bad_list, B);

  std::vector<Integer> out(B);
  const auto spf = smallest_prime_factors(B);
  for (std::uint64_t n = 1; n <= B; ++n) {
    // split n = (bad part) * (good part); a_{p^k} = a_p^k at bad p
    std::uint64_t good_part = n;
    Integer value = 1;
    std::uint64_t m = n;
    while (m > 1) {
      const std::uint64_t p = spf[m];
      unsigned k = 0;
      while (m % p == 0) {
        m /= p;
        ++k;
      }
      auto it = bad.find(p);
      if (it == bad.end()) continue;
      Integer pk;
      mpz_pow_ui(pk.get_mpz_t(), it->second.get_mpz_t(), k);
      value *= pk;
      for (unsigned i = 0; i < k; ++i) good_part /= p;
    }
    out[n - 1] = value * table.at(good_part);
  }
  return out;
}

IndexFilter IndexFilter::all() {
  IndexFilter f;
  f.predicate_ = [](std::uint64_t) { return true; };
  f.description_ = "all n";
  return f;
}

IndexFilter IndexFilter::coprime_to(const Integer& modulus) {
  IndexFilter f;
  const std::vector<Integer> primes = prime_divisors(modulus);
  std::vector<std::uint64_t> small;
  for (const auto& p : primes) {
    if (fits_u64(p)) small.push_back(to_u64(p));
  }
  f.predicate_ = [small](std::uint64_t n) { return !divisible_by_any(n, small); };
  f.description_ = "gcd(n, " + modulus.get_str() + ") = 1";
  return f;
}

IndexFilter IndexFilter::mask(std::function<bool(std::uint64_t)> predicate, std::string name) {
  IndexFilter f;
  f.predicate_ = std::move(predicate);
  f.description_ = std::move(name);
  return f;
}

bool IndexFilter::accepts(std::uint64_t n) const { return predicate_(n); }

CongruenceCheck verify_congruence(const CoefficientTable& a, const CoefficientTable& b,
                                  const Integer& m, const IndexFilter& filter) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 1");
  CongruenceCheck check;
  check.modulus = m;
  check.filter = filter.description();
  check.tested_up_to = std::min(a.precision(), b.precision());
  for (std::uint64_t n = 1; n <= check.tested_up_to; ++n) {
    if (!filter.accepts(n)) continue;
    if (!a.has(n) || !b.has(n)) {
      ++check.indices_missing;
      continue;
    }
    ++check.indices_tested;
    const Integer diff = a.at(n) - b.at(n);
    if (!mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t())) {
      check.violations.push_back({n, a.at(n), b.at(n)});
    }
  }
  return check;
}

}  // namespace extcong
