#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "extcong/integer.hpp"

namespace extcong {

/// Coefficients [a1, a2, a3, a4, a6] of
///   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct Weierstrass {
  Integer a1, a2, a3, a4, a6;

  bool operator==(const Weierstrass&) const = default;
};

/// Standard discriminant of a Weierstrass model via b2, b4, b6, b8.
/// Zero for singular models.
Integer discriminant(const Weierstrass& w);

/// A nonsingular Weierstrass model over Q with integer coefficients.
/// The model is taken as given; no minimal model is computed.
class RationalECurve {
 public:
  /// Throws SingularCurve when the discriminant vanishes and
  /// InvalidConductor when a prime of the supplied conductor does not divide
  /// the discriminant.
  RationalECurve(Weierstrass coeffs, std::string label = {},
                 std::optional<Integer> conductor = std::nullopt);

  const Weierstrass& coeffs() const noexcept { return coeffs_; }
  const std::string& label() const noexcept { return label_; }
  const std::optional<Integer>& conductor() const noexcept { return conductor_; }
  const Integer& discriminant() const noexcept { return discriminant_; }

  /// The conductor when supplied, else rad(Δ) as a conservative stand-in.
  Integer conductor_or_radical() const;

  bool has_good_reduction(std::uint64_t p) const;

 private:
  Weierstrass coeffs_;
  std::string label_;
  std::optional<Integer> conductor_;
  Integer discriminant_;
};

/// Reduction of a model modulo a prime p with nonzero reduced discriminant.
class FiniteCurve {
 public:
  /// Coefficients are reduced into [0, p). Throws BadReduction if p | Δ and
  /// InvalidArgument if p is not prime or exceeds 2^32.
  FiniteCurve(std::uint64_t p, const Weierstrass& coeffs);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t a1() const noexcept { return a_[0]; }
  std::uint64_t a2() const noexcept { return a_[1]; }
  std::uint64_t a3() const noexcept { return a_[2]; }
  std::uint64_t a4() const noexcept { return a_[3]; }
  std::uint64_t a6() const noexcept { return a_[4]; }

 private:
  std::uint64_t p_;
  std::uint64_t a_[5];
};

FiniteCurve reduce_mod_p(const RationalECurve& curve, std::uint64_t p);

enum class CountTier { Enumeration, CharacterSum, BabyStepGiantStep };

const char* tier_name(CountTier tier) noexcept;

inline constexpr std::uint64_t kEnumerationLimit = 13;
inline constexpr std::uint64_t kCharacterSumLimit = 100000;
inline constexpr std::uint64_t kBsgsLimit = 1000000000;

/// Tier used by count_points for a prime; throws PrimeTooLarge above 10^9.
CountTier tier_for_prime(std::uint64_t p);

/// #E(F_p) including the point at infinity, dispatched by tier.
std::uint64_t count_points(const FiniteCurve& curve);

/// Affine enumeration over all (x, y) in F_p^2. O(p^2).
std::uint64_t count_points_enumeration(const FiniteCurve& curve);

/// p + 1 + Σ_x χ(4x^3 + b2 x^2 + 2 b4 x + b6). Requires odd p.
std::uint64_t count_points_character_sum(const FiniteCurve& curve);

struct BsgsOutcome {
  std::uint64_t count = 0;
  unsigned samples = 0;      // random points whose order was computed
  bool fell_back = false;    // ambiguity persisted; character sum used
  std::uint64_t exponent_lcm = 1;
};

/// Group-order search in the Hasse interval. Points are sampled from a
/// generator seeded deterministically by the curve, so results are
/// reproducible. Requires p >= 5.
BsgsOutcome count_points_bsgs(const FiniteCurve& curve, unsigned max_samples = 40);

/// Quadratic twist by d (nonzero mod p) of the short model of `curve`.
/// Requires p >= 5.
FiniteCurve quadratic_twist(const FiniteCurve& curve, std::uint64_t d);

/// Frobenius data of E over F_{p^n}: trace t, count p^n + 1 - t, and the
/// characteristic polynomial T^2 - t T + p^n.
struct FrobeniusData {
  Integer p;
  unsigned n = 1;
  Integer trace;
  Integer count;

  /// Validates the Hasse bound t^2 <= 4 p^n; throws InvalidArgument.
  static FrobeniusData from_trace(const Integer& p, unsigned n, const Integer& trace);

  Integer norm() const;  // p^n

  bool operator==(const FrobeniusData&) const = default;
};

/// Frobenius trace at a good prime: p + 1 - #E~(F_p).
FrobeniusData ap(const RationalECurve& curve, std::uint64_t p);

/// Trace over F_{p^n} from the degree-1 data by t_k = a t_{k-1} - p t_{k-2}.
FrobeniusData base_change(const FrobeniusData& fd, unsigned n);

/// p + 1 - #E~(F_p) counted on the (possibly singular) reduced cubic,
/// singular point included. For a model minimal at a bad prime p this is
/// 1, -1 or 0 for split multiplicative, nonsplit multiplicative and additive
/// reduction, which is the newform coefficient a_p. Intended for Cremona
/// table models; a non-minimal model gives meaningless values.
Integer reduction_trace(const RationalECurve& curve, std::uint64_t p);

}  // namespace extcong
