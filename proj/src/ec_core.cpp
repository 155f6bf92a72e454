#include "extcong/ec_core.hpp"

#include <array>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "extcong/error.hpp"

namespace extcong {

Integer discriminant(const Weierstrass& w) {
  const Integer b2 = w.a1 * w.a1 + 4 * w.a2;
  const Integer b4 = 2 * w.a4 + w.a1 * w.a3;
  const Integer b6 = w.a3 * w.a3 + 4 * w.a6;
  const Integer b8 = w.a1 * w.a1 * w.a6 + 4 * w.a2 * w.a6 - w.a1 * w.a3 * w.a4 +
                     w.a2 * w.a3 * w.a3 - w.a4 * w.a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

RationalECurve::RationalECurve(Weierstrass coeffs, std::string label,
                               std::optional<Integer> conductor)
    : coeffs_(std::move(coeffs)),
      label_(std::move(label)),
      conductor_(std::move(conductor)),
      discriminant_(extcong::discriminant(coeffs_)) {
  if (discriminant_ == 0) {
    throw Error(ErrorCode::SingularCurve,
                "singular Weierstrass model (discriminant 0)" +
                    (label_.empty() ? std::string() : " for " + label_));
  }
  if (conductor_) {
    if (*conductor_ <= 0) {
      throw Error(ErrorCode::InvalidConductor, "conductor must be positive");
    }
    for (const auto& q : prime_divisors(*conductor_)) {
      if (!mpz_divisible_p(discriminant_.get_mpz_t(), q.get_mpz_t())) {
        throw Error(ErrorCode::InvalidConductor,
                    "conductor prime " + q.get_str() +
                        " does not divide the discriminant " +
                        discriminant_.get_str());
      }
    }
  }
}

Integer RationalECurve::conductor_or_radical() const {
  return conductor_ ? *conductor_ : radical(discriminant_);
}

bool RationalECurve::has_good_reduction(std::uint64_t p) const {
  return !mpz_divisible_ui_p(discriminant_.get_mpz_t(), p);
}

namespace {

using Coeffs = std::array<std::uint64_t, 5>;

constexpr std::uint64_t kMaxFieldPrime = 1ULL << 32;

std::uint64_t reduce(const Integer& v, std::uint64_t p) {
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

Coeffs reduce_all(const Weierstrass& w, std::uint64_t p) {
  return {reduce(w.a1, p), reduce(w.a2, p), reduce(w.a3, p), reduce(w.a4, p),
          reduce(w.a6, p)};
}

// All modular helpers assume p < 2^32 so products fit in 64 bits.
std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a * b % p;
}
// a, b < p
std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a + p - b) % p;
}

std::uint64_t powm(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = mulm(r, b, p);
    b = mulm(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invm(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// Jacobi symbol (a/n) for odd n.
int jacobi(std::uint64_t a, std::uint64_t n) {
  a %= n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      std::uint64_t r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// Square root modulo p of a quadratic residue a (Tonelli-Shanks).
std::uint64_t sqrtm(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p % 4 == 3) return powm(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (jacobi(z, p) != -1) ++z;
  std::uint64_t m = s, c = powm(z, q, p), t = powm(a, q, p),
                r = powm(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulm(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulm(b, b, p);
    m = i;
    c = mulm(b, b, p);
    t = mulm(t, c, p);
    r = mulm(r, b, p);
  }
  return r;
}

std::uint64_t enumerate_points(std::uint64_t p, const Coeffs& a) {
  std::uint64_t count = 1;  // point at infinity
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t x2 = mulm(x, x, p);
    const std::uint64_t rhs =
        addm(addm(mulm(x2, x, p), mulm(a[1], x2, p), p),
             addm(mulm(a[3], x, p), a[4], p), p);
    for (std::uint64_t y = 0; y < p; ++y) {
      const std::uint64_t lhs =
          addm(mulm(y, y, p), addm(mulm(mulm(a[0], x, p), y, p), mulm(a[2], y, p), p), p);
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

// Quadratic character with a lookup table for moderate p.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(std::uint64_t p) : p_(p) {
    if (p <= kTableLimit) {
      table_.assign(p, -1);
      table_[0] = 0;
      // (x + 1)^2 = x^2 + (2x + 1)
      std::uint64_t sq = 0, step = 1;
      for (std::uint64_t x = 1; x <= p / 2; ++x) {
        sq = addm(sq, step, p);
        step = addm(step, 2, p);
        table_[sq] = 1;
      }
    }
  }

  int operator()(std::uint64_t a) const {
    if (!table_.empty()) return table_[a];
    return jacobi(a, p_);
  }

 private:
  static constexpr std::uint64_t kTableLimit = 1ULL << 25;
  std::uint64_t p_;
  std::vector<signed char> table_;
};

std::uint64_t character_sum_points(std::uint64_t p, const Coeffs& a) {
  if (p % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument, "character-sum counting requires odd p");
  }
  const std::uint64_t b2 = addm(mulm(a[0], a[0], p), mulm(4 % p, a[1], p), p);
  const std::uint64_t b4 = addm(mulm(2, a[3], p), mulm(a[0], a[2], p), p);
  const std::uint64_t b6 = addm(mulm(a[2], a[2], p), mulm(4 % p, a[4], p), p);
  const std::uint64_t c3 = 4 % p, c1 = mulm(2, b4, p);
  QuadraticCharacter chi(p);
  std::int64_t sum = 0;
  // f(x) = c3 x^3 + b2 x^2 + c1 x + b6 stepped by forward differences
  std::uint64_t v = b6;
  std::uint64_t d1 = addm(addm(c3, b2, p), c1, p);       // f(1) - f(0)
  std::uint64_t d2 = addm(mulm(6, c3, p), mulm(2, b2, p), p);  // second difference at 0
  const std::uint64_t d3 = mulm(6, c3, p);
  for (std::uint64_t x = 0; x < p; ++x) {
    sum += chi(v);
    v = addm(v, d1, p);
    d1 = addm(d1, d2, p);
    d2 = addm(d2, d3, p);
  }
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + 1 + sum);
}

// Short model y^2 = x^3 + A x + B isomorphic to the given one (p >= 5).
std::pair<std::uint64_t, std::uint64_t> short_model(std::uint64_t p, const Coeffs& a) {
  const Integer b2 = Integer(a[0]) * a[0] + 4 * Integer(a[1]);
  const Integer b4 = 2 * Integer(a[3]) + Integer(a[0]) * a[2];
  const Integer b6 = Integer(a[2]) * a[2] + 4 * Integer(a[4]);
  const Integer c4 = b2 * b2 - 24 * b4;
  const Integer c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  return {reduce(-27 * c4, p), reduce(-54 * c6, p)};
}

struct Point {
  std::uint64_t x = 0, y = 0;
  bool infinity = true;

  bool operator==(const Point&) const = default;
};

class ShortCurveGroup {
 public:
  ShortCurveGroup(std::uint64_t p, std::uint64_t A, std::uint64_t B)
      : p_(p), A_(A), B_(B) {}

  Point negate(const Point& P) const {
    if (P.infinity) return P;
    return {P.x, (p_ - P.y) % p_, false};
  }

  Point add(const Point& P, const Point& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    std::uint64_t lambda;
    if (P.x == Q.x) {
      if (addm(P.y, Q.y, p_) == 0) return Point{};
      const std::uint64_t num = addm(mulm(3, mulm(P.x, P.x, p_), p_), A_, p_);
      lambda = mulm(num, invm(mulm(2, P.y, p_), p_), p_);
    } else {
      lambda = mulm(subm(Q.y, P.y, p_), invm(subm(Q.x, P.x, p_), p_), p_);
    }
    const std::uint64_t x3 = subm(subm(mulm(lambda, lambda, p_), P.x, p_), Q.x, p_);
    const std::uint64_t y3 = subm(mulm(lambda, subm(P.x, x3, p_), p_), P.y, p_);
    return {x3, y3, false};
  }

  Point multiply(Point P, std::uint64_t k) const {
    Point R;
    while (k > 0) {
      if (k & 1) R = add(R, P);
      P = add(P, P);
      k >>= 1;
    }
    return R;
  }

  // Returns a random affine point, or nullopt when x gave a non-residue.
  std::optional<Point> try_point(std::uint64_t x) const {
    const std::uint64_t rhs =
        addm(addm(mulm(mulm(x, x, p_), x, p_), mulm(A_, x, p_), p_), B_, p_);
    if (rhs == 0) return Point{x, 0, false};
    if (jacobi(rhs, p_) != 1) return std::nullopt;
    return Point{x, sqrtm(rhs, p_), false};
  }

  std::uint64_t p() const { return p_; }

 private:
  std::uint64_t p_, A_, B_;
};

std::uint64_t point_key(const Point& P) {
  return P.infinity ? ~0ULL : (P.x << 32) | P.y;
}

// Some k in [lo, hi] with k P = O.
std::optional<std::uint64_t> multiple_in_interval(const ShortCurveGroup& group,
                                                  const Point& P, std::uint64_t lo,
                                                  std::uint64_t hi) {
  const std::uint64_t width = hi - lo + 1;
  std::uint64_t m = 1;
  while (m * m < width) ++m;
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(m * 2);
  Point jP;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(point_key(jP), j);
    jP = group.add(jP, P);
  }
  const Point giant = group.negate(group.multiply(P, m));
  Point T = group.negate(group.multiply(P, lo));
  for (std::uint64_t i = 0; i * m <= width; ++i) {
    auto it = baby.find(point_key(T));
    if (it != baby.end()) {
      const std::uint64_t k = lo + i * m + it->second;
      if (k <= hi) return k;
    }
    T = group.add(T, giant);
  }
  return std::nullopt;
}

std::uint64_t order_from_multiple(const ShortCurveGroup& group, const Point& P,
                                  std::uint64_t multiple) {
  std::uint64_t order = multiple;
  for (const auto& pp : factor(from_u64(multiple))) {
    const std::uint64_t q = to_u64(pp.prime);
    while (order % q == 0 && group.multiply(P, order / q).infinity) order /= q;
  }
  return order;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / gcd_u64(a, b) * b; }

std::uint64_t hasse_radius(std::uint64_t p) { return to_u64(isqrt(4 * from_u64(p))); }

void require_field_prime(std::uint64_t p) {
  if (p >= kMaxFieldPrime) {
    throw Error(ErrorCode::PrimeTooLarge,
                "prime " + std::to_string(p) + " exceeds the supported field size");
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  }
}

std::uint64_t count_any_reduction(std::uint64_t p, const Coeffs& a) {
  if (p <= kEnumerationLimit) return enumerate_points(p, a);
  return character_sum_points(p, a);
}

}  // namespace

FiniteCurve::FiniteCurve(std::uint64_t p, const Weierstrass& coeffs) : p_(p) {
  require_field_prime(p);
  const Coeffs reduced = reduce_all(coeffs, p);
  const Weierstrass w{Integer(reduced[0]), Integer(reduced[1]), Integer(reduced[2]),
                      Integer(reduced[3]), Integer(reduced[4])};
  if (mpz_divisible_ui_p(extcong::discriminant(w).get_mpz_t(), p)) {
    throw Error(ErrorCode::BadReduction,
                "bad reduction at p = " + std::to_string(p));
  }
  for (std::size_t i = 0; i < 5; ++i) a_[i] = reduced[i];
}

FiniteCurve reduce_mod_p(const RationalECurve& curve, std::uint64_t p) {
  return FiniteCurve(p, curve.coeffs());
}

const char* tier_name(CountTier tier) noexcept {
  switch (tier) {
    case CountTier::Enumeration: return "enumeration";
    case CountTier::CharacterSum: return "character_sum";
    case CountTier::BabyStepGiantStep: return "bsgs";
  }
  return "unknown";
}

CountTier tier_for_prime(std::uint64_t p) {
  if (p <= kEnumerationLimit) return CountTier::Enumeration;
  if (p <= kCharacterSumLimit) return CountTier::CharacterSum;
  if (p <= kBsgsLimit) return CountTier::BabyStepGiantStep;
  throw Error(ErrorCode::PrimeTooLarge,
              "point counting is limited to p <= 10^9 (got " + std::to_string(p) + ")");
}

namespace {
Coeffs coeffs_of(const FiniteCurve& c) { return {c.a1(), c.a2(), c.a3(), c.a4(), c.a6()}; }
}  // namespace

std::uint64_t count_points(const FiniteCurve& curve) {
  switch (tier_for_prime(curve.p())) {
    case CountTier::Enumeration: return count_points_enumeration(curve);
    case CountTier::CharacterSum: return count_points_character_sum(curve);
    case CountTier::BabyStepGiantStep: return count_points_bsgs(curve).count;
  }
  return 0;
}

std::uint64_t count_points_enumeration(const FiniteCurve& curve) {
  return enumerate_points(curve.p(), coeffs_of(curve));
}

std::uint64_t count_points_character_sum(const FiniteCurve& curve) {
  return character_sum_points(curve.p(), coeffs_of(curve));
}

BsgsOutcome count_points_bsgs(const FiniteCurve& curve, unsigned max_samples) {
  const std::uint64_t p = curve.p();
  if (p < 5) {
    throw Error(ErrorCode::InvalidArgument, "BSGS counting requires p >= 5");
  }
  const auto [A, B] = short_model(p, coeffs_of(curve));
  const ShortCurveGroup group(p, A, B);
  const std::uint64_t radius = hasse_radius(p);
  const std::uint64_t lo = p + 1 - radius, hi = p + 1 + radius;

  std::seed_seq seed{p, A, B};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);

  BsgsOutcome outcome;
  std::uint64_t attempts = 0;
  while (outcome.samples < max_samples && attempts < 64ULL * max_samples) {
    ++attempts;
    auto P = group.try_point(pick(rng));
    if (!P) continue;
    ++outcome.samples;
    auto k = multiple_in_interval(group, *P, lo, hi);
    if (!k) {
      throw Error(ErrorCode::InvalidArgument,
                  "no group order in the Hasse interval; input is not an elliptic curve");
    }
    outcome.exponent_lcm = lcm_u64(outcome.exponent_lcm, order_from_multiple(group, *P, *k));
    const std::uint64_t l = outcome.exponent_lcm;
    const std::uint64_t first = (lo + l - 1) / l * l;
    if (first <= hi && first + l > hi) {
      outcome.count = first;
      return outcome;
    }
  }
  outcome.fell_back = true;
  outcome.count = count_points_character_sum(curve);
  return outcome;
}

FiniteCurve quadratic_twist(const FiniteCurve& curve, std::uint64_t d) {
  const std::uint64_t p = curve.p();
  if (p < 5) throw Error(ErrorCode::InvalidArgument, "twisting requires p >= 5");
  d %= p;
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "twist parameter divisible by p");
  const auto [A, B] = short_model(p, coeffs_of(curve));
  const std::uint64_t d2 = mulm(d, d, p);
  return FiniteCurve(p, Weierstrass{0, 0, 0, Integer(mulm(A, d2, p)),
                                    Integer(mulm(B, mulm(d2, d, p), p))});
}

FrobeniusData FrobeniusData::from_trace(const Integer& p, unsigned n, const Integer& trace) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  FrobeniusData fd;
  fd.p = p;
  fd.n = n;
  fd.trace = trace;
  const Integer q = fd.norm();
  if (trace * trace > 4 * q) {
    throw Error(ErrorCode::InvalidArgument,
                "trace " + trace.get_str() + " violates the Hasse bound for q = " +
                    q.get_str());
  }
  fd.count = q + 1 - trace;
  return fd;
}

Integer FrobeniusData::norm() const {
  Integer q;
  mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), n);
  return q;
}

FrobeniusData ap(const RationalECurve& curve, std::uint64_t p) {
  const FiniteCurve reduced = reduce_mod_p(curve, p);
  const Integer count = from_u64(count_points(reduced));
  return FrobeniusData::from_trace(from_u64(p), 1, from_u64(p) + 1 - count);
}

FrobeniusData base_change(const FrobeniusData& fd, unsigned n) {
  if (fd.n != 1) {
    throw Error(ErrorCode::InvalidArgument, "base change expects degree-1 Frobenius data");
  }
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  Integer prev = 2, cur = fd.trace;
  for (unsigned k = 2; k <= n; ++k) {
    Integer next = fd.trace * cur - fd.p * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return FrobeniusData::from_trace(fd.p, n, cur);
}

Integer reduction_trace(const RationalECurve& curve, std::uint64_t p) {
  require_field_prime(p);
  const Coeffs a = reduce_all(curve.coeffs(), p);
  return from_u64(p) + 1 - from_u64(count_any_reduction(p, a));
}

}  // namespace extcong
