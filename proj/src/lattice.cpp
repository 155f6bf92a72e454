#include "extcong/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "extcong/error.hpp"

namespace extcong {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Integer> IntMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                             const Integer& u, const Integer& v) {
  for (std::size_t j = 0; j < cols_; ++j) {
    Integer& x = (*this)(a, j);
    Integer& y = (*this)(b, j);
    Integer nx = s * x + t * y;
    y = u * x + v * y;
    x = std::move(nx);
  }
}

void IntMatrix::combine_cols(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                             const Integer& u, const Integer& v) {
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer& x = (*this)(i, a);
    Integer& y = (*this)(i, b);
    Integer nx = s * x + t * y;
    y = u * x + v * y;
    x = std::move(nx);
  }
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& indices) const {
  IntMatrix m(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(indices[i], j);
  return m;
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& indices) const {
  IntMatrix m(rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) m(i, j) = (*this)(i, indices[j]);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  }
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<Integer> multiply(std::span<const Integer> v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix shape");
  std::vector<Integer> out(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

namespace {

struct Bezout {
  Integer g, s, t;  // g = s a + t b
};

// When a | b the combination is a plain subtraction; gcdext would otherwise
// pick s = 0 for |a| = |b| and swap, which makes Smith elimination cycle.
Bezout bezout(const Integer& a, const Integer& b) {
  Bezout r;
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    r.g = a;
    r.s = 1;
    r.t = 0;
    return r;
  }
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

// Clear m(i, c) against pivot m(r, c) with a determinant-one row operation,
// mirrored on the companion matrix.
void eliminate_row(IntMatrix& m, IntMatrix& companion, std::size_t r, std::size_t i,
                   std::size_t c) {
  const Integer a = m(r, c), b = m(i, c);
  const Bezout z = bezout(a, b);
  const Integer u = -(b / z.g), v = a / z.g;
  m.combine_rows(r, i, z.s, z.t, u, v);
  companion.combine_rows(r, i, z.s, z.t, u, v);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hnf(const IntMatrix& M) {
  HermiteForm out{M, IntMatrix::identity(M.rows()), 0, {}};
  IntMatrix& H = out.H;
  IntMatrix& U = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    for (std::size_t i = r + 1; i < H.rows(); ++i) {
      if (H(i, c) != 0) eliminate_row(H, U, r, i, c);
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(H(i, c), H(r, c));
      if (q == 0) continue;
      H.combine_rows(i, r, 1, -q, 0, 1);
      U.combine_rows(i, r, 1, -q, 0, 1);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

SmithForm snf(const IntMatrix& M) {
  SmithForm out{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols()),
                IntMatrix::identity(M.cols()), 0, {}};
  IntMatrix& S = out.S;
  const std::size_t m = S.rows(), n = S.cols();

  // Column op on (t, j) mirrored on V, with the inverse row op on Vinv.
  auto eliminate_col = [&](std::size_t t, std::size_t j) {
    const Integer a = S(t, t), b = S(t, j);
    const Bezout z = bezout(a, b);
    const Integer ag = a / z.g, bg = b / z.g;
    S.combine_cols(t, j, z.s, z.t, -bg, ag);
    out.V.combine_cols(t, j, z.s, z.t, -bg, ag);
    out.Vinv.combine_rows(t, j, ag, bg, -z.t, z.s);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (S(i, j) == 0) continue;
        if (pi == m || abs(S(i, j)) < abs(S(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;
    S.swap_rows(t, pi);
    out.U.swap_rows(t, pi);
    S.swap_cols(t, pj);
    out.V.swap_cols(t, pj);
    out.Vinv.swap_rows(t, pj);

    while (true) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) != 0) eliminate_row(S, out.U, t, i, t);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) != 0) eliminate_col(t, j);
      }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < m; ++i) column_clear = column_clear && S(i, t) == 0;
      if (!column_clear) continue;

      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
        }
      if (bad_row == m) break;
      S.combine_rows(t, bad_row, 1, 1, 0, 1);
      out.U.combine_rows(t, bad_row, 1, 1, 0, 1);
    }
    if (S(t, t) < 0) {
      negate_row(S, t);
      negate_row(out.U, t);
    }
    out.invariant_factors.push_back(S(t, t));
    ++out.rank;
  }
  return out;
}

IntegerLattice::IntegerLattice(IntMatrix basis) : basis_(std::move(basis)) {
  if (hnf(basis_).rank != basis_.rows()) {
    throw Error(ErrorCode::InvalidArgument, "lattice basis rows are linearly dependent");
  }
}

IntegerLattice IntegerLattice::from_generators(const IntMatrix& generators) {
  const HermiteForm h = hnf(generators);
  std::vector<std::size_t> keep(h.rank);
  for (std::size_t i = 0; i < h.rank; ++i) keep[i] = i;
  return IntegerLattice(h.H.select_rows(keep));
}

IntegerLattice IntegerLattice::zero(std::size_t ambient_dim) {
  return IntegerLattice(IntMatrix(0, ambient_dim));
}

bool IntegerLattice::contains(std::span<const Integer> v) const {
  if (v.size() != ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "vector dimension differs from lattice");
  }
  const HermiteForm h = hnf(basis_);
  std::vector<Integer> w(v.begin(), v.end());
  for (std::size_t r = 0; r < h.rank; ++r) {
    const std::size_t c = h.pivot_cols[r];
    if (!mpz_divisible_p(w[c].get_mpz_t(), h.H(r, c).get_mpz_t())) return false;
    const Integer q = w[c] / h.H(r, c);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * h.H(r, j);
  }
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

IntegerLattice saturate(const IntegerLattice& L) {
  const SmithForm s = snf(L.basis());
  std::vector<std::size_t> first(s.rank);
  for (std::size_t i = 0; i < s.rank; ++i) first[i] = i;
  return IntegerLattice::from_generators(s.Vinv.select_rows(first));
}

Integer saturation_index(const IntegerLattice& L) {
  Integer index = 1;
  for (const auto& d : snf(L.basis()).invariant_factors) index *= d;
  return index;
}

std::optional<Integer> image_order_divisor(const IntegerLattice& L, std::span<const Integer> v) {
  if (v.size() != L.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " for ambient dimension " +
                    std::to_string(L.ambient_dim()));
  }
  const SmithForm s = snf(L.basis());
  const std::vector<Integer> c = multiply(v, s.V);

  Integer free_gcd = 0;
  for (std::size_t i = s.rank; i < c.size(); ++i) {
    mpz_gcd(free_gcd.get_mpz_t(), free_gcd.get_mpz_t(), c[i].get_mpz_t());
  }
  if (free_gcd == 0) return std::nullopt;

  Integer result = 1;
  for (const auto& [ell, e_free] : factor(free_gcd)) {
    unsigned k = e_free;
    for (std::size_t i = 0; i < s.rank; ++i) {
      const Integer& d = s.invariant_factors[i];
      if (d == 1 || c[i] == 0) continue;
      const unsigned vd = valuation(d, ell);
      const unsigned vc = valuation(c[i], ell);
      if (vc < vd) k = std::min(k, vc);
    }
    Integer part;
    mpz_pow_ui(part.get_mpz_t(), ell.get_mpz_t(), k);
    result *= part;
  }
  return result;
}

IntMatrix project_columns(const IntMatrix& rows, const std::vector<std::size_t>& coords) {
  return rows.select_cols(coords);
}

}  // namespace extcong
