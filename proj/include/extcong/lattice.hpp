#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extcong/integer.hpp"

namespace extcong {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Integer> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<Integer> row_vector(std::size_t i) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// Rows a, b ← (s·a + t·b, u·a + v·b).
  void combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                    const Integer& u, const Integer& v);
  /// Columns a, b ← (s·a + t·b, u·a + v·b).
  void combine_cols(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                    const Integer& u, const Integer& v);

  IntMatrix transpose() const;
  /// Rows whose indices are listed, in order.
  IntMatrix select_rows(const std::vector<std::size_t>& indices) const;
  /// Columns whose indices are listed, in order.
  IntMatrix select_cols(const std::vector<std::size_t>& indices) const;

  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Row vector times matrix.
std::vector<Integer> multiply(std::span<const Integer> v, const IntMatrix& m);

struct HermiteForm {
  IntMatrix H;  // row echelon, positive pivots, entries above pivots in [0, pivot)
  IntMatrix U;  // unimodular with U·M = H
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Row Hermite normal form by extended-gcd row operations; zero rows end
/// up below the pivot rows.
HermiteForm hnf(const IntMatrix& M);

struct SmithForm {
  IntMatrix S;     // diagonal, d_1 | d_2 | ... , trailing zeros
  IntMatrix U;     // unimodular, rows(M) x rows(M)
  IntMatrix V;     // unimodular, cols(M) x cols(M)
  IntMatrix Vinv;  // V^{-1}, maintained alongside V
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;  // nonzero diagonal entries
};

/// U·M·V = S with U, V unimodular.
SmithForm snf(const IntMatrix& M);

/// Full-rank sublattice of Z^B given by basis rows.
class IntegerLattice {
 public:
  /// Throws InvalidArgument when the rows are linearly dependent.
  explicit IntegerLattice(IntMatrix basis);
  /// Lattice spanned by arbitrary generators (HNF basis; zero rows dropped).
  static IntegerLattice from_generators(const IntMatrix& generators);
  static IntegerLattice zero(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }

  /// Membership test via the Hermite basis.
  bool contains(std::span<const Integer> v) const;

 private:
  IntMatrix basis_;
};

/// (Q·L) ∩ Z^B.
IntegerLattice saturate(const IntegerLattice& L);

/// [saturate(L) : L], the product of the invariant factors of L's basis.
Integer saturation_index(const IntegerLattice& L);

/// Largest m with v ∈ L + m·Z^B, or nullopt when no largest m exists
/// (v ∈ L, or the admissible moduli are unbounded).
std::optional<Integer> image_order_divisor(const IntegerLattice& L, std::span<const Integer> v);

/// Project onto the listed coordinates (generators, not necessarily a basis).
IntMatrix project_columns(const IntMatrix& rows, const std::vector<std::size_t>& coords);

}  // namespace extcong
