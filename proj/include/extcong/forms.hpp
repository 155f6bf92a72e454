#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "extcong/integer.hpp"

namespace extcong {

/// One weight-2 cusp form in a dataset. For an oldform translate
/// g(q) = f(q^d) the base coefficients of f are kept and the translate is
/// materialized on construction: a_{d n} = base_n, a_m = 0 for d ∤ m.
struct Eigenform {
  std::string label;
  bool distinguished = false;
  unsigned shift = 1;               // d
  std::vector<Integer> base;        // coefficients of f, length B
  std::vector<Integer> coefficients;  // coefficients of f(q^d), length B
};

/// Coefficient vectors of (a spanning set of) S_2(Γ0(N)) truncated to B.
class EigenformDataset {
 public:
  /// Throws LengthMismatch when a base sequence does not have length B, and
  /// SchemaError for duplicate labels, several distinguished forms, d = 0 or
  /// a non-positive level.
  EigenformDataset(Integer level, std::size_t precision, std::vector<Eigenform> forms);

  static Eigenform make_form(std::string label, std::vector<Integer> base, unsigned shift = 1,
                             bool distinguished = false);

  const Integer& level() const noexcept { return level_; }
  std::size_t precision() const noexcept { return precision_; }
  const std::vector<Eigenform>& forms() const noexcept { return forms_; }

  /// Throws MissingForm.
  const Eigenform& find(const std::string& label) const;
  /// The distinguished form; throws MissingForm if none is flagged.
  const Eigenform& distinguished() const;

 private:
  Integer level_;
  std::size_t precision_;
  std::vector<Eigenform> forms_;
};

}  // namespace extcong
