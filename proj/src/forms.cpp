#include "extcong/forms.hpp"

#include <set>

#include "extcong/error.hpp"

namespace extcong {

Eigenform EigenformDataset::make_form(std::string label, std::vector<Integer> base,
                                      unsigned shift, bool distinguished) {
  Eigenform f;
  f.label = std::move(label);
  f.distinguished = distinguished;
  f.shift = shift;
  f.base = std::move(base);
  return f;
}

EigenformDataset::EigenformDataset(Integer level, std::size_t precision,
                                   std::vector<Eigenform> forms)
    : level_(std::move(level)), precision_(precision), forms_(std::move(forms)) {
  if (level_ < 1) throw Error(ErrorCode::SchemaError, "level must be positive");
  if (precision_ == 0) throw Error(ErrorCode::SchemaError, "precision must be positive");
  std::set<std::string> seen;
  std::size_t flagged = 0;
  for (auto& f : forms_) {
    if (f.label.empty()) throw Error(ErrorCode::SchemaError, "form with empty label");
    if (!seen.insert(f.label).second) {
      throw Error(ErrorCode::SchemaError, "duplicate form label " + f.label);
    }
    if (f.shift == 0) throw Error(ErrorCode::SchemaError, "form " + f.label + ": d must be >= 1");
    if (mpz_divisible_ui_p(level_.get_mpz_t(), f.shift) == 0) {
      throw Error(ErrorCode::SchemaError,
                  "form " + f.label + ": d = " + std::to_string(f.shift) + " does not divide the level");
    }
    if (f.base.size() != precision_) {
      throw Error(ErrorCode::LengthMismatch,
                  "form " + f.label + " has " + std::to_string(f.base.size()) +
                      " coefficients, expected " + std::to_string(precision_));
    }
    if (f.distinguished) ++flagged;
    f.coefficients.assign(precision_, Integer(0));
    for (std::size_t n = 1; n * f.shift <= precision_; ++n) {
      f.coefficients[n * f.shift - 1] = f.base[n - 1];
    }
  }
  if (flagged > 1) throw Error(ErrorCode::SchemaError, "more than one distinguished form");
}

const Eigenform& EigenformDataset::find(const std::string& label) const {
  for (const auto& f : forms_) {
    if (f.label == label) return f;
  }
  throw Error(ErrorCode::MissingForm, "no form labelled " + label);
}

const Eigenform& EigenformDataset::distinguished() const {
  for (const auto& f : forms_) {
    if (f.distinguished) return f;
  }
  throw Error(ErrorCode::MissingForm, "dataset has no distinguished form");
}

}  // namespace extcong
