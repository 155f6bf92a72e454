#include "extcong/extcong.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "extcong/congruence.hpp"
#include "extcong/error.hpp"
#include "extcong/io.hpp"
#include "extcong/milne.hpp"
#include "extcong/modulus.hpp"
#include "extcong/symsq.hpp"

struct xc_curve {
  extcong::RationalECurve curve;
};

struct xc_curve_set {
  std::vector<extcong::RationalECurve> curves;
};

struct xc_forms {
  extcong::EigenformDataset data;
};

namespace {

thread_local std::string last_error;

xc_status to_status(extcong::ErrorCode code) {
  return static_cast<xc_status>(static_cast<int>(code) + 1);
}

template <typename F>
xc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return XC_OK;
  } catch (const extcong::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return XC_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return XC_INTERNAL_ERROR;
  }
}

xc_status null_argument(const char* what) {
  last_error = std::string(what) + " must not be NULL";
  return XC_NULL_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string opt(const char* s) { return s ? std::string(s) : std::string(); }

}  // namespace

extern "C" {

const char* xc_status_name(xc_status status) {
  switch (status) {
    case XC_OK: return "Ok";
    case XC_NULL_ARGUMENT: return "NullArgument";
    case XC_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  if (status > XC_OK && status < XC_NULL_ARGUMENT) {
    return extcong::error_code_name(static_cast<extcong::ErrorCode>(status - 1));
  }
  return "Unknown";
}

const char* xc_last_error(void) { return last_error.c_str(); }

void xc_string_free(char* s) { std::free(s); }

xc_status xc_curve_parse(const char* spec, xc_curve** out) {
  if (!spec || !out) return null_argument("spec/out");
  return guarded([&] { *out = new xc_curve{extcong::parse_curve_spec(spec)}; });
}

void xc_curve_free(xc_curve* curve) { delete curve; }

xc_status xc_curve_set_parse(const char* text, xc_curve_set** out) {
  if (!text || !out) return null_argument("text/out");
  return guarded([&] { *out = new xc_curve_set{extcong::parse_curve_file(text)}; });
}

xc_status xc_curve_set_load(const char* path, xc_curve_set** out) {
  if (!path || !out) return null_argument("path/out");
  return guarded([&] {
    *out = new xc_curve_set{extcong::parse_curve_file(extcong::read_text_file(path))};
  });
}

size_t xc_curve_set_size(const xc_curve_set* set) { return set ? set->curves.size() : 0; }

xc_status xc_curve_set_get(const xc_curve_set* set, const char* label, xc_curve** out) {
  if (!set || !label || !out) return null_argument("set/label/out");
  return guarded([&] {
    for (const auto& c : set->curves) {
      if (c.label() == label) {
        *out = new xc_curve{c};
        return;
      }
    }
    throw extcong::Error(extcong::ErrorCode::InvalidArgument,
                         std::string("no curve labelled ") + label);
  });
}

xc_status xc_curve_set_serialize(const xc_curve_set* set, char** out) {
  if (!set || !out) return null_argument("set/out");
  return guarded([&] { *out = dup(extcong::serialize_curve_file(set->curves)); });
}

void xc_curve_set_free(xc_curve_set* set) { delete set; }

xc_status xc_forms_parse(const char* json, xc_forms** out) {
  if (!json || !out) return null_argument("json/out");
  return guarded([&] { *out = new xc_forms{extcong::parse_forms_json(json)}; });
}

xc_status xc_forms_load(const char* path, xc_forms** out) {
  if (!path || !out) return null_argument("path/out");
  return guarded([&] {
    *out = new xc_forms{extcong::parse_forms_json(extcong::read_text_file(path))};
  });
}

xc_status xc_forms_serialize(const xc_forms* forms, char** out) {
  if (!forms || !out) return null_argument("forms/out");
  return guarded([&] { *out = dup(extcong::serialize_forms_json(forms->data)); });
}

xc_status xc_forms_generate(const xc_curve_set* set, const char* level, size_t precision,
                            const char* distinguished, xc_forms** out) {
  if (!set || !level || !out) return null_argument("set/level/out");
  return guarded([&] {
    *out = new xc_forms{extcong::forms_from_curves(set->curves, extcong::parse_integer(level),
                                                   precision, opt(distinguished))};
  });
}

void xc_forms_free(xc_forms* forms) { delete forms; }

xc_status xc_count(const xc_curve* curve, uint64_t p, char** out) {
  if (!curve || !out) return null_argument("curve/out");
  return guarded([&] {
    extcong::tier_for_prime(p);
    *out = dup(extcong::count_json(extcong::reduce_mod_p(curve->curve, p)));
  });
}

xc_status xc_milne(const char* fa, const char* fb, const char* q, const char* D, char** out) {
  if (!fa || !fb || !q || !out) return null_argument("fa/fb/q/out");
  return guarded([&] {
    const extcong::Integer Q = extcong::parse_integer(q);
    const extcong::WeilPolynomial A(extcong::parse_integer_list(fa), Q);
    const extcong::WeilPolynomial B(extcong::parse_integer_list(fb), Q);
    const extcong::Integer d = D ? extcong::parse_integer(D) : extcong::Integer(1);
    *out = dup(extcong::ext_order_json(extcong::ext_order_ff(A, B, d), Q));
  });
}

xc_status xc_bound(const xc_curve* a, const xc_curve* b, uint64_t p_max, const char* mask,
                   uint64_t verify_n, unsigned threads, char** out) {
  if (!a || !b || !out) return null_argument("a/b/out");
  return guarded([&] {
    using namespace extcong;
    const std::string m = mask ? mask : "2MN";
    if (m != "2MN" && m != "MN" && m != "none") {
      throw Error(ErrorCode::InvalidArgument, "mask must be 2MN, MN or none");
    }
    const CongruenceReport report = ext_exponent_gcd_bound(a->curve, b->curve, p_max, threads);
    std::optional<CongruenceCheck> check;
    if (m != "none" && !report.no_constraint() && verify_n > 0) {
      Integer MN = a->curve.conductor_or_radical() * b->curve.conductor_or_radical();
      if (m == "2MN") MN *= 2;
      std::vector<std::uint64_t> bad;
      for (const auto& p : prime_divisors(MN)) bad.push_back(to_u64(p));
      check = verify_congruence(coefficient_table(a->curve, verify_n, bad),
                                coefficient_table(b->curve, verify_n, bad), report.gcd_bound,
                                IndexFilter::coprime_to(MN));
    }
    *out = dup(congruence_json(report, check));
  });
}

xc_status xc_theta(const xc_forms* forms, const char* label, const char* modulus,
                   const char* against, unsigned ladder, const char* restrict_to, char** out) {
  if (!forms || !modulus || !out) return null_argument("forms/modulus/out");
  return guarded([&] {
    std::optional<std::string> g;
    if (against) g = against;
    std::optional<extcong::Integer> M;
    if (restrict_to) M = extcong::parse_integer(restrict_to);
    *out = dup(extcong::theta_json(forms->data, opt(label), extcong::parse_integer(modulus), g,
                                   ladder, M));
  });
}

xc_status xc_modulus(const xc_forms* forms, const char* label, size_t precision, int restricted,
                     char** out) {
  if (!forms || !out) return null_argument("forms/out");
  return guarded([&] {
    using namespace extcong;
    const auto& data = forms->data;
    const std::size_t B = precision ? precision : data.precision();
    const Eigenform& f = label && *label ? data.find(label) : data.distinguished();
    const Integer value = restricted
                              ? restricted_congruence_modulus(data, f.label, B, data.level())
                              : congruence_modulus(data, f.label, B);
    *out = dup(modulus_json(f.label, B, restricted != 0, data.level(), value));
  });
}

xc_status xc_sturm(const char* level, unsigned weight, char** out) {
  if (!level || !out) return null_argument("level/out");
  return guarded([&] {
    const extcong::Integer N = extcong::parse_integer(level);
    *out = dup("{\"sturm_bound\":" + extcong::sturm_bound(N, weight).get_str() + "}");
  });
}

xc_status xc_symsq(const xc_curve* curve, uint64_t n_max, size_t terms_shown, char** out) {
  if (!curve || !out) return null_argument("curve/out");
  return guarded([&] {
    using namespace extcong;
    const SymSqSeries series = symsq_coefficients(curve->curve, n_max);
    std::optional<SymSqValue> value;
    if (n_max >= 1000) value = symsq_partial_sum(series);
    *out = dup(symsq_json(series, value, terms_shown));
  });
}

xc_status xc_report(const xc_curve* a, const xc_curve* b, const xc_forms* forms,
                    const char* label, const char* d_A, uint64_t p_max, size_t precision,
                    unsigned threads, char** out) {
  if (!a || !b || !forms || !d_A || !out) return null_argument("a/b/forms/d_A/out");
  return guarded([&] {
    using namespace extcong;
    const auto& data = forms->data;
    const std::size_t B = precision ? precision : data.precision();
    const Eigenform& f = label && *label ? data.find(label) : data.distinguished();
    const CongruenceReport sweep = ext_exponent_gcd_bound(a->curve, b->curve, p_max, threads);
    auto constrained = [](auto&& compute) -> std::optional<Integer> {
      try {
        return compute();
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NoConstraint) return std::nullopt;
        throw;
      }
    };
    const auto m = constrained([&] { return congruence_modulus(data, f.label, B); });
    const auto r = constrained(
        [&] { return restricted_congruence_modulus(data, f.label, B, data.level()); });
    std::optional<Integer> G;
    if (!sweep.no_constraint()) G = sweep.gcd_bound;
    const ModulusReport report = divisibility_report(parse_integer(d_A), m, r, G, data.level());
    *out = dup(combine_json({{"form", json_string(f.label)},
                             {"precision", std::to_string(B)},
                             {"congruence", congruence_json(sweep)},
                             {"modulus", modulus_report_json(report)}}));
  });
}

}  // extern "C"
