#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "extcong/extcong.h"

namespace {

constexpr int kUsageError = 1;
constexpr int kDomainError = 2;

struct Failure {
  xc_status status;
  std::string message;
};

void check(xc_status s) {
  if (s != XC_OK) throw Failure{s, xc_last_error()};
}

// Owning wrappers for the C handles.
template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
};
using Curve = Handle<xc_curve, xc_curve_free>;
using CurveSet = Handle<xc_curve_set, xc_curve_set_free>;
using Forms = Handle<xc_forms, xc_forms_free>;

void emit(char* json) {
  std::cout << json << '\n';
  xc_string_free(json);
}

const char* or_null(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extension-group bounds and congruence moduli for elliptic curves over Q"};
  app.require_subcommand(1);

  std::string curve_spec, a_spec, b_spec, fa, fb, q, D, mask = "2MN";
  std::string in_file, modulus, form_label, against, restrict_to, forms_file;
  std::string N, dA, curves_file, level, distinguished, out_file;
  std::uint64_t p = 0, pmax = 10000, verify_n = 1000, nmax = 0;
  std::size_t precision = 0, terms = 20;
  unsigned threads = 1, weight = 2, ladder = 1;
  bool restricted = false;

  auto* count = app.add_subcommand("count", "point count of a reduction");
  count->add_option("--curve", curve_spec, "a1,a2,a3,a4,a6 or label@file")->required();
  count->add_option("--p", p, "prime")->required();

  auto* milne = app.add_subcommand("milne", "order of Ext^1 over F_q from Weil polynomials");
  milne->add_option("--fa", fa, "descending coefficients, e.g. 1,3,5")->required();
  milne->add_option("--fb", fb)->required();
  milne->add_option("--q", q)->required();
  milne->add_option("--D", D, "trace pairing discriminant (default 1)");

  auto* bound = app.add_subcommand("bound", "gcd bound on the exponent of Ext^1_Q(A, B)");
  bound->add_option("--a", a_spec)->required();
  bound->add_option("--b", b_spec)->required();
  bound->add_option("--pmax", pmax)->required();
  bound->add_option("--mask", mask, "index filter for the Hecke check: 2MN, MN or none")
      ->check(CLI::IsMember({"2MN", "MN", "none"}));
  bound->add_option("--verify-n", verify_n, "Hecke table length for the check");
  bound->add_option("--threads", threads)->check(CLI::Range(1u, 256u));

  auto* theta = app.add_subcommand("theta", "theta operator on a form of a forms file");
  theta->add_option("--in", in_file)->required()->check(CLI::ExistingFile);
  theta->add_option("--mod", modulus)->required();
  theta->add_option("--f", form_label, "form label (default: distinguished)");
  theta->add_option("--against", against, "second form for the congruence ladder");
  theta->add_option("--ladder", ladder, "ladder height");
  theta->add_option("--restrict", restrict_to, "zero a_n with gcd(n, M) > 1 first");

  auto* mod = app.add_subcommand("modulus", "congruence modulus of a form");
  mod->add_option("--forms", forms_file)->required()->check(CLI::ExistingFile);
  mod->add_option("--f", form_label, "form label (default: distinguished)");
  mod->add_option("--precision", precision, "coefficients used (default: all)");
  mod->add_flag("--restricted", restricted, "only n coprime to 2N");

  auto* sturm = app.add_subcommand("sturm", "Sturm bound for Gamma0(N)");
  sturm->add_option("--N", N)->required();
  sturm->add_option("--k", weight, "weight")->check(CLI::PositiveNumber);

  auto* symsq = app.add_subcommand("symsq", "symmetric square coefficients and L(Sym^2 E, 2)");
  symsq->add_option("--curve", curve_spec)->required();
  symsq->add_option("--nmax", nmax)->required()->check(CLI::PositiveNumber);
  symsq->add_option("--terms", terms, "coefficients printed");

  auto* report = app.add_subcommand("report", "sweep plus modulus audit against d_A");
  report->add_option("--a", a_spec)->required();
  report->add_option("--b", b_spec)->required();
  report->add_option("--forms", forms_file)->required()->check(CLI::ExistingFile);
  report->add_option("--dA", dA, "modular degree of A")->required();
  report->add_option("--f", form_label, "form label (default: distinguished)");
  report->add_option("--pmax", pmax);
  report->add_option("--precision", precision);
  report->add_option("--threads", threads)->check(CLI::Range(1u, 256u));

  auto* forms = app.add_subcommand("forms", "build a forms file from curve records");
  forms->add_option("--curves", curves_file)->required()->check(CLI::ExistingFile);
  forms->add_option("--level", level)->required();
  forms->add_option("--precision", precision)->required();
  forms->add_option("--distinguished", distinguished);
  forms->add_option("--out", out_file, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    char* out = nullptr;
    if (*count) {
      Curve c;
      check(xc_curve_parse(curve_spec.c_str(), &c.ptr));
      check(xc_count(c.ptr, p, &out));
    } else if (*milne) {
      check(xc_milne(fa.c_str(), fb.c_str(), q.c_str(), or_null(D), &out));
    } else if (*bound) {
      Curve a, b;
      check(xc_curve_parse(a_spec.c_str(), &a.ptr));
      check(xc_curve_parse(b_spec.c_str(), &b.ptr));
      check(xc_bound(a.ptr, b.ptr, pmax, mask.c_str(), verify_n, threads, &out));
    } else if (*theta) {
      Forms f;
      check(xc_forms_load(in_file.c_str(), &f.ptr));
      check(xc_theta(f.ptr, or_null(form_label), modulus.c_str(), or_null(against), ladder,
                     or_null(restrict_to), &out));
    } else if (*mod) {
      Forms f;
      check(xc_forms_load(forms_file.c_str(), &f.ptr));
      check(xc_modulus(f.ptr, or_null(form_label), precision, restricted ? 1 : 0, &out));
    } else if (*sturm) {
      check(xc_sturm(N.c_str(), weight, &out));
    } else if (*symsq) {
      Curve c;
      check(xc_curve_parse(curve_spec.c_str(), &c.ptr));
      check(xc_symsq(c.ptr, nmax, terms, &out));
    } else if (*report) {
      Curve a, b;
      Forms f;
      check(xc_curve_parse(a_spec.c_str(), &a.ptr));
      check(xc_curve_parse(b_spec.c_str(), &b.ptr));
      check(xc_forms_load(forms_file.c_str(), &f.ptr));
      check(xc_report(a.ptr, b.ptr, f.ptr, or_null(form_label), dA.c_str(), pmax, precision,
                      threads, &out));
    } else if (*forms) {
      CurveSet set;
      Forms f;
      check(xc_curve_set_load(curves_file.c_str(), &set.ptr));
      check(xc_forms_generate(set.ptr, level.c_str(), precision, or_null(distinguished), &f.ptr));
      check(xc_forms_serialize(f.ptr, &out));
      if (!out_file.empty()) {
        std::ofstream os(out_file, std::ios::binary);
        os << out;
        xc_string_free(out);
        if (!os) throw Failure{XC_IO_ERROR, "cannot write " + out_file};
        return 0;
      }
      std::cout << out;
      xc_string_free(out);
      return 0;
    }
    emit(out);
    return 0;
  } catch (const Failure& f) {
    const nlohmann::ordered_json payload{
        {"error", {{"code", xc_status_name(f.status)}, {"message", f.message}}}};
    std::cout << payload.dump() << '\n';
    std::cerr << "extcong: " << f.message << '\n';
    return kDomainError;
  }
}
