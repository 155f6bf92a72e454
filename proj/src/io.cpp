#include "extcong/io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "extcong/error.hpp"

namespace extcong {

using json = nlohmann::ordered_json;

namespace {

// Integers beyond 64 bits travel through nlohmann as tagged strings and are
// unquoted when the document is rendered.
const char* const kBigTag = "#bigint:";

json big(const Integer& n) {
  if (fits_i64(n)) return to_i64(n);
  return std::string(kBigTag) + n.get_str();
}

json big_or_null(const std::optional<Integer>& n) { return n ? big(*n) : json(nullptr); }

json rational(const Rational& r) {
  return json{{"num", big(r.get_num())}, {"den", big(r.get_den())}};
}

json big_list(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(big(x));
  return out;
}

std::string render(const json& j) {
  static const std::regex tagged("\"#bigint:(-?[0-9]+)\"");
  return std::regex_replace(j.dump(), tagged, "$1");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Integer json_integer(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return from_u64(v.get<std::uint64_t>());
  if (v.is_number_integer()) return from_i64(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::SchemaError, where + ": expected an integer");
}

std::uint64_t json_count(const json& v, const std::string& where) {
  const Integer n = json_integer(v, where);
  if (n < 0 || !fits_u64(n)) throw Error(ErrorCode::SchemaError, where + ": out of range");
  return to_u64(n);
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t count = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
}

std::vector<RationalECurve> parse_curve_file(const std::string& text) {
  std::vector<RationalECurve> curves;
  std::set<std::string> labels;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.size() != 7) {
      throw ParseError(line_no, "expected `label conductor a1 a2 a3 a4 a6`, got " +
                                    std::to_string(tok.size()) + " fields");
    }
    try {
      const Integer conductor = parse_integer(tok[1]);
      if (conductor < 1) throw ParseError(line_no, "conductor must be positive");
      Weierstrass w{parse_integer(tok[2]), parse_integer(tok[3]), parse_integer(tok[4]),
                    parse_integer(tok[5]), parse_integer(tok[6])};
      if (!labels.insert(tok[0]).second) throw ParseError(line_no, "duplicate label " + tok[0]);
      curves.emplace_back(std::move(w), tok[0], conductor);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return curves;
}

std::string serialize_curve_file(const std::vector<RationalECurve>& curves) {
  std::string out;
  for (const auto& c : curves) {
    const auto& w = c.coeffs();
    out += c.label() + ' ' + c.conductor_or_radical().get_str();
    for (const auto* a : {&w.a1, &w.a2, &w.a3, &w.a4, &w.a6}) out += ' ' + a->get_str();
    out += '\n';
  }
  return out;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(parse_integer(trim(item)));
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty integer list");
  return out;
}

RationalECurve parse_curve_spec(const std::string& spec) {
  const auto at = spec.find('@');
  if (at != std::string::npos) {
    const std::string label = spec.substr(0, at);
    for (auto& c : parse_curve_file(read_text_file(spec.substr(at + 1)))) {
      if (c.label() == label) return c;
    }
    throw Error(ErrorCode::InvalidArgument, "no curve labelled " + label + " in " +
                                                spec.substr(at + 1));
  }
  const auto a = parse_integer_list(spec);
  if (a.size() != 5) {
    throw Error(ErrorCode::InvalidArgument, "curve needs 5 coefficients a1,a2,a3,a4,a6");
  }
  return RationalECurve(Weierstrass{a[0], a[1], a[2], a[3], a[4]});
}

EigenformDataset parse_forms_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "level" && key != "precision" && key != "forms") {
      throw Error(ErrorCode::SchemaError, "unknown key " + key);
    }
  }
  if (!doc.contains("level") || !doc.contains("precision") || !doc.contains("forms")) {
    throw Error(ErrorCode::SchemaError, "level, precision and forms are required");
  }
  const Integer level = json_integer(doc["level"], "level");
  const std::uint64_t B = json_count(doc["precision"], "precision");
  if (!doc["forms"].is_array()) throw Error(ErrorCode::SchemaError, "forms must be an array");

  std::vector<Eigenform> forms;
  std::size_t i = 0;
  for (const auto& f : doc["forms"]) {
    const std::string where = "forms[" + std::to_string(i++) + "]";
    if (!f.is_object()) throw Error(ErrorCode::SchemaError, where + " must be an object");
    for (const auto& [key, _] : f.items()) {
      if (key != "label" && key != "distinguished" && key != "d" && key != "an") {
        throw Error(ErrorCode::SchemaError, where + ": unknown key " + key);
      }
    }
    if (!f.contains("label") || !f["label"].is_string()) {
      throw Error(ErrorCode::SchemaError, where + ": label must be a string");
    }
    if (!f.contains("an") || !f["an"].is_array()) {
      throw Error(ErrorCode::SchemaError, where + ": an must be an array");
    }
    bool distinguished = false;
    if (f.contains("distinguished")) {
      if (!f["distinguished"].is_boolean()) {
        throw Error(ErrorCode::SchemaError, where + ": distinguished must be a boolean");
      }
      distinguished = f["distinguished"].get<bool>();
    }
    std::uint64_t d = 1;
    if (f.contains("d")) d = json_count(f["d"], where + ".d");
    if (d > UINT32_MAX) throw Error(ErrorCode::SchemaError, where + ": d out of range");
    std::vector<Integer> an;
    an.reserve(f["an"].size());
    for (const auto& v : f["an"]) an.push_back(json_integer(v, where + ".an"));
    forms.push_back(EigenformDataset::make_form(f["label"].get<std::string>(), std::move(an),
                                                static_cast<unsigned>(d), distinguished));
  }
  return EigenformDataset(level, B, std::move(forms));
}

std::string serialize_forms_json(const EigenformDataset& forms) {
  std::string out = "{\n  \"level\": " + forms.level().get_str() +
                    ",\n  \"precision\": " + std::to_string(forms.precision()) +
                    ",\n  \"forms\": [\n";
  for (std::size_t i = 0; i < forms.forms().size(); ++i) {
    const auto& f = forms.forms()[i];
    json j;
    j["label"] = f.label;
    j["distinguished"] = f.distinguished;
    j["d"] = f.shift;
    j["an"] = big_list(f.base);
    out += "    " + render(j) + (i + 1 < forms.forms().size() ? ",\n" : "\n");
  }
  out += "  ]\n}\n";
  return out;
}

EigenformDataset forms_from_curves(const std::vector<RationalECurve>& curves,
                                   const Integer& level, std::size_t precision,
                                   const std::string& distinguished) {
  std::vector<Eigenform> forms;
  bool found = distinguished.empty();
  for (const auto& c : curves) {
    if (!c.conductor()) {
      throw Error(ErrorCode::InvalidArgument, "curve " + c.label() + " has no conductor");
    }
    const Integer& M = *c.conductor();
    if (!mpz_divisible_p(level.get_mpz_t(), M.get_mpz_t())) continue;
    const auto base = newform_coefficients(c, precision);
    for (const auto& d : divisors(level / M)) {
      const bool is_f = (d == 1 && c.label() == distinguished);
      found = found || is_f;
      const std::string label = d == 1 ? c.label() : c.label() + ".d" + d.get_str();
      forms.push_back(
          EigenformDataset::make_form(label, base, static_cast<unsigned>(d.get_ui()), is_f));
    }
  }
  if (!found) throw Error(ErrorCode::MissingForm, "no curve labelled " + distinguished);
  return EigenformDataset(level, precision, std::move(forms));
}

std::string count_json(const FiniteCurve& curve) {
  const std::uint64_t p = curve.p();
  const CountTier tier = tier_for_prime(p);
  json j;
  j["p"] = p;
  std::uint64_t count;
  std::optional<BsgsOutcome> bsgs;
  if (tier == CountTier::BabyStepGiantStep) {
    bsgs = count_points_bsgs(curve);
    count = bsgs->count;
  } else {
    count = count_points(curve);
  }
  const Integer P = from_u64(p);
  const Integer w = isqrt(4 * P);
  j["count"] = count;
  j["trace"] = big(P + 1 - from_u64(count));
  j["tier"] = tier_name(tier);
  j["hasse_window"] = json::array({big(P + 1 - w), big(P + 1 + w)});
  if (bsgs) {
    j["bsgs"] = json{{"samples", bsgs->samples},
                     {"fell_back", bsgs->fell_back},
                     {"exponent_lcm", bsgs->exponent_lcm}};
  }
  return render(j);
}

std::string ext_order_json(const ExtOrderResult& r, const Integer& q) {
  json j;
  j["abs_value"] = rational(r.value);
  j["sign_ambiguous"] = r.sign_ambiguous;
  j["excluded_pairs"] = r.excluded_pairs;
  j["D"] = big(r.D);
  j["q"] = big(q);
  j["integral"] = r.value.get_den() == 1;
  return render(j);
}

namespace {

json congruence_object(const CongruenceReport& r, const std::optional<CongruenceCheck>& check) {
  json j;
  j["S"] = big(r.S);
  j["s_convention"] = r.s_convention;
  j["p_max"] = r.p_max;
  j["gcd_bound"] = big(r.gcd_bound);
  j["no_constraint"] = r.no_constraint();
  j["interpretation"] = r.interpretation();
  j["primes_used"] = r.primes_used;
  j["skipped_bad_model"] = r.skipped_bad_model;
  json diffs = json::object();
  for (const auto& [p, d] : r.differences) diffs[std::to_string(p)] = big(d);
  j["differences"] = diffs;
  if (check) {
    json c;
    c["modulus"] = big(check->modulus);
    c["filter"] = check->filter;
    c["tested_up_to"] = check->tested_up_to;
    c["indices_tested"] = check->indices_tested;
    c["indices_missing"] = check->indices_missing;
    c["holds"] = check->holds();
    json v = json::array();
    for (const auto& x : check->violations) {
      v.push_back(json{{"n", x.n}, {"a", big(x.a)}, {"b", big(x.b)}});
    }
    c["violations"] = v;
    j["verification"] = c;
  }
  return j;
}

json sandwich_object(const Sandwich& s) {
  json j;
  j["quantity"] = s.quantity;
  j["lower"] = big(s.lower);
  j["upper"] = big_or_null(s.upper);
  j["consistent"] = s.consistent;
  j["candidates"] = big_list(s.candidates);
  j["forced"] = big_or_null(s.forced);
  return j;
}

}  // namespace

std::string congruence_json(const CongruenceReport& r, const std::optional<CongruenceCheck>& check) {
  return render(congruence_object(r, check));
}

std::string modulus_json(const std::string& label, std::size_t precision, bool restricted,
                         const Integer& level, const Integer& value) {
  json j;
  j["form"] = label;
  j["level"] = big(level);
  j["precision"] = precision;
  j["sturm_bound"] = big(sturm_bound(level));
  j["restricted"] = restricted;
  j[restricted ? "r_A" : "m_A"] = big(value);
  return render(j);
}

std::string modulus_report_json(const ModulusReport& r) {
  json j;
  j["d_A"] = big(r.d_A);
  j["m_A"] = big_or_null(r.m_A);
  j["r_A"] = big_or_null(r.r_A);
  j["gcd_bound_e"] = big_or_null(r.gcd_bound_e);
  j["level"] = big_or_null(r.level);
  json audits = json::array();
  for (const auto& a : r.audits) {
    audits.push_back(json{{"relation", a.relation},
                          {"evaluated", a.evaluated},
                          {"holds", a.holds},
                          {"informational", a.informational}});
  }
  j["audits"] = audits;
  j["e_A"] = sandwich_object(r.e_A);
  j["e_A_T"] = sandwich_object(r.e_A_T);
  j["squarefree_level"] = r.squarefree_level;
  j["squarefree_prediction_holds"] =
      r.squarefree_prediction_holds ? json(*r.squarefree_prediction_holds) : json(nullptr);
  j["all_pass"] = r.all_pass();
  return render(j);
}

std::string symsq_json(const SymSqSeries& series, const std::optional<SymSqValue>& value,
                       std::size_t terms_shown) {
  json j;
  j["label"] = series.label;
  j["n_max"] = series.n_max;
  j["approximate_at_bad_primes"] = series.approximate_at_bad_primes;
  j["bad_primes"] = series.bad_primes;
  json terms = json::object();
  const std::size_t shown = std::min<std::size_t>(terms_shown, series.terms.size());
  for (std::size_t n = 1; n <= shown; ++n) terms[std::to_string(n)] = big(series.terms[n - 1]);
  j["terms"] = terms;
  if (value) {
    j["s"] = 2;
    j["value"] = value->value;
    j["envelope"] = value->envelope;
    j["envelope_horizon"] = value->envelope_horizon;
  }
  return render(j);
}

std::string theta_json(const EigenformDataset& forms, const std::string& label,
                       const Integer& modulus, const std::optional<std::string>& against,
                       unsigned ladder, const std::optional<Integer>& restrict_to) {
  if (modulus < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  const Eigenform& f = label.empty() ? forms.distinguished() : forms.find(label);
  auto support = [&](const std::vector<Integer>& a) {
    const QSeries q(a);
    return restrict_to ? restrict_support(q, *restrict_to) : q;
  };
  const QSeries s = support(f.coefficients);
  json j;
  j["label"] = f.label;
  j["modulus"] = big(modulus);
  j["precision"] = forms.precision();
  j["restricted_to"] = big_or_null(restrict_to);
  j["theta"] = big_list(theta(s).reduced(modulus).coeffs());
  const bool odd_prime = modulus > 2 && is_prime(modulus);
  if (odd_prime) {
    const KernelResult k = theta_kernel_mod(s, modulus);
    j["kernel"] = json{{"in_kernel", k.in_kernel},
                       {"witness", k.witness ? json(*k.witness) : json(nullptr)}};
  } else {
    j["kernel"] = nullptr;
  }
  if (against) {
    if (!odd_prime) {
      throw Error(ErrorCode::InvalidArgument, "the congruence ladder needs an odd prime modulus");
    }
    const Eigenform& g = forms.find(*against);
    const LiftReport r = congruence_lift_check(s, support(g.coefficients), modulus, ladder);
    json steps = json::array();
    for (const auto& st : r.ladder) {
      steps.push_back(json{{"k", st.k},
                           {"holds", st.holds},
                           {"witness", st.witness ? json(*st.witness) : json(nullptr)}});
    }
    j["ladder"] = json{{"against", g.label},
                       {"requested", r.requested},
                       {"achieved", r.achieved},
                       {"steps", steps}};
  }
  return render(j);
}

std::string json_string(const std::string& s) { return json(s).dump(); }

std::string error_json(const std::string& code, const std::string& message) {
  return json{{"error", json{{"code", code}, {"message", message}}}}.dump();
}

std::string combine_json(const std::vector<std::pair<std::string, std::string>>& parts) {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += json(parts[i].first).dump() + ':' + parts[i].second;
  }
  return out + '}';
}

}  // namespace extcong
