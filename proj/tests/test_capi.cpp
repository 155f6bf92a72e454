#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "extcong/extcong.h"

using nlohmann::json;

namespace {

const std::string kData = EXTCONG_DATA_DIR;

// Takes ownership of a result string.
json take(char* s) {
  REQUIRE(s != nullptr);
  auto j = json::parse(s);
  xc_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::strcmp(xc_status_name(XC_OK), "Ok") == 0);
  CHECK(std::strcmp(xc_status_name(XC_NO_CONSTRAINT), "NoConstraint") == 0);
  CHECK(std::strcmp(xc_status_name(XC_PRECISION_BELOW_STURM), "PrecisionBelowSturm") == 0);
  CHECK(std::strcmp(xc_status_name(XC_NULL_ARGUMENT), "NullArgument") == 0);
  xc_curve* c = nullptr;
  CHECK(xc_curve_parse("0,0,0,0,0", &c) == XC_SINGULAR_CURVE);
  CHECK(c == nullptr);
  CHECK(std::string(xc_last_error()).find("singular") != std::string::npos);
  CHECK(xc_curve_parse(nullptr, &c) == XC_NULL_ARGUMENT);
  CHECK(xc_curve_parse("1,2", nullptr) == XC_NULL_ARGUMENT);
  xc_curve_free(nullptr);
  xc_forms_free(nullptr);
  xc_curve_set_free(nullptr);
  xc_string_free(nullptr);
}

TEST_CASE("count and milne") {
  xc_curve* c = nullptr;
  REQUIRE(xc_curve_parse("1,-1,1,13,-61", &c) == XC_OK);
  char* out = nullptr;
  REQUIRE(xc_count(c, 7, &out) == XC_OK);
  const auto j = take(out);
  CHECK(j["count"] == 12);
  CHECK(j["trace"] == -4);
  CHECK(xc_count(c, 3, &out) == XC_BAD_REDUCTION);
  CHECK(xc_count(c, 1000000007, &out) == XC_PRIME_TOO_LARGE);
  xc_curve_free(c);

  REQUIRE(xc_milne("1,3,5", "1,3,5", "5", nullptr, &out) == XC_OK);
  const auto m = take(out);
  CHECK(m["abs_value"]["num"] == 11);
  CHECK(m["excluded_pairs"] == 2);
  REQUIRE(xc_milne("1,3,5", "1,3,5", "5", "2", &out) == XC_OK);
  CHECK(take(out)["abs_value"]["den"] == 2);
  CHECK(xc_milne("1,3,2", "1,1,2", "2", nullptr, &out) == XC_INVALID_WEIL_POLYNOMIAL);
  CHECK(xc_milne("1,1,5", "1,1,7", "5", nullptr, &out) == XC_INVALID_WEIL_POLYNOMIAL);
}

TEST_CASE("curve sets and forms") {
  xc_curve_set* set = nullptr;
  REQUIRE(xc_curve_set_load((kData + "/curves.txt").c_str(), &set) == XC_OK);
  CHECK(xc_curve_set_size(set) == 7);
  xc_curve* c = nullptr;
  CHECK(xc_curve_set_get(set, "90c1", &c) == XC_OK);
  xc_curve_free(c);
  CHECK(xc_curve_set_get(set, "nope", &c) == XC_INVALID_ARGUMENT);

  xc_forms* forms = nullptr;
  REQUIRE(xc_forms_generate(set, "90", 72, "90c1", &forms) == XC_OK);
  char* text = nullptr;
  REQUIRE(xc_forms_serialize(forms, &text) == XC_OK);
  xc_forms* again = nullptr;
  REQUIRE(xc_forms_parse(text, &again) == XC_OK);
  char* text2 = nullptr;
  REQUIRE(xc_forms_serialize(again, &text2) == XC_OK);
  CHECK(std::string(text) == text2);
  xc_string_free(text);
  xc_string_free(text2);
  xc_forms_free(again);

  char* out = nullptr;
  REQUIRE(xc_modulus(forms, nullptr, 36, 0, &out) == XC_OK);
  CHECK(take(out)["m_A"] == 16);
  REQUIRE(xc_modulus(forms, "90c1", 0, 1, &out) == XC_OK);
  CHECK(take(out)["r_A"] == 48);
  CHECK(xc_modulus(forms, "90c1", 30, 0, &out) == XC_PRECISION_BELOW_STURM);
  CHECK(xc_modulus(forms, "zz", 36, 0, &out) == XC_MISSING_FORM);
  xc_forms_free(forms);

  CHECK(xc_curve_set_parse("a 11 0 -1 1\n", &set) == XC_PARSE_ERROR);
  CHECK(std::string(xc_last_error()).find("line 1") != std::string::npos);
  xc_curve_set_free(set);
  CHECK(xc_forms_load("/nonexistent.json", &forms) == XC_IO_ERROR);
  CHECK(xc_forms_parse("{\"level\":1}", &forms) == XC_SCHEMA_ERROR);
}

TEST_CASE("bound, theta and report") {
  const std::string a90 = "90a1@" + kData + "/curves.txt";
  const std::string c90 = "90c1@" + kData + "/curves.txt";
  xc_curve *a = nullptr, *c = nullptr;
  REQUIRE(xc_curve_parse(a90.c_str(), &a) == XC_OK);
  REQUIRE(xc_curve_parse(c90.c_str(), &c) == XC_OK);
  char* out = nullptr;
  REQUIRE(xc_bound(a, c, 2000, "2MN", 300, 2, &out) == XC_OK);
  const auto b = take(out);
  CHECK(b["S"] == 60);
  CHECK(b["gcd_bound"].get<long>() % 3 == 0);
  CHECK(b["verification"]["holds"] == true);
  REQUIRE(xc_bound(a, a, 100, "none", 0, 1, &out) == XC_OK);
  CHECK(take(out)["no_constraint"] == true);
  CHECK(xc_bound(a, c, 5, "2MN", 0, 1, &out) == XC_EMPTY_SWEEP);

  xc_forms* forms = nullptr;
  REQUIRE(xc_forms_load((kData + "/level90.json").c_str(), &forms) == XC_OK);
  REQUIRE(xc_report(a, c, forms, "90c1", "16", 1000, 0, 1, &out) == XC_OK);
  const auto r = take(out);
  CHECK(r["modulus"]["m_A"] == 16);
  CHECK(r["modulus"]["all_pass"] == true);
  REQUIRE(xc_theta(forms, "90a1", "3", "90c1", 1, "16200", &out) == XC_OK);
  CHECK(take(out)["ladder"]["achieved"] == 1);
  CHECK(xc_theta(forms, "90a1", "3", "none", 1, nullptr, &out) == XC_MISSING_FORM);
  xc_forms_free(forms);
  xc_curve_free(a);
  xc_curve_free(c);

  REQUIRE(xc_sturm("90", 2, &out) == XC_OK);
  CHECK(take(out)["sturm_bound"] == 36);
  CHECK(xc_sturm("x", 2, &out) == XC_INVALID_ARGUMENT);
}

TEST_CASE("symmetric square") {
  xc_curve* e = nullptr;
  REQUIRE(xc_curve_parse("0,-1,1,-10,-20", &e) == XC_OK);
  char* out = nullptr;
  REQUIRE(xc_symsq(e, 2000, 5, &out) == XC_OK);
  const auto j = take(out);
  CHECK(j["terms"]["3"] == -2);
  CHECK(j["terms"]["5"] == -4);
  CHECK(j["terms"].size() == 5);
  CHECK(j.contains("value"));
  REQUIRE(xc_symsq(e, 10, 5, &out) == XC_OK);
  CHECK(!take(out).contains("value"));  // coefficients only below 1000
  xc_curve_free(e);
}
