#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extcong/congruence.hpp"
#include "extcong/ec_core.hpp"
#include "extcong/forms.hpp"
#include "extcong/milne.hpp"
#include "extcong/modulus.hpp"
#include "extcong/qseries.hpp"
#include "extcong/symsq.hpp"

namespace extcong {

// Curve files: one `label conductor a1 a2 a3 a4 a6` record per line, '#'
// starts a comment. Parsing is all-or-nothing; failures throw ParseError
// carrying the line number.
std::vector<RationalECurve> parse_curve_file(const std::string& text);
std::string serialize_curve_file(const std::vector<RationalECurve>& curves);

std::string read_text_file(const std::string& path);  // IoError
void write_text_file(const std::string& path, const std::string& text);

// "a1,a2,a3,a4,a6" or "label@path".
RationalECurve parse_curve_spec(const std::string& spec);

// "1,3,5" -> {1, 3, 5} (descending coefficients).
std::vector<Integer> parse_integer_list(const std::string& text);

// {level, precision, forms: [{label, distinguished?, d?, an}]}. `an` holds the
// base sequence; a translate with d > 1 is materialized on ingest.
EigenformDataset parse_forms_json(const std::string& text);
std::string serialize_forms_json(const EigenformDataset& forms);

// Newform coefficients of every curve whose conductor divides `level`, with
// all translates f(q^d) for d | level / conductor. Curves must carry
// conductors and be minimal models.
EigenformDataset forms_from_curves(const std::vector<RationalECurve>& curves,
                                   const Integer& level, std::size_t precision,
                                   const std::string& distinguished);

std::string count_json(const FiniteCurve& curve);
std::string ext_order_json(const ExtOrderResult& r, const Integer& q);
std::string congruence_json(const CongruenceReport& r,
                            const std::optional<CongruenceCheck>& check = std::nullopt);
std::string modulus_json(const std::string& label, std::size_t precision, bool restricted,
                         const Integer& level, const Integer& value);
std::string modulus_report_json(const ModulusReport& r);
std::string symsq_json(const SymSqSeries& series, const std::optional<SymSqValue>& value,
                       std::size_t terms_shown);
std::string theta_json(const EigenformDataset& forms, const std::string& label,
                       const Integer& modulus, const std::optional<std::string>& against,
                       unsigned ladder, const std::optional<Integer>& restrict_to = std::nullopt);
std::string json_string(const std::string& s);
std::string error_json(const std::string& code, const std::string& message);

// {"congruence": ..., "modulus": ...} as emitted by the `report` command.
std::string combine_json(const std::vector<std::pair<std::string, std::string>>& parts);

}  // namespace extcong
