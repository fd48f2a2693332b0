#pragma once

// JSON and plain-text rendering of series, classes and verification reports.
// Rationals are always written as "num/den" strings.

#include <string>

#include <json.hpp>

#include "modinv/anomaly.hpp"
#include "modinv/thetanum.hpp"

namespace modinv {

using Json = nlohmann::ordered_json;

Json to_json(const RationalQSeries& s);
Json to_json(const GradedClass& g);
Json to_json(const ClassQSeries& s);
Json to_json(const CharacterElement& e);
Json to_json(const ThetaBundleSeries& t);
Json to_json(const Theta2Decomposition& d);
Json to_json(const IdentityReport& r);
Json to_json(const NumericCheckReport& r);
/// Includes the reference vector and a status.
Json to_json(const CorollaryVector& v);

RationalQSeries rational_series_from_json(const Json& j, int order);
GradedClass graded_class_from_json(const Json& j, const RootProfile& profile);
ThetaBundleSeries theta_bundle_from_json(const Json& j);

/// "1/4 + 6q + 6q^2", "q^(1/2) + 8q", ...
std::string display_series(const RationalQSeries& s);

/// b_r as "T_C Z + 62 C" when it is a combination of B_0, B_1; otherwise
/// its rank and form part.
std::string display_element(const Theta2Decomposition& d, std::size_t r);

/// Status string of one result entry ("pass", "fail", "degenerate-zero").
std::string result_status(const Json& result);

/// One line per result.
std::string render_table(const Json& results);

}  // namespace modinv
