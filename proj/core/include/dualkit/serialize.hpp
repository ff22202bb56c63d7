#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and CSV encodings. Rationals are always the strings "p/q" or
 *        "p"; series and polynomials are arrays of them, lowest degree first.
 */

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dualkit/polynomial.hpp"
#include "dualkit/power_series.hpp"
#include "dualkit/report.hpp"
#include "dualkit/riordan.hpp"
#include "dualkit/sequences.hpp"

namespace dualkit {

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const std::vector<Rational>& values);
nlohmann::json to_json(const PowerSeries& s);
/// The zero polynomial is the empty array.
nlohmann::json to_json(const Polynomial& p);
/// {"d": [...], "h": [...], "order": N}
nlohmann::json to_json(const RiordanArray& r);
/// {"name": ..., "provenance": ..., "values": [...]}
nlohmann::json to_json(const NamedSequence& s);
/// {"name": ..., "polys": [[...], ...]}
nlohmann::json to_json(const PolynomialFamily& f);
nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const IdentityReport& r, bool with_residuals = true);

/// Accepts a string "p/q" or a JSON integer. Throws ParseError.
Rational rational_from_json(const nlohmann::json& j);
std::vector<Rational> rationals_from_json(const nlohmann::json& j);
PowerSeries series_from_json(const nlohmann::json& j);
RiordanArray riordan_from_json(const nlohmann::json& j);

/// "1,-1/2,1/6" or a JSON array of rationals. Throws ParseError.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Row-major, one line per row, "p/q" cells.
std::string matrix_to_csv(const Matrix& m);
/// "n,value" header then one line per term.
std::string sequence_to_csv(const NamedSequence& s);

}  // namespace dualkit
