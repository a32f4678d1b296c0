#pragma once

#include "geode/mpoly.hpp"

#include <json.hpp>

#include <iosfwd>

namespace geode {

/// {"nvars": r, "trunc": N, "terms": [{"exps": [...], "coeff": "<decimal>"}, ...]}
/// Terms are listed by total degree, then lexicographically.
nlohmann::json to_json(const TruncatedSeries& s);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
TruncatedSeries series_from_json(const nlohmann::json& j);

/// Header "m_1,...,m_r,coeff", one row per stored term, coefficients in decimal.
void write_csv(std::ostream& out, const TruncatedSeries& s);

nlohmann::json to_json(const UnivariateSeries& u);

} // namespace geode
