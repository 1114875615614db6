#pragma once

#include "json.hpp"

#include "etaq/report.hpp"
#include "etaq/series.hpp"

namespace etaq {

// Series documents: {"order": n, "rows": [{"q": n, "zlo": i, "coeffs": ["..."]}]}
// with coefficients as decimal strings. Windowed series also carry
// "exact": false and "window": [zmin, zmax]; only in-window terms are written.
// A UniSeries writes one row per q-exponent with zlo = 0.

nlohmann::json to_json(const UniSeries& s);
nlohmann::json to_json(const BiSeries& s);
UniSeries uni_from_json(const nlohmann::json& j);
BiSeries bi_from_json(const nlohmann::json& j);

/// {"id", "params", "status", "order", "firstDiscrepancy", "notes", "elapsedMs"}
nlohmann::json to_json(const VerificationReport& r);

}  // namespace etaq
