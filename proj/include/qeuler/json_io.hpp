#pragma once

// JSON encodings of the library's values. Keys are emitted in sorted order
// (nlohmann::json's default), so equal values always serialize identically.

#include <optional>

#include <json.hpp>

#include "qeuler/newton.hpp"
#include "qeuler/verify.hpp"

namespace qeuler {

using json = nlohmann::json;

// {"num": ["a0/b0", ...], "den": [...]}
json to_json(const QRational& c);
QRational qrational_from_json(const json& j);

// {"val": v, "prec": p | "inf", "coeffs": [QRational, ...]}
json to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const json& j);

// {"terms": [{"shift": k, "coeff": LaurentSeries}, ...]}
json to_json(const QDiffOperator& op);
QDiffOperator operator_from_json(const json& j);

// {"points": [[k,m],...], "hull": [...], "slopes": [[num,den,len],...], "order": {...} | null}
json to_json(const NewtonPolygon& np, const std::optional<SummabilityOrder>& order);

// {"id", "params", "status", "window": [lo, hi | "inf"], "witness": null | {"exp", "value"}}
json to_json(const VerificationReport& r);

} // namespace qeuler
