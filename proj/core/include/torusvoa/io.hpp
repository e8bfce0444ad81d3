#pragma once

#include <nlohmann/json.hpp>

#include "torusvoa/lie_sl.hpp"
#include "torusvoa/qseries.hpp"
#include "torusvoa/verifier.hpp"

namespace torusvoa {

/// {"grain": g, "cutoff": {"num": a, "den": b} | null,
///  "terms": [[num, den, "coeff"], ...]} with terms in increasing exponent order.
nlohmann::json to_json(const QSeries& s);
/// Inverse of to_json; rejects malformed documents with std::invalid_argument.
QSeries qseries_from_json(const nlohmann::json& j);

/// {"rank": r, "coeffs": [a_1, ..., a_{r-1}]}
nlohmann::json to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& report);

}  // namespace torusvoa
