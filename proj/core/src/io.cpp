#include "torusvoa/io.hpp"

#include <stdexcept>

namespace torusvoa {

namespace {

nlohmann::json rational_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

}  // namespace

nlohmann::json to_json(const QSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({e.num(), e.den(), c.str()});
  nlohmann::json j;
  j["grain"] = s.grain();
  j["cutoff"] = s.cutoff() ? rational_json(*s.cutoff()) : nlohmann::json(nullptr);
  j["terms"] = std::move(terms);
  return j;
}

QSeries qseries_from_json(const nlohmann::json& j) {
  try {
    const auto grain = j.at("grain").get<std::int64_t>();
    std::optional<QExponent> cutoff;
    if (!j.at("cutoff").is_null()) {
      cutoff = Rational(j["cutoff"].at("num").get<std::int64_t>(), j["cutoff"].at("den").get<std::int64_t>());
    }
    QSeries::TermMap terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 3) throw std::invalid_argument("series term must be [num, den, coeff]");
      const QExponent e(t[0].get<std::int64_t>(), t[1].get<std::int64_t>());
      if (terms.count(e)) throw std::invalid_argument("duplicate exponent " + e.str());
      terms.emplace(e, BigInt(t[2].get<std::string>()));
    }
    return QSeries(std::move(terms), cutoff, grain);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("malformed series coefficient: ") + e.what());
  }
}

nlohmann::json to_json(const Weight& w) { return {{"rank", w.rank()}, {"coeffs", w.coeffs()}}; }

Weight weight_from_json(const nlohmann::json& j) {
  try {
    return Weight(j.at("rank").get<int>(), j.at("coeffs").get<std::vector<std::int64_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed weight JSON: ") + e.what());
  }
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json params;
  params["r"] = report.r;
  if (report.c) params["c"] = *report.c;
  if (report.p) params["p"] = *report.p;
  if (report.n) params["n"] = *report.n;
  if (report.coset) params["i"] = *report.coset;
  if (report.cutoff) params["cutoff"] = rational_json(*report.cutoff);
  if (report.shape) params["shape"] = *report.shape;

  nlohmann::json j;
  j["check"] = report.check;
  j["parameters"] = std::move(params);
  if (report.check == "singlet" || report.check == "triplet") {
    if (report.agreement.full) {
      j["agreement_order"] = "full";
    } else {
      j["agreement_order"] = rational_json(*report.agreement.order);
    }
    if (report.first_disagreement) {
      const auto& d = *report.first_disagreement;
      j["first_disagreement"] = {{"exponent", rational_json(d.exponent)},
                                 {"lhs", d.lhs.str()},
                                 {"rhs", d.rhs.str()}};
    } else {
      j["first_disagreement"] = nullptr;
    }
    if (report.threshold) j["threshold"] = rational_json(*report.threshold);
  }
  j["verdict"] = to_string(report.verdict);
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j;
}

}  // namespace torusvoa
