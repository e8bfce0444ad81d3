#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace torusvoa;

TEST_CASE("series JSON round trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const QSeries s = oracle::random_series(rng, -3, 9).shifted(Rational(trial % 5, 4));
    const auto j = to_json(s);
    CHECK(qseries_from_json(j) == s);
    CHECK(to_json(qseries_from_json(j)).dump() == j.dump());
  }
  const QSeries exact = principal_spec(Partition({3, 1}), 3);
  CHECK(qseries_from_json(to_json(exact)) == exact);
  CHECK(to_json(exact)["cutoff"].is_null());
  const QSeries big = QSeries::monomial(0, BigInt("123456789012345678901234567890"));
  CHECK(to_json(big)["terms"][0][2] == "123456789012345678901234567890");
  CHECK(qseries_from_json(to_json(big)) == big);
}

TEST_CASE("series JSON layout") {
  const QSeries s(QSeries::TermMap{{Rational(-1, 2), 3}}, Rational(1));
  CHECK(to_json(s).dump() == R"({"cutoff":{"den":1,"num":1},"grain":2,"terms":[[-1,2,"3"]]})");
}

TEST_CASE("malformed series JSON is rejected") {
  CHECK_THROWS_AS(qseries_from_json(nlohmann::json::parse(R"({"grain":1})")), std::invalid_argument);
  CHECK_THROWS_AS(qseries_from_json(nlohmann::json::parse(R"({"grain":1,"cutoff":null,"terms":[[1,1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(qseries_from_json(nlohmann::json::parse(R"({"grain":1,"cutoff":null,"terms":[[1,1,"x"]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      qseries_from_json(nlohmann::json::parse(R"({"grain":1,"cutoff":null,"terms":[[1,1,"2"],[2,2,"1"]]})")),
      std::invalid_argument);
}

TEST_CASE("weight JSON round trip") {
  const Weight w(4, {2, 0, 5});
  CHECK(to_json(w).dump() == R"({"coeffs":[2,0,5],"rank":4})");
  CHECK(weight_from_json(to_json(w)) == w);
  CHECK_THROWS_AS(weight_from_json(nlohmann::json::parse(R"({"rank":3,"coeffs":[1]})")), std::invalid_argument);
  CHECK_THROWS_AS(weight_from_json(nlohmann::json::parse(R"({"rank":3})")), std::invalid_argument);
}

TEST_CASE("report JSON") {
  const auto j = to_json(verify_singlet_theorem(3, 2, 2, 1, 10));
  CHECK(j["check"] == "singlet");
  CHECK(j["parameters"]["r"] == 3);
  CHECK(j["parameters"]["c"] == 2);
  CHECK(j["agreement_order"]["num"] == 2);
  CHECK(j["first_disagreement"]["exponent"]["num"] == 2);
  CHECK(j["verdict"] == "pass");
  const auto full = to_json(verify_triplet_theorem(2, 2, 1, 9, 6));
  CHECK(full["agreement_order"] == "full");
  CHECK(full["first_disagreement"].is_null());
  CHECK(full["parameters"]["i"] == 1);
  const auto prop = to_json(check_prop_full_dim(Partition({3}), 1, 2));
  CHECK(prop["verdict"] == "skipped");
  CHECK(!prop.contains("agreement_order"));
}
