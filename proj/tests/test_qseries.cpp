#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torusvoa/qseries.hpp"

using namespace torusvoa;

TEST_CASE("rational arithmetic stays reduced") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).den() == 2);
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(3).str() == "3");
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
}

TEST_CASE("canonical text rendering") {
  QSeries::TermMap t{{Rational(-1), 1}, {Rational(0), 1}, {Rational(1, 2), 2}, {Rational(1), 1}};
  const QSeries s(t, Rational(10), 2);
  CHECK(to_string(s) == "q^(-1) + 1 + 2*q^(1/2) + q + O(q^10)");
  CHECK(to_string(QSeries()) == "0");
  CHECK(to_string(QSeries::zero(Rational(5))) == "O(q^5)");
  CHECK(to_string(QSeries::monomial(Rational(-3, 2), -2)) == "-2*q^(-3/2)");
  CHECK(to_string(QSeries(t, Rational(1, 2), 2)) == "q^(-1) + 1 + O(q^(1/2))");
}

TEST_CASE("construction drops zeros and terms beyond the cutoff") {
  QSeries::TermMap t{{Rational(0), 1}, {Rational(1), 0}, {Rational(3), 4}};
  const QSeries s(t, Rational(3));
  CHECK(s.terms().size() == 1);
  CHECK(s.coefficient(1) == 0);
  CHECK_THROWS_AS(s.coefficient(3), std::out_of_range);
  CHECK(QSeries(QSeries::TermMap{{Rational(1, 3), 1}}, std::nullopt, 2).grain() == 6);
}

TEST_CASE("geometric series and identities of inversion") {
  const QSeries one_minus_q = QSeries::one() - QSeries::monomial(1);
  const QSeries inv = qs_invert_unit(one_minus_q, Rational(8));
  CHECK(to_string(inv) == "1 + q + q^2 + q^3 + q^4 + q^5 + q^6 + q^7 + O(q^8)");
  CHECK(qs_invert_unit(QSeries::one()) == QSeries::one());
  CHECK_THROWS_AS(qs_invert_unit(one_minus_q), std::invalid_argument);
  CHECK_THROWS_AS(qs_invert_unit(QSeries::monomial(0, 2)), NotInvertibleError);
  CHECK_THROWS_AS(qs_invert_unit(QSeries()), NotInvertibleError);
  // a leading -q^(-1) inverts to a series starting at q^1
  const QSeries a = QSeries::monomial(-1, -1) + QSeries::one();
  const QSeries ia = qs_invert_unit(a, Rational(6));
  CHECK(ia.lowest_exponent() == Rational(1));
  CHECK(agreement_order(a * ia, QSeries::one()).full);
}

TEST_CASE("euler product examples") {
  CHECK(to_string(euler_product(6)) == "1 - q - q^2 + q^5 + O(q^6)");
  CHECK(to_string(euler_product(1)) == "1 + O(q)");
  // q^12 is the pentagonal number k(3k+1)/2 at k = -3, hence sign (-1)^3
  CHECK(euler_product(13).coefficient(12) == -1);
  CHECK(euler_product(16).coefficient(15) == -1);
  CHECK(euler_product(23).coefficient(22) == 1);
  CHECK(euler_product(0).is_zero());
  CHECK_THROWS_AS(euler_product(-1), std::invalid_argument);
}

TEST_CASE("euler product matches the brute-force product to q^50") {
  const auto dense = oracle::euler_coefficients(51);
  const QSeries e = euler_product(51);
  for (int k = 0; k <= 50; ++k) CHECK(e.coefficient(k) == dense[static_cast<std::size_t>(k)]);
}

TEST_CASE("inverse euler product counts partitions") {
  const QSeries inv = qs_invert_unit(euler_product(51), Rational(51));
  REQUIRE(inv.cutoff() == Rational(51));
  for (int n = 0; n <= 50; ++n) CHECK(inv.coefficient(n) == oracle::partition_count(n));
}

TEST_CASE("multiplication cutoff is the provable bound") {
  const QSeries a(QSeries::TermMap{{Rational(2), 1}}, Rational(5));
  const QSeries b = QSeries::one() + QSeries::monomial(1);
  CHECK(!(a * b).is_exact());
  CHECK((a * b).cutoff() == Rational(5));
  const QSeries c(QSeries::TermMap{{Rational(1), 1}}, Rational(4));
  CHECK((a * c).cutoff() == Rational(6));  // min(5 + 1, 4 + 2)
  CHECK((QSeries::zero(Rational(3)) * c).cutoff() == Rational(4));
}

TEST_CASE("exact division") {
  const QSeries x = QSeries::one() - QSeries::monomial(3);
  const QSeries y = QSeries::one() - QSeries::monomial(1);
  CHECK(to_string(qs_exact_divide(x, y)) == "1 + q + q^2");
  CHECK_THROWS_AS(qs_exact_divide(y, x), NotInvertibleError);
  CHECK_THROWS_AS(qs_exact_divide(x, QSeries()), NotInvertibleError);
  const QSeries two = QSeries::monomial(0, 2);
  CHECK_THROWS_AS(qs_exact_divide(QSeries::one(), two), NotInvertibleError);
}

TEST_CASE("ring axioms on random truncated series") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const QSeries a = oracle::random_series(rng, -2, 12);
    const QSeries b = oracle::random_series(rng, 0, 10);
    const QSeries c = oracle::random_series(rng, -1, 9);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    const QSeries l = (a * b) * c;
    const QSeries r = a * (b * c);
    CHECK(agreement_order(l, r).full);
    CHECK(agreement_order(a * (b + c), a * b + a * c).full);
  }
}

TEST_CASE("a times its inverse is one up to the cutoff") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    QSeries a = oracle::random_series(rng, 1, 15);
    a = a + QSeries::monomial(0, sign(rng) ? 1 : -1);
    const QSeries prod = a * qs_invert_unit(a);
    REQUIRE(prod.cutoff());
    CHECK(*prod.cutoff() >= Rational(15));
    CHECK(agreement_order(prod, QSeries::one()).full);
  }
}

TEST_CASE("fractional exponents keep their grain") {
  const QSeries h = QSeries::monomial(Rational(1, 2)) + QSeries::monomial(Rational(-1, 3));
  CHECK(h.grain() == 6);
  CHECK((h * h).coefficient(Rational(1, 6)) == 2);
  CHECK(h.shifted(Rational(1, 3)).lowest_exponent() == Rational(0));
  CHECK(h.reflected().highest_exponent() == Rational(1, 3));
  CHECK(h.coefficient_sum() == 2);
  CHECK_THROWS(QSeries::zero(Rational(1)).coefficient_sum());
}
