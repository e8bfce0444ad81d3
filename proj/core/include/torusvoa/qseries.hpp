#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "torusvoa/rational.hpp"

namespace torusvoa {

using BigInt = boost::multiprecision::cpp_int;
using QExponent = Rational;

/// Raised when a series cannot be inverted or divided over the integers.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated formal Laurent series in q with rational exponents and
/// arbitrary-precision integer coefficients.
///
/// A series either carries an exclusive cutoff C (every coefficient of q^e
/// with e < C is known exactly, nothing is known at or beyond C) or is exact,
/// i.e. a Laurent polynomial with no truncation. Stored exponents are strictly
/// below the cutoff, no stored coefficient is zero, and every stored exponent
/// (and the cutoff) has a denominator dividing grain().
class QSeries {
 public:
  using TermMap = std::map<QExponent, BigInt>;

  /// Exact zero.
  QSeries() = default;
  /// Terms at or beyond the cutoff are dropped, zero coefficients pruned.
  explicit QSeries(TermMap terms, std::optional<QExponent> cutoff = std::nullopt,
                   std::int64_t grain = 1);

  static QSeries zero(std::optional<QExponent> cutoff = std::nullopt);
  static QSeries one();
  /// c * q^e, exact.
  static QSeries monomial(QExponent e, BigInt c = 1);

  std::int64_t grain() const { return grain_; }
  const std::optional<QExponent>& cutoff() const { return cutoff_; }
  bool is_exact() const { return !cutoff_.has_value(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Throws std::out_of_range when e is at or beyond the cutoff.
  BigInt coefficient(const QExponent& e) const;
  std::optional<QExponent> lowest_exponent() const;
  std::optional<QExponent> highest_exponent() const;
  /// Lowest exponent, or the cutoff when no term is stored (the valuation is
  /// then at least the cutoff). Empty for the exact zero series.
  std::optional<QExponent> valuation_bound() const;

  /// Value at q = 1; only defined for exact series.
  BigInt coefficient_sum() const;

  /// Same series with cutoff min(current, c).
  QSeries truncated(const QExponent& c) const;
  /// Multiplication by q^e; the cutoff moves with the terms.
  QSeries shifted(const QExponent& e) const;
  /// q -> q^{-1}; exact series only.
  QSeries reflected() const;
  QSeries scaled(const BigInt& factor) const;
  QSeries operator-() const;

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
  std::optional<QExponent> cutoff_;
  std::int64_t grain_ = 1;

  void normalize();
};

/// Coefficientwise sum; cutoff is the smaller of the two, grain the lcm.
QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
/// Cauchy product. The result cutoff is min(cutoff_a + low_b, cutoff_b + low_a),
/// the largest bound below which every coefficient is determined.
QSeries qs_mul(const QSeries& a, const QSeries& b);
/// Inverse of a series whose lowest coefficient is +1 or -1.
///
/// For a truncated input with lowest term c*q^e the result is exact below
/// cutoff_a - 2e; `cutoff` lowers that further. An exact non-monomial input
/// needs an explicit `cutoff`.
QSeries qs_invert_unit(const QSeries& a, std::optional<QExponent> cutoff = std::nullopt);
/// Exact quotient of two Laurent polynomials. Throws NotInvertibleError if the
/// division leaves a remainder or needs non-integral coefficients.
QSeries qs_exact_divide(const QSeries& num, const QSeries& den);
/// Product of (1 - q^k) over k >= 1, truncated at `cutoff`.
QSeries euler_product(const QExponent& cutoff);
/// Finite product of (1 - q^k) over the given exponents (exact).
QSeries one_minus_q_product(const std::map<std::int64_t, int>& exponent_multiplicity);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return qs_add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return qs_sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return qs_mul(a, b); }

/// Canonical text form, e.g. `q^(-1) + 1 + 2*q^(1/2) + q + O(q^10)`.
std::string to_string(const QSeries& s);

}  // namespace torusvoa
