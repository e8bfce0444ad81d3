#include "torusvoa/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace torusvoa {

namespace {

// Scaled form of a series: exponent e is stored as the integer e * grain.
struct Scaled {
  std::int64_t grain;
  std::vector<std::pair<std::int64_t, BigInt>> terms;
};

std::int64_t scale(const QExponent& e, std::int64_t grain) {
  return checked_mul(e.num(), grain / e.den());
}

Scaled to_scaled(const QSeries& s, std::int64_t grain) {
  Scaled out{grain, {}};
  out.terms.reserve(s.terms().size());
  for (const auto& [e, c] : s.terms()) out.terms.emplace_back(scale(e, grain), c);
  return out;
}

std::optional<QExponent> min_cutoff(const std::optional<QExponent>& a,
                                    const std::optional<QExponent>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

QSeries::QSeries(TermMap terms, std::optional<QExponent> cutoff, std::int64_t grain)
    : terms_(std::move(terms)), cutoff_(cutoff), grain_(grain) {
  if (grain_ <= 0) throw std::invalid_argument("series grain must be positive");
  normalize();
}

void QSeries::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || (cutoff_ && it->first >= *cutoff_)) {
      it = terms_.erase(it);
    } else {
      grain_ = lcm_checked(grain_, it->first.den());
      ++it;
    }
  }
  if (cutoff_) grain_ = lcm_checked(grain_, cutoff_->den());
}

QSeries QSeries::zero(std::optional<QExponent> cutoff) { return QSeries({}, cutoff); }

QSeries QSeries::one() { return monomial(0, 1); }

QSeries QSeries::monomial(QExponent e, BigInt c) {
  TermMap t;
  t.emplace(e, std::move(c));
  return QSeries(std::move(t));
}

BigInt QSeries::coefficient(const QExponent& e) const {
  if (cutoff_ && e >= *cutoff_) {
    throw std::out_of_range("coefficient of q^" + e.str() + " lies beyond cutoff " +
                            cutoff_->str());
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<QExponent> QSeries::lowest_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<QExponent> QSeries::highest_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<QExponent> QSeries::valuation_bound() const {
  if (!terms_.empty()) return terms_.begin()->first;
  return cutoff_;
}

BigInt QSeries::coefficient_sum() const {
  if (!is_exact()) throw std::logic_error("coefficient sum of a truncated series");
  BigInt total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

QSeries QSeries::truncated(const QExponent& c) const {
  return QSeries(terms_, min_cutoff(cutoff_, c), grain_);
}

QSeries QSeries::shifted(const QExponent& e) const {
  TermMap t;
  for (const auto& [x, c] : terms_) t.emplace_hint(t.end(), x + e, c);
  std::optional<QExponent> cut;
  if (cutoff_) cut = *cutoff_ + e;
  return QSeries(std::move(t), cut, lcm_checked(grain_, e.den()));
}

QSeries QSeries::reflected() const {
  if (!is_exact()) throw std::logic_error("q -> 1/q applied to a truncated series");
  TermMap t;
  for (const auto& [x, c] : terms_) t.emplace(-x, c);
  return QSeries(std::move(t), std::nullopt, grain_);
}

QSeries QSeries::scaled(const BigInt& factor) const {
  TermMap t;
  if (factor != 0) {
    for (const auto& [x, c] : terms_) t.emplace_hint(t.end(), x, c * factor);
  }
  return QSeries(std::move(t), cutoff_, grain_);
}

QSeries QSeries::operator-() const { return scaled(-1); }

QSeries qs_add(const QSeries& a, const QSeries& b) {
  QSeries::TermMap t = a.terms();
  for (const auto& [e, c] : b.terms()) t[e] += c;
  return QSeries(std::move(t), min_cutoff(a.cutoff(), b.cutoff()),
                 lcm_checked(a.grain(), b.grain()));
}

QSeries qs_sub(const QSeries& a, const QSeries& b) { return qs_add(a, -b); }

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  const std::int64_t grain = lcm_checked(a.grain(), b.grain());
  const auto va = a.valuation_bound();
  const auto vb = b.valuation_bound();
  // An exact zero factor annihilates everything.
  if ((a.is_exact() && a.is_zero()) || (b.is_exact() && b.is_zero())) {
    return QSeries({}, std::nullopt, grain);
  }
  std::optional<QExponent> cut;
  if (a.cutoff()) cut = *a.cutoff() + *vb;
  if (b.cutoff()) cut = min_cutoff(cut, *b.cutoff() + *va);

  const Scaled sa = to_scaled(a, grain);
  const Scaled sb = to_scaled(b, grain);
  std::optional<std::int64_t> limit;
  if (cut) limit = scale(*cut, lcm_checked(grain, cut->den()));
  const std::int64_t out_grain = cut ? lcm_checked(grain, cut->den()) : grain;
  const std::int64_t ratio = out_grain / grain;

  std::map<std::int64_t, BigInt> acc;
  for (const auto& [ea, ca] : sa.terms) {
    for (const auto& [eb, cb] : sb.terms) {
      const std::int64_t e = checked_add(ea, eb);
      if (limit && checked_mul(e, ratio) >= *limit) break;
      acc[e] += ca * cb;
    }
  }
  QSeries::TermMap t;
  for (auto& [e, c] : acc) {
    if (c != 0) t.emplace_hint(t.end(), QExponent(e, grain), std::move(c));
  }
  return QSeries(std::move(t), cut, grain);
}

QSeries qs_invert_unit(const QSeries& a, std::optional<QExponent> cutoff) {
  const auto low = a.lowest_exponent();
  if (!low) throw NotInvertibleError("cannot invert a zero series");
  const BigInt lead = a.terms().begin()->second;
  if (lead != 1 && lead != -1) {
    throw NotInvertibleError("lowest coefficient " + lead.str() +
                             " is not a unit over the integers");
  }
  const QExponent e = *low;
  if (a.is_exact() && a.terms().size() == 1 && !cutoff) {
    return QSeries::monomial(-e, lead);
  }
  std::optional<QExponent> cut = cutoff;
  if (a.cutoff()) cut = min_cutoff(cut, *a.cutoff() - e - e);
  if (!cut) throw std::invalid_argument("inverting an exact series requires a cutoff");

  // u = lead * q^{-e} * a, so u = 1 + (higher terms).
  const QSeries u = a.shifted(-e).scaled(lead);
  // Result exponents are -e + k/grain with -e + k/grain < cut.
  const QExponent span = *cut + e;
  const std::int64_t grain = lcm_checked(lcm_checked(a.grain(), cut->den()), span.den());
  if (span <= 0) return QSeries({}, cut, grain);
  const std::int64_t count = scale(span, grain);
  std::vector<std::pair<std::int64_t, BigInt>> ut;
  for (const auto& [x, c] : u.terms()) {
    if (x != 0) ut.emplace_back(scale(x, grain), c);
  }
  std::vector<BigInt> v(static_cast<std::size_t>(count));
  v[0] = 1;
  for (std::int64_t k = 1; k < count; ++k) {
    BigInt s = 0;
    for (const auto& [j, c] : ut) {
      if (j > k) break;
      s += c * v[static_cast<std::size_t>(k - j)];
    }
    v[static_cast<std::size_t>(k)] = -s;
  }
  QSeries::TermMap t;
  for (std::int64_t k = 0; k < count; ++k) {
    auto& c = v[static_cast<std::size_t>(k)];
    if (c != 0) t.emplace_hint(t.end(), QExponent(k, grain) - e, c * lead);
  }
  return QSeries(std::move(t), cut, grain);
}

QSeries qs_exact_divide(const QSeries& num, const QSeries& den) {
  if (!num.is_exact() || !den.is_exact()) {
    throw std::logic_error("exact division needs Laurent polynomials");
  }
  if (den.is_zero()) throw NotInvertibleError("division by zero polynomial");
  if (num.is_zero()) return QSeries();
  const std::int64_t grain = lcm_checked(num.grain(), den.grain());
  const QExponent off_n = *num.lowest_exponent();
  const QExponent off_d = *den.lowest_exponent();
  std::vector<BigInt> rem;
  for (const auto& [e, c] : num.terms()) {
    const auto k = static_cast<std::size_t>(scale(e - off_n, grain));
    if (rem.size() <= k) rem.resize(k + 1);
    rem[k] = c;
  }
  std::vector<BigInt> d;
  for (const auto& [e, c] : den.terms()) {
    const auto k = static_cast<std::size_t>(scale(e - off_d, grain));
    if (d.size() <= k) d.resize(k + 1);
    d[k] = c;
  }
  if (d.size() > rem.size()) throw NotInvertibleError("divisor degree exceeds dividend degree");
  const std::size_t qlen = rem.size() - d.size() + 1;
  std::vector<BigInt> quot(qlen);
  for (std::size_t k = 0; k < qlen; ++k) {
    if (rem[k] == 0) continue;
    if (rem[k] % d[0] != 0) throw NotInvertibleError("non-integral quotient coefficient");
    const BigInt c = rem[k] / d[0];
    quot[k] = c;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d[j] != 0) rem[k + j] -= c * d[j];
    }
  }
  for (const auto& r : rem) {
    if (r != 0) throw NotInvertibleError("polynomial division leaves a remainder");
  }
  QSeries::TermMap t;
  const QExponent off = off_n - off_d;
  for (std::size_t k = 0; k < qlen; ++k) {
    if (quot[k] != 0) {
      t.emplace_hint(t.end(), QExponent(static_cast<std::int64_t>(k), grain) + off, quot[k]);
    }
  }
  return QSeries(std::move(t), std::nullopt, grain);
}

QSeries euler_product(const QExponent& cutoff) {
  if (cutoff < 0) throw std::invalid_argument("euler_product needs a nonnegative cutoff");
  QSeries result = QSeries::one().truncated(cutoff);
  for (std::int64_t k = 1; QExponent(k) < cutoff; ++k) {
    QSeries::TermMap f{{QExponent(0), BigInt(1)}, {QExponent(k), BigInt(-1)}};
    result = result * QSeries(std::move(f));
  }
  return result;
}

QSeries one_minus_q_product(const std::map<std::int64_t, int>& exponent_multiplicity) {
  QSeries result = QSeries::one();
  for (const auto& [k, mult] : exponent_multiplicity) {
    for (int m = 0; m < mult; ++m) {
      QSeries::TermMap f{{QExponent(0), BigInt(1)}};
      f[QExponent(k)] -= 1;
      result = result * QSeries(std::move(f));
    }
  }
  return result;
}

namespace {

std::string power_of_q(const QExponent& e) {
  if (e == 1) return "q";
  if (e.is_integer() && e.num() >= 0) return "q^" + e.str();
  return "q^(" + e.str() + ")";
}

}  // namespace

std::string to_string(const QSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      os << power_of_q(e);
    }
  }
  if (s.cutoff()) {
    if (!first) os << " + ";
    os << "O(" << power_of_q(*s.cutoff()) << ")";
  } else if (first) {
    os << "0";
  }
  return os.str();
}

}  // namespace torusvoa
