#include "torusvoa/voa_characters.hpp"

#include <stdexcept>

#include "parallel.hpp"
#include "torusvoa/schur_spec.hpp"

namespace torusvoa {

std::string to_string(CharacterKind kind) {
  return kind == CharacterKind::singlet ? "singlet" : "triplet";
}

CharacterKind parse_character_kind(const std::string& text) {
  if (text == "singlet") return CharacterKind::singlet;
  if (text == "triplet") return CharacterKind::triplet;
  throw std::invalid_argument("unknown character kind '" + text + "' (singlet|triplet)");
}

void CharacterSpec::validate() const {
  if (r < 2) throw std::invalid_argument("rank must be at least 2");
  if (p < 2) throw std::invalid_argument("character family is defined for p >= 2 (got p=" +
                                         std::to_string(p) + ")");
  if (kind == CharacterKind::triplet && (coset < 0 || coset >= r)) {
    throw std::invalid_argument("coset index must lie in 0.." + std::to_string(r - 1) + " (got " +
                                std::to_string(coset) + ")");
  }
  if (kind == CharacterKind::singlet && coset != 0) {
    throw std::invalid_argument("the singlet character has no coset index");
  }
}

Rational enumeration_slope(int r, int p) { return Rational(p, 2 * r) + Rational(p - 1, 2); }

QExponent summand_lowest_exponent(const WeightVector& mu, int p) {
  const Weight delta = Weight::weyl_vector(mu.rank());
  return Rational(p, 2) * casimir_pairing(mu) - pairing(mu, delta);
}

std::vector<WeightVector> cone_weights(int r, int coset, const Rational& slope, const Rational& bound) {
  if (slope <= 0) throw std::invalid_argument("enumeration slope must be positive");
  std::vector<WeightVector> out;
  for (std::int64_t level = coset; slope * level < bound; level += r) {
    for (auto& w : dominant_weights_of_level(r, level)) out.push_back(std::move(w));
  }
  return out;
}

namespace {

enum class Multiplicity { zero_weight, full };

QSeries weight_sum(const CharacterSpec& spec, Multiplicity mult, const CharacterOptions& opts) {
  if (opts.bound_scale < 1) throw std::invalid_argument("bound_scale below 1 would drop terms");
  const Rational slope = enumeration_slope(spec.r, spec.p);
  const auto weights = cone_weights(spec.r, spec.kind == CharacterKind::singlet ? 0 : spec.coset, slope,
                                    opts.bound_scale * spec.cutoff);
  KostkaTable table;
  auto term = [&](std::size_t i) {
    const WeightVector& mu = weights[i];
    const BigInt m = mult == Multiplicity::zero_weight ? zero_weight_dim(mu, table) : weyl_dim(mu);
    if (m == 0) return QSeries::zero(spec.cutoff);
    const QExponent framing = Rational(spec.p, 2) * casimir_pairing(mu);
    return principal_spec(mu).shifted(framing).scaled(m).truncated(spec.cutoff);
  };
  return detail::parallel_sum(weights.size(), opts.threads, term, QSeries::zero(spec.cutoff));
}

QSeries inverse_euler_power(int power, const QExponent& cutoff) {
  QSeries out = QSeries::one().truncated(cutoff);
  if (power == 0) return out;
  const QSeries inv = qs_invert_unit(euler_product(cutoff), cutoff);
  for (int k = 0; k < power; ++k) out = out * inv;
  return out.truncated(cutoff);
}

QSeries euler_power(int power, const QExponent& cutoff) {
  QSeries out = QSeries::one().truncated(cutoff);
  const QSeries e = euler_product(cutoff);
  for (int k = 0; k < power; ++k) out = out * e;
  return out.truncated(cutoff);
}

QSeries normalize(const QSeries& sum, int r, const QExponent& cutoff) {
  return (positive_root_product(r) * inverse_euler_power(r - 1, cutoff) * sum).truncated(cutoff);
}

}  // namespace

QSeries singlet_weight_sum(const CharacterSpec& spec, const CharacterOptions& opts) {
  spec.validate();
  if (spec.kind != CharacterKind::singlet) throw std::invalid_argument("expected a singlet spec");
  return weight_sum(spec, Multiplicity::zero_weight, opts);
}

QSeries triplet_weight_sum(const CharacterSpec& spec, const CharacterOptions& opts) {
  spec.validate();
  if (spec.kind != CharacterKind::triplet) throw std::invalid_argument("expected a triplet spec");
  return weight_sum(spec, Multiplicity::full, opts);
}

QSeries positive_root_product(int r) {
  std::map<std::int64_t, int> exps;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) ++exps[j - i];
  }
  return one_minus_q_product(exps);
}

QSeries cross_root_product(int c, int r) {
  std::map<std::int64_t, int> exps;
  for (int i = 1; i <= c; ++i) {
    for (int j = c + 1; j <= r; ++j) ++exps[j - i];
  }
  return one_minus_q_product(exps);
}

QSeries singlet_char(const CharacterSpec& spec, const CharacterOptions& opts) {
  return normalize(singlet_weight_sum(spec, opts), spec.r, spec.cutoff);
}

QSeries triplet_char(const CharacterSpec& spec, const CharacterOptions& opts) {
  return normalize(triplet_weight_sum(spec, opts), spec.r, spec.cutoff);
}

QSeries rhs_singlet_limit(int r, int c, int p, const QExponent& cutoff, const CharacterOptions& opts) {
  if (c < 2 || c > r) {
    throw std::invalid_argument("singlet limit needs 2 <= c <= r (got c=" + std::to_string(c) +
                                ", r=" + std::to_string(r) + ")");
  }
  const CharacterSpec spec{c, p, CharacterKind::singlet, 0, cutoff};
  const QSeries character = singlet_char(spec, opts);
  const QSeries cross_inv = qs_invert_unit(cross_root_product(c, r), cutoff);
  const QSeries roots_inv = qs_invert_unit(positive_root_product(c), cutoff);
  return (cross_inv * euler_power(c - 1, cutoff) * roots_inv * character).truncated(cutoff);
}

QSeries rhs_triplet_limit(int r, int p, int coset, const QExponent& cutoff, const CharacterOptions& opts) {
  const CharacterSpec spec{r, p, CharacterKind::triplet, coset, cutoff};
  const QSeries character = triplet_char(spec, opts);
  const QSeries roots_inv = qs_invert_unit(positive_root_product(r), cutoff);
  return (euler_power(r - 1, cutoff) * roots_inv * character).truncated(cutoff);
}

}  // namespace torusvoa
