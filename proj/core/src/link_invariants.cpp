#include "torusvoa/link_invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "torusvoa/schur_spec.hpp"

namespace torusvoa {

void TorusLinkSpec::validate() const {
  if (r < 2) throw std::invalid_argument("rank must be at least 2 (got " + std::to_string(r) + ")");
  if (c < 1) throw std::invalid_argument("component count must be at least 1");
  if (p < 1) throw std::invalid_argument("p must be a positive integer");
  if (n < 0) throw std::invalid_argument("colour must be nonnegative");
}

namespace {

struct Summand {
  Partition lambda;
  BigInt multiplicity;
};

std::vector<Summand> summands(const TorusLinkSpec& spec) {
  const auto row = kostka_by_shape(Composition(std::vector<int>(static_cast<std::size_t>(spec.c), spec.n)),
                                   std::min(spec.r, spec.c));
  std::vector<Summand> out;
  out.reserve(row.size());
  // Lexicographically decreasing, as partitions_of enumerates.
  for (auto it = row.rbegin(); it != row.rend(); ++it) {
    if (it->second != 0) out.push_back({it->first, it->second});
  }
  return out;
}

QSeries summand_series(const Summand& s, const TorusLinkSpec& spec) {
  const QExponent framing = QExponent(spec.p * kappa(s.lambda), 2);
  return principal_spec(s.lambda, spec.r).shifted(framing).scaled(s.multiplicity);
}

QSeries as_grain(const QSeries& s, std::int64_t grain) {
  return QSeries(s.terms(), s.cutoff(), grain);
}

}  // namespace

QSeries jones_torus_link(const TorusLinkSpec& spec, const EvaluationOptions& opts) {
  spec.validate();
  const auto terms = summands(spec);
  return as_grain(detail::parallel_sum(terms.size(), opts.threads,
                                       [&](std::size_t i) { return summand_series(terms[i], spec); }),
                  2);
}

QExponent singlet_shift_exponent(const TorusLinkSpec& spec) {
  if (spec.c < 2 || spec.c > spec.r) {
    throw std::invalid_argument("singlet shift needs 2 <= c <= r (got c=" + std::to_string(spec.c) +
                                ", r=" + std::to_string(spec.r) + ")");
  }
  const std::int64_t n = spec.n;
  const std::int64_t c = spec.c;
  const std::int64_t r = spec.r;
  return QExponent(spec.p * (-n * n * c + n * c * c), 2) + QExponent(n * c * (r - c), 2);
}

QExponent triplet_shift_exponent(const TorusLinkSpec& spec) {
  if (spec.c != spec.r + 1) {
    throw std::invalid_argument("triplet shift needs c = r + 1 (got c=" + std::to_string(spec.c) +
                                ", r=" + std::to_string(spec.r) + ")");
  }
  const std::int64_t n = spec.n;
  const std::int64_t r = spec.r;
  return QExponent(spec.p, 2) * (QExponent(-n * n * (r + 1) * (r + 1), r) + QExponent(n * r * (r + 1)));
}

QSeries shifted_invariant_singlet(const TorusLinkSpec& spec, const EvaluationOptions& opts) {
  const QExponent shift = singlet_shift_exponent(spec);
  return jones_torus_link(spec, opts).shifted(shift);
}

QSeries shifted_invariant_triplet(const TorusLinkSpec& spec, const EvaluationOptions& opts) {
  const QExponent shift = triplet_shift_exponent(spec);
  return as_grain(jones_torus_link(spec, opts).shifted(shift), 2 * static_cast<std::int64_t>(spec.r));
}

std::pair<QSeries, QSeries> triplet_split(const TorusLinkSpec& spec, const EvaluationOptions& opts) {
  spec.validate();
  const QExponent shift = triplet_shift_exponent(spec);
  std::vector<Summand> full_columns;
  std::vector<Summand> short_columns;
  for (auto& s : summands(spec)) {
    (s.lambda.part(static_cast<std::size_t>(spec.r)) >= spec.n ? full_columns : short_columns).push_back(s);
  }
  auto sum = [&](const std::vector<Summand>& terms) {
    return as_grain(detail::parallel_sum(terms.size(), opts.threads,
                                         [&](std::size_t i) {
                                           return summand_series(terms[i], spec).shifted(shift);
                                         }),
                    2 * static_cast<std::int64_t>(spec.r));
  };
  return {sum(full_columns), sum(short_columns)};
}

}  // namespace torusvoa
