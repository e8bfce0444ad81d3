#pragma once

#include <utility>

#include "torusvoa/combinatorics.hpp"
#include "torusvoa/qseries.hpp"

namespace torusvoa {

/// The torus link T(c, c*p) with every one of its c components coloured by
/// L_r(n Lambda_1), the n-th symmetric power of the defining representation.
struct TorusLinkSpec {
  int r = 2;  ///< rank of sl_r
  int c = 1;  ///< number of components
  int p = 1;
  int n = 0;  ///< colour

  void validate() const;
};

struct EvaluationOptions {
  /// Worker threads for the sum over partitions; 0 or 1 means sequential.
  unsigned threads = 1;
};

/// J_r(c, pc; n) = sum over lambda |- nc, length(lambda) <= min(r, c), of
/// K_{lambda,(n)^c} q^{(p/2) kappa_lambda} s_lambda(q^{(r-1)/2}, ..., q^{(1-r)/2}).
/// Exact Laurent polynomial of grain 2.
QSeries jones_torus_link(const TorusLinkSpec& spec, const EvaluationOptions& opts = {});

/// Exponent (p/2)(-n^2 c + n c^2) + n c (r - c)/2. Requires 2 <= c <= r.
QExponent singlet_shift_exponent(const TorusLinkSpec& spec);
/// Exponent (p/2)(-n^2 (r+1)^2 / r + n r (r+1)). Requires c = r + 1.
QExponent triplet_shift_exponent(const TorusLinkSpec& spec);

/// q^{singlet shift} J_r(c, pc; n) for 2 <= c <= r. The cross factor
/// prod_{1<=i<=c<j<=r} (1 - q^{j-i}) is left to the character side.
QSeries shifted_invariant_singlet(const TorusLinkSpec& spec, const EvaluationOptions& opts = {});
/// q^{triplet shift} J_r(r+1, p(r+1); n).
QSeries shifted_invariant_triplet(const TorusLinkSpec& spec, const EvaluationOptions& opts = {});

/// The shifted triplet sum split by lambda_r >= n (first) and lambda_r < n
/// (second). The two parts add up to shifted_invariant_triplet.
std::pair<QSeries, QSeries> triplet_split(const TorusLinkSpec& spec, const EvaluationOptions& opts = {});

}  // namespace torusvoa
