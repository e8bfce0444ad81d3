#pragma once

#include <string>
#include <vector>

#include "torusvoa/lie_sl.hpp"
#include "torusvoa/qseries.hpp"

namespace torusvoa {

enum class CharacterKind { singlet, triplet };

std::string to_string(CharacterKind kind);
CharacterKind parse_character_kind(const std::string& text);

/// Normalized character of the sl_r (1,p) singlet algebra, or of the triplet
/// module labelled by the coset representative coset * Lambda_1.
struct CharacterSpec {
  int r = 2;
  int p = 2;
  CharacterKind kind = CharacterKind::singlet;
  int coset = 0;  ///< triplet only; 0 <= coset < r
  QExponent cutoff = 10;

  void validate() const;
};

struct CharacterOptions {
  /// Weights mu are summed while slope * level(mu) < bound_scale * cutoff.
  /// Any value >= 1 gives the same coefficients below the cutoff.
  Rational bound_scale = 1;
  unsigned threads = 1;
};

/// p/(2r) + (p-1)/2: every exponent of q^{(p/2)(mu,mu+2delta)} s_mu is at
/// least this slope times sum_i i a_i.
Rational enumeration_slope(int r, int p);

/// Lowest exponent of q^{(p/2)(mu,mu+2delta)} s_mu, namely
/// (p/2)(mu,mu+2delta) - (mu,delta).
QExponent summand_lowest_exponent(const WeightVector& mu, int p);

/// Dominant weights in the coset `coset` * Lambda_1 + Q_r with
/// slope * level < bound, ordered by level.
std::vector<WeightVector> cone_weights(int r, int coset, const Rational& slope, const Rational& bound);

/// sum over Q_r cap P_r^+ of dim L_r(mu)_0 q^{(p/2)(mu,mu+2delta)} s_mu, truncated.
QSeries singlet_weight_sum(const CharacterSpec& spec, const CharacterOptions& opts = {});
/// sum over (Q_r + i Lambda_1) cap P_r^+ of dim L_r(mu) q^{(p/2)(mu,mu+2delta)} s_mu, truncated.
QSeries triplet_weight_sum(const CharacterSpec& spec, const CharacterOptions& opts = {});

/// prod_{1<=i<j<=r} (1 - q^{j-i}).
QSeries positive_root_product(int r);
/// prod_{1<=i<=c<j<=r} (1 - q^{j-i}).
QSeries cross_root_product(int c, int r);

/// prod_{1<=i<j<=r}(1-q^{j-i}) / (q)_inf^{r-1} times singlet_weight_sum.
QSeries singlet_char(const CharacterSpec& spec, const CharacterOptions& opts = {});
/// The same prefactor times triplet_weight_sum.
QSeries triplet_char(const CharacterSpec& spec, const CharacterOptions& opts = {});

/// [1 / cross_root_product(c, r)] [(q)_inf^{c-1} / positive_root_product(c)]
/// times the rank-c singlet character. Requires 2 <= c <= r.
QSeries rhs_singlet_limit(int r, int c, int p, const QExponent& cutoff, const CharacterOptions& opts = {});
/// (q)_inf^{r-1} / positive_root_product(r) times the triplet character of
/// coset i.
QSeries rhs_triplet_limit(int r, int p, int coset, const QExponent& cutoff,
                          const CharacterOptions& opts = {});

}  // namespace torusvoa
