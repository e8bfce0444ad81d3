#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torusvoa/combinatorics.hpp"
#include "torusvoa/qseries.hpp"
#include "torusvoa/rational.hpp"

namespace torusvoa {

/// Integral weight of sl_r in fundamental-weight coordinates
/// a_1 Lambda_1 + ... + a_{r-1} Lambda_{r-1}; coefficients may be negative.
class Weight {
 public:
  Weight() = default;
  Weight(int rank, std::vector<std::int64_t> coeffs);

  static Weight zero(int rank);
  /// Lambda_i, 1 <= i <= r-1.
  static Weight fundamental(int rank, int i);
  /// delta = Lambda_1 + ... + Lambda_{r-1}.
  static Weight weyl_vector(int rank);
  /// alpha_i written in fundamental weights (a row of the Cartan matrix).
  static Weight simple_root(int rank, int i);

  int rank() const { return rank_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  /// 1-based coefficient a_i.
  std::int64_t coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i - 1)); }

  bool is_dominant() const;
  /// sum_i i * a_i.
  std::int64_t level() const;
  /// The class of the weight in P_r / Q_r as an index into {i Lambda_1}.
  int coset_index() const;
  /// Simple reflection s_i.
  Weight reflected(int i) const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight w);

  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  int rank_ = 2;
  std::vector<std::int64_t> coeffs_;
};

/// Dominant integral weight of sl_r (every a_i >= 0).
class WeightVector {
 public:
  WeightVector() = default;
  WeightVector(int rank, std::vector<std::int64_t> coeffs);
  explicit WeightVector(const Weight& w);

  static WeightVector zero(int rank) { return WeightVector(Weight::zero(rank)); }

  int rank() const { return weight_.rank(); }
  const std::vector<std::int64_t>& coeffs() const { return weight_.coeffs(); }
  std::int64_t coeff(int i) const { return weight_.coeff(i); }
  std::int64_t level() const { return weight_.level(); }
  int coset_index() const { return weight_.coset_index(); }

  const Weight& weight() const { return weight_; }
  operator const Weight&() const { return weight_; }  // NOLINT: a dominant weight is a weight

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  Weight weight_;
};

/// "2*w1 + w2", "0" for the zero weight.
std::string to_string(const Weight& w);

/// Symmetric bilinear form with (Lambda_i, Lambda_j) = min(i,j) - ij/r.
Rational pairing(const Weight& a, const Weight& b);
/// (mu, mu + 2 delta).
Rational casimir_pairing(const Weight& mu);

/// (lambda_1 - lambda_2) Lambda_1 + ... + (lambda_{r-1} - lambda_r) Lambda_{r-1}.
WeightVector weight_of_partition(const Partition& lambda, int r);
/// (a_1 + ... + a_r, a_2 + ... + a_r, ..., a_r); a_r is the number of full
/// height-r columns prepended.
Partition partition_of_weight(const WeightVector& mu, std::int64_t a_r = 0);

/// dim L_r(mu) by the Weyl dimension product over positive roots.
BigInt weyl_dim(const WeightVector& mu);
/// dim L_r(mu)_0 as the Kostka number K_{hat mu, (k)^r}; zero off the root lattice.
BigInt zero_weight_dim(const WeightVector& mu);
BigInt zero_weight_dim(const WeightVector& mu, KostkaTable& table);
/// dim L_r(mu)_0 from the Kostant multiplicity formula: an alternating sum
/// over the Weyl group of Kostant partition-function values. Oracle for
/// zero_weight_dim; refuses r > 6.
BigInt zero_weight_dim_alternant(const WeightVector& mu);

/// Weyl group orbit of w, generated by simple reflections.
std::vector<Weight> weyl_orbit(const Weight& w);

/// Every dominant weight of rank r with level (sum_i i a_i) equal to `level`.
std::vector<WeightVector> dominant_weights_of_level(int rank, std::int64_t level);

}  // namespace torusvoa
