#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusvoa/combinatorics.hpp"
#include "torusvoa/link_invariants.hpp"
#include "torusvoa/qseries.hpp"
#include "torusvoa/voa_characters.hpp"

namespace torusvoa {

/// Least exponent at which two series differ, or "full" when they agree up
/// to their common cutoff (for two exact series: when they are equal).
struct Agreement {
  bool full = false;
  /// First differing exponent; for a full agreement, the common cutoff (if any).
  std::optional<QExponent> order;

  /// True when every coefficient below `threshold` coincides.
  bool reaches(const QExponent& threshold) const;
};

Agreement agreement_order(const QSeries& a, const QSeries& b);

struct Disagreement {
  QExponent exponent;
  BigInt lhs;
  BigInt rhs;
};

enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);

struct VerificationReport {
  std::string check;  ///< "singlet", "triplet", "prop-zero-weight", ...
  int r = 0;
  std::optional<int> c;
  std::optional<int> p;
  std::optional<int> n;
  std::optional<int> coset;
  std::optional<QExponent> cutoff;
  std::optional<std::string> shape;
  Agreement agreement;
  std::optional<Disagreement> first_disagreement;
  std::optional<QExponent> threshold;
  Verdict verdict = Verdict::fail;
  std::string detail;

  bool passed() const { return verdict != Verdict::fail; }
};

/// Compares q^{shift} J_r(c, pc; n) with the singlet limit series below
/// `cutoff`; passes when the agreement order reaches
/// min(cutoff, (p/(2c) + (p-1)/2) n). Requires 2 <= c <= r, p >= 2.
VerificationReport verify_singlet_theorem(int r, int c, int p, int n, const QExponent& cutoff,
                                          const EvaluationOptions& opts = {});
/// Compares the shifted invariant of T(r+1, p(r+1)) with the triplet limit of
/// coset i; passes when the agreement reaches min(cutoff, (p/(2r) + (p-1)/2) n).
/// Requires n = i (mod r).
VerificationReport verify_triplet_theorem(int r, int p, int coset, int n, const QExponent& cutoff,
                                          const EvaluationOptions& opts = {});

/// The zero-weight statement: K_{lambda,(k)^r} equals the alternant-oracle
/// value of dim L_r(lambda)_0 when |lambda| = rk, and that dimension is 0 otherwise.
VerificationReport check_prop_zero_weight(const Partition& lambda, int r);
/// The full-dimension statement: K_{lambda,(n)^{r+1}} = dim L_r(lambda) for
/// lambda |- n(r+1), length <= r, lambda_r >= n. Violated preconditions give
/// a skipped verdict.
VerificationReport check_prop_full_dim(const Partition& lambda, int n, int r);

/// Removes the first lambda_r columns of a tableau whose bottom row has
/// lambda_r cells and decreases every remaining entry by one.
Tableau phi_map(const Tableau& t, int r);
/// Inverse construction: rebuilds the left block of r rows and lambda_r
/// columns from the missing multiplicities, filled row by row from the top
/// left in increasing order, then glues (t + 1) to its right.
Tableau phi_inverse(const Tableau& t, int n, int r);

/// Materializes phi on every tableau of S_lambda (shape lambda, content
/// (n)^{r+1}) and its inverse on every tableau of S_mu (shape mu, entries
/// <= r); checks both round trips and that the images are exactly the other set.
VerificationReport phi_bijection_check(const Partition& lambda, int n, int r);

/// Every lambda |- n(r+1) with length <= r and lambda_r >= n.
std::vector<Partition> full_dim_shapes(int n, int r);

}  // namespace torusvoa
