#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "torusvoa/qseries.hpp"

namespace torusvoa {

/// Weakly decreasing sequence of positive integers. Trailing zeros passed to
/// the constructor are dropped; anything else out of order is rejected.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// (n)^c: c equal parts of size n.
  static Partition rectangle(int n, int c);
  /// Accepts "3,1", "[3,1]", "n^c" and "" / "[]" for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  /// 1-based row length; zero past the last part.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }

  /// Add `count` columns of height `height` on the left.
  Partition with_columns(int height, int count) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// "[3,1]"
std::string to_string(const Partition& p);

/// Finite sequence of nonnegative integers, trailing zeros ignored.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> entries);
  static Composition parse(std::string_view text);

  const std::vector<int>& entries() const { return entries_; }
  int entry(std::size_t i) const { return i >= 1 && i <= entries_.size() ? entries_[i - 1] : 0; }
  /// Index of the rightmost nonzero entry.
  int length() const { return static_cast<int>(entries_.size()); }
  int weight() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(const Composition& c);

/// Every partition of n with at most max_len parts, lexicographically
/// decreasing: (4), (3,1), (2,2), ...
std::vector<Partition> partitions_of(int n, int max_len);
void for_each_partition(int n, int max_len, const std::function<void(const Partition&)>& fn);

/// All compositions of n with exactly `slots` entries (zeros allowed).
std::vector<Composition> compositions_of(int n, int slots);

/// Number of semistandard tableaux of shape lambda and content mu, by a
/// horizontal-strip dynamic program over intermediate shapes inside lambda.
BigInt kostka(const Partition& lambda, const Composition& mu);

/// K_{lambda, mu} for every shape lambda with at most max_rows rows at once.
std::map<Partition, BigInt> kostka_by_shape(const Composition& mu, int max_rows);

/// Thread-safe memo for Kostka numbers and whole rows of them.
class KostkaTable {
 public:
  BigInt get(const Partition& lambda, const Composition& mu);
  /// Shared row {lambda -> K_{lambda,mu}}, lambda with at most max_rows rows.
  std::map<Partition, BigInt> row(const Composition& mu, int max_rows);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<Partition, Composition>, BigInt> entries_;
  std::map<std::pair<Composition, int>, std::map<Partition, BigInt>> rows_;
};

/// kappa_lambda = 2 * sum over cells (i, j) of (j - i).
std::int64_t kappa(const Partition& lambda);
/// The same statistic from the row-difference coordinates a_i = lambda_i -
/// lambda_{i+1} (1 <= i <= r): sum_{i,j} min(i,j) a_i a_j - sum_i i^2 a_i.
/// Requires length(lambda) <= r.
std::int64_t kappa_from_differences(const Partition& lambda, int r);

/// Monomial expansion of s_lambda(x_1..x_r) via the Jacobi-Trudi determinant
/// of complete homogeneous polynomials. Test oracle: refuses |lambda| > 12 or
/// r > 6.
std::map<Composition, BigInt> schur_expand_oracle(const Partition& lambda, int r);

// ---------------------------------------------------------------------------
// Tableaux

/// Tableau stored row by row, top row first.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  bool is_semistandard() const;
  /// Occurrences of 1..max_entry.
  std::vector<int> content(int max_entry) const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

std::string to_string(const Tableau& t);

/// All SSYT of shape lambda whose content is exactly mu.
std::vector<Tableau> ssyt_with_content(const Partition& lambda, const Composition& mu);
/// All SSYT of shape lambda with entries in {1..max_entry}.
std::vector<Tableau> ssyt_with_max_entry(const Partition& lambda, int max_entry);

}  // namespace torusvoa
