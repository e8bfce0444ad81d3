#pragma once

// Slow, independent reference computations for the unit tests. None of these
// call into the library's algorithms.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "torusvoa/torusvoa.hpp"

namespace oracle {

using torusvoa::BigInt;

/// p(n) by the recursion on the largest part.
inline BigInt partition_count(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  static std::map<std::pair<int, int>, BigInt> memo;
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  const auto key = std::make_pair(n, max_part);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt total = 0;
  for (int k = 1; k <= std::min(n, max_part); ++k) total += partition_count(n - k, k);
  memo[key] = total;
  return total;
}

/// Number of partitions of n with at most `len` parts, by brute force.
inline int count_partitions_bounded(int n, int len, int max_part) {
  if (n == 0) return 1;
  if (len == 0) return 0;
  int total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) total += count_partitions_bounded(n - k, len - 1, k);
  return total;
}

/// Coefficients of prod_{k=1}^{N-1} (1 - q^k) below q^N by direct multiplication.
inline std::vector<BigInt> euler_coefficients(int N) {
  std::vector<BigInt> c(static_cast<std::size_t>(N), 0);
  c[0] = 1;
  for (int k = 1; k < N; ++k) {
    for (int e = N - 1; e >= k; --e) c[static_cast<std::size_t>(e)] -= c[static_cast<std::size_t>(e - k)];
  }
  return c;
}

/// Fills a tableau of the given shape cell by cell (row-major) with entries
/// in 1..max_entry subject to the semistandard conditions and calls `visit`.
inline void each_ssyt(const std::vector<int>& shape, int max_entry,
                      const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> t;
  for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(shape[i]); ++j) cells.emplace_back(i, j);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      visit(t);
      return;
    }
    const auto [i, j] = cells[k];
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      t[i][j] = v;
      rec(k + 1);
    }
    t[i][j] = 0;
  };
  rec(0);
}

inline BigInt ssyt_count(const std::vector<int>& shape, const std::vector<int>& content) {
  BigInt count = 0;
  const int m = static_cast<int>(content.size());
  each_ssyt(shape, m, [&](const auto& t) {
    std::vector<int> seen(static_cast<std::size_t>(m), 0);
    for (const auto& row : t) {
      for (int v : row) ++seen[static_cast<std::size_t>(v - 1)];
    }
    if (seen == content) ++count;
  });
  return count;
}

/// Number of SSYT of the given shape with entries in 1..max_entry.
inline BigInt ssyt_count_any(const std::vector<int>& shape, int max_entry) {
  BigInt count = 0;
  each_ssyt(shape, max_entry, [&](const auto&) { ++count; });
  return count;
}

/// kappa from the cell definition 2 * sum (column - row).
inline std::int64_t kappa_cells(const std::vector<int>& shape) {
  std::int64_t k = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (int j = 1; j <= shape[i]; ++j) k += 2 * (j - static_cast<int>(i + 1));
  }
  return k;
}

/// Principal specialization by summing monomials over SSYT with entries <= r:
/// entry k contributes exponent (r + 1 - 2k)/2. Keys are doubled exponents.
inline std::map<std::int64_t, BigInt> principal_spec_by_tableaux(const std::vector<int>& shape, int r) {
  std::map<std::int64_t, BigInt> out;
  each_ssyt(shape, r, [&](const auto& t) {
    std::int64_t twice = 0;
    for (const auto& row : t) {
      for (int v : row) twice += r + 1 - 2 * v;
    }
    out[twice] += 1;
  });
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Converts a doubled-exponent map to a QSeries.
inline torusvoa::QSeries halves_to_series(const std::map<std::int64_t, BigInt>& m,
                                          std::optional<torusvoa::Rational> cutoff = std::nullopt) {
  torusvoa::QSeries::TermMap terms;
  for (const auto& [e, c] : m) terms[torusvoa::Rational(e, 2)] += c;
  return torusvoa::QSeries(std::move(terms), cutoff, 2);
}

/// Dense integer series helpers (coefficients of q^0..q^{N-1}).
using Dense = std::vector<BigInt>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// 1 / prod_{k>=1} (1 - q^k) as dense coefficients: p(0), ..., p(N-1).
inline Dense dense_partitions(int N) {
  Dense out(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) out[static_cast<std::size_t>(n)] = partition_count(n);
  return out;
}

/// Random partition with at most `max_len` parts, each at most `max_part`.
inline torusvoa::Partition random_partition(std::mt19937& rng, int max_len, int max_part) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> part_dist(1, std::max(1, max_part));
  std::vector<int> parts(static_cast<std::size_t>(len_dist(rng)));
  for (int& x : parts) x = part_dist(rng);
  std::sort(parts.rbegin(), parts.rend());
  return torusvoa::Partition(parts);
}

inline torusvoa::WeightVector random_weight(std::mt19937& rng, int rank, int max_coeff) {
  std::uniform_int_distribution<std::int64_t> d(0, max_coeff);
  std::vector<std::int64_t> a(static_cast<std::size_t>(rank - 1));
  for (auto& x : a) x = d(rng);
  return torusvoa::WeightVector(rank, a);
}

/// Random truncated series with integer exponents in [low, cutoff).
inline torusvoa::QSeries random_series(std::mt19937& rng, int low, int cutoff, int density = 60) {
  std::uniform_int_distribution<int> coin(0, 99);
  std::uniform_int_distribution<int> coeff(-5, 5);
  torusvoa::QSeries::TermMap terms;
  for (int e = low; e < cutoff; ++e) {
    if (coin(rng) < density) terms[e] = coeff(rng);
  }
  return torusvoa::QSeries(std::move(terms), torusvoa::Rational(cutoff));
}

}  // namespace oracle
