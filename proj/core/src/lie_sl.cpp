#include "torusvoa/lie_sl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace torusvoa {

namespace {

void check_rank(int rank) {
  if (rank < 2) throw std::invalid_argument("sl_r rank must be at least 2");
}

void check_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                                std::to_string(b.rank()));
  }
}

}  // namespace

Weight::Weight(int rank, std::vector<std::int64_t> coeffs) : rank_(rank), coeffs_(std::move(coeffs)) {
  check_rank(rank);
  if (coeffs_.size() != static_cast<std::size_t>(rank - 1)) {
    throw std::invalid_argument("sl_" + std::to_string(rank) + " weight needs " +
                                std::to_string(rank - 1) + " coefficients");
  }
}

Weight Weight::zero(int rank) {
  check_rank(rank);
  return Weight(rank, std::vector<std::int64_t>(static_cast<std::size_t>(rank - 1), 0));
}

Weight Weight::fundamental(int rank, int i) {
  Weight w = zero(rank);
  if (i < 1 || i > rank - 1) throw std::out_of_range("fundamental weight index out of range");
  w.coeffs_[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

Weight Weight::weyl_vector(int rank) {
  check_rank(rank);
  return Weight(rank, std::vector<std::int64_t>(static_cast<std::size_t>(rank - 1), 1));
}

Weight Weight::simple_root(int rank, int i) {
  Weight w = zero(rank);
  if (i < 1 || i > rank - 1) throw std::out_of_range("simple root index out of range");
  w.coeffs_[static_cast<std::size_t>(i - 1)] = 2;
  if (i > 1) w.coeffs_[static_cast<std::size_t>(i - 2)] = -1;
  if (i < rank - 1) w.coeffs_[static_cast<std::size_t>(i)] = -1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t a) { return a >= 0; });
}

std::int64_t Weight::level() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s += static_cast<std::int64_t>(i + 1) * coeffs_[i];
  return s;
}

int Weight::coset_index() const {
  const std::int64_t m = level() % rank_;
  return static_cast<int>(m < 0 ? m + rank_ : m);
}

Weight Weight::reflected(int i) const {
  return *this - coeff(i) * simple_root(rank_, i);
}

Weight& Weight::operator+=(const Weight& o) {
  check_same_rank(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  check_same_rank(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], -o.coeffs_[i]);
  return *this;
}

Weight operator*(std::int64_t k, Weight w) {
  for (auto& a : w.coeffs_) a = checked_mul(a, k);
  return w;
}

WeightVector::WeightVector(int rank, std::vector<std::int64_t> coeffs)
    : WeightVector(Weight(rank, std::move(coeffs))) {}

WeightVector::WeightVector(const Weight& w) : weight_(w) {
  if (!w.is_dominant()) throw std::invalid_argument("weight " + to_string(w) + " is not dominant");
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i < w.rank(); ++i) {
    const std::int64_t a = w.coeff(i);
    if (a == 0) continue;
    const std::int64_t mag = a < 0 ? -a : a;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag << "*";
    os << "w" << i;
  }
  if (first) os << "0";
  return os.str();
}

Rational pairing(const Weight& a, const Weight& b) {
  check_same_rank(a, b);
  const int r = a.rank();
  Rational total = 0;
  for (int i = 1; i < r; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 1; j < r; ++j) {
      if (b.coeff(j) == 0) continue;
      const Rational form = Rational(std::min(i, j)) - Rational(static_cast<std::int64_t>(i) * j, r);
      total += Rational(checked_mul(a.coeff(i), b.coeff(j))) * form;
    }
  }
  return total;
}

Rational casimir_pairing(const Weight& mu) {
  return pairing(mu, mu + 2 * Weight::weyl_vector(mu.rank()));
}

WeightVector weight_of_partition(const Partition& lambda, int r) {
  check_rank(r);
  if (lambda.length() > r) {
    throw std::invalid_argument("partition " + to_string(lambda) + " has more than " +
                                std::to_string(r) + " rows");
  }
  std::vector<std::int64_t> a(static_cast<std::size_t>(r - 1));
  for (int i = 1; i < r; ++i) {
    a[static_cast<std::size_t>(i - 1)] =
        lambda.part(static_cast<std::size_t>(i)) - lambda.part(static_cast<std::size_t>(i + 1));
  }
  return WeightVector(r, std::move(a));
}

Partition partition_of_weight(const WeightVector& mu, std::int64_t a_r) {
  if (a_r < 0) throw std::invalid_argument("a_r must be nonnegative");
  const int r = mu.rank();
  std::vector<int> parts(static_cast<std::size_t>(r));
  std::int64_t tail = a_r;
  parts[static_cast<std::size_t>(r - 1)] = static_cast<int>(tail);
  for (int i = r - 1; i >= 1; --i) {
    tail += mu.coeff(i);
    parts[static_cast<std::size_t>(i - 1)] = static_cast<int>(tail);
  }
  return Partition(std::move(parts));
}

BigInt weyl_dim(const WeightVector& mu) {
  const int r = mu.rank();
  BigInt num = 1;
  BigInt den = 1;
  // Positive roots alpha_i + ... + alpha_j; (mu + delta, root) = sum (a_k + 1).
  for (int i = 1; i < r; ++i) {
    std::int64_t height_pairing = 0;
    for (int j = i; j < r; ++j) {
      height_pairing += mu.coeff(j) + 1;
      num *= height_pairing;
      den *= (j - i + 1);
    }
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension product is not integral");
  return num / den;
}

BigInt zero_weight_dim(const WeightVector& mu, KostkaTable& table) {
  if (mu.coset_index() != 0) return 0;
  const Partition lambda = partition_of_weight(mu);
  const int k = lambda.weight() / mu.rank();
  return table.get(lambda, Composition(std::vector<int>(static_cast<std::size_t>(mu.rank()), k)));
}

BigInt zero_weight_dim(const WeightVector& mu) {
  if (mu.coset_index() != 0) return 0;
  const Partition lambda = partition_of_weight(mu);
  const int k = lambda.weight() / mu.rank();
  return kostka(lambda, Composition(std::vector<int>(static_cast<std::size_t>(mu.rank()), k)));
}

namespace {

// Number of ways to write v (coordinates summing to zero) as a nonnegative
// integer combination of e_i - e_j, i < j.
class KostantPartitionFunction {
 public:
  BigInt operator()(const std::vector<int>& v) {
    if (v.size() <= 1) return v.empty() || v[0] == 0 ? 1 : 0;
    int prefix = 0;
    for (int x : v) {
      prefix += x;
      if (prefix < 0) return 0;
    }
    if (prefix != 0) return 0;
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    BigInt total = 0;
    std::vector<int> rest(v.begin() + 1, v.end());
    // Spread v[0] over the roots e_1 - e_j.
    std::function<void(std::size_t, int)> spread = [&](std::size_t j, int left) {
      if (j + 1 == rest.size()) {
        rest[j] += left;
        total += (*this)(rest);
        rest[j] -= left;
        return;
      }
      for (int c = 0; c <= left; ++c) {
        rest[j] += c;
        spread(j + 1, left - c);
        rest[j] -= c;
      }
    };
    spread(0, v[0]);
    memo_.emplace(v, total);
    return total;
  }

 private:
  std::map<std::vector<int>, BigInt> memo_;
};

}  // namespace

BigInt zero_weight_dim_alternant(const WeightVector& mu) {
  const int r = mu.rank();
  if (r > 6) throw std::length_error("alternant oracle limited to rank <= 6");
  if (mu.coset_index() != 0) return 0;
  const Partition lambda = partition_of_weight(mu);
  const int k = lambda.weight() / r;
  std::vector<int> shifted(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) shifted[static_cast<std::size_t>(i)] = lambda.part(static_cast<std::size_t>(i + 1)) + (r - 1 - i);
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  KostantPartitionFunction partition_function;
  BigInt total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) inversions += perm[i] > perm[j];
    }
    std::vector<int> v(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = shifted[static_cast<std::size_t>(perm[i])] - (r - 1 - i) - k;
    const BigInt term = partition_function(v);
    if (inversions % 2) total -= term; else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<Weight> weyl_orbit(const Weight& w) {
  std::set<Weight> seen{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& x : frontier) {
      for (int i = 1; i < x.rank(); ++i) {
        Weight y = x.reflected(i);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<WeightVector> dominant_weights_of_level(int rank, std::int64_t level) {
  check_rank(rank);
  std::vector<WeightVector> out;
  if (level < 0) return out;
  std::vector<std::int64_t> a(static_cast<std::size_t>(rank - 1), 0);
  // Highest index first so that the remainder is absorbed by a_1.
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t left) {
    if (i == 1) {
      a[0] = left;
      out.emplace_back(rank, a);
      return;
    }
    for (std::int64_t c = 0; c * i <= left; ++c) {
      a[static_cast<std::size_t>(i - 1)] = c;
      rec(i - 1, left - c * i);
    }
    a[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(rank - 1, level);
  return out;
}

}  // namespace torusvoa
