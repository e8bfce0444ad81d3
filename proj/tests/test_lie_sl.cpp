#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace torusvoa;

namespace {

BigInt ssyt_dimension(const Partition& lambda, int r) {
  BigInt count = 0;
  oracle::each_ssyt(lambda.parts(), r, [&](const auto&) { ++count; });
  return count;
}

}  // namespace

TEST_CASE("bilinear form on fundamental weights") {
  CHECK(pairing(Weight::fundamental(2, 1), Weight::fundamental(2, 1)) == Rational(1, 2));
  for (int r = 2; r <= 6; ++r) {
    const Weight delta = Weight::weyl_vector(r);
    for (int i = 1; i < r; ++i) {
      CHECK(pairing(delta, Weight::fundamental(r, i)) == Rational(r * i - i * i, 2));
      CHECK(pairing(delta, Weight::simple_root(r, i)) == 1);
      for (int j = 1; j < r; ++j) {
        CHECK(pairing(Weight::fundamental(r, i), Weight::fundamental(r, j)) ==
              Rational(std::min(i, j)) - Rational(i * j, r));
        CHECK(pairing(Weight::simple_root(r, i), Weight::fundamental(r, j)) == (i == j ? 1 : 0));
      }
    }
  }
  CHECK_THROWS_AS(pairing(Weight::zero(2), Weight::zero(3)), std::invalid_argument);
}

TEST_CASE("casimir pairing examples") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(casimir_pairing(WeightVector(2, {n})) == Rational(n * n, 2) + Rational(n));
  }
  CHECK(casimir_pairing(WeightVector::zero(4)) == 0);
}

TEST_CASE("Casimir equals kappa + r|lambda| - |lambda|^2/r on 500 random weights") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> rank_dist(2, 5);
  std::uniform_int_distribution<std::int64_t> ar_dist(0, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const int r = rank_dist(rng);
    const WeightVector mu = oracle::random_weight(rng, r, 4);
    const std::int64_t ar = ar_dist(rng);
    const Partition hat = partition_of_weight(mu, ar);
    const std::int64_t w = hat.weight();
    const Rational expected = Rational(oracle::kappa_cells(hat.parts())) + Rational(r * w) - Rational(w * w, r);
    CHECK(casimir_pairing(mu) == expected);
  }
}

TEST_CASE("partition and weight dictionary") {
  for (int n = 0; n <= 5; ++n) CHECK(weight_of_partition(Partition({n}), 2) == WeightVector(2, {n}));
  CHECK(weight_of_partition(Partition({2, 2}), 2) == WeightVector::zero(2));
  CHECK(weight_of_partition(Partition({3, 1}), 3) == WeightVector(3, {2, 1}));
  CHECK_THROWS_AS(weight_of_partition(Partition({1, 1, 1}), 2), std::invalid_argument);
  CHECK(partition_of_weight(WeightVector::zero(2), 3) == Partition({3, 3}));
  CHECK(partition_of_weight(WeightVector(3, {2, 1})) == Partition({3, 1}));
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 2 + trial % 4;
    const WeightVector mu = oracle::random_weight(rng, r, 5);
    const std::int64_t ar = trial % 3;
    const Partition hat = partition_of_weight(mu, ar);
    CHECK(weight_of_partition(hat, r) == mu);
    CHECK(weight_of_partition(hat, r).coset_index() == hat.weight() % r);
  }
}

TEST_CASE("weight rendering and validation") {
  CHECK(to_string(Weight(3, {2, 1})) == "2*w1 + w2");
  CHECK(to_string(Weight::zero(3)) == "0");
  CHECK(to_string(Weight(3, {0, 1})) == "w2");
  CHECK_THROWS_AS(WeightVector(3, {-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Weight(3, {1}), std::invalid_argument);
  CHECK_THROWS_AS(Weight::zero(1), std::invalid_argument);
  CHECK(Weight(3, {1, 0}).reflected(1) == Weight(3, {-1, 1}));
}

TEST_CASE("Weyl dimension formula") {
  for (int r = 2; r <= 5; ++r) {
    for (int n = 0; n <= 6; ++n) {
      BigInt binom = 1;
      for (int k = 1; k <= r - 1; ++k) binom = binom * (n + k) / k;
      std::vector<std::int64_t> a(static_cast<std::size_t>(r - 1), 0);
      a[0] = n;
      CHECK(weyl_dim(WeightVector(r, a)) == binom);
    }
    CHECK(weyl_dim(WeightVector::zero(r)) == 1);
  }
  CHECK(weyl_dim(WeightVector(3, {1, 1})) == 8);
  for (int r = 2; r <= 4; ++r) {
    for (int w = 0; w <= 8; ++w) {
      for (const auto& lambda : partitions_of(w, r)) {
        const BigInt dim = weyl_dim(weight_of_partition(lambda, r));
        CHECK(dim == ssyt_dimension(lambda, r));
        BigInt total = 0;
        for (const auto& mu : compositions_of(w, r)) total += kostka(lambda, mu);
        CHECK(dim == total);
      }
    }
  }
}

TEST_CASE("zero-weight dimension") {
  for (int m = 0; m <= 8; ++m) CHECK(zero_weight_dim(WeightVector(2, {2 * m})) == 1);
  CHECK(zero_weight_dim(WeightVector(2, {3})) == 0);
  CHECK(zero_weight_dim(WeightVector(3, {1, 0})) == 0);
  CHECK(zero_weight_dim(WeightVector(3, {1, 1})) == 2);
  CHECK(zero_weight_dim_alternant(WeightVector(3, {1, 1})) == 2);
  KostkaTable table;
  for (int r = 2; r <= 4; ++r) {
    for (int w = 0; w <= 10; ++w) {
      for (const auto& lambda : partitions_of(w, r)) {
        const WeightVector mu = weight_of_partition(lambda, r);
        const BigInt z = zero_weight_dim(mu);
        CHECK(z == zero_weight_dim(mu, table));
        CHECK(z == zero_weight_dim_alternant(mu));
        if (mu.coset_index() != 0) {
          CHECK(z == 0);
        } else if (w <= 8) {
          const Partition hat = partition_of_weight(mu);
          const int k = hat.weight() / r;
          CHECK(z == oracle::ssyt_count(hat.parts(), std::vector<int>(static_cast<std::size_t>(r), k)));
        }
        const BigInt dim = weyl_dim(mu);
        CHECK(z <= dim);
        if (mu != WeightVector::zero(r)) CHECK(z < dim);
      }
    }
  }
  CHECK_THROWS_AS(zero_weight_dim_alternant(WeightVector::zero(kAlternantRankGuard + 1)), std::length_error);
}

TEST_CASE("Weyl orbits preserve the norm") {
  std::mt19937 rng(31337);
  for (int r = 2; r <= 4; ++r) {
    const int order = r == 2 ? 2 : r == 3 ? 6 : 24;
    for (int trial = 0; trial < 30; ++trial) {
      const Weight shifted = oracle::random_weight(rng, r, 3).weight() + Weight::weyl_vector(r);
      const Rational norm = pairing(shifted, shifted);
      const auto orbit = weyl_orbit(shifted);
      CHECK(static_cast<int>(orbit.size()) == order);  // mu + delta is regular
      CHECK(std::set<Weight>(orbit.begin(), orbit.end()).size() == orbit.size());
      int dominant = 0;
      for (const auto& w : orbit) {
        CHECK(pairing(w, w) == norm);
        if (w.is_dominant()) ++dominant;
      }
      CHECK(dominant == 1);
    }
  }
}

TEST_CASE("dominant weights of a level") {
  for (int r = 2; r <= 5; ++r) {
    for (int level = 0; level <= 9; ++level) {
      const auto ws = dominant_weights_of_level(r, level);
      // weights of level L correspond to partitions of L with parts < r
      int expected = 0;
      for (const auto& q : partitions_of(level, level)) {
        if (q.empty() || q.parts().front() < r) ++expected;
      }
      CHECK(static_cast<int>(ws.size()) == expected);
      CHECK(std::set<WeightVector>(ws.begin(), ws.end()).size() == ws.size());
      for (const auto& w : ws) CHECK(w.level() == level);
    }
  }
}
