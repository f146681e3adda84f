#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "plethysm/hwv.hpp"
#include "plethysm/pieri.hpp"

using namespace plethysm;

TEST_CASE("sparse_rank on dense-known matrices") {
  // identity
  CHECK(sparse_rank({{{0, 1}}, {{1, 1}}, {{2, 1}}}) == 3);
  // dependent rows
  CHECK(sparse_rank({{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}}) == 1);
  CHECK(sparse_rank({}) == 0);
  CHECK(sparse_rank({{}, {}}) == 0);
  // 2x2 full rank with non-unit entries
  CHECK(sparse_rank({{{0, 2}, {1, 3}}, {{0, 3}, {1, 5}}}) == 2);
  // triple entry on one column merges to zero: row becomes (0, 6)
  CHECK(sparse_rank({{{0, 2}, {0, -2}, {1, 6}, {0, 0}}}) == 1);
  // rank 2 in 3 rows
  CHECK(sparse_rank({{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}, {{0, 1}, {2, 1}, {1, 2}}}) == 2);
}

TEST_CASE("hwv_space_dim examples") {
  CHECK(hwv_space_dim(3, 2, Partition({2, 2, 1, 1}), 4) == 1);
  CHECK(hwv_space_dim(2, 1, Partition({1, 1}), 2) == 1);
  CHECK(hwv_space_dim(2, 2, Partition({2, 1, 1}), 4) == 1);
  // a part larger than d cannot be a weight of d wedge factors
  CHECK(hwv_space_dim(2, 2, Partition({3, 1}), 4) == 0);
  // full weight space of Wedge^2 C^2
  CHECK(hwv_space_dim(2, 1, Partition({1, 1}), 3) == 1);
}

TEST_CASE("hwv_space_dim rejects bad input") {
  CHECK_THROWS_AS(hwv_space_dim(3, 2, Partition({2, 2, 1, 1}), 2),
                  std::invalid_argument);  // k > n
  CHECK_THROWS_AS(hwv_space_dim(2, 2, Partition({2, 1}), 4),
                  std::invalid_argument);  // |mu| != kd
  CHECK_THROWS_AS(hwv_space_dim(2, 2, Partition({1, 1, 1, 1}), 3),
                  std::invalid_argument);  // l(mu) > n
}

TEST_CASE("kernel dimension equals the tableau count, kd <= 6") {
  for (int k = 1; k <= 6; ++k)
    for (int d = 1; k * d <= 6; ++d)
      for (const auto& lam : partitions_of(k * d)) {
        Partition mu = lam.conjugate();
        int n = std::max(k, lam.part(1));
        if (n == 0) continue;
        long long count =
            static_cast<long long>(enumerate_pieri_tableaux(k, d, lam).size());
        CAPTURE(k);
        CAPTURE(d);
        CAPTURE(lam.to_string());
        CHECK(hwv_space_dim(k, d, mu, n) == count);
      }
}
