#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "plethysm/partition.hpp"
#include "support/ssyt_count.hpp"

using namespace plethysm;

TEST_CASE("construction validates") {
  CHECK_NOTHROW(Partition({3, 2, 2}));
  CHECK_NOTHROW(Partition{});
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("parse") {
  CHECK(Partition::parse("6,6,6,2") == Partition({6, 6, 6, 2}));
  CHECK(Partition::parse("") == Partition{});
  CHECK(Partition::parse("3") == Partition({3}));
  CHECK_THROWS_AS(Partition::parse("1,a"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("0"), std::invalid_argument);
}

TEST_CASE("basic accessors") {
  Partition lam({6, 6, 6, 2});
  CHECK(lam.weight() == 20);
  CHECK(lam.length() == 4);
  CHECK(lam.part(1) == 6);
  CHECK(lam.part(4) == 2);
  CHECK(lam.part(5) == 0);
  CHECK(lam.to_string() == "6,6,6,2");
}

TEST_CASE("conjugate") {
  CHECK(Partition({6, 6, 6, 2}).conjugate() == Partition({4, 4, 3, 3, 3, 3}));
  CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
  CHECK(Partition({4, 2}).conjugate() == Partition({2, 2, 1, 1}));
  CHECK(Partition{}.conjugate() == Partition{});
}

TEST_CASE("conjugate is a weight-preserving involution up to 30") {
  for (int n = 0; n <= 30; ++n)
    for (const auto& lam : partitions_of(n)) {
      Partition c = lam.conjugate();
      CHECK(c.weight() == lam.weight());
      CHECK(c.conjugate() == lam);
    }
}

TEST_CASE("is_even") {
  CHECK(Partition({6, 6, 6, 2}).is_even());
  CHECK(Partition{}.is_even());
  CHECK_FALSE(Partition({3, 1}).is_even());
  CHECK_FALSE(Partition({2, 1}).is_even());
}

TEST_CASE("schur_dimension basics") {
  CHECK(schur_dimension(Partition({1}), 5) == 5);
  CHECK(schur_dimension(Partition({1, 1}), 1) == 0);
  CHECK(schur_dimension(Partition({2, 1}), 3) == 8);
  CHECK(schur_dimension(Partition{}, 0) == 1);
  CHECK(schur_dimension(Partition{}, 3) == 1);
  CHECK(schur_dimension(Partition({2, 2}), 2) == 1);
}

TEST_CASE("schur_dimension equals the semistandard filling count") {
  for (int m = 0; m <= 8; ++m)
    for (const auto& lam : partitions_of(m))
      for (int n = 0; n <= 6; ++n) {
        CAPTURE(lam.to_string());
        CAPTURE(n);
        CHECK(schur_dimension(lam, n) ==
              BigInt(test_support::brute_schur_dim(lam, n)));
      }
}

TEST_CASE("dominance examples") {
  CHECK(dominance_leq(Partition({1, 1, 1, 1}), Partition({2, 2})));
  CHECK(dominance_leq(Partition({2, 2}), Partition({2, 2})));
  CHECK_FALSE(dominance_leq(Partition({3, 1}), Partition({2, 2})));
  CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({1})),
                  std::invalid_argument);
}

TEST_CASE("dominance is a partial order") {
  auto parts12 = partitions_of(12);
  for (const auto& a : parts12) {
    CHECK(dominance_leq(a, a));
    for (const auto& b : parts12)
      if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
  }
  auto parts8 = partitions_of(8);
  for (const auto& a : parts8)
    for (const auto& b : parts8) {
      if (!dominance_leq(a, b)) continue;
      for (const auto& c : parts8)
        if (dominance_leq(b, c)) CHECK(dominance_leq(a, c));
    }
}

TEST_CASE("lex refines dominance") {
  for (const auto& a : partitions_of(9))
    for (const auto& b : partitions_of(9)) {
      if (a == b) continue;
      CHECK(lex_greater(a, b) != lex_greater(b, a));
      if (dominance_leq(a, b)) CHECK(lex_greater(b, a));
    }
}

TEST_CASE("partitions_of counts") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_of(12).size() == 77);
  CHECK(partitions_of(12, true).size() == 11);  // halves of partitions of 6
  for (const auto& lam : partitions_of(12, true)) CHECK(lam.is_even());
}
