#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "plethysm/tensor.hpp"

using namespace plethysm;

TEST_CASE("canonical_wedge") {
  CHECK(canonical_wedge({2, 1, 3}) == std::pair<WedgeWord, int>({1, 2, 3}, -1));
  CHECK(canonical_wedge({1, 1}).second == 0);
  CHECK(canonical_wedge({1, 2}) == std::pair<WedgeWord, int>({1, 2}, 1));
  CHECK(canonical_wedge({3, 2, 1}) == std::pair<WedgeWord, int>({1, 2, 3}, -1));
  CHECK(canonical_wedge({4, 3, 2, 1}).second == 1);
}

TEST_CASE("canonical_wedge sign behaves like a permutation sign") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 2 + static_cast<int>(rng() % 4);
    std::vector<int> word(k);
    for (int i = 0; i < k; ++i) word[i] = 1 + static_cast<int>(rng() % 9);
    auto [sorted, sign] = canonical_wedge(word);
    if (sign == 0) continue;
    CHECK(canonical_wedge(sorted) == std::pair<WedgeWord, int>(sorted, 1));
    // one extra transposition flips the sign
    int a = static_cast<int>(rng() % k), b = static_cast<int>(rng() % k);
    if (a == b) continue;
    std::swap(word[a], word[b]);
    CHECK(canonical_wedge(word).second == -sign);
  }
}

TEST_CASE("weight_of") {
  CHECK(weight_of({{1, 2, 3}, {1, 2, 4}}, 4) == std::vector<int>({2, 2, 1, 1}));
  CHECK(weight_of({{1, 2, 3}}, 3) == std::vector<int>({1, 1, 1}));
  CHECK(weight_of({{1, 2}, {1, 2}}, 2) == std::vector<int>({2, 2}));
  CHECK(weight_of({{1, 2}, {1, 2}}, 3) == std::vector<int>({2, 2, 0}));
  CHECK_THROWS_AS(weight_of({{1, 5}}, 4), std::invalid_argument);
}

TEST_CASE("add_term canonicalizes and cancels") {
  TensorVector v;
  v.add_term({{2, 1}}, 1);  // = -(1,2)
  CHECK(v.coeff({{1, 2}}) == -1);
  v.add_term({{1, 2}}, 1);
  CHECK(v.is_zero());
  v.add_term({{1, 1}}, 5);  // repeated index: zero wedge
  CHECK(v.is_zero());
}

TEST_CASE("raising_op basics") {
  TensorVector v;
  v.add_term({{1, 2}}, 1);
  CHECK(raising_op(1, v).is_zero());

  TensorVector w;
  w.add_term({{1, 3}, {2, 3}}, 1);
  TensorVector x2 = raising_op(2, w);
  CHECK(x2.term_count() == 1);
  CHECK(x2.coeff({{1, 2}, {2, 3}}) == 1);
}

TEST_CASE("raising_op is linear and shifts weight") {
  std::mt19937 rng(11);
  int n = 5;
  auto random_vec = [&](int k, int d) {
    TensorVector v;
    for (int t = 0; t < 6; ++t) {
      SimpleTensor tensor;
      for (int f = 0; f < d; ++f) {
        WedgeWord word;
        while (static_cast<int>(word.size()) < k)
          word.push_back(1 + static_cast<int>(rng() % n));
        tensor.push_back(word);
      }
      v.add_term(tensor, 1 + static_cast<int>(rng() % 5));
    }
    return v;
  };
  for (int trial = 0; trial < 20; ++trial) {
    TensorVector a = random_vec(2, 2), b = random_vec(2, 2);
    for (int j = 1; j < n; ++j) {
      TensorVector sum;
      for (const auto& [t, c] : a.terms()) sum.add_term(t, c);
      for (const auto& [t, c] : b.terms()) sum.add_term(t, c);
      TensorVector lhs = raising_op(j, sum);
      TensorVector rhs = raising_op(j, a);
      TensorVector xb = raising_op(j, b);
      for (const auto& [t, c] : xb.terms()) rhs.add_term(t, c);
      CHECK(lhs == rhs);
    }
  }
  // weight shift: X_j moves weight by e_j - e_{j+1}
  TensorVector v;
  v.add_term({{1, 3}, {2, 4}}, 1);
  for (int j = 1; j < 4; ++j) {
    TensorVector xv = raising_op(j, v);
    for (const auto& [t, c] : xv.terms()) {
      auto wt = weight_of(t, 5);
      std::vector<int> expected = weight_of({{1, 3}, {2, 4}}, 5);
      expected[j - 1] += 1;
      expected[j] -= 1;
      CHECK(wt == expected);
    }
  }
}

TEST_CASE("symmetrize") {
  TensorVector v;
  v.add_term({{1, 2}, {3, 4}}, 1);
  v.add_term({{3, 4}, {1, 2}}, -1);
  CHECK(symmetrize(v).is_zero());

  TensorVector w;
  w.add_term({{1, 2}, {3, 4}}, 1);
  w.add_term({{3, 4}, {1, 2}}, 1);
  SymVector s = symmetrize(w);
  CHECK(s.coeff({{1, 2}, {3, 4}}) == 2);

  // factor permutations die in the quotient
  TensorVector diff;
  diff.add_term({{1, 3}, {2, 4}, {1, 2}}, 7);
  diff.add_term({{1, 2}, {2, 4}, {1, 3}}, -7);
  CHECK(symmetrize(diff).is_zero());
}
