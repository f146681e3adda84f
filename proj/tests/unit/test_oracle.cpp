#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "plethysm/oracle.hpp"
#include "plethysm/pieri.hpp"
#include "support/ssyt_count.hpp"

using namespace plethysm;

TEST_CASE("functor names") {
  CHECK(functor_name(Functor::wedge) == "wedge");
  CHECK(functor_name(Functor::sym) == "sym");
  CHECK(parse_functor("wedge") == Functor::wedge);
  CHECK(parse_functor("sym") == Functor::sym);
  CHECK_THROWS_AS(parse_functor("bogus"), std::invalid_argument);
}

TEST_CASE("weight multiplicities") {
  auto wm = weight_multiplicities(1, 2, 2, Functor::wedge);
  CHECK(wm.size() == 2);
  CHECK(wm.at(Partition({2})) == 1);
  CHECK(wm.at(Partition({1, 1})) == 1);

  // S^2(S^1 C^2) is the same space
  CHECK(weight_multiplicities(1, 2, 2, Functor::sym) == wm);

  // {12,34}, {13,24}, {14,23}
  auto wm4 = weight_multiplicities(2, 2, 4, Functor::wedge);
  CHECK(wm4.at(Partition({1, 1, 1, 1})) == 3);
  CHECK(wm4.at(Partition({2, 2})) == 1);

  CHECK(ambient_dimension(2, 2, 4, Functor::wedge) == 21);
  CHECK(ambient_dimension(2, 2, 4, Functor::sym) == 55);
  CHECK(tuple_ambient_dimension(2, 2, 4, Functor::wedge) == 36);
}

TEST_CASE("tuple weight multiplicities") {
  auto tm = tuple_weight_multiplicities(1, 2, 2, Functor::wedge);
  CHECK(tm.at(Partition({2})) == 1);
  CHECK(tm.at(Partition({1, 1})) == 2);  // e1 x e2 and e2 x e1
}

TEST_CASE("guardrails") {
  CHECK_THROWS_AS(weight_multiplicities(3, 2, 2, Functor::wedge),
                  std::invalid_argument);  // k > n for wedge
  CHECK_THROWS_AS(weight_multiplicities(2, 9, 4, Functor::wedge),
                  std::invalid_argument);  // k*d > 16 without force
  CHECK_THROWS_AS(decompose(2, 9, 4, Functor::wedge), std::invalid_argument);
  CHECK_THROWS_AS(decompose(0, 1, 1, Functor::sym), std::invalid_argument);
}

TEST_CASE("kostka examples") {
  CHECK(kostka(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(kostka(Partition({3}), Partition({1, 1, 1})) == 1);
  CHECK(kostka(Partition({1, 1}), Partition({2})) == 0);
  // 1122/33, 1123/23, 1133/22
  CHECK(kostka(Partition({4, 2}), Partition({2, 2, 2})) == 3);
  CHECK_THROWS_AS(kostka(Partition({2}), Partition({1})),
                  std::invalid_argument);
}

TEST_CASE("kostka against strip peeling") {
  for (int m = 1; m <= 6; ++m) {
    const auto parts = partitions_of(m, false);
    for (const auto& shape : parts)
      for (const auto& content : parts) {
        CAPTURE(shape.to_string());
        CAPTURE(content.to_string());
        CHECK(kostka(shape, content) ==
              test_support::ssyt_count(shape, content.parts()));
      }
  }
  // K_{mu,mu} = 1
  for (int m = 1; m <= 6; ++m)
    for (const auto& mu : partitions_of(m, false))
      CHECK(kostka(mu, mu) == 1);
}

TEST_CASE("decompose examples") {
  DecompositionTable t = decompose(2, 2, 4, Functor::wedge);
  REQUIRE(t.components.size() == 2);
  CHECK(t.components[0].first == Partition({2, 2}));
  CHECK(t.components[0].second == 1);
  CHECK(t.components[1].first == Partition({1, 1, 1, 1}));
  CHECK(t.components[1].second == 1);
  CHECK(t.multiplicity(Partition({2, 2})) == 1);
  CHECK(t.multiplicity(Partition({4})) == 0);
  CHECK_FALSE(t.tuple);

  DecompositionTable cube = decompose(1, 3, 3, Functor::wedge);
  REQUIRE(cube.components.size() == 1);
  CHECK(cube.components[0].first == Partition({3}));
  CHECK(cube.components[0].second == 1);

  DecompositionTable s22 = decompose(2, 2, 4, Functor::sym);
  REQUIRE(s22.components.size() == 2);
  CHECK(s22.components[0].first == Partition({4}));
  CHECK(s22.components[1].first == Partition({2, 2}));
  CHECK(s22.components[0].second == 1);
  CHECK(s22.components[1].second == 1);
}

TEST_CASE("dimension conservation") {
  for (int k = 1; k <= 4; ++k)
    for (int d = 1; d <= 3; ++d) {
      if (k * d > 6) continue;
      int n = k * d;
      for (Functor f : {Functor::wedge, Functor::sym}) {
        if (f == Functor::wedge && k > n) continue;
        CAPTURE(k);
        CAPTURE(d);
        CAPTURE(functor_name(f));
        DecompositionTable t = decompose(k, d, n, f);
        CHECK(t.dimension_sum() == ambient_dimension(k, d, n, f));
        DecompositionTable tp = decompose_tuple_power(k, d, n, f);
        CHECK(tp.tuple);
        CHECK(tp.dimension_sum() == tuple_ambient_dimension(k, d, n, f));
      }
    }
}

TEST_CASE("decomposition is stable in n") {
  DecompositionTable a = decompose(2, 2, 4, Functor::wedge);
  DecompositionTable b = decompose(2, 2, 5, Functor::wedge);
  DecompositionTable c = decompose(2, 2, 6, Functor::wedge);
  CHECK(a.components == b.components);
  CHECK(a.components == c.components);
}

TEST_CASE("wedge and sym decompositions are conjugate for even k") {
  for (const auto& [k, d, n] : std::vector<std::tuple<int, int, int>>{
           {2, 2, 4}, {2, 3, 6}, {4, 2, 8}}) {
    CAPTURE(k);
    CAPTURE(d);
    DecompositionTable wedge_table, sym_table;
    CHECK(duality_check(k, d, n, &wedge_table, &sym_table));
    REQUIRE(wedge_table.components.size() == sym_table.components.size());
    for (const auto& [mu, mult] : sym_table.components)
      CHECK(wedge_table.multiplicity(mu.conjugate()) == mult);
  }
  CHECK_THROWS_AS(duality_check(2, 3, 5), std::invalid_argument);
  // odd k: S^2(wedge^1 C^2) = S^2(S^1 C^2) = S_(2), which is not the
  // conjugate of itself, so the even-k precondition is load-bearing
  CHECK_THROWS_AS(duality_check(1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(duality_check(3, 2, 6), std::invalid_argument);
}

TEST_CASE("tensor power multiplicity equals tableau count") {
  for (const auto& [k, d] : std::vector<std::pair<int, int>>{
           {1, 2}, {1, 4}, {2, 2}, {2, 3}, {3, 2}, {4, 1}, {6, 1}}) {
    int n = k * d;
    DecompositionTable t = decompose_tuple_power(k, d, n, Functor::wedge);
    for (const auto& lam : partitions_of(k * d, false)) {
      if (lam.part(1) > n) continue;  // lambda* too long for C^n
      CAPTURE(k);
      CAPTURE(d);
      CAPTURE(lam.to_string());
      auto tableaux = enumerate_pieri_tableaux(k, d, lam);
      CHECK(t.multiplicity(lam.conjugate()) ==
            BigInt(static_cast<long long>(tableaux.size())));
    }
  }
}

TEST_CASE("positivity scans") {
  ScanReport r22 = scan_instance(2, 2);
  CHECK(r22.rows.size() == 2);  // (4) and (2,2)
  CHECK(r22.all_ok);
  for (const auto& row : r22.rows) {
    CHECK(row.oracle_multiplicity >= 1);
    CHECK(row.witness_ok);
    CHECK(row.ok);
  }

  ScanReport wide = weintraub_positivity_scan(2, 2);
  CHECK(wide.all_ok);
  CHECK(wide.rows.size() == 3);  // (2); (4), (2,2)
}
