#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "scc/comb.hpp"

using namespace scc;

TEST_CASE("small S_n and class counts") {
  CHECK(enumerate_S(0) == std::vector<std::vector<int>>{{0}});
  CHECK(enumerate_S(1) == std::vector<std::vector<int>>{{0, 1}});
  CHECK(enumerate_S(2).size() == 2);

  int expect[] = {1, 2, 5, 12, 29};
  for (int n = 0; n <= 4; ++n)
    CHECK(enumerate_classes(n).size() == static_cast<size_t>(expect[n]));
}

TEST_CASE("nu recursion values") {
  CHECK(nu_of({0}, 0) == 0);
  CHECK(nu_of({0, 1}, 1) == 2);
  CHECK(nu_of({0, 2}, 2) == 1);
}

TEST_CASE("n = 2 classes carry the expected i-patterns") {
  auto classes = enumerate_classes(2);
  REQUIRE(classes.size() == 5);
  std::multiset<std::vector<int>> pats;
  for (const auto& c : classes) pats.insert(c.i);
  std::multiset<std::vector<int>> expect{
      {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 0}};
  CHECK(pats == expect);
}

TEST_CASE("worked example at n = 7") {
  for (const auto& c : enumerate_classes(7)) {
    if (c.K != std::vector<int>{0, 1, 3, 4, 5, 6, 7}) continue;
    CHECK(c.L == std::vector<int>{0, 3, 4, 5, 6});
    if (c.sigma_at(0) == 0 && c.sigma_at(3) == 1 && c.sigma_at(4) == 1 &&
        c.sigma_at(5) == 0 && c.sigma_at(6) == 1) {
      CHECK(c.i == std::vector<int>{1, 0, 0, 0, 1, 2, 0, 1});
      return;
    }
  }
  FAIL("class from the worked example not found");
}

TEST_CASE("exponent sum identity m(K) = 2|K| - n - 2 for n <= 10") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& c : enumerate_classes(n)) {
      int isum = 0;
      for (int v : c.i) isum += v;
      int m = static_cast<int>(c.L.size());
      CHECK(m == isum);
      CHECK(m == 2 * static_cast<int>(c.K.size()) - n - 2);
    }
}

TEST_CASE("injectivity, parity, and solvability of phi for n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    auto classes = enumerate_classes(n);
    std::map<std::vector<int>, std::set<std::vector<int>>> attained;  // K -> {phi}
    for (const auto& c : classes) {
      auto phi = phi_set(c);
      CHECK((n - static_cast<int>(phi.size())) % 2 == 0);
      // phi subset of K
      for (int p : phi)
        CHECK(std::find(c.K.begin(), c.K.end(), p) != c.K.end());
      // sigma -> phi is injective for fixed K
      CHECK(!attained[c.K].count(phi));
      attained[c.K].insert(phi);
    }
    // solvability criterion, exhaustively per K over all subsets L of K
    for (const auto& K : enumerate_S(n)) {
      auto& hit = attained[K];
      // gather phi-sets of classes with this exact K
      for (uint32_t m = 0; m < (1u << K.size()); ++m) {
        std::vector<int> L;
        for (size_t j = 0; j < K.size(); ++j)
          if ((m >> j) & 1) L.push_back(K[j]);
        if ((n - static_cast<int>(L.size())) % 2 != 0) continue;
        bool predicted = claim1_solvable(K, L, n);
        bool actual = hit.count(L) > 0;
        CHECK(predicted == actual);
      }
    }
  }
}
