#include <catch_amalgamated.hpp>

#include <numeric>

#include "helpers.hpp"

using namespace sgring;

TEST_CASE("cyclic presentations", "[cyclic]") {
  CHECK(cyclic_presentation(2, 1).generators() ==
        th::ivs({{2, 0}, {0, 2}, {1, 1}}));
  auto g74 = cyclic_presentation(7, 4).generators();
  std::sort(g74.begin(), g74.end());
  CHECK(g74 == th::ivs({{0, 7}, {1, 5}, {2, 3}, {3, 1}, {7, 0}}));
  auto g31 = cyclic_presentation(3, 1).generators();
  std::sort(g31.begin(), g31.end());
  CHECK(g31 == th::ivs({{0, 3}, {1, 2}, {2, 1}, {3, 0}}));
  CHECK_THROWS_AS(cyclic_presentation(4, 2), InvalidInput);
  CHECK_THROWS_AS(cyclic_presentation(5, 5), InvalidInput);
  CHECK_THROWS_AS(cyclic_presentation(5, 0), InvalidInput);
}

TEST_CASE("cyclic presentations are Hilbert bases", "[cyclic]") {
  for (Int n = 2; n <= 15; ++n)
    for (Int m1 = 1; m1 < n; ++m1)
      if (std::gcd(n, m1) == 1) {
        INFO("n = " << n << ", m1 = " << m1);
        CHECK(oracle::is_cyclic_hilbert_basis(
            n, m1, th::vecs(cyclic_presentation(n, m1).generators())));
      }
}

TEST_CASE("inverse and c", "[cyclic]") {
  CHECK(inverse_and_c(7, 4) == std::pair<Int, Int>{2, 1});
  CHECK(inverse_and_c(11, 8) == std::pair<Int, Int>{7, 5});
  CHECK(inverse_and_c(11, 1) == std::pair<Int, Int>{1, 0});
  // n = 11: inverse pairs and their c values.
  CHECK(inverse_and_c(11, 2) == std::pair<Int, Int>{6, 1});
  CHECK(inverse_and_c(11, 3) == std::pair<Int, Int>{4, 1});
  CHECK(inverse_and_c(11, 5) == std::pair<Int, Int>{9, 4});
  CHECK(inverse_and_c(11, 10) == std::pair<Int, Int>{10, 9});
  CHECK_THROWS_AS(inverse_and_c(4, 2), InvalidInput);
  for (Int n = 2; n <= 30; ++n)
    for (Int m1 = 1; m1 < n; ++m1)
      if (std::gcd(n, m1) == 1) {
        auto [m2, c] = inverse_and_c(n, m1);
        CHECK(0 < m2);
        CHECK(m2 < n);
        CHECK((m1 * m2) % n == 1 % n);
        CHECK(c * n == m1 * m2 - 1);
      }
}

TEST_CASE("Hirzebruch-Jung expansions", "[cyclic]") {
  CHECK(hj_expansion(7, 4).coefficients == std::vector<Int>{2, 4});
  CHECK(hj_expansion(11, 8).coefficients == std::vector<Int>{2, 2, 3, 2});
  CHECK(hj_expansion(11, 9).coefficients == std::vector<Int>{2, 2, 2, 2, 3});
  CHECK(hj_expansion(5, 1).coefficients == std::vector<Int>{5});
  CHECK_THROWS_AS(hj_expansion(6, 4), InvalidInput);
  CHECK_THROWS_AS(hj_expansion(4, 7), InvalidInput);
  for (Int n = 2; n <= 40; ++n)
    for (Int m = 1; m < n; ++m)
      if (std::gcd(n, m) == 1) {
        HJExpansion e = hj_expansion(n, m);
        CHECK(e.evaluate() == std::pair<Int, Int>{n, m});
        for (Int a : e.coefficients)
          CHECK(a >= 2);
      }
}

TEST_CASE("AG classification", "[cyclic]") {
  for (Int m1 = 1; m1 < 7; ++m1)
    CHECK(is_ag_cyclic(7, m1).first);
  for (Int m1 = 1; m1 < 11; ++m1)
    CHECK(is_ag_cyclic(11, m1).first == (m1 != 7 && m1 != 8));
  auto [ag, pq] = is_ag_cyclic(11, 9);
  CHECK(ag);
  CHECK(pq == std::pair<Int, Int>{2, 1});
  CHECK(is_ag_cyclic(9, 1) ==
        std::pair<bool, std::optional<std::pair<Int, Int>>>{true, std::nullopt});
  for (Int n = 2; n <= 30; ++n)
    for (Int m1 = 1; m1 < n; ++m1)
      if (std::gcd(n, m1) == 1) {
        Int m2 = inverse_and_c(n, m1).first;
        CHECK(is_ag_cyclic(n, m1).first == is_ag_cyclic(n, m2).first);
      }
}

TEST_CASE("Ulrich elements", "[cyclic]") {
  CHECK(ulrich_element_cyclic(7, 4) == IntVector{3, 1});
  CHECK(ulrich_element_cyclic(7, 6) == IntVector{1, 1});
  CHECK(ulrich_element_cyclic(11, 6) == IntVector{5, 1});
  CHECK_THROWS_AS(ulrich_element_cyclic(11, 8), InvalidInput);
  CHECK_THROWS_AS(ulrich_element_cyclic(7, 1), InvalidInput);
}

TEST_CASE("three-way equivalence for n <= 25", "[cyclic]") {
  std::size_t pairs = 0;
  for (Int n = 2; n <= 25; ++n)
    for (Int m1 = 1; m1 < n; ++m1)
      if (std::gcd(n, m1) == 1) {
        ++pairs;
        CyclicValidation v = cross_validate(n, m1);
        INFO("n = " << n << ", m1 = " << m1);
        for (const auto &d : v.discrepancies)
          FAIL_CHECK(d);
        CHECK(v.cohen_macaulay);
        CHECK(v.normal);
      }
  CHECK(pairs == 199);
  CyclicValidation a1 = cross_validate(2, 1);
  CHECK(a1.pipeline);
  CHECK(a1.type == 1);
  CyclicValidation v74 = cross_validate(7, 4);
  CHECK(v74.pipeline_ulrich == th::ivs({{3, 1}}));
  CyclicValidation v118 = cross_validate(11, 8);
  CHECK_FALSE(v118.criterion);
  CHECK_FALSE(v118.shape);
  CHECK_FALSE(v118.pipeline);
}
