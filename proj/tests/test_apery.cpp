#include <catch_amalgamated.hpp>

#include "property_checks.hpp"

using namespace sgring;

TEST_CASE("Apery set of the rank-3 example with m = 2", "[apery]") {
  auto p = th::run({{2, 0, 0, 1, 1}, {0, 2, 0, 1, 0}, {0, 0, 2, 0, 1}});
  CHECK(p.a.ap == th::ivs({{0, 0, 0}, {1, 0, 1}, {1, 1, 0}, {2, 1, 1}}));
  CHECK(p.a.soc == th::ivs({{2, 1, 1}}));
  CHECK(p.a.type == 1);
  CHECK(is_cohen_macaulay(p.a));
  CHECK_FALSE(is_normal(p.op, p.a));
  CHECK(normality(p.op, p.a).witness == IntVector{2, 1, 1});
  CHECK(p.a.cosets.index() == 4);
}

TEST_CASE("Apery data of the GTT example", "[apery]") {
  auto p = th::run({{1, 3, 3, 3}, {0, 3, 1, 2}});
  CHECK(p.a.ap == th::ivs({{0, 0}, {3, 2}, {6, 1}}));
  CHECK(p.a.soc == th::ivs({{3, 2}, {6, 1}}));
  CHECK(p.op.to_source(IntVector{6, 1}) == IntVector{3, 1});
  CHECK(p.op.to_source(IntVector{3, 2}) == IntVector{3, 2});
  CHECK(is_cohen_macaulay(p.a));
}

TEST_CASE("numerical semigroup <6,7,16,17>", "[apery]") {
  auto p = th::run({{6, 7, 16, 17}});
  CHECK(p.a.ap == th::ivs({{0}, {7}, {14}, {16}, {17}, {21}}));
  CHECK(p.a.soc == th::ivs({{16}, {17}, {21}}));
  CHECK(pseudo_frobenius(p.a) == std::vector<Int>{10, 11, 15});
  CHECK(pseudo_frobenius(p.a) == oracle::pseudo_frobenius({6, 7, 16, 17}));
}

TEST_CASE("normality and slimness verdicts", "[apery]") {
  auto rank3 = th::run({{5, 0, 0, 2, 1}, {0, 5, 0, 1, 3}, {0, 0, 5, 1, 3}});
  CHECK(is_normal(rank3.op, rank3.a));
  CHECK(is_slim(rank3.op));

  auto nonslim = th::run({{5, 0, 0, 1, 2}, {0, 5, 0, 3, 1}, {0, 0, 5, 0, 0}});
  Verdict s = slimness(nonslim.op);
  CHECK_FALSE(s.holds);
  REQUIRE(s.witness);
  CHECK(s.witness->degree() == 3);
  CHECK(s.witness->degree() < nonslim.op.order());
  CHECK(nonslim.op.contains(*s.witness));
  CHECK_FALSE(s.witness->is_positive());

  auto notmono = th::run({{0, 1, 3, 8}, {8, 3, 1, 0}});
  CHECK(is_normal(notmono.op, notmono.a));
  CHECK(notmono.a.type == 2);
}

TEST_CASE("normality agrees with the residue oracle", "[apery]") {
  for (const auto &fx : th::worked_fixtures()) {
    if (fx.name == "ex2_8")
      continue; // box too large for the dense oracle
    auto p = th::run(fx.rows);
    const Int m = p.op.order();
    const auto gens = th::vecs(p.op.base().generators());
    oracle::BoxSemigroup box(gens, oracle::Vec(p.op.dim(), m));
    INFO(fx.name);
    CHECK(is_normal(p.op, p.a) == oracle::orthogonal_normal(gens, m, box));
  }
}

TEST_CASE("a non-Cohen-Macaulay curve", "[apery]") {
  auto p = th::run({{4, 3, 1, 0}, {0, 1, 3, 4}});
  CHECK_FALSE(is_cohen_macaulay(p.a));
  auto crowded = crowded_coset(p.a);
  REQUIRE(crowded);
  CHECK(p.a.by_coset.at(*crowded).size() >= 2);
  CHECK(p.a.ap.size() > static_cast<std::size_t>(p.a.cosets.index()));
  try {
    require_cohen_macaulay(p.a);
    FAIL("expected NotCohenMacaulay");
  } catch (const NotCohenMacaulay &e) {
    CHECK(e.coset() == *crowded);
  }
}

TEST_CASE("Apery sets of the worked examples pass the property suite",
          "[apery]") {
  for (const auto &fx : th::worked_fixtures()) {
    auto p = th::run(fx.rows);
    auto failures = props::apery_properties(p, fx.name);
    INFO(fx.name);
    for (const auto &f : failures)
      FAIL_CHECK(f);
  }
}

TEST_CASE("Apery cap is enforced", "[apery]") {
  Limits tight;
  tight.max_apery = 3;
  auto op = orthogonalize(Presentation::from_matrix({{6, 7, 16, 17}}));
  CHECK_THROWS_AS(apery_set(op, tight), ResourceLimit);
}

TEST_CASE("reduction condition", "[apery]") {
  auto rank3 = th::run({{5, 0, 0, 2, 1}, {0, 5, 0, 1, 3}, {0, 0, 5, 1, 3}});
  CHECK(reduction_condition_for(rank3.op, IntVector{2, 1, 1}));
  auto nonslim = th::run({{5, 0, 0, 1, 2}, {0, 5, 0, 3, 1}, {0, 0, 5, 0, 0}});
  CHECK_FALSE(reduction_condition_for(nonslim.op, IntVector{5, 5, 5}));
  CHECK_THROWS_AS(reduction_condition_for(nonslim.op, IntVector{0, 0, 0}),
                  InvalidInput);
}
