#include <catch_amalgamated.hpp>

#include "property_checks.hpp"

using namespace sgring;

namespace {

const std::vector<std::vector<Int>> kGtt{{1, 3, 3, 3}, {0, 3, 1, 2}};
const std::vector<std::vector<Int>> kType3{{8, 0, 9, 22, 31},
                                           {0, 8, 7, 18, 17}};

} // namespace

TEST_CASE("h-vee", "[canonical]") {
  auto ex26 = th::run({{2, 0, 0, 1, 1}, {0, 2, 0, 1, 0}, {0, 0, 2, 0, 1}});
  CHECK(h_vee(ex26.op, ex26.a, IntVector{0, 0, 0}) == IntVector{0, 0, 0});
  CHECK(h_vee(ex26.op, ex26.a, IntVector{1, 1, 0}) == IntVector{1, 1, 0});
  CHECK_THROWS_AS(h_vee(ex26.op, ex26.a, IntVector{1, 0, 0}), InvalidInput);

  auto rank3 = th::run({{5, 0, 0, 2, 1}, {0, 5, 0, 1, 3}, {0, 0, 5, 1, 3}});
  IntVector h{2, 1, 1};
  CHECK(h + h_vee(rank3.op, rank3.a, h) == IntVector{5, 5, 5});

  auto noncm = th::run({{4, 3, 1, 0}, {0, 1, 3, 4}});
  CHECK_THROWS_AS(canonical_generators(noncm.op, noncm.a), NotCohenMacaulay);
  CHECK_THROWS_AS(ag_check(noncm.op, noncm.a), NotCohenMacaulay);
  CHECK_THROWS_AS(hilbert_numerator(noncm.op, noncm.a), NotCohenMacaulay);
}

TEST_CASE("canonical generators", "[canonical]") {
  auto gtt = th::run(kGtt);
  CanonicalData cd = canonical_generators(gtt.op, gtt.a);
  std::vector<IntVector> source;
  for (const auto &[w, v] : cd.socle_generators)
    source.push_back(*gtt.op.to_source(v));
  std::sort(source.begin(), source.end());
  CHECK(source == th::ivs({{1, 1}, {1, 2}}));
  // a(k[H']) = 7 - 6 in orthogonal grading.
  CHECK(cd.a_invariant == 1);

  auto gorenstein = th::run({{2, 0, 0, 1, 1}, {0, 2, 0, 1, 0}, {0, 0, 2, 0, 1}});
  CHECK(canonical_generators(gorenstein.op, gorenstein.a)
            .minimal_generators.size() == 1);
}

TEST_CASE("normal example: omega is generated by the minimal interior elements",
          "[canonical]") {
  auto p = th::run({{5, 0, 2, 1}, {0, 5, 1, 3}});
  CanonicalData cd = canonical_generators(p.op, p.a);
  // Interior elements of degree <= 10, minimalized.
  auto elems = oracle::sums_up_to_degree(th::vecs(p.op.base().generators()), 10);
  std::vector<oracle::Vec> interior;
  for (const auto &x : elems)
    if (x[0] > 0 && x[1] > 0)
      interior.push_back(x);
  std::set<oracle::Vec> elem_set(elems.begin(), elems.end());
  std::vector<oracle::Vec> minimal;
  for (const auto &x : interior) {
    bool is_min = true;
    for (const auto &y : interior)
      if (y != x && elem_set.count(oracle::sub(x, y)))
        is_min = false;
    if (is_min)
      minimal.push_back(x);
  }
  CHECK(th::vecs(cd.minimal_generators) == minimal);
}

TEST_CASE("c-tables", "[canonical]") {
  auto ns = th::run({{6, 7, 16, 17}});
  CTable t = c_table(ns.op, ns.a, IntVector{21});
  bool seen = false;
  for (const CEntry &e : t.entries) {
    if (e.h == IntVector{17}) {
      seen = true;
      CHECK(e.h_prime == IntVector{16});
      CHECK(e.u == IntVector{12});
      CHECK(e.c == 2);
    }
    if (e.h == IntVector{21}) {
      CHECK(e.h_prime == IntVector{0});
      CHECK(e.c == 0);
    }
    // c = 0 exactly when h <=_H w.
    CHECK((e.c == 0) == precedes(ns.op, e.h, t.w));
  }
  CHECK(seen);
  CHECK_THROWS_AS(c_table(ns.op, ns.a, IntVector{7}), InvalidInput);

  auto gtt = th::run(kGtt);
  IntVector w = gtt.op.to_orthogonal(IntVector{3, 1});
  IntVector h = gtt.op.to_orthogonal(IntVector{3, 2});
  for (const CEntry &e : c_table(gtt.op, gtt.a, w).entries)
    if (e.h == h) {
      CHECK(gtt.op.to_source(e.h_prime) == IntVector{3, 2});
      CHECK(e.c == 1);
    }
}

TEST_CASE("quotient multiplicities", "[canonical]") {
  auto gtt = th::run(kGtt);
  CHECK(quotient_multiplicity(gtt.op, gtt.a, IntVector{6, 1}) == 1);
  auto t3 = th::run(kType3);
  CHECK(t3.a.type == 3);
  CHECK(quotient_multiplicity(t3.op, t3.a, IntVector{45, 35}) == 2);
  auto gor = th::run({{2, 0, 0, 1, 1}, {0, 2, 0, 1, 0}, {0, 0, 2, 0, 1}});
  CHECK(quotient_multiplicity(gor.op, gor.a, IntVector{2, 1, 1}) == 0);
}

TEST_CASE("AG check on the worked examples", "[canonical]") {
  auto gtt = th::run(kGtt);
  AGReport r = ag_check(gtt.op, gtt.a);
  CHECK(r.is_ag);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(gtt.op.to_source(r.witnesses[0].w) == IntVector{3, 1});
  CHECK(gtt.op.to_source(r.witnesses[0].v) == IntVector{1, 2});

  auto notmono = th::run({{0, 1, 3, 8}, {8, 3, 1, 0}});
  CHECK_FALSE(ag_check(notmono.op, notmono.a).is_ag);

  auto rank3 = th::run({{5, 0, 0, 2, 1}, {0, 5, 0, 1, 3}, {0, 0, 5, 1, 3}});
  CHECK(ag_check(rank3.op, rank3.a).is_ag);

  auto c0457 = th::run({{0, 4, 5, 7}, {7, 3, 2, 0}});
  AGReport r2 = ag_check(c0457.op, c0457.a);
  CHECK(r2.is_ag);
  CHECK(c0457.a.soc == th::ivs({{10, 4}, {13, 8}}));
  REQUIRE(r2.witnesses.size() == 1);
  CHECK(r2.witnesses[0].w == IntVector{13, 8});
  REQUIRE(r2.witnesses[0].certificates.size() == 1);
  const Certificate &c = r2.witnesses[0].certificates[0];
  CHECK(c.h == IntVector{10, 4});
  CHECK(c.h_prime == IntVector{10, 4});
  CHECK(c.b == IntVector{7, 0});

  auto c0137 = th::run({{0, 1, 3, 7}, {7, 6, 4, 0}});
  CHECK(ag_check(c0137.op, c0137.a).is_ag);

  auto t3 = th::run(kType3);
  AGReport r3 = ag_check(t3.op, t3.a);
  CHECK(r3.is_ag);
  for (const AGWitness &w : r3.witnesses)
    for (const Certificate &cert : w.certificates)
      CHECK(cert.h + cert.h_prime == w.w + cert.b);
}

TEST_CASE("Hilbert series", "[series]") {
  auto ex26 = th::run({{2, 0, 0, 1, 1}, {0, 2, 0, 1, 0}, {0, 0, 2, 0, 1}});
  HilbertSeries s = hilbert_numerator(ex26.op, ex26.a);
  CHECK(s.numerator == LaurentPolynomial{{0, 1}, {2, 2}, {4, 1}});
  CHECK(s.denominator == std::vector<Int>{2, 2, 2});
  // Against element counts per degree.
  std::vector<Int> counts(13, 0);
  for (const auto &h :
       oracle::sums_up_to_degree(th::vecs(ex26.op.base().generators()), 12))
    ++counts[static_cast<std::size_t>(oracle::degree(h))];
  CHECK(series_truncate(s, 12) == counts);

  CHECK(series_truncate(HilbertSeries{{{0, 1}}, {1}}, 3) ==
        std::vector<Int>{1, 1, 1, 1});
  CHECK(series_truncate(HilbertSeries{{{0, 1}, {1, 1}}, {2}}, 4) ==
        std::vector<Int>{1, 1, 1, 1, 1});
  auto n1 = th::run({{1}});
  CHECK(hilbert_numerator(n1.op, n1.a) == HilbertSeries{{{0, 1}}, {1}});
}

TEST_CASE("series utilities", "[series]") {
  LaurentPolynomial p{{0, 1}, {3, -1}};
  CHECK(divide_by_one_minus(p, 3) == LaurentPolynomial{{0, 1}});
  CHECK(divide_by_one_minus(LaurentPolynomial{{-2, 1}, {0, 1}, {1, -1}, {3, -1}},
                            3) == LaurentPolynomial{{-2, 1}, {0, 1}});
  CHECK_THROWS_AS(divide_by_one_minus(LaurentPolynomial{{0, 1}, {2, 1}}, 2),
                  InvalidInput);
  HilbertSeries s{{{-1, 1}}, {1}};
  CHECK(series_expand(s, -2, 1) == std::vector<Int>{0, 1, 1, 1});
  CHECK(series_expand(s, 1, 2) == std::vector<Int>{1, 1});
}

TEST_CASE("quotient series normalized values", "[series]") {
  auto gtt = th::run(kGtt);
  CHECK(limit_at_one(quotient_series(gtt.op, gtt.a, IntVector{6, 1}), 1) == 1);
  auto t3 = th::run(kType3);
  CHECK(limit_at_one(quotient_series(t3.op, t3.a, IntVector{45, 35}), 1) == 2);
  auto gor = th::run({{2, 3}});
  CHECK(limit_at_one(quotient_series(gor.op, gor.a, gor.a.soc.front()), 0) ==
        0);
}

TEST_CASE("canonical series truncation identity", "[series]") {
  for (const char *name : {"ex2_6", "type3", "gtt", "notmonomial"}) {
    for (const auto &fx : th::worked_fixtures())
      if (fx.name == name) {
        auto p = th::run(fx.rows);
        INFO(fx.name);
        for (const auto &f : props::canonical_properties(p, fx.name))
          FAIL_CHECK(f);
      }
  }
  auto two_three = th::run({{2, 3}});
  for (const auto &f : props::canonical_properties(two_three, "<2,3>"))
    FAIL_CHECK(f);
}

TEST_CASE("Nari check", "[canonical]") {
  CHECK(nari_check(th::run({{4, 5, 7}}).a));
  CHECK(oracle::pseudo_frobenius({4, 5, 7}) == std::vector<Int>{3, 6});
  auto s = th::run({{8, 9, 22}});
  CHECK(s.a.soc == th::ivs({{31}, {45}}));
  CHECK_FALSE(nari_check(s.a));
  CHECK_FALSE(ag_check(s.op, s.a).is_ag);
  CHECK(nari_check(th::run({{2, 3}}).a));
  CHECK_THROWS_AS(nari_check(th::run(kGtt).a), InvalidInput);
}

TEST_CASE("coordinate projections", "[canonical]") {
  auto c = th::run({{0, 4, 5, 7}, {7, 3, 2, 0}});
  CHECK(project_coordinate(c.op, 0).generators() == th::ivs({{4}, {5}, {7}}));
  CHECK(project_coordinate(c.op, 1).generators() == th::ivs({{2}, {3}}));
  auto free2 = th::run({{1, 0}, {0, 1}});
  CHECK(project_coordinate(free2.op, 0).generators() == th::ivs({{1}}));
  auto t3 = th::run(kType3);
  Presentation h1 = project_coordinate(t3.op, 0);
  CHECK(h1.generators() == th::ivs({{8}, {9}, {22}}));
  CHECK_THROWS_AS(project_coordinate(t3.op, 2), InvalidInput);
}

TEST_CASE("projections of type-2 AG examples are AG of type <= 2",
          "[canonical]") {
  for (const auto &fx : th::worked_fixtures()) {
    auto p = th::run(fx.rows);
    if (!is_cohen_macaulay(p.a) || p.a.type != 2 || p.op.dim() < 2 ||
        !ag_check(p.op, p.a).is_ag)
      continue;
    for (std::size_t i = 0; i < p.op.dim(); ++i) {
      Presentation h = project_coordinate(p.op, i);
      auto op = orthogonalize(h);
      auto a = apery_set(op);
      INFO(fx.name << " coordinate " << i);
      CHECK(a.type <= 2);
      CHECK(ag_check(op, a).is_ag);
    }
  }
}
