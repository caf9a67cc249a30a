#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "relift/relift.hpp"

using namespace relift;
using fixtures::chain;
using fixtures::discrete;
using fixtures::map_of;
using fixtures::singleton;
using fixtures::vee;

namespace {

// Adjointness stated directly as the hom equation, used as the oracle
// for both adjunction square kinds.
bool is_adjoint_pair_of_maps(const MonotoneMap& f, const MonotoneMap& u) {
  for (int x = 0; x < f.dom().size(); ++x)
    for (int a = 0; a < f.cod().size(); ++a)
      if (f.cod().leq(f.apply(x), a) != f.dom().leq(x, u.apply(a))) return false;
  return true;
}

bool lax_and_exact(const LaxSquare& sq) { return is_lax(sq) && is_exact_square(sq); }

}  // namespace

TEST_CASE("exactness criterion") {
  SECTION("comma and Yoneda squares are exact") {
    Rng rng(41);
    for (int i = 0; i < 40; ++i) {
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      FinPreorder b = random_preorder(rng, rng.between(1, 3), "b");
      FinPreorder c = random_preorder(rng, rng.between(1, 3), "c");
      MonotoneMap f = random_monotone_map(rng, a, c);
      MonotoneMap g = random_monotone_map(rng, b, c);
      CHECK(is_exact_square(catalog_square(SquareKind::Comma, {f, g})));
      CHECK(is_exact_square(catalog_square(SquareKind::YonedaLeft, {f})));
      CHECK(is_exact_square(catalog_square(SquareKind::YonedaRight, {f})));
    }
  }
  SECTION("the embedding square detects non-embeddings") {
    FinPreorder d2 = discrete({"a", "b"});
    MonotoneMap f = map_of(d2, vee(), {{"a", "a"}, {"b", "b"}});
    CHECK(is_exact_square(catalog_square(SquareKind::Embedding, {f})));
    MonotoneMap collapse = map_of(d2, singleton(), {{"a", "*"}, {"b", "*"}});
    CHECK_FALSE(is_exact_square(catalog_square(SquareKind::Embedding, {collapse})));
    auto witness = exactness_counterexample(catalog_square(SquareKind::Embedding, {collapse}));
    REQUIRE(witness);
  }
  SECTION("missing comparison cells are rejected") {
    FinPreorder c2 = chain(2);
    MonotoneMap id2 = MonotoneMap::identity(c2);
    LaxSquare bad{id2, id2, MonotoneMap::constant(c2, c2, "1"),
                  MonotoneMap::constant(c2, c2, "0")};
    REQUIRE(square_shape_ok(bad));
    CHECK_THROWS_MATCHES(is_exact_square(bad), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Err::NotLax; }));
    CHECK_NOTHROW(is_exact_square(LaxSquare{id2, id2, id2, id2}));
  }
  SECTION("criterion agrees with the relation equality") {
    Rng rng(42);
    int exact_seen = 0, inexact_seen = 0;
    for (int i = 0; i < 200; ++i) {
      FinPreorder p = random_preorder(rng, rng.between(1, 3), "p");
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      FinPreorder b = random_preorder(rng, rng.between(1, 3), "b");
      FinPreorder c = random_preorder(rng, rng.between(1, 3), "c");
      LaxSquare sq{random_monotone_map(rng, p, a), random_monotone_map(rng, p, b),
                   random_monotone_map(rng, a, c), random_monotone_map(rng, b, c)};
      if (!is_lax(sq)) continue;
      bool by_criterion = is_exact_square(sq);
      bool by_relations = exact_square_lhs(sq) == exact_square_rhs(sq);
      CHECK(by_criterion == by_relations);
      (by_criterion ? exact_seen : inexact_seen)++;
    }
    CHECK(exact_seen > 0);
    CHECK(inexact_seen > 0);
  }
}

TEST_CASE("catalog characterizations are two-sided") {
  // Embedding / absolute density / adjointness hold exactly when the
  // corresponding square is exact, exhaustively over small carriers.
  std::vector<FinPreorder> as = all_preorders(2);
  std::vector<FinPreorder> bs = all_preorders(3);
  SECTION("embedding and absolute density") {
    for (const FinPreorder& a : as)
      for (const FinPreorder& b : bs)
        for (const MonotoneMap& f : all_monotone_maps(a, b)) {
          CHECK(lax_and_exact(catalog_square(SquareKind::Embedding, {f})) ==
                is_order_embedding(f));
          CHECK(lax_and_exact(catalog_square(SquareKind::AbsDense, {f})) ==
                is_absolutely_dense(f));
        }
  }
  SECTION("adjunction unit and counit") {
    for (const FinPreorder& x : as)
      for (const FinPreorder& a : bs)
        for (const MonotoneMap& f : all_monotone_maps(x, a)) {
          bool exists = false;
          for (const MonotoneMap& u : all_monotone_maps(a, x)) {
            bool adj = is_adjoint_pair_of_maps(f, u);
            CHECK(lax_and_exact(catalog_square(SquareKind::AdjunctionUnit, {f, u})) == adj);
            CHECK(lax_and_exact(catalog_square(SquareKind::AdjunctionCounit, {f, u})) == adj);
            exists = exists || adj;
          }
          CHECK(exists == static_cast<bool>(find_right_adjoint(f)));
        }
  }
}

TEST_CASE("absolute Kan extensions") {
  FinPreorder c2 = chain(2);
  MonotoneMap id2 = MonotoneMap::identity(c2);
  SECTION("extending along the identity changes nothing") {
    MonotoneMap h = map_of(c2, vee(), {{"0", "a"}, {"1", "c"}});
    CHECK(is_absolute_lan(h, id2, h));
  }
  SECTION("the unit of an adjunction exhibits an absolute extension") {
    FinPreorder c3 = chain(3);
    MonotoneMap f = map_of(c3, c2, {{"0", "0"}, {"1", "1"}, {"2", "1"}});
    MonotoneMap u = *find_right_adjoint(f);
    CHECK(is_absolute_lan(MonotoneMap::identity(c3), f, u));
  }
  SECTION("random non-extensions are refused") {
    MonotoneMap h = MonotoneMap::constant(c2, vee(), "a");
    MonotoneMap l = MonotoneMap::constant(c2, vee(), "c");
    CHECK_FALSE(is_absolute_lan(h, id2, l));
  }
}

TEST_CASE("dual squares") {
  SECTION("duals of comma squares are exact") {
    Rng rng(43);
    for (int i = 0; i < 30; ++i) {
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      FinPreorder c = random_preorder(rng, rng.between(1, 3), "c");
      LaxSquare sq = catalog_square(
          SquareKind::Comma, {random_monotone_map(rng, a, c), random_monotone_map(rng, a, c)});
      CHECK(is_exact_square(dual_square(sq)));
    }
  }
  SECTION("dualizing twice returns the square") {
    FinPreorder c2 = chain(2);
    MonotoneMap id2 = MonotoneMap::identity(c2);
    LaxSquare sq{id2, id2, id2, id2};
    LaxSquare twice = dual_square(dual_square(sq));
    CHECK(twice.p0 == sq.p0);
    CHECK(twice.p1 == sq.p1);
    CHECK(twice.f == sq.f);
    CHECK(twice.g == sq.g);
  }
  SECTION("exactness is preserved and reflected") {
    Rng rng(44);
    int checked = 0;
    for (int i = 0; i < 400 && checked < 200; ++i) {
      FinPreorder p = random_preorder(rng, rng.between(1, 3), "p");
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      FinPreorder b = random_preorder(rng, rng.between(1, 3), "b");
      FinPreorder c = random_preorder(rng, rng.between(1, 3), "c");
      LaxSquare sq{random_monotone_map(rng, p, a), random_monotone_map(rng, p, b),
                   random_monotone_map(rng, a, c), random_monotone_map(rng, b, c)};
      if (!is_lax(sq)) continue;
      ++checked;
      REQUIRE(is_lax(dual_square(sq)));
      CHECK(is_exact_square(dual_square(sq)) == is_exact_square(sq));
    }
    CHECK(checked == 200);
  }
}

TEST_CASE("left-adjoint square criterion") {
  FinPreorder c2 = chain(2);
  MonotoneMap id2 = MonotoneMap::identity(c2);
  SECTION("identity squares pass") {
    CHECK(left_adjoint_square_criterion(LaxSquare{id2, id2, id2, id2}));
  }
  SECTION("agreement with exactness whenever both sides are left adjoints") {
    Rng rng(45);
    int applicable = 0;
    for (int i = 0; i < 400 && applicable < 60; ++i) {
      FinPreorder p = random_preorder(rng, rng.between(1, 3), "p");
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      FinPreorder b = random_preorder(rng, rng.between(1, 3), "b");
      FinPreorder c = random_preorder(rng, rng.between(1, 3), "c");
      LaxSquare sq{random_monotone_map(rng, p, a), random_monotone_map(rng, p, b),
                   random_monotone_map(rng, a, c), random_monotone_map(rng, b, c)};
      if (!is_lax(sq)) continue;
      if (!find_right_adjoint(sq.f) || !find_right_adjoint(sq.p1)) continue;
      ++applicable;
      CHECK(left_adjoint_square_criterion(sq) == is_exact_square(sq));
    }
    CHECK(applicable == 60);
  }
  SECTION("an engineered mismatch fails both ways") {
    // Bottom-constant against top-constant: lax, not exact.
    MonotoneMap bottom = MonotoneMap::constant(c2, c2, "0");
    LaxSquare sq{bottom, bottom, id2, MonotoneMap::constant(c2, c2, "1")};
    REQUIRE(is_lax(sq));
    CHECK_FALSE(left_adjoint_square_criterion(sq));
    CHECK_FALSE(is_exact_square(sq));
  }
  SECTION("non-left-adjoint edges are refused") {
    FinPreorder d2 = discrete({"a", "b"});
    MonotoneMap f = MonotoneMap::constant(d2, c2, "0");
    MonotoneMap idd = MonotoneMap::identity(d2);
    LaxSquare sq{idd, idd, f, f};
    CHECK_THROWS_MATCHES(left_adjoint_square_criterion(sq), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Err::NotLeftAdjoint; }));
  }
}
