#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "relift/relift.hpp"

using namespace relift;
using fixtures::chain;
using fixtures::discrete;
using fixtures::map_of;
using fixtures::rel_of;
using fixtures::singleton;
using fixtures::vee;

namespace {

bool code_is(const Error& e, Err code) { return e.code() == code; }

}  // namespace

TEST_CASE("mk_relation validates, monotone_closure closes") {
  FinPreorder c2 = chain(2);
  SECTION("bottom and top always satisfy the law") {
    CHECK_NOTHROW(MonotoneRelation::bottom(c2, c2));
    CHECK_NOTHROW(MonotoneRelation::top(c2, c2));
    CHECK(MonotoneRelation::bottom(c2, c2).count() == 0);
    CHECK(MonotoneRelation::top(c2, c2).count() == 4);
  }
  SECTION("the entry (dst=0, src=1) is already closed") {
    MonotoneRelation r = rel_of(c2, c2, {{"0", "1"}});
    CHECK(r.count() == 1);
    CHECK(MonotoneRelation::closure(c2, c2, r.mat()) == r);
  }
  SECTION("the entry (dst=1, src=0) closes to everything") {
    std::vector<bool> mat(4, false);
    mat[static_cast<size_t>(c2.index("1")) * 2 + c2.index("0")] = true;
    CHECK_THROWS_MATCHES(
        MonotoneRelation::checked(c2, c2, mat), Error,
        Catch::Matchers::Predicate<Error>([](const Error& e) { return code_is(e, Err::NotMonotone); }));
    CHECK(MonotoneRelation::closure(c2, c2, mat).count() == 4);
  }
}

TEST_CASE("relation composition") {
  FinPreorder c2 = chain(2);
  SECTION("identities are units") {
    Rng rng(21);
    for (int i = 0; i < 60; ++i) {
      FinPreorder a = random_preorder(rng, rng.between(0, 3), "a");
      FinPreorder b = random_preorder(rng, rng.between(0, 3), "b");
      MonotoneRelation r = random_monotone_relation(rng, a, b);
      CHECK(compose_rel(id_rel(b), r) == r);
      CHECK(compose_rel(r, id_rel(a)) == r);
    }
  }
  SECTION("bottom annihilates") {
    MonotoneRelation r = id_rel(c2);
    CHECK(compose_rel(MonotoneRelation::bottom(c2, c2), r) ==
          MonotoneRelation::bottom(c2, c2));
  }
  SECTION("associativity on random triples") {
    Rng rng(22);
    for (int i = 0; i < 120; ++i) {
      FinPreorder a = random_preorder(rng, rng.between(1, 4), "a");
      FinPreorder b = random_preorder(rng, rng.between(1, 4), "b");
      FinPreorder c = random_preorder(rng, rng.between(1, 4), "c");
      FinPreorder d = random_preorder(rng, rng.between(1, 4), "d");
      MonotoneRelation r = random_monotone_relation(rng, a, b);
      MonotoneRelation s = random_monotone_relation(rng, b, c);
      MonotoneRelation t = random_monotone_relation(rng, c, d);
      CHECK(compose_rel(t, compose_rel(s, r)) == compose_rel(compose_rel(t, s), r));
      // Oracle: the two-step supremum expanded to a direct double sum.
      MonotoneRelation lhs = compose_rel(t, compose_rel(s, r));
      for (int z = 0; z < d.size(); ++z)
        for (int x = 0; x < a.size(); ++x) {
          bool direct = false;
          for (int y1 = 0; y1 < b.size() && !direct; ++y1)
            for (int y2 = 0; y2 < c.size() && !direct; ++y2)
              direct = r.at(y1, x) && s.at(y2, y1) && t.at(z, y2);
          CHECK(lhs.at(z, x) == direct);
        }
    }
  }
  SECTION("mismatched middles are rejected") {
    CHECK_THROWS_MATCHES(compose_rel(id_rel(c2), id_rel(vee())), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return code_is(e, Err::ObjectMismatch); }));
  }
}

TEST_CASE("identity relation and the pointwise order") {
  SECTION("discrete identity is the identity matrix") {
    FinPreorder d2 = discrete({"a", "b"});
    MonotoneRelation id = id_rel(d2);
    CHECK(id.at("a", "a"));
    CHECK(id.at("b", "b"));
    CHECK_FALSE(id.at("a", "b"));
    CHECK_FALSE(id.at("b", "a"));
  }
  SECTION("bottom is least") {
    FinPreorder c2 = chain(2);
    Rng rng(23);
    for (int i = 0; i < 20; ++i)
      CHECK(leq_rel(MonotoneRelation::bottom(c2, c2), random_monotone_relation(rng, c2, c2)));
  }
  SECTION("lower graphs are ordered exactly like their maps") {
    Rng rng(24);
    for (int i = 0; i < 80; ++i) {
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      FinPreorder b = random_preorder(rng, rng.between(1, 3), "b");
      MonotoneMap f = random_monotone_map(rng, a, b);
      MonotoneMap g = random_monotone_map(rng, a, b);
      CHECK(leq_rel(diamond_low(f), diamond_low(g)) == map_leq(f, g));
    }
  }
}

TEST_CASE("graph relations and the adjunction between them") {
  FinPreorder c2 = chain(2);
  SECTION("identity graphs are the identity relation") {
    DiamondPair d = diamonds(MonotoneMap::identity(c2));
    CHECK(d.low == id_rel(c2));
    CHECK(d.up == id_rel(c2));
  }
  SECTION("bottom inclusion into the two-chain") {
    MonotoneMap f = MonotoneMap::constant(singleton(), c2, "0");
    MonotoneRelation low = diamond_low(f);
    CHECK(low.at("0", "*"));
    CHECK_FALSE(low.at("1", "*"));
  }
  SECTION("every map's graphs form an adjoint pair; graphs compose") {
    Rng rng(25);
    for (int i = 0; i < 80; ++i) {
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      FinPreorder b = random_preorder(rng, rng.between(1, 3), "b");
      FinPreorder c = random_preorder(rng, rng.between(1, 3), "c");
      MonotoneMap f = random_monotone_map(rng, a, b);
      MonotoneMap g = random_monotone_map(rng, b, c);
      DiamondPair d = diamonds(f);
      CHECK(check_adjoint_pair(d.low, d.up));
      CHECK(leq_rel(id_rel(a), compose_rel(d.up, d.low)));
      CHECK(leq_rel(compose_rel(d.low, d.up), id_rel(b)));
      CHECK(diamond_low(compose(g, f)) == compose_rel(diamond_low(g), diamond_low(f)));
      CHECK(diamond_up(compose(g, f)) == compose_rel(diamond_up(f), diamond_up(g)));
    }
  }
  SECTION("top against top fails the counit") {
    FinPreorder d2 = discrete({"a", "b"});
    MonotoneRelation l = MonotoneRelation::top(chain(2), d2);
    MonotoneRelation r = MonotoneRelation::top(d2, chain(2));
    CHECK_FALSE(check_adjoint_pair(l, r));
  }
}

TEST_CASE("adjoint pairs come from maps") {
  SECTION("identity pair gives the identity map") {
    FinPreorder c2 = chain(2);
    CHECK(adjoint_to_map(id_rel(c2), id_rel(c2)) == MonotoneMap::identity(c2));
  }
  SECTION("round-trip over all maps between small posets") {
    for (const FinPreorder& a : all_preorders(2, true))
      for (const FinPreorder& b : all_preorders(3, true))
        for (const MonotoneMap& f : all_monotone_maps(a, b)) {
          DiamondPair d = diamonds(f);
          CHECK(adjoint_to_map(d.low, d.up) == f);
        }
  }
  SECTION("non-adjoint pairs are rejected") {
    FinPreorder d2 = discrete({"a", "b"});
    CHECK_THROWS_MATCHES(
        adjoint_to_map(MonotoneRelation::top(chain(2), d2), MonotoneRelation::top(d2, chain(2))),
        Error, Catch::Matchers::Predicate<Error>(
                   [](const Error& e) { return code_is(e, Err::NotAdjointPair); }));
  }
  SECTION("preorder witnesses resolve to the least id") {
    // Both elements of the two-cycle work; "x" wins the tie-break.
    FinPreorder cyc = FinPreorder::from_pairs({"y", "x"}, {{"x", "y"}, {"y", "x"}});
    MonotoneMap f = map_of(singleton(), cyc, {{"*", "y"}});
    DiamondPair d = diamonds(f);
    MonotoneMap recovered = adjoint_to_map(d.low, d.up);
    CHECK(recovered.apply("*") == "x");
    CHECK_THROWS_MATCHES(adjoint_to_map(d.low, d.up, true), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return code_is(e, Err::AmbiguousWitness); }));
  }
}

TEST_CASE("forgetting the order") {
  FinPreorder c2 = chain(2);
  SECTION("the identity relation keeps its three entries") {
    PlainRelation p = forget_rel(id_rel(c2));
    int entries = 0;
    for (bool v : p.mat) entries += v;
    CHECK(entries == 3);
  }
  SECTION("forget is injective at fixed endpoints") {
    Rng rng(26);
    for (int i = 0; i < 40; ++i) {
      MonotoneRelation r = random_monotone_relation(rng, c2, c2);
      MonotoneRelation s = random_monotone_relation(rng, c2, c2);
      CHECK((forget_rel(r) == forget_rel(s)) == (r == s));
    }
  }
  SECTION("diamond composites of fibration legs forget to plain graph composites") {
    Rng rng(27);
    for (int i = 0; i < 60; ++i) {
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      FinPreorder b = random_preorder(rng, rng.between(1, 3), "b");
      Span s = relation_to_fibration(random_monotone_relation(rng, a, b));
      PlainRelation lhs = forget_rel(compose_rel(diamond_low(s.d0), diamond_up(s.d1)));
      PlainRelation rhs = plain_compose(plain_graph_low(s.d0), plain_graph_up(s.d1));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Kleisli extension of relations") {
  FinPreorder c2 = chain(2);
  SECTION("identity relation extends to the identity") {
    MonotoneMap d = dagger(id_rel(c2));
    CHECK(d == MonotoneMap::identity(lowerset_preorder(c2)));
  }
  SECTION("bottom extends to the constant empty lowerset") {
    MonotoneMap d = dagger(MonotoneRelation::bottom(c2, c2));
    for (int i = 0; i < d.dom().size(); ++i) CHECK(d.cod().elem(d.apply(i)) == "v{}");
  }
  SECTION("extension is functorial and matches the lowerset action on graphs") {
    Rng rng(28);
    for (int i = 0; i < 50; ++i) {
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      FinPreorder b = random_preorder(rng, rng.between(1, 3), "b");
      FinPreorder c = random_preorder(rng, rng.between(1, 3), "c");
      MonotoneRelation r = random_monotone_relation(rng, a, b);
      MonotoneRelation s = random_monotone_relation(rng, b, c);
      CHECK(dagger(compose_rel(s, r)) == compose(dagger(s), dagger(r)));
      MonotoneMap f = random_monotone_map(rng, a, b);
      CHECK(dagger(diamond_low(f)) == lowerset_map(f));
    }
  }
  SECTION("size caps raise instead of truncating") {
    std::vector<std::string> big;
    for (int i = 0; i < 17; ++i) big.push_back("e" + std::to_string(i));
    FinPreorder d17 = discrete(big);
    CHECK_THROWS_MATCHES(dagger(id_rel(d17)), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return code_is(e, Err::SizeCapExceeded); }));
  }
}

TEST_CASE("unit and multiplication of the lowerset structure") {
  SECTION("the singleton has one nonempty lowerset") {
    MonotoneMap y = yoneda_unit(singleton());
    CHECK(y.cod().size() == 2);
    CHECK(y.cod().elem(y.apply(0)) == "v{*}");
  }
  SECTION("unit laws") {
    for (const FinPreorder& a : {chain(2), vee(), fixtures::two_cycle_plus_point()}) {
      FinPreorder la = lowerset_preorder(a);
      MonotoneMap m = kz_mult(a);
      CHECK(compose(m, yoneda_unit(la, 1 << 20)) == MonotoneMap::identity(la));
      CHECK(compose(m, lowerset_map(yoneda_unit(a), 1 << 20)) == MonotoneMap::identity(la));
    }
  }
}

TEST_CASE("elementhood") {
  SECTION("singleton carrier: only the full upperset contains the point") {
    MonotoneRelation ni = elementhood(singleton());
    REQUIRE(ni.src().size() == 2);
    CHECK(ni.at("*", "v{*}"));
    CHECK_FALSE(ni.at("*", "v{}"));
  }
  SECTION("agrees with the upper graph of the principal-downset map of the opposite") {
    for (const FinPreorder& a : {chain(2), vee(), fixtures::two_cycle_plus_point()})
      CHECK(elementhood(a) == diamond_up(yoneda_unit(opposite(a))));
  }
  SECTION("membership is monotone in both arguments") {
    FinPreorder v = vee();
    MonotoneRelation ni = elementhood(v);
    const FinPreorder& uppersets = ni.src();
    const FinPreorder& vop = ni.dst();
    for (int x = 0; x < vop.size(); ++x)
      for (int w = 0; w < uppersets.size(); ++w) {
        if (!ni.at(x, w)) continue;
        for (int w2 = 0; w2 < uppersets.size(); ++w2)
          if (uppersets.leq(w, w2)) CHECK(ni.at(x, w2));
        for (int y = 0; y < vop.size(); ++y)
          if (v.leq(vop.elem(x), vop.elem(y))) CHECK(ni.at(y, w));
      }
  }
  SECTION("composing with the unit's lower graph gives the identity") {
    for (const FinPreorder& a : {chain(2), vee(), fixtures::two_cycle_plus_point()}) {
      FinPreorder aop = opposite(a);
      CHECK(compose_rel(elementhood(a), diamond_low(yoneda_unit(aop))) == id_rel(aop));
    }
  }
}
