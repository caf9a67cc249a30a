#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "relift/relift.hpp"

using namespace relift;
using fixtures::chain;
using fixtures::discrete;
using fixtures::map_of;
using fixtures::singleton;
using fixtures::vee;

TEST_CASE("mk_preorder closes generating pairs") {
  SECTION("two-chain") {
    FinPreorder c2 = FinPreorder::from_pairs({"0", "1"}, {{"0", "1"}}, true);
    int trues = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) trues += c2.leq(i, j);
    CHECK(trues == 3);
    CHECK(c2.is_poset());
  }
  SECTION("singleton is the identity order") {
    FinPreorder one = FinPreorder::from_pairs({"x"}, {}, true);
    CHECK(one.size() == 1);
    CHECK(one.leq("x", "x"));
  }
  SECTION("three-chain derives the long pair") {
    // Oracle: Warshall closure of {(a,b),(b,c)} computed by hand.
    FinPreorder p = FinPreorder::from_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, true);
    std::vector<std::vector<bool>> expected = {
        {true, true, true}, {false, true, true}, {false, false, true}};
    CHECK(p.matrix() == expected);
  }
  SECTION("duplicate ids are rejected") {
    CHECK_THROWS_MATCHES(FinPreorder::from_pairs({"a", "a"}, {}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == Err::DuplicateElement;
                         }));
  }
  SECTION("poset flag rejects cycles") {
    CHECK_THROWS_MATCHES(FinPreorder::from_pairs({"a", "b"}, {{"a", "b"}, {"b", "a"}}, true), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Err::NotAPoset; }));
    CHECK_NOTHROW(FinPreorder::from_pairs({"a", "b"}, {{"a", "b"}, {"b", "a"}}, false));
  }
  SECTION("empty carrier is fine") {
    FinPreorder e = FinPreorder::from_pairs({}, {}, true);
    CHECK(e.size() == 0);
    CHECK(e.is_poset());
  }
}

TEST_CASE("opposite transposes and is involutive") {
  FinPreorder c2 = chain(2);
  FinPreorder op = opposite(c2);
  CHECK(op.leq("1", "0"));
  CHECK_FALSE(op.leq("0", "1"));

  FinPreorder d2 = discrete({"a", "b"});
  CHECK(opposite(d2) == d2);

  FinPreorder v = vee();
  CHECK(opposite(opposite(v)) == v);
}

TEST_CASE("product and coproduct") {
  FinPreorder c2 = chain(2);
  SECTION("product order is componentwise") {
    ProductResult pr = product(c2, c2);
    CHECK(pr.object.size() == 4);
    CHECK(pr.object.leq("(0,0)", "(1,1)"));
    CHECK_FALSE(pr.object.leq("(0,1)", "(1,0)"));
    CHECK(pr.proj0.apply("(0,1)") == "0");
    CHECK(pr.proj1.apply("(0,1)") == "1");
  }
  SECTION("coproduct has no cross pairs") {
    CoproductResult co = coproduct(c2, c2);
    CHECK(co.object.size() == 4);
    CHECK(co.object.leq("inl:0", "inl:1"));
    CHECK(co.object.leq("inr:0", "inr:1"));
    CHECK_FALSE(co.object.leq("inl:0", "inr:1"));
    CHECK_FALSE(co.object.leq("inr:0", "inl:1"));
  }
  SECTION("product with the singleton is the original up to relabeling") {
    ProductResult pr = product(singleton(), c2);
    REQUIRE(pr.object.size() == c2.size());
    for (int i = 0; i < c2.size(); ++i)
      for (int j = 0; j < c2.size(); ++j)
        CHECK(pr.object.leq(i, j) == c2.leq(i, j));
  }
  SECTION("universal properties on small fixtures") {
    // Every pair of maps into the factors factors uniquely through the
    // product, and dually for the coproduct.
    std::vector<FinPreorder> zs = {chain(2, "z"), vee()};
    ProductResult pr = product(c2, vee());
    CoproductResult co = coproduct(c2, vee());
    for (const FinPreorder& z : zs) {
      for (const MonotoneMap& h1 : all_monotone_maps(z, c2))
        for (const MonotoneMap& h2 : all_monotone_maps(z, vee())) {
          int mediators = 0;
          for (const MonotoneMap& m : all_monotone_maps(z, pr.object))
            if (compose(pr.proj0, m) == h1 && compose(pr.proj1, m) == h2) ++mediators;
          CHECK(mediators == 1);
        }
      for (const MonotoneMap& h1 : all_monotone_maps(c2, z))
        for (const MonotoneMap& h2 : all_monotone_maps(vee(), z)) {
          int mediators = 0;
          for (const MonotoneMap& m : all_monotone_maps(co.object, z))
            if (compose(m, co.inj0) == h1 && compose(m, co.inj1) == h2) ++mediators;
          CHECK(mediators == 1);
        }
    }
  }
}

TEST_CASE("comma objects") {
  FinPreorder c2 = chain(2);
  MonotoneMap id2 = MonotoneMap::identity(c2);
  SECTION("identity comma is the order itself") {
    CommaResult cr = comma_object(id2, id2);
    CHECK(cr.object.elems() == std::vector<std::string>{"(0,0)", "(0,1)", "(1,1)"});
    CHECK(cr.object.leq("(0,0)", "(0,1)"));
    CHECK(cr.object.leq("(0,1)", "(1,1)"));
  }
  SECTION("one-point commas enumerate order pairs") {
    FinPreorder one = singleton();
    MonotoneMap c0 = MonotoneMap::constant(one, c2, "0");
    MonotoneMap c1 = MonotoneMap::constant(one, c2, "1");
    CHECK(comma_object(c0, c1).object.size() == 1);  // 0 <= 1
    CHECK(comma_object(c1, c0).object.size() == 0);  // 1 <= 0 fails
  }
  SECTION("codomain mismatch is rejected") {
    CHECK_THROWS_MATCHES(comma_object(id2, MonotoneMap::identity(vee())), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Err::CodomainMismatch; }));
  }
  SECTION("comma squares are exact") {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      FinPreorder b = random_preorder(rng, rng.between(1, 3), "b");
      FinPreorder c = random_preorder(rng, rng.between(1, 3), "c");
      MonotoneMap f = random_monotone_map(rng, a, c);
      MonotoneMap g = random_monotone_map(rng, b, c);
      CommaResult cr = comma_object(f, g);
      LaxSquare sq{cr.p0, cr.p1, f, g};
      REQUIRE(is_lax(sq));
      CHECK(is_exact_square(sq));
    }
  }
}

TEST_CASE("opcomma objects") {
  FinPreorder one = singleton();
  SECTION("over the empty middle it is the coproduct") {
    FinPreorder empty = FinPreorder::from_pairs({}, {});
    FinPreorder c2 = chain(2);
    MonotoneMap f(empty, c2, {});
    OpcommaResult oc = opcomma_object(f, f);
    CoproductResult co = coproduct(c2, c2);
    CHECK(oc.object == co.object);
  }
  SECTION("identity legs over the point give the two-chain") {
    MonotoneMap id1 = MonotoneMap::identity(one);
    OpcommaResult oc = opcomma_object(id1, id1);
    CHECK(oc.object.size() == 2);
    CHECK(oc.object.leq("inl:*", "inr:*"));
    CHECK_FALSE(oc.object.leq("inr:*", "inl:*"));
    LaxSquare sq{id1, id1, oc.i0, oc.i1};
    CHECK(is_exact_square(sq));
  }
  SECTION("identity legs over the two-chain") {
    FinPreorder c2 = chain(2);
    MonotoneMap id2 = MonotoneMap::identity(c2);
    OpcommaResult oc = opcomma_object(id2, id2);
    CHECK(oc.object.size() == 4);
    for (const std::string& x : {"0", "1"})
      for (const std::string& y : {"0", "1"})
        CHECK(oc.object.leq("inl:" + x, "inr:" + y) == c2.leq(x, y));
    CHECK(is_exact_square(LaxSquare{id2, id2, oc.i0, oc.i1}));
  }
  SECTION("opcomma squares are exact") {
    Rng rng(12);
    for (int i = 0; i < 50; ++i) {
      FinPreorder c = random_preorder(rng, rng.between(1, 3), "c");
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      FinPreorder b = random_preorder(rng, rng.between(1, 3), "b");
      MonotoneMap f = random_monotone_map(rng, c, a);
      MonotoneMap g = random_monotone_map(rng, c, b);
      OpcommaResult oc = opcomma_object(f, g);
      CHECK(is_exact_square(LaxSquare{f, g, oc.i0, oc.i1}));
    }
  }
  SECTION("domain mismatch is rejected") {
    CHECK_THROWS_MATCHES(
        opcomma_object(MonotoneMap::identity(one), MonotoneMap::identity(chain(2))), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.code() == Err::DomainMismatch; }));
  }
}

TEST_CASE("pullbacks of maps") {
  FinPreorder c2 = chain(2);
  MonotoneMap id2 = MonotoneMap::identity(c2);
  SECTION("pullback of identities is the diagonal") {
    PullbackResult pb = pullback_maps(id2, id2);
    REQUIRE(pb.object.size() == 2);
    CHECK(pb.object.leq("(0,0)", "(1,1)"));
  }
  SECTION("constant maps at distinct values give the empty fiber") {
    FinPreorder one = singleton();
    PullbackResult pb = pullback_maps(MonotoneMap::constant(one, c2, "0"),
                                      MonotoneMap::constant(one, c2, "1"));
    CHECK(pb.object.size() == 0);
  }
  SECTION("composable pairs of two relation spans") {
    FinPreorder v = vee();
    Span er = relation_to_fibration(id_rel(c2));
    Span es = relation_to_fibration(MonotoneRelation::top(c2, v));
    PullbackResult pb = pullback_maps(es.d1, er.d0);
    // Oracle: count pairs (e_s, e_r) with matching middle element.
    int expected = 0;
    for (int i = 0; i < es.vertex.size(); ++i)
      for (int j = 0; j < er.vertex.size(); ++j)
        if (es.d1.apply(i) == er.d0.apply(j)) ++expected;
    CHECK(pb.object.size() == expected);
  }
}

TEST_CASE("order-theoretic predicates") {
  FinPreorder c2 = chain(2);
  SECTION("identity is everything") {
    MonotoneMap id2 = MonotoneMap::identity(c2);
    CHECK(is_order_embedding(id2));
    CHECK(is_absolutely_dense(id2));
    CHECK(is_surjective_on_objects(id2));
  }
  SECTION("embedding of two points under a roof") {
    FinPreorder d2 = discrete({"a", "b"});
    MonotoneMap f = map_of(d2, vee(), {{"a", "a"}, {"b", "b"}});
    CHECK(is_order_embedding(f));
    CHECK_FALSE(is_surjective_on_objects(f));
    CHECK_FALSE(is_absolutely_dense(f));
  }
  SECTION("dense but not surjective into a strongly connected preorder") {
    FinPreorder cyc = FinPreorder::from_pairs({"x", "y"}, {{"x", "y"}, {"y", "x"}});
    MonotoneMap inc = map_of(singleton(), cyc, {{"*", "x"}});
    CHECK(is_absolutely_dense(inc));
    CHECK_FALSE(is_surjective_on_objects(inc));
  }
  SECTION("surjective implies dense; on posets dense implies surjective") {
    Rng rng(13);
    for (int i = 0; i < 120; ++i) {
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      FinPreorder b = random_preorder(rng, rng.between(1, 3), "b");
      MonotoneMap f = random_monotone_map(rng, a, b);
      if (is_surjective_on_objects(f)) CHECK(is_absolutely_dense(f));
      if (b.is_poset() && is_absolutely_dense(f)) CHECK(is_surjective_on_objects(f));
    }
  }
}

TEST_CASE("find_right_adjoint") {
  FinPreorder c2 = chain(2);
  FinPreorder c3 = chain(3);
  SECTION("identity is self-adjoint") {
    MonotoneMap id2 = MonotoneMap::identity(c2);
    auto u = find_right_adjoint(id2);
    REQUIRE(u);
    CHECK(*u == id2);
  }
  SECTION("collapsing the top two picks the greatest preimage") {
    MonotoneMap f = map_of(c3, c2, {{"0", "0"}, {"1", "1"}, {"2", "1"}});
    auto u = find_right_adjoint(f);
    REQUIRE(u);
    CHECK(u->apply("0") == "0");
    CHECK(u->apply("1") == "2");
  }
  SECTION("constant at bottom from a discrete domain has no adjoint") {
    MonotoneMap f = MonotoneMap::constant(discrete({"a", "b"}), c2, "0");
    CHECK_FALSE(find_right_adjoint(f));
  }
  SECTION("adjointness is the hom equation, checked by brute force") {
    Rng rng(14);
    int with = 0, without = 0;
    for (int i = 0; i < 150; ++i) {
      FinPreorder x = random_preorder(rng, rng.between(1, 3), "x");
      FinPreorder a = random_preorder(rng, rng.between(1, 3), "a");
      MonotoneMap f = random_monotone_map(rng, x, a);
      // Oracle: search all monotone candidates for the hom equation.
      bool oracle = false;
      for (const MonotoneMap& u : all_monotone_maps(a, x)) {
        bool hom = true;
        for (int s = 0; s < x.size() && hom; ++s)
          for (int v = 0; v < a.size() && hom; ++v)
            hom = a.leq(f.apply(s), v) == x.leq(s, u.apply(v));
        if (hom) {
          oracle = true;
          break;
        }
      }
      auto u = find_right_adjoint(f);
      CHECK(static_cast<bool>(u) == oracle);
      if (u) {
        ++with;
        for (int s = 0; s < x.size(); ++s)
          for (int v = 0; v < a.size(); ++v)
            CHECK(a.leq(f.apply(s), v) == x.leq(s, u->apply(v)));
      } else {
        ++without;
      }
    }
    CHECK(with > 0);
    CHECK(without > 0);
  }
}

TEST_CASE("quotient_poset") {
  SECTION("posets are fixed up to nothing at all") {
    FinPreorder v = vee();
    QuotientResult q = quotient_poset(v);
    CHECK(q.object == v);
    CHECK(is_surjective_on_objects(q.q));
  }
  SECTION("a two-cycle collapses to a point") {
    FinPreorder cyc = FinPreorder::from_pairs({"x", "y"}, {{"x", "y"}, {"y", "x"}});
    QuotientResult q = quotient_poset(cyc);
    CHECK(q.object.size() == 1);
    CHECK(q.object.is_poset());
  }
  SECTION("two-cycle plus an incomparable point") {
    QuotientResult q = quotient_poset(fixtures::two_cycle_plus_point());
    // Oracle: components {x,y} and {z}, no order between them.
    REQUIRE(q.object.size() == 2);
    CHECK(q.object.is_poset());
    CHECK(q.object.is_discrete());
    CHECK(q.q.apply("x") == q.q.apply("y"));
    CHECK(q.q.apply("x") != q.q.apply("z"));
  }
  SECTION("the quotient map is absolutely dense onto a poset") {
    Rng rng(15);
    for (int i = 0; i < 80; ++i) {
      FinPreorder a = random_preorder(rng, rng.between(1, 4), "a");
      QuotientResult q = quotient_poset(a);
      CHECK(q.object.is_poset());
      CHECK(is_absolutely_dense(q.q));
    }
  }
}
