#include "gradealg/kgraph.hpp"

#include "doctest.h"

using namespace gradealg;

TEST_CASE("single-vertex single-loop 1-graph") {
  KGraph g = KGraph::loops_1graph(1, 8);
  g.check_admissible();
  Morph e = g.from_edges({0});
  Morph ee = g.compose(e, e);

  SUBCASE("mce of nested paths is the longer path") {
    auto m = g.mce(e, ee);
    REQUIRE(m.size() == 1);
    CHECK(m[0] == ee);
    CHECK(g.mce_pairing(e, ee) == m);
  }
  SUBCASE("the graph is periodic at any depth") {
    auto res = g.aperiodicity({3}, 3);
    CHECK_FALSE(res.aperiodic);
    CHECK(res.witness.has_value());
  }
  SUBCASE("factorization is unique") {
    auto rep = g.factorization_check();
    CHECK(rep.unique);
    CHECK(rep.morphisms_checked == 9);  // e^0 .. e^8
  }
}

TEST_CASE("single-vertex two-loop 1-graph") {
  KGraph g = KGraph::loops_1graph(2, 7);
  g.check_admissible();
  Morph a = g.from_edges({0});
  Morph b = g.from_edges({1});

  SUBCASE("distinct loops have empty mce") {
    CHECK(g.mce(a, b).empty());
    CHECK(g.mce_pairing(a, b).empty());
  }
  SUBCASE("mce is nonempty iff one path extends the other") {
    auto paths1 = g.morphisms({1});
    auto paths3 = g.morphisms({3});
    for (const auto& mu : paths1)
      for (const auto& nu : paths3) {
        auto direct = g.mce(mu, nu);
        auto paired = g.mce_pairing(mu, nu);
        CHECK(direct == paired);
        bool extends = std::equal(mu.seq.begin(), mu.seq.end(), nu.seq.begin());
        CHECK(direct.size() == (extends ? 1u : 0u));
        if (extends) CHECK(direct[0] == nu);
      }
  }
  SUBCASE("aperiodic at depth 3") {
    auto res = g.aperiodicity({3}, 3);
    CHECK(res.aperiodic);
    CHECK(res.pairs_checked > 0);
  }
  SUBCASE("morphism counts are 2^n") {
    CHECK(g.morphisms({0}).size() == 1);
    CHECK(g.morphisms({1}).size() == 2);
    CHECK(g.morphisms({5}).size() == 32);
  }
}

TEST_CASE("flip 2-graph enumeration and factorization") {
  KGraph g = KGraph::flip_2graph(2, 1, 3, 3);
  g.check_admissible();

  SUBCASE("degrees count color multiplicities") {
    CHECK(g.morphisms({0, 0}).size() == 1);
    CHECK(g.morphisms({1, 0}).size() == 2);
    CHECK(g.morphisms({0, 1}).size() == 1);
    CHECK(g.morphisms({2, 1}).size() == 4);
  }
  SUBCASE("factorization uniqueness is exhaustive up to the cap") {
    auto rep = g.factorization_check();
    CHECK(rep.unique);
    CHECK(rep.splits_checked > 100);
  }
  SUBCASE("composition commutes colors through the squares") {
    Morph a = g.from_edges({0});
    Morph x = g.from_edges({2});
    Morph ax = g.compose(a, x);
    Morph xa = g.compose(x, a);
    CHECK(ax == xa);  // flip square makes them equal in normal form
  }
  SUBCASE("mce in two colors takes the componentwise max degree") {
    Morph a = g.from_edges({0});
    Morph x = g.from_edges({2});
    auto m = g.mce(a, x);
    REQUIRE(m.size() == 1);
    CHECK(m[0].degree == std::vector<int>({1, 1}));
    CHECK(g.mce_pairing(a, x) == m);
  }
  SUBCASE("mce agrees with path pairing across small degrees") {
    for (const auto& mu : g.morphisms({1, 0}))
      for (const auto& nu : g.morphisms({1, 1}))
        CHECK(g.mce(mu, nu) == g.mce_pairing(mu, nu));
  }
  SUBCASE("degree overflow is a resource error") {
    Morph x = g.from_edges({2});
    Morph xx = g.compose(x, x);
    Morph xxx = g.compose(xx, x);
    CHECK_THROWS_AS(g.compose(xxx, x), Error);
  }
}

TEST_CASE("a 2-graph with a twisted square") {
  // one vertex, blue loops a, b; red loop x; squares: a x = x b, b x = x a
  KGraphSpec spec;
  spec.colors = 2;
  spec.vertices = 1;
  spec.edges = {{0, 0, 0, 0, "a"}, {1, 0, 0, 0, "b"}, {2, 1, 0, 0, "x"}};
  spec.squares = {{0, 2, 2, 1}, {1, 2, 2, 0}};
  spec.degree_cap = {4, 4};
  KGraph g(std::move(spec));
  g.check_admissible();

  SUBCASE("factorization is unique") { CHECK(g.factorization_check().unique); }
  SUBCASE("the swap acts on normal forms") {
    Morph a = g.from_edges({0});
    Morph x = g.from_edges({2});
    // x a normalizes to b x ... in color order: the color-0 edge moves front
    Morph xa = g.compose(x, a);
    CHECK(xa.seq == std::vector<int>({1, 2}));
  }
  SUBCASE("mce routes agree") {
    for (const auto& mu : g.morphisms({1, 1}))
      for (const auto& nu : g.morphisms({0, 2}))
        CHECK(g.mce(mu, nu) == g.mce_pairing(mu, nu));
  }
}

TEST_CASE("cuntz-krieger relations as symbolic rewrites") {
  KGraph g = KGraph::loops_1graph(2, 6);
  Morph a = g.from_edges({0});
  Morph b = g.from_edges({1});

  SUBCASE("(a) vertex projections are orthogonal") {
    // single vertex: S_v S_v = S_v
    auto p = ck_mul(CkElement::vertex_proj(g, 0), CkElement::vertex_proj(g, 0));
    CHECK(ck_equal(p, CkElement::vertex_proj(g, 0)));
  }
  SUBCASE("(b) composition of generators") {
    auto sab = ck_mul(CkElement::S(g, a), CkElement::S(g, b));
    CHECK(ck_equal(sab, CkElement::S(g, g.compose(a, b))));
  }
  SUBCASE("(c) S*_l S_l = S_{s(l)}") {
    auto p = ck_mul(CkElement::S_dag(g, g.compose(a, b)),
                    CkElement::S(g, g.compose(a, b)));
    CHECK(ck_equal(p, CkElement::vertex_proj(g, 0)));
  }
  SUBCASE("(c') distinct loops annihilate: S*_a S_b = 0") {
    auto p = ck_mul(CkElement::S_dag(g, a), CkElement::S(g, b));
    CHECK(ck_is_zero(p));
  }
  SUBCASE("(d) S_v = sum of S_l S*_l over paths of each length") {
    for (int n = 1; n <= 3; ++n) {
      CkElement sum(&g);
      for (const Morph& l : g.morphisms_at({n}, 0))
        sum.add_term(l, l, 1.0);
      CHECK(ck_equal(sum, CkElement::vertex_proj(g, 0)));
    }
  }
  SUBCASE("adjoints and products") {
    auto x = ck_add(CkElement::S(g, a), ck_scale(cplx(0, 1), CkElement::S(g, b)));
    auto y = ck_mul(ck_adjoint(x), x);
    // x* x = S*_a S_a + S*_b S_b + cross terms = 2 S_v (cross terms vanish)
    CHECK(ck_equal(y, ck_scale(2.0, CkElement::vertex_proj(g, 0))));
  }
}

TEST_CASE("two-vertex 1-graph vertex orthogonality") {
  KGraphSpec spec;
  spec.colors = 1;
  spec.vertices = 2;
  // loops at each vertex plus a connector to keep it source-free
  spec.edges = {{0, 0, 0, 0, "e"}, {1, 0, 1, 1, "f"}, {2, 0, 0, 1, "c"}};
  spec.degree_cap = {4};
  KGraph g(std::move(spec));
  g.check_admissible();
  auto p = ck_mul(CkElement::vertex_proj(g, 0), CkElement::vertex_proj(g, 1));
  CHECK(ck_is_zero(p));
  Morph c = g.from_edges({2});
  CHECK(c.src == 0);
  CHECK(c.rng == 1);
  auto q = ck_mul(CkElement::S_dag(g, c), CkElement::S(g, c));
  CHECK(ck_equal(q, CkElement::vertex_proj(g, 0)));
}

TEST_CASE("functor gradings") {
  KGraph g = KGraph::flip_2graph(1, 1, 3, 3);
  SUBCASE("the degree functor is valid and grades terms") {
    KFunctor d = KFunctor::degree(g);
    d.validate(g);
    Morph a = g.from_edges({0});
    Morph x = g.from_edges({1});
    CHECK(d.term_degree(g, g.compose(a, x), a) == GroupElement({0, 1}));
    CHECK(d.term_degree(g, a, x) == GroupElement({1, -1}));
  }
  SUBCASE("a custom Z-functor collapses the colors") {
    std::map<int, GroupElement> vals;
    vals[0] = GroupElement({1});
    vals[1] = GroupElement({1});
    KFunctor f(Group::integers(), std::move(vals));
    f.validate(g);
    Morph ax = g.compose(g.from_edges({0}), g.from_edges({1}));
    CHECK(f.value(g, ax) == GroupElement({2}));
  }
  SUBCASE("a functor that breaks the squares is rejected") {
    std::map<int, GroupElement> vals;
    vals[0] = GroupElement({1});
    vals[1] = GroupElement({5});
    KFunctor f(Group::integers(), std::move(vals));
    // flip square: a x = x a needs F(a) + F(x) = F(x) + F(a): abelian, holds;
    // so use the twisted graph instead
    KGraphSpec spec;
    spec.colors = 2;
    spec.vertices = 1;
    spec.edges = {{0, 0, 0, 0, "a"}, {1, 0, 0, 0, "b"}, {2, 1, 0, 0, "x"}};
    spec.squares = {{0, 2, 2, 1}, {1, 2, 2, 0}};
    spec.degree_cap = {3, 3};
    KGraph tg(std::move(spec));
    std::map<int, GroupElement> tvals;
    tvals[0] = GroupElement({1});
    tvals[1] = GroupElement({2});  // a x = x b forces F(a) = F(b)
    tvals[2] = GroupElement({0});
    KFunctor tf(Group::integers(), std::move(tvals));
    CHECK_THROWS_AS(tf.validate(tg), Error);
    f.validate(g);  // flip graph: any values pass
  }
}

TEST_CASE("admissibility rejects sources") {
  KGraphSpec spec;
  spec.colors = 1;
  spec.vertices = 2;
  // vertex 1 has no incoming edge, so it is a source
  spec.edges = {{0, 0, 0, 0, "e"}, {1, 0, 1, 0, "c"}};
  spec.degree_cap = {3};
  KGraph g(std::move(spec));
  CHECK_THROWS_AS(g.check_admissible(), Error);
}
