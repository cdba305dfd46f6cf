#include "gradealg/graded.hpp"

#include <random>

#include "doctest.h"
#include "gradealg/models.hpp"

using namespace gradealg;

namespace {
std::shared_ptr<LatticeShiftModel> zmodel() {
  return std::make_shared<LatticeShiftModel>(1);
}
}  // namespace

TEST_CASE("singleton products multiply blocks and add degrees") {
  auto m = zmodel();
  auto a = m->delta(GroupElement({1}), 2.0);
  auto b = m->delta(GroupElement({2}), cplx(0.0, 1.0));
  auto p = graded_mul(a, b);
  CHECK(p.support_size() == 1);
  REQUIRE(p.has(GroupElement({3})));
  CHECK(p.component(GroupElement({3}))->shift().coef_at({0}) ==
        cplx(0.0, 2.0));
}

TEST_CASE("the unit is neutral") {
  auto m = zmodel();
  std::mt19937_64 rng(11);
  auto x = m->random_element(rng, 4, 5);
  CHECK(l1_dist(graded_mul(x, m->unit()), x) == doctest::Approx(0.0));
  CHECK(l1_dist(graded_mul(m->unit(), x), x) == doctest::Approx(0.0));
}

TEST_CASE("hand-expanded scalar convolution on Z") {
  // (d0 + d1)(d0 - d1) = d0 - d2
  auto m = zmodel();
  auto d0 = m->delta(GroupElement({0}));
  auto d1 = m->delta(GroupElement({1}));
  auto p = graded_mul(graded_add(d0, d1), graded_sub(d0, d1));
  auto expect = graded_sub(d0, m->delta(GroupElement({2})));
  CHECK(l1_dist(p, expect) == doctest::Approx(0.0));
}

TEST_CASE("adjoint conjugates and inverts the degree") {
  auto m = zmodel();
  auto a = m->delta(GroupElement({1}), cplx(2.0, -3.0));
  auto s = graded_adjoint(a);
  REQUIRE(s.has(GroupElement({-1})));
  CHECK(s.component(GroupElement({-1}))->shift().coef_at({0}) == cplx(2.0, 3.0));
}

TEST_CASE("involution and anti-multiplicativity on random pairs") {
  auto m = zmodel();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    auto x = m->random_element(rng, 4, 6);
    auto y = m->random_element(rng, 4, 6);
    CHECK(l1_dist(graded_adjoint(graded_adjoint(x)), x) <= 1e-12);
    CHECK(l1_dist(graded_adjoint(graded_mul(x, y)),
                  graded_mul(graded_adjoint(y), graded_adjoint(x))) <= 1e-12);
  }
}

TEST_CASE("associativity on random triples") {
  auto m = zmodel();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    auto x = m->random_element(rng, 3, 5);
    auto y = m->random_element(rng, 3, 5);
    auto z = m->random_element(rng, 3, 5);
    CHECK(l1_dist(graded_mul(graded_mul(x, y), z),
                  graded_mul(x, graded_mul(y, z))) <= 1e-10);
  }
}

TEST_CASE("l1 norm of truncated geometric series") {
  auto m = zmodel();
  SUBCASE("unweighted sum approaches 2") {
    GradedElement e(m->fibers());
    for (int n = 0; n <= 40; ++n)
      e.accumulate(GroupElement({n}),
                   Block(ShiftBlock::lattice({n}, std::pow(2.0, -n))));
    CHECK(std::abs(l1_norm(e) - 2.0) < 1e-12);
  }
  SUBCASE("weighted by (1+|n|) the sum approaches 4") {
    GradedElement e(m->fibers());
    for (int n = 0; n <= 60; ++n)
      e.accumulate(GroupElement({n}),
                   Block(ShiftBlock::lattice({n}, std::pow(2.0, -n))));
    CHECK(std::abs(l1_norm(e, Weight::polynomial(1.0)) - 4.0) < 1e-12);
  }
}

TEST_CASE("weighted norm dominates the plain norm") {
  auto m = zmodel();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10; ++i) {
    auto x = m->random_element(rng, 5, 8);
    CHECK(l1_norm(x) <= l1_norm(x, Weight::polynomial(1.0)) + 1e-12);
    CHECK(l1_norm(x) <= l1_norm(x, Weight::exponential(1.5)) + 1e-12);
  }
}

TEST_CASE("l1 submultiplicativity") {
  auto m = zmodel();
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    auto x = m->random_element(rng, 4, 5);
    auto y = m->random_element(rng, 4, 5);
    CHECK(l1_norm(graded_mul(x, y)) <= l1_norm(x) * l1_norm(y) + 1e-10);
  }
}

TEST_CASE("embedding T is isometric and respects the operations") {
  auto m = zmodel();
  std::mt19937_64 rng(31);
  SUBCASE("unit maps to the identity block at e") {
    auto t = embed_T(m->unit());
    CHECK(t.values.size() == 1);
    CHECK(t.values.count(GroupElement({0})) == 1);
  }
  SUBCASE("norm identity on random elements") {
    for (int i = 0; i < 100; ++i) {
      auto x = m->random_element(rng, 5, 6);
      CHECK(l1gb_norm(embed_T(x)) == doctest::Approx(l1_norm(x)).epsilon(1e-14));
    }
  }
  SUBCASE("multiplicativity against the independent convolution") {
    for (int i = 0; i < 30; ++i) {
      auto x = m->random_element(rng, 4, 5);
      auto y = m->random_element(rng, 4, 5);
      CHECK(l1gb_dist(embed_T(graded_mul(x, y)),
                      l1gb_convolve(embed_T(x), embed_T(y))) <= 1e-10);
      CHECK(l1gb_dist(embed_T(graded_adjoint(x)), l1gb_adjoint(embed_T(x))) <=
            1e-12);
    }
  }
}

TEST_CASE("twisted product") {
  SUBCASE("trivial cocycle reduces to the plain product") {
    auto m = zmodel();
    std::mt19937_64 rng(37);
    auto x = m->random_element(rng, 4, 5);
    auto y = m->random_element(rng, 4, 5);
    CHECK(l1_dist(twisted_mul(x, y, Cocycle::trivial()), graded_mul(x, y)) <=
          1e-14);
  }
  SUBCASE("half-angle bicharacter on Z^2 gives a quarter turn") {
    auto m = std::make_shared<LatticeShiftModel>(2);
    Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(2, 2);
    theta(0, 1) = 0.25;  // omega(x,y) = exp(i pi x1 y2 / 2) at theta = 1/2
    Cocycle omega = Cocycle::bicharacter(theta);
    auto x = m->delta(GroupElement({1, 0}));
    auto y = m->delta(GroupElement({0, 1}));
    auto p = twisted_mul(x, y, omega);
    REQUIRE(p.has(GroupElement({1, 1})));
    cplx c = p.component(GroupElement({1, 1}))->shift().coef_at({0, 0});
    CHECK(std::abs(c - std::polar(1.0, std::numbers::pi / 2)) < 1e-12);
  }
  SUBCASE("twisted product stays associative") {
    auto m = std::make_shared<LatticeShiftModel>(2);
    Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(2, 2);
    theta(0, 1) = 0.25;
    Cocycle omega = Cocycle::bicharacter(theta);
    std::mt19937_64 rng(41);
    std::vector<GroupElement> sample;
    for (int i = 0; i < 4; ++i) {
      auto e = m->random_element(rng, 1, 3);
      sample.push_back(e.components().begin()->first);
    }
    omega.validate(m->fibers()->group(), sample);
    for (int i = 0; i < 10; ++i) {
      auto x = m->random_element(rng, 3, 3);
      auto y = m->random_element(rng, 3, 3);
      auto z = m->random_element(rng, 3, 3);
      CHECK(l1_dist(twisted_mul(twisted_mul(x, y, omega), z, omega),
                    twisted_mul(x, twisted_mul(y, z, omega), omega)) <= 1e-12);
    }
  }
  SUBCASE("a non-cocycle is rejected") {
    Cocycle bad = Cocycle::callable([](const GroupElement& a, const GroupElement& b) {
      return std::polar(1.0, 0.1 * static_cast<double>(a.v[0] * a.v[0]) *
                                 static_cast<double>(b.v[0]));
    });
    Group z = Group::integers();
    std::vector<GroupElement> sample = {GroupElement({1}), GroupElement({2}),
                                        GroupElement({3})};
    CHECK_THROWS_AS(bad.validate(z, sample), Error);
  }
}

TEST_CASE("fiber shape mismatches are structural errors") {
  auto m = zmodel();
  GradedElement e(m->fibers());
  CHECK_THROWS_AS(e.set(GroupElement({2}), Block(ShiftBlock::lattice({1}, 1.0))),
                  Error);
  auto m2 = std::make_shared<LatticeShiftModel>(1);
  auto a = m->delta(GroupElement({1}));
  auto b = m2->delta(GroupElement({1}));
  CHECK_THROWS_AS(graded_mul(a, b), Error);  // distinct fiber system objects
}
