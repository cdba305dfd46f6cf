#include "gradealg/group.hpp"

#include <random>

#include "doctest.h"
#include "gradealg/weight.hpp"

using namespace gradealg;

namespace {

// S3 multiplication table: 0 = id, 1 = (12), 2 = (13), 3 = (23),
// 4 = (123), 5 = (132), composed as permutations acting on the left.
std::vector<std::vector<int>> s3_table() {
  auto apply = [](int p, int x) {
    static const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                    {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    return perms[p][x];
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int img[3];
      for (int x = 0; x < 3; ++x) img[x] = apply(a, apply(b, x));
      for (int c = 0; c < 6; ++c) {
        bool match = true;
        for (int x = 0; x < 3; ++x)
          if (apply(c, x) != img[x]) match = false;
        if (match) { t[a][b] = c; break; }
      }
    }
  return t;
}

std::vector<GroupElement> sample_elements(const Group& g, int radius,
                                          std::mt19937_64& rng, int count) {
  BallTable ball = build_ball(g, GeneratingSet::standard(g), radius);
  std::vector<GroupElement> all;
  for (const auto& [x, _] : ball.dist) all.push_back(x);
  std::vector<GroupElement> out;
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int i = 0; i < count; ++i) out.push_back(all[pick(rng)]);
  return out;
}

}  // namespace

TEST_CASE("group laws hold exactly on sampled triples") {
  std::mt19937_64 rng(7);
  for (const Group& g : {Group::integers(), Group::lattice(2), Group::cyclic(6),
                         Group::heisenberg(), Group::finite_table(s3_table())}) {
    auto xs = sample_elements(g, 3, rng, 12);
    for (const auto& a : xs) {
      CHECK(g.mul(a, g.id()) == a);
      CHECK(g.mul(g.id(), a) == a);
      CHECK(g.mul(a, g.inv(a)) == g.id());
      CHECK(g.mul(g.inv(a), a) == g.id());
      for (const auto& b : xs)
        for (const auto& c : xs)
          CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

TEST_CASE("word length on Z") {
  Group z = Group::integers();
  GeneratingSet v = GeneratingSet::standard(z);
  CHECK(word_length(z, v, GroupElement({5}), 10) == 5);
  CHECK(word_length(z, v, GroupElement({0}), 10) == 0);
  CHECK(word_length(z, v, GroupElement({-7}), 10) == 7);
  CHECK_FALSE(word_length(z, v, GroupElement({40}), 10).has_value());
}

TEST_CASE("word length of the Heisenberg commutator") {
  Group h = Group::heisenberg();
  GeneratingSet v = GeneratingSet::standard(h);
  const GroupElement central({0, 0, 1});

  // Independent oracle: direct enumeration of all products of at most 4
  // generators (not the BFS in build_ball).
  std::vector<GroupElement> gens = {h.id(),
                                    {1, 0, 0}, {-1, 0, 0},
                                    {0, 1, 0}, {0, -1, 0}};
  int best = -1;
  std::vector<GroupElement> layer = {h.id()};
  for (int n = 1; n <= 4 && best < 0; ++n) {
    std::vector<GroupElement> next;
    for (const auto& x : layer)
      for (const auto& s : gens)
        if (!(s == h.id())) next.push_back(h.mul(x, s));
    for (const auto& x : next)
      if (x == central) best = n;
    layer = std::move(next);
  }
  CHECK(best == 4);
  CHECK(word_length(h, v, central, 6) == 4);
}

TEST_CASE("word length is symmetric for symmetric generating sets") {
  Group h = Group::heisenberg();
  GeneratingSet v = GeneratingSet::standard(h);
  std::mt19937_64 rng(3);
  for (const auto& x : sample_elements(h, 3, rng, 10))
    CHECK(word_length(h, v, x, 8) == word_length(h, v, h.inv(x), 8));
}

TEST_CASE("generating set must contain the identity") {
  Group z = Group::integers();
  GeneratingSet v;
  v.elems = {GroupElement({1}), GroupElement({-1})};
  CHECK_THROWS_AS(build_ball(z, v, 2), Error);
}

TEST_CASE("weight validation") {
  Group z = Group::integers();
  GeneratingSet v = GeneratingSet::standard(z);

  SUBCASE("constant weight passes") {
    CHECK(validate_weight(z, v, Weight::constant(), 6).pass());
  }
  SUBCASE("polynomial weight passes") {
    CHECK(validate_weight(z, v, Weight::polynomial(1.5), 8).pass());
    CHECK(validate_weight(z, v, Weight::polynomial(2.0), 8).pass());
  }
  SUBCASE("exponential weight passes") {
    CHECK(validate_weight(z, v, Weight::exponential(2.0), 6).pass());
  }
  SUBCASE("sub-1 weight reports a range violation") {
    WeightReport rep = validate_weight(z, v, Weight::polynomial(-1.0), 4);
    CHECK_FALSE(rep.pass());
    bool has_range = false;
    for (const auto& viol : rep.violations)
      if (viol.law == "range") has_range = true;
    CHECK(has_range);
  }
  SUBCASE("polynomial weight on Z^2 passes") {
    Group z2 = Group::lattice(2);
    CHECK(validate_weight(z2, GeneratingSet::standard(z2),
                          Weight::polynomial(1.0), 4)
              .pass());
  }
  SUBCASE("heisenberg symmetrized length gives a valid weight") {
    Group h = Group::heisenberg();
    CHECK(validate_weight(h, GeneratingSet::standard(h),
                          Weight::polynomial(1.0), 3)
              .pass());
  }
}

TEST_CASE("ugrs profile closed forms on Z") {
  Group z = Group::integers();
  GeneratingSet v = GeneratingSet::standard(z);

  SUBCASE("trivial weight stays at 1") {
    auto prof = ugrs_profile(z, v, Weight::constant(), 10);
    for (double s : prof.values) CHECK(s == doctest::Approx(1.0));
  }
  SUBCASE("polynomial weight yields (1+n)^(1/n)") {
    auto prof = ugrs_profile(z, v, Weight::polynomial(1.0), 30);
    for (int n = 1; n <= 30; ++n)
      CHECK(prof.values[n - 1] ==
            doctest::Approx(std::pow(1.0 + n, 1.0 / n)).epsilon(1e-12));
  }
  SUBCASE("exponential weight is flat at its base") {
    auto prof = ugrs_profile(z, v, Weight::exponential(2.0), 25);
    for (double s : prof.values) CHECK(s == doctest::Approx(2.0));
    CHECK(prof.limit_estimate() == doctest::Approx(2.0));
  }
}

TEST_CASE("ugrs profile of a product weight is dominated by the product") {
  Group z = Group::integers();
  GeneratingSet v = GeneratingSet::standard(z);
  auto p1 = ugrs_profile(z, v, Weight::polynomial(1.0), 15);
  auto p2 = ugrs_profile(z, v, Weight::polynomial(2.0), 15);  // nu1 * nu1^2 = nu1^3
  auto p3 = ugrs_profile(z, v, Weight::polynomial(3.0), 15);
  for (int n = 0; n < 15; ++n)
    CHECK(p3.values[n] <= p1.values[n] * p2.values[n] + 1e-12);
}

TEST_CASE("shell constants") {
  SUBCASE("constant weight has C = 1") {
    Group z = Group::integers();
    auto rep = shell_constant(z, GeneratingSet::standard(z), Weight::constant(), 10);
    CHECK(rep.constant == doctest::Approx(1.0));
  }
  SUBCASE("polynomial weight on Z has C = 1 (shells are {-n, n})") {
    Group z = Group::integers();
    auto rep =
        shell_constant(z, GeneratingSet::standard(z), Weight::polynomial(2.0), 12);
    CHECK(rep.constant == doctest::Approx(1.0));
    CHECK(rep.last_shell == 12);
  }
  SUBCASE("l1 polynomial weight on Z^2 has C = 1") {
    Group z2 = Group::lattice(2);
    auto rep =
        shell_constant(z2, GeneratingSet::standard(z2), Weight::polynomial(1.0), 8);
    CHECK(rep.constant == doctest::Approx(1.0));
  }
  SUBCASE("finite group exhausts") {
    Group c4 = Group::cyclic(4);
    GeneratingSet v;
    v.elems = {GroupElement({0}), GroupElement({1})};
    auto rep = shell_constant(c4, v, Weight::constant(), 10);
    CHECK(rep.exhausted);
    CHECK(rep.last_shell == 2);
  }
}

TEST_CASE("derived integer weight is a symmetric submultiplicative weight") {
  Group z2 = Group::lattice(2);
  GeneratingSet v = GeneratingSet::standard(z2);
  auto nu = Weight::polynomial(1.5);
  auto w = derived_integer_weight(z2, v, nu, 12);
  for (int m = 0; m <= 12; ++m) {
    CHECK(w[m] >= 1.0);
    for (int n = 0; m + n <= 12; ++n)
      CHECK(w[m + n] <= w[m] * w[n] * (1 + 1e-12));
  }
}

TEST_CASE("ball truncation is reported") {
  Group h = Group::heisenberg();
  BallTable ball = build_ball(h, GeneratingSet::standard(h), 50, 500);
  CHECK(ball.truncated);
  auto prof = ugrs_profile(h, GeneratingSet::standard(h), Weight::constant(), 50, 500);
  CHECK(prof.truncated);
}
