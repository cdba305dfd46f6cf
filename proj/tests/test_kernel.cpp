#include "gradealg/kernel.hpp"

#include <random>

#include "doctest.h"
#include "gradealg/models.hpp"

using namespace gradealg;

namespace {

std::vector<GroupElement> z_window(std::int64_t lo, std::int64_t hi) {
  std::vector<GroupElement> w;
  for (std::int64_t n = lo; n < hi; ++n) w.push_back(GroupElement({n}));
  return w;
}

}  // namespace

TEST_CASE("upsilon of the unit is the identity kernel") {
  LatticeShiftModel m(1);
  Kernel k = upsilon(m.unit(), z_window(-3, 4));
  Kernel id = Kernel::identity(m.fibers(), z_window(-3, 4));
  CHECK(kernel_entry_sup_dist(k, id) == doctest::Approx(0.0));
}

TEST_CASE("upsilon roundtrip is exact") {
  LatticeShiftModel m(1);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto x = m.random_element(rng, 5, 4);
    auto back = upsilon_inv(upsilon(x, z_window(-6, 7)));
    CHECK(l1_dist(back, x) == doctest::Approx(0.0));
  }
}

TEST_CASE("kernel envelope") {
  LatticeShiftModel m(1);
  SUBCASE("covariant kernels have kappa* equal to the component norms") {
    std::mt19937_64 rng(5);
    auto x = m.random_element(rng, 4, 3);
    auto env = kernel_envelope(upsilon(x, z_window(-5, 6)));
    for (const auto& [g, n] : component_norms(x))
      CHECK(env.kappa.at(g) == doctest::Approx(n));
    CHECK(env.norm == doctest::Approx(l1_norm(x)));
  }
  SUBCASE("kappa* takes the sup over a degree diagonal") {
    Kernel k(m.fibers(), z_window(0, 3));
    k.set(1, 0, Block(ShiftBlock::lattice({1}, 1.0)));
    k.set(2, 1, Block(ShiftBlock::lattice({1}, 3.0)));
    auto env = kernel_envelope(k);
    CHECK(env.kappa.at(GroupElement({1})) == doctest::Approx(3.0));
    CHECK(env.norm == doctest::Approx(3.0));
  }
  SUBCASE("any dominating envelope sums above the norm") {
    std::mt19937_64 rng(7);
    auto x = m.random_element(rng, 5, 4);
    auto env = kernel_envelope(upsilon(x, z_window(-6, 7)));
    // dominating kappa: the minimal one plus slack
    double dominating = 0;
    for (const auto& [g, v] : env.kappa) dominating += v + 0.25;
    CHECK(dominating >= env.norm);
  }
}

TEST_CASE("upsilon is isometric for the kernel norm") {
  LatticeShiftModel m(1);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto x = m.random_element(rng, 5, 4);
    auto env = kernel_envelope(upsilon(x, z_window(-5, 6)));
    CHECK(env.norm == doctest::Approx(l1_norm(x)).epsilon(1e-13));
  }
}

TEST_CASE("kernel multiplication") {
  LatticeShiftModel m(1);
  SUBCASE("identity kernel is neutral") {
    std::mt19937_64 rng(13);
    auto x = m.random_element(rng, 4, 3);
    Kernel k = upsilon(x, z_window(-4, 5));
    Kernel id = Kernel::identity(m.fibers(), z_window(-4, 5));
    CHECK(kernel_entry_sup_dist(kernel_mul(k, id), k) == doctest::Approx(0.0));
  }
  SUBCASE("covariant kernels multiply like their symbols on big windows") {
    std::mt19937_64 rng(17);
    // window large enough that every k with both factors nonzero is kept
    auto x = m.random_element(rng, 3, 2);
    auto y = m.random_element(rng, 3, 2);
    Kernel kx = upsilon(x, z_window(-9, 10));
    Kernel ky = upsilon(y, z_window(-9, 10));
    Kernel kp = kernel_mul(kx, ky);
    Kernel expect = upsilon(graded_mul(x, y), z_window(-9, 10));
    // interior pairs only: |g|, |h| <= 5 keeps the convolution complete
    double dev = 0;
    for (int i = 0; i < 19; ++i)
      for (int j = 0; j < 19; ++j) {
        if (std::llabs(i - 9) > 5 || std::llabs(j - 9) > 5) continue;
        const Block* a = kp.entry(i, j);
        const Block* b = expect.entry(i, j);
        if (!a && !b) continue;
        REQUIRE(a);
        REQUIRE(b);
        dev = std::max(dev, std::abs(a->shift().coef_at({0}) -
                                     b->shift().coef_at({0})));
      }
    CHECK(dev <= 1e-12);
  }
  SUBCASE("norm is submultiplicative") {
    std::mt19937_64 rng(19);
    auto x = m.random_element(rng, 3, 2);
    auto y = m.random_element(rng, 3, 2);
    Kernel kx = upsilon(x, z_window(-6, 7));
    Kernel ky = upsilon(y, z_window(-6, 7));
    CHECK(kernel_envelope(kernel_mul(kx, ky)).norm <=
          kernel_envelope(kx).norm * kernel_envelope(ky).norm + 1e-10);
  }
  SUBCASE("window mismatch is structural") {
    Kernel a(m.fibers(), z_window(0, 3));
    Kernel b(m.fibers(), z_window(0, 4));
    CHECK_THROWS_AS(kernel_mul(a, b), Error);
  }
}

TEST_CASE("kernel adjoint reverses products") {
  LatticeShiftModel m(1);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10; ++i) {
    auto x = m.random_element(rng, 3, 2);
    auto y = m.random_element(rng, 3, 2);
    Kernel kx = upsilon(x, z_window(-5, 6));
    Kernel ky = upsilon(y, z_window(-5, 6));
    Kernel lhs = kernel_adjoint(kernel_mul(kx, ky));
    Kernel rhs = kernel_mul(kernel_adjoint(ky), kernel_adjoint(kx));
    CHECK(kernel_entry_sup_dist(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("upsilon intertwines adjoints") {
  LatticeShiftModel m(1);
  std::mt19937_64 rng(29);
  auto x = m.random_element(rng, 4, 3);
  Kernel lhs = upsilon(graded_adjoint(x), z_window(-5, 6));
  Kernel rhs = kernel_adjoint(upsilon(x, z_window(-5, 6)));
  CHECK(kernel_entry_sup_dist(lhs, rhs) <= 1e-13);
}

TEST_CASE("covariance detection") {
  LatticeShiftModel m(1);
  SUBCASE("upsilon images are covariant") {
    std::mt19937_64 rng(31);
    auto x = m.random_element(rng, 4, 3);
    CHECK(check_covariant(upsilon(x, z_window(-4, 5))).covariant);
  }
  SUBCASE("a perturbed kernel is flagged with a witness") {
    std::mt19937_64 rng(37);
    auto x = m.random_element(rng, 3, 2);
    Kernel k = upsilon(x, z_window(-4, 5));
    k.set(3, 2, Block(ShiftBlock::lattice({1}, 42.0)));
    auto rep = check_covariant(k);
    CHECK_FALSE(rep.covariant);
    CHECK(rep.max_deviation > 1.0);
    CHECK(rep.witness.has_value());
    CHECK_THROWS_AS(upsilon_inv(k), Error);
  }
  SUBCASE("upsilon_inv needs the identity in the window") {
    auto x = m.delta(GroupElement({1}));
    CHECK_THROWS_AS(upsilon_inv(upsilon(x, z_window(2, 5))), Error);
  }
}
