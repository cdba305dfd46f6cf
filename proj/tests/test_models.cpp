#include "gradealg/models.hpp"

#include <random>

#include "doctest.h"
#include "gradealg/dual_action.hpp"

using namespace gradealg;

namespace {

double block_dist(const ShiftBlock& a, const ShiftBlock& b) {
  return add(a, scale(-1.0, b)).sup_norm();
}

std::vector<cplx> random_periodic(std::mt19937_64& rng, std::size_t q) {
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<cplx> a(q);
  for (auto& c : a) c = cplx(d(rng), d(rng));
  return a;
}

}  // namespace

TEST_CASE("bunce-deddens shift relations hold exactly") {
  BunceDeddensModel m({2, 4, 8}, 1);
  std::mt19937_64 rng(3);
  auto a = random_periodic(rng, 4);
  auto b = random_periodic(rng, 4);

  SUBCASE("S* S = 1 on finitely supported vectors") {
    ShiftBlock s = m.shift_op();
    ShiftBlock prod = mul(adjoint(s), s);
    CHECK(block_dist(prod, m.mult_op({1.0})) == doctest::Approx(0.0));
  }
  SUBCASE("S S* = Q is the range projection") {
    ShiftBlock q = m.range_proj();
    CHECK(q.coef_at({0}) == cplx(0.0));
    for (std::int64_t n = 1; n < 12; ++n) CHECK(q.coef_at({n}) == cplx(1.0));
  }
  SUBCASE("S*_a S_b = M_{conj(a) b} exactly") {
    ShiftBlock lhs = mul(adjoint(m.weighted_shift(a)), m.weighted_shift(b));
    std::vector<cplx> ab(4);
    for (int n = 0; n < 4; ++n) ab[n] = std::conj(a[n]) * b[n];
    CHECK(block_dist(lhs, m.mult_op(ab)) <= 1e-15);
  }
  SUBCASE("multiplier commutation: M_{a shifted back} S_b = S_{a b}") {
    // The wrap-around entry of the shifted multiplier never acts, so the
    // back-rotation keeps it periodic.
    ShiftBlock lhs = mul(m.mult_op(BunceDeddensModel::rotate_back(a)),
                         m.weighted_shift(b));
    std::vector<cplx> ab(4);
    for (int n = 0; n < 4; ++n) ab[n] = a[n] * b[n];
    CHECK(block_dist(lhs, m.weighted_shift(ab)) <= 1e-15);
  }
  SUBCASE("mixed-stage periods combine") {
    BunceDeddensModel m0({2, 4, 8}, 2);
    auto c2 = random_periodic(rng, 2);
    auto c8 = random_periodic(rng, 8);
    ShiftBlock prod = mul(m0.mult_op(c2), m0.mult_op(c8));
    for (std::int64_t n = 0; n < 16; ++n)
      CHECK(std::abs(prod.coef_at({n}) - c2[n % 2] * c8[n % 8]) <= 1e-15);
  }
  SUBCASE("period must divide the stage period") {
    CHECK_THROWS_AS(m.mult_op(random_periodic(rng, 3)), Error);
  }
  SUBCASE("divisibility chain is validated") {
    CHECK_THROWS_AS(BunceDeddensModel({2, 6, 7}, 0), Error);
    CHECK_THROWS_AS(BunceDeddensModel({2, 2}, 0), Error);
  }
}

TEST_CASE("bunce-deddens gauge degree") {
  BunceDeddensModel m({3, 6}, 0);
  std::mt19937_64 rng(5);
  auto a = random_periodic(rng, 3);
  const Window w = m.window_for(24);
  Matrix sa = m.compress(m.S(a), w);
  // conjugation by diag(z^n) multiplies S_a by z
  const cplx z = std::polar(1.0, 0.931);
  Eigen::VectorXcd u(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i)
    u(i) = std::pow(z, static_cast<double>(w.point(i)[0]));
  Matrix conj = u.asDiagonal() * sa * u.conjugate().asDiagonal();
  CHECK((conj - z * sa).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("uhf stage grading and embeddings") {
  UhfModel m({3, 6, 12}, 0);

  SUBCASE("degree-k diagonal has dimension p - |k|") {
    for (int k = -2; k <= 2; ++k)
      CHECK(m.diag_ones(k).cwiseAbs().sum() == doctest::Approx(3 - std::abs(k)));
  }
  SUBCASE("gauge action scales a degree-k matrix by z^k") {
    std::mt19937_64 rng(7);
    auto e = m.random_element(rng, 1, 2);
    const auto& [k, b] = *e.components().begin();
    const cplx z = std::polar(1.0, 1.234);
    Matrix scaled = m.gauge(b.matrix(), z);
    cplx zk = std::pow(z, static_cast<double>(k.v[0]));
    CHECK((scaled - zk * b.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("block-diagonal embedding is unital, injective and covariant") {
    std::mt19937_64 rng(11);
    Matrix x = Matrix::Random(3, 3);
    CHECK((m.embed_matrix(Matrix(Matrix::Identity(3, 3))) -
           Matrix::Identity(6, 6))
              .cwiseAbs()
              .maxCoeff() == doctest::Approx(0.0));
    UhfModel next({3, 6, 12}, 1);
    const cplx z = std::polar(1.0, 0.517);
    Matrix lhs = next.gauge(m.embed_matrix(x), z);
    Matrix rhs = m.embed_matrix(m.gauge(x, z));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(m.embed_matrix(x).cwiseAbs().maxCoeff() ==
          doctest::Approx(x.cwiseAbs().maxCoeff()));
  }
  SUBCASE("the multiplicity-style embedding is not gauge covariant") {
    UhfModel next({3, 6, 12}, 1);
    Matrix x = m.diag_ones(1);
    const cplx z = std::polar(1.0, 0.9);
    Matrix lhs = next.gauge(m.embed_matrix_naive(x), z);
    Matrix rhs = m.embed_matrix_naive(m.gauge(x, z));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() > 0.1);
  }
  SUBCASE("products respect the diagonal grading") {
    auto e1 = m.diag_element(1);
    auto em1 = m.diag_element(-2);
    auto p = graded_mul(e1, em1);
    CHECK(p.support_size() == 1);
    CHECK(p.has(GroupElement({-1})));
  }
}

TEST_CASE("car model") {
  auto m = CarModel::standard(4);
  std::mt19937_64 rng(13);
  std::normal_distribution<double> dist(0.0, 1.0);
  auto rand_vec = [&] {
    Eigen::VectorXcd r(4);
    for (int i = 0; i < 4; ++i) r(i) = cplx(dist(rng), dist(rng));
    return r;
  };

  SUBCASE("a(r)^2 = 0") {
    for (int t = 0; t < 5; ++t) {
      Eigen::VectorXcd r = rand_vec();
      Matrix sq = m->a(r) * m->a(r);
      CHECK(sq.cwiseAbs().maxCoeff() <= 1e-13 * r.cwiseAbs().sum());
    }
  }
  SUBCASE("a*(e1) a(e1) + a(e1) a*(e1) = 1") {
    Matrix i16 = m->creator(0) * m->annihilator(0) + m->annihilator(0) * m->creator(0);
    CHECK((i16 - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() <= 1e-14);
  }
  SUBCASE("a*(r) a(s) + a(s) a*(r) = (r|s) 1 with (.|.) conjugate-linear first") {
    for (int t = 0; t < 5; ++t) {
      Eigen::VectorXcd r = rand_vec(), s = rand_vec();
      Matrix lhs = m->a_dag(r) * m->a(s) + m->a(s) * m->a_dag(r);
      cplx ip = r.dot(s);  // Eigen conjugates the first factor
      CHECK((lhs - ip * Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
  SUBCASE("annihilators anticommute") {
    Matrix anti = m->annihilator(1) * m->annihilator(3) +
                  m->annihilator(3) * m->annihilator(1);
    CHECK(anti.cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  }
  SUBCASE("word degrees count creators minus annihilators") {
    // a*(r1) a*(r2) a(s1) has degree 1 - 2 = -1 under the charge grading
    Matrix word = m->a_dag(rand_vec()) * m->a_dag(rand_vec()) * m->a(rand_vec());
    auto e = m->element(word, 1e-12);
    for (const auto& [g, b] : e.components()) CHECK(g == GroupElement({-1}));
    Matrix word2 = m->a(rand_vec());
    auto e2 = m->element(word2, 1e-12);
    CHECK(e2.support_size() == 1);
    CHECK(e2.has(GroupElement({1})));
  }
  SUBCASE("mode count is capped") {
    CHECK_THROWS_AS(CarModel::standard(13), Error);
  }
}

TEST_CASE("wiener-hopf isometries on N^2") {
  WienerHopfModel m(2);

  SUBCASE("W*_p W_p = 1 exactly") {
    ShiftBlock w = m.isometry({2, 1});
    ShiftBlock prod = mul(adjoint(w), w);
    CHECK(prod.shift() == std::vector<std::int64_t>({0, 0}));
    for (std::int64_t x = 0; x < 5; ++x)
      for (std::int64_t y = 0; y < 5; ++y)
        CHECK(prod.coef_at({x, y}) == cplx(1.0));
  }
  SUBCASE("W_p W*_p is the diagonal indicator of p + N^k") {
    ShiftBlock w = m.isometry({1, 2});
    ShiftBlock proj = mul(w, adjoint(w));
    CHECK(proj.shift() == std::vector<std::int64_t>({0, 0}));
    for (std::int64_t x = 0; x < 4; ++x)
      for (std::int64_t y = 0; y < 4; ++y)
        CHECK(proj.coef_at({x, y}) == cplx((x >= 1 && y >= 2) ? 1.0 : 0.0));
  }
  SUBCASE("least upper bounds are componentwise maxima") {
    CHECK(WienerHopfModel::lub({1, 0}, {0, 1}) ==
          std::vector<std::int64_t>({1, 1}));
  }
  SUBCASE("Nica covariance: W*_p W_q = W_{lub-p} W*_{lub-q}") {
    std::vector<std::int64_t> p{2, 0}, q{1, 3};
    auto lub = WienerHopfModel::lub(p, q);
    ShiftBlock lhs = mul(adjoint(m.isometry(p)), m.isometry(q));
    ShiftBlock rhs = mul(m.isometry({lub[0] - p[0], lub[1] - p[1]}),
                         adjoint(m.isometry({lub[0] - q[0], lub[1] - q[1]})));
    CHECK(block_dist(lhs, rhs) == doctest::Approx(0.0));
  }
  SUBCASE("degree-zero words are diagonal on the window") {
    auto word = graded_mul(m.W({1, 0}), graded_mul(m.W_dag({1, 1}), m.W({0, 1})));
    for (const auto& [g, b] : word.components()) CHECK(g == GroupElement({0, 0}));
    Matrix mm = m.compress(word, m.window_for(5));
    for (int i = 0; i < mm.rows(); ++i)
      for (int j = 0; j < mm.cols(); ++j)
        if (i != j) CHECK(std::abs(mm(i, j)) == doctest::Approx(0.0));
  }
}

TEST_CASE("compression of a product matches on interior columns") {
  std::mt19937_64 rng(41);
  auto check_model = [&](const ModelRep& m, int radius) {
    auto x = m.random_element(rng, 3, radius);
    auto y = m.random_element(rng, 3, radius);
    const Window w = m.default_window();
    Matrix direct = m.compress(graded_mul(x, y), w);
    Matrix split = m.compress(x, w) * m.compress(y, w);
    auto interior = m.interior_mask(w, 2 * radius);
    double dev = 0;
    for (Eigen::Index j = 0; j < direct.cols(); ++j) {
      if (!interior[j]) continue;
      dev = std::max(dev, (direct.col(j) - split.col(j)).cwiseAbs().maxCoeff());
    }
    CHECK(dev <= 1e-12);
  };
  check_model(LatticeShiftModel(1, 16), 2);
  check_model(BunceDeddensModel({2, 4}, 1, 24), 2);
  check_model(WienerHopfModel(2, 8), 1);
  check_model(UhfModel({4, 8}, 0), 2);
  check_model(*CarModel::standard(3), 1);
}

TEST_CASE("cyclic regular representation") {
  CyclicModel m(4);
  auto d1 = m.delta(1);
  auto d3 = m.delta(3);
  auto p = graded_mul(d1, d3);
  CHECK(p.support_size() == 1);
  CHECK(p.has(GroupElement({0})));
  CHECK(l1_norm(p) == doctest::Approx(1.0));
}
