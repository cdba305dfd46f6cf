#include "gradealg/models.hpp"

#include <algorithm>

namespace gradealg {

namespace {

void check_chain(const std::vector<std::int64_t>& chain, int stage,
                 const char* what) {
  if (chain.empty()) fail(ErrorKind::Config, std::string(what) + " chain is empty");
  if (chain[0] < 1) fail(ErrorKind::Config, std::string(what) + " chain must start >= 1");
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i] % chain[i - 1] != 0 || chain[i] / chain[i - 1] < 2)
      fail(ErrorKind::Config,
           std::string(what) + " chain needs q[i+1] = r q[i] with r >= 2");
  }
  if (stage < 0 || stage >= static_cast<int>(chain.size()))
    fail(ErrorKind::Config, std::string(what) + " stage out of range");
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

BunceDeddensModel::BunceDeddensModel(std::vector<std::int64_t> q_list, int stage,
                                     std::int64_t default_window)
    : ShiftModelRep(std::make_shared<ShiftFiberSystem>(Group::integers(), true),
                    Window::box({default_window})),
      q_list_(std::move(q_list)),
      stage_(stage) {
  check_chain(q_list_, stage_, "bunce-deddens");
  q_ = q_list_[stage_];
}

std::string BunceDeddensModel::name() const {
  return "bunce_deddens_q" + std::to_string(q_);
}

std::vector<cplx> BunceDeddensModel::check_period(const std::vector<cplx>& a) const {
  if (a.empty() || q_ % static_cast<std::int64_t>(a.size()) != 0)
    fail(ErrorKind::Config, "coefficient period must divide the stage period");
  return a;
}

ShiftBlock BunceDeddensModel::shift_op() const {
  return ShiftBlock::halfspace({1}, TailCoef::constant(1, 1.0));
}

ShiftBlock BunceDeddensModel::mult_op(const std::vector<cplx>& a) const {
  return ShiftBlock::halfspace({0}, TailCoef::periodic(check_period(a)));
}

ShiftBlock BunceDeddensModel::weighted_shift(const std::vector<cplx>& a) const {
  return ShiftBlock::halfspace({1}, TailCoef::periodic(check_period(a)));
}

ShiftBlock BunceDeddensModel::range_proj() const {
  return gradealg::mul(shift_op(), gradealg::adjoint(shift_op()));
}

GradedElement BunceDeddensModel::S(const std::vector<cplx>& a) const {
  return GradedElement::delta(fs_, GroupElement({1}), Block(weighted_shift(a)));
}

GradedElement BunceDeddensModel::S() const {
  return GradedElement::delta(fs_, GroupElement({1}), Block(shift_op()));
}

GradedElement BunceDeddensModel::M(const std::vector<cplx>& a) const {
  return GradedElement::delta(fs_, GroupElement({0}), Block(mult_op(a)));
}

std::vector<cplx> BunceDeddensModel::rotate_back(const std::vector<cplx>& a) {
  std::vector<cplx> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n)
    out[n] = a[(n + a.size() - 1) % a.size()];
  return out;
}

GradedElement BunceDeddensModel::random_element(std::mt19937_64& rng, int support,
                                                int degree_radius) const {
  std::uniform_int_distribution<std::int64_t> deg(-degree_radius, degree_radius);
  std::uniform_int_distribution<int> trans(0, 2);
  std::normal_distribution<double> coef(0.0, 1.0);
  GradedElement e(fs_);
  for (int s = 0; s < support; ++s) {
    const std::int64_t d = deg(rng);
    const int t = trans(rng);
    std::vector<cplx> head(t), body(q_);
    for (auto& c : head) c = cplx(coef(rng), coef(rng));
    for (auto& c : body) c = cplx(coef(rng), coef(rng));
    TailCoef tc = TailCoef::periodic(body, t, head);
    e.accumulate(GroupElement({d}), Block(ShiftBlock::halfspace({d}, tc)));
  }
  return e;
}

UhfModel::UhfModel(std::vector<std::int64_t> p_list, int stage)
    : MatrixModelRep(nullptr), p_list_(std::move(p_list)), stage_(stage) {
  check_chain(p_list_, stage_, "uhf");
  p_ = p_list_[stage_];
  std::vector<GroupElement> charges;
  charges.reserve(p_);
  for (std::int64_t i = 0; i < p_; ++i) charges.push_back(GroupElement({i}));
  fs_ = std::make_shared<MatrixFiberSystem>(Group::integers(), std::move(charges));
}

std::string UhfModel::name() const { return "uhf_p" + std::to_string(p_); }

Matrix UhfModel::diag_ones(std::int64_t k) const {
  Matrix m = Matrix::Zero(p_, p_);
  for (std::int64_t i = 0; i < p_; ++i) {
    const std::int64_t j = i - k;
    if (j >= 0 && j < p_) m(i, j) = 1.0;
  }
  return m;
}

GradedElement UhfModel::diag_element(std::int64_t k, cplx c) const {
  return GradedElement::delta(fs_, GroupElement({k}), Block(Matrix(c * diag_ones(k))));
}

Matrix UhfModel::gauge(const Matrix& m, cplx z) const {
  Matrix out = m;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::int64_t k = i - j;
      cplx f = 1.0;
      for (std::int64_t t = 0; t < std::llabs(k); ++t) f *= (k > 0 ? z : std::conj(z));
      out(i, j) *= f;
    }
  return out;
}

std::shared_ptr<UhfModel> UhfModel::next_stage() const {
  if (stage_ + 1 >= static_cast<int>(p_list_.size()))
    fail(ErrorKind::Config, "no next stage in the chain");
  return std::make_shared<UhfModel>(p_list_, stage_ + 1);
}

Matrix UhfModel::embed_matrix(const Matrix& m) const {
  if (stage_ + 1 >= static_cast<int>(p_list_.size()))
    fail(ErrorKind::Config, "no next stage in the chain");
  const std::int64_t pn = p_list_[stage_ + 1];
  const std::int64_t r = pn / p_;
  Matrix out = Matrix::Zero(pn, pn);
  for (std::int64_t a = 0; a < r; ++a)
    out.block(a * p_, a * p_, p_, p_) = m;
  return out;
}

Matrix UhfModel::embed_matrix_naive(const Matrix& m) const {
  if (stage_ + 1 >= static_cast<int>(p_list_.size()))
    fail(ErrorKind::Config, "no next stage in the chain");
  const std::int64_t pn = p_list_[stage_ + 1];
  const std::int64_t r = pn / p_;
  Matrix out = Matrix::Zero(pn, pn);
  for (std::int64_t i = 0; i < p_; ++i)
    for (std::int64_t j = 0; j < p_; ++j)
      for (std::int64_t a = 0; a < r; ++a) out(i * r + a, j * r + a) = m(i, j);
  return out;
}

CarModel::CarModel(int d, Group g, std::vector<GroupElement> degrees)
    : MatrixModelRep(nullptr), d_(d), degrees_(std::move(degrees)) {
  if (d_ < 1) fail(ErrorKind::Config, "car model needs d >= 1");
  if (d_ > 12) fail(ErrorKind::Resource, "car model capped at d = 12 (dimension 4096)");
  if (!g.is_abelian()) fail(ErrorKind::Config, "car degrees need an abelian group");
  if (static_cast<int>(degrees_.size()) != d_)
    fail(ErrorKind::Config, "need one degree per mode");
  const std::size_t dim = std::size_t{1} << d_;
  std::vector<GroupElement> charges(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    GroupElement c = g.id();
    for (int j = 0; j < d_; ++j)
      if ((m >> (d_ - 1 - j)) & 1u) c = g.mul(c, g.inv(degrees_[j]));
    charges[m] = c;
  }
  fs_ = std::make_shared<MatrixFiberSystem>(std::move(g), std::move(charges));
}

std::shared_ptr<CarModel> CarModel::standard(int d) {
  std::vector<GroupElement> degs(d, GroupElement({1}));
  return std::make_shared<CarModel>(d, Group::integers(), std::move(degs));
}

std::string CarModel::name() const { return "car_d" + std::to_string(d_); }

const Matrix& CarModel::ann(int j) const {
  if (j < 0 || j >= d_) fail(ErrorKind::Config, "mode index out of range");
  if (ann_cache_.empty()) {
    Matrix A(2, 2), Z(2, 2), I2(2, 2);
    A << 0, 1, 0, 0;
    Z << 1, 0, 0, -1;
    I2 << 1, 0, 0, 1;
    ann_cache_.resize(d_);
    for (int m = 0; m < d_; ++m) {
      Matrix op = Matrix::Identity(1, 1);
      for (int t = 0; t < d_; ++t)
        op = kron(op, t < m ? Z : (t == m ? A : I2));
      ann_cache_[m] = std::move(op);
    }
  }
  return ann_cache_[j];
}

Matrix CarModel::annihilator(int j) const { return ann(j); }

Matrix CarModel::creator(int j) const { return ann(j).adjoint(); }

Matrix CarModel::a(const Eigen::VectorXcd& r) const {
  if (r.size() != d_) fail(ErrorKind::Config, "vector dimension mismatch");
  const std::size_t dim = std::size_t{1} << d_;
  Matrix out = Matrix::Zero(dim, dim);
  for (int j = 0; j < d_; ++j) out += r(j) * ann(j);
  return out;
}

Matrix CarModel::a_dag(const Eigen::VectorXcd& r) const {
  return a(r).adjoint();
}

GradedElement CarModel::element(const Matrix& m, double tol) const {
  return element_from_matrix(m, tol);
}

WienerHopfModel::WienerHopfModel(int rank, std::int64_t default_extent)
    : ShiftModelRep(std::make_shared<ShiftFiberSystem>(Group::lattice(rank), true),
                    Window::box(std::vector<std::int64_t>(rank, default_extent))) {}

std::string WienerHopfModel::name() const {
  return "wiener_hopf_" + std::to_string(fs_->group().rank());
}

ShiftBlock WienerHopfModel::isometry(const std::vector<std::int64_t>& p) const {
  if (!in_monoid(p) || static_cast<int>(p.size()) != fs_->group().rank())
    fail(ErrorKind::Config, "isometry index must lie in N^k");
  return ShiftBlock::halfspace(p, TailCoef::constant(fs_->group().rank(), 1.0));
}

GradedElement WienerHopfModel::W(const std::vector<std::int64_t>& p) const {
  return GradedElement::delta(fs_, GroupElement(p), Block(isometry(p)));
}

GradedElement WienerHopfModel::W_dag(const std::vector<std::int64_t>& p) const {
  return graded_adjoint(W(p));
}

std::vector<std::int64_t> WienerHopfModel::lub(const std::vector<std::int64_t>& p,
                                               const std::vector<std::int64_t>& q) {
  if (p.size() != q.size()) fail(ErrorKind::Structure, "rank mismatch");
  std::vector<std::int64_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::max(p[i], q[i]);
  return out;
}

bool WienerHopfModel::in_monoid(const std::vector<std::int64_t>& p) {
  return std::all_of(p.begin(), p.end(), [](std::int64_t x) { return x >= 0; });
}

GradedElement WienerHopfModel::random_element(std::mt19937_64& rng, int support,
                                              int degree_radius) const {
  const int k = fs_->group().rank();
  std::uniform_int_distribution<std::int64_t> deg(-degree_radius, degree_radius);
  std::normal_distribution<double> coef(0.0, 1.0);
  GradedElement e(fs_);
  for (int s = 0; s < support; ++s) {
    std::vector<std::int64_t> d(k);
    for (auto& di : d) di = deg(rng);
    // eventually constant per coordinate, as for finite isometry words
    TailCoef tc = TailCoef::from_function(
        std::vector<int>(k, 2), std::vector<int>(k, 1),
        [&](const std::vector<std::int64_t>&) { return cplx(coef(rng), coef(rng)); });
    e.accumulate(GroupElement(d), Block(ShiftBlock::halfspace(d, tc)));
  }
  return e;
}

CyclicModel::CyclicModel(std::int64_t q) : MatrixModelRep(nullptr), q_(q) {
  if (q < 1) fail(ErrorKind::Config, "cyclic order must be >= 1");
  std::vector<GroupElement> charges;
  charges.reserve(q);
  for (std::int64_t i = 0; i < q; ++i) charges.push_back(GroupElement({i}));
  fs_ = std::make_shared<MatrixFiberSystem>(Group::cyclic(q), std::move(charges));
}

std::string CyclicModel::name() const { return "cyclic_q" + std::to_string(q_); }

GradedElement CyclicModel::delta(std::int64_t k, cplx c) const {
  Matrix m = Matrix::Zero(q_, q_);
  for (std::int64_t j = 0; j < q_; ++j) m((j + k % q_ + q_) % q_, j) = c;
  return GradedElement::delta(fs_, GroupElement({((k % q_) + q_) % q_}),
                              Block(std::move(m)));
}

}  // namespace gradealg
