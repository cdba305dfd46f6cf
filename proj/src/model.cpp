#include "gradealg/model.hpp"

#include <algorithm>

namespace gradealg {

Window Window::box(std::vector<std::int64_t> hi) {
  Window w;
  w.lo.assign(hi.size(), 0);
  w.hi = std::move(hi);
  for (auto h : w.hi)
    if (h <= 0) fail(ErrorKind::Config, "window extent must be positive");
  return w;
}

Window Window::centered(int rank, std::int64_t half) {
  if (half < 0) fail(ErrorKind::Config, "window half-width must be >= 0");
  Window w;
  w.lo.assign(rank, -half);
  w.hi.assign(rank, half + 1);
  return w;
}

std::size_t Window::dim() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] <= lo[i]) fail(ErrorKind::Config, "empty window");
    n *= static_cast<std::size_t>(hi[i] - lo[i]);
  }
  return n;
}

bool Window::contains(const std::vector<std::int64_t>& x) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (x[i] < lo[i] || x[i] >= hi[i]) return false;
  return true;
}

std::size_t Window::index(const std::vector<std::int64_t>& x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < lo.size(); ++i)
    idx = idx * static_cast<std::size_t>(hi[i] - lo[i]) +
          static_cast<std::size_t>(x[i] - lo[i]);
  return idx;
}

std::vector<std::int64_t> Window::point(std::size_t idx) const {
  std::vector<std::int64_t> x(lo.size());
  for (int i = static_cast<int>(lo.size()) - 1; i >= 0; --i) {
    const std::size_t e = static_cast<std::size_t>(hi[i] - lo[i]);
    x[i] = lo[i] + static_cast<std::int64_t>(idx % e);
    idx /= e;
  }
  return x;
}

Matrix compress_block(const ModelRep& rep, const GroupElement& g, const Block& b,
                      const Window& w) {
  GradedElement e(rep.fibers());
  e.set(g, b);
  return rep.compress(e, w);
}

std::map<GroupElement, Matrix> split_by_degree(const Matrix& m,
                                               const std::vector<GroupElement>& charges,
                                               const Group& g, double tol) {
  if (static_cast<int>(charges.size()) != m.rows() || m.rows() != m.cols())
    fail(ErrorKind::Structure, "charge metadata does not match matrix size");
  std::map<GroupElement, Matrix> out;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j)) <= tol) continue;
      GroupElement d = g.mul(charges[i], g.inv(charges[j]));
      auto it = out.find(d);
      if (it == out.end())
        it = out.emplace(std::move(d), Matrix(Matrix::Zero(m.rows(), m.cols()))).first;
      it->second(i, j) = m(i, j);
    }
  return out;
}

Matrix mask_degree(const Matrix& m, const std::vector<GroupElement>& charges,
                   const Group& g, const GroupElement& degree) {
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  const GroupElement d = g.canon(degree);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (g.mul(charges[i], g.inv(charges[j])) == d) out(i, j) = m(i, j);
  return out;
}

ShiftModelRep::ShiftModelRep(std::shared_ptr<const ShiftFiberSystem> fs,
                             Window default_window)
    : fs_(std::move(fs)), default_(std::move(default_window)) {
  if (default_.rank() != fs_->group().rank())
    fail(ErrorKind::Config, "window rank does not match model rank");
}

Window ShiftModelRep::window_for(std::int64_t n) const {
  if (n < 1) fail(ErrorKind::Config, "window size must be >= 1");
  const int k = fs_->group().rank();
  if (fs_->halfspace()) return Window::box(std::vector<std::int64_t>(k, n));
  return Window::centered(k, n / 2);
}

std::vector<GroupElement> ShiftModelRep::charges(const Window& w) const {
  std::vector<GroupElement> out;
  out.reserve(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) out.push_back(GroupElement(w.point(i)));
  return out;
}

Matrix ShiftModelRep::compress(const GradedElement& a, const Window& w) const {
  if (a.fibers().get() != fs_.get())
    fail(ErrorKind::Structure, "element belongs to a different fiber system");
  const std::size_t n = w.dim();
  Matrix m = Matrix::Zero(n, n);
  for (const auto& [g, b] : a.components()) {
    const ShiftBlock& s = b.shift();
    for (std::size_t j = 0; j < n; ++j) {
      auto [y, c] = s.apply_basis(w.point(j));
      if (c != cplx(0.0) && w.contains(y))
        m(static_cast<Eigen::Index>(w.index(y)), static_cast<Eigen::Index>(j)) += c;
    }
  }
  return m;
}

std::vector<bool> ShiftModelRep::interior_mask(const Window& w,
                                               std::int64_t radius) const {
  std::vector<bool> mask(w.dim());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    auto x = w.point(i);
    bool ok = true;
    for (int c = 0; c < w.rank(); ++c) {
      // The origin edge of a halfspace window is genuine, not truncation.
      if (!fs_->halfspace() && x[c] - w.lo[c] < radius) ok = false;
      if (w.hi[c] - 1 - x[c] < radius) ok = false;
    }
    mask[i] = ok;
  }
  return mask;
}

LatticeShiftModel::LatticeShiftModel(int rank, std::int64_t default_half)
    : ShiftModelRep(std::make_shared<ShiftFiberSystem>(Group::lattice(rank), false),
                    Window::centered(rank, default_half)) {}

std::string LatticeShiftModel::name() const {
  return "lattice_shift_" + std::to_string(fs_->group().rank());
}

GradedElement LatticeShiftModel::delta(const GroupElement& g, cplx c) const {
  return GradedElement::delta(fs_, g, Block(ShiftBlock::lattice(g.v, c)));
}

GradedElement LatticeShiftModel::random_element(std::mt19937_64& rng, int support,
                                                int degree_radius) const {
  std::uniform_int_distribution<std::int64_t> deg(-degree_radius, degree_radius);
  std::normal_distribution<double> coef(0.0, 1.0);
  GradedElement e(fs_);
  for (int s = 0; s < support; ++s) {
    std::vector<std::int64_t> d(fs_->group().rank());
    for (auto& di : d) di = deg(rng);
    e.accumulate(GroupElement(d),
                 Block(ShiftBlock::lattice(d, cplx(coef(rng), coef(rng)))));
  }
  return e;
}

MatrixModelRep::MatrixModelRep(std::shared_ptr<const MatrixFiberSystem> fs)
    : fs_(std::move(fs)) {}

Window MatrixModelRep::default_window() const {
  return Window::box({static_cast<std::int64_t>(fs_->dim())});
}

std::vector<GroupElement> MatrixModelRep::charges(const Window& w) const {
  if (w.dim() != static_cast<std::size_t>(fs_->dim()))
    fail(ErrorKind::Structure, "matrix model window must cover the full space");
  return fs_->charges();
}

Matrix MatrixModelRep::compress(const GradedElement& a, const Window& w) const {
  if (a.fibers().get() != fs_.get())
    fail(ErrorKind::Structure, "element belongs to a different fiber system");
  if (w.dim() != static_cast<std::size_t>(fs_->dim()))
    fail(ErrorKind::Structure, "matrix model window must cover the full space");
  Matrix m = Matrix::Zero(fs_->dim(), fs_->dim());
  for (const auto& [g, b] : a.components()) m += b.matrix();
  return m;
}

std::vector<bool> MatrixModelRep::interior_mask(const Window& w, std::int64_t) const {
  return std::vector<bool>(w.dim(), true);
}

GradedElement MatrixModelRep::element_from_matrix(const Matrix& m, double tol) const {
  GradedElement e(fs_);
  for (auto& [g, part] : split_by_degree(m, fs_->charges(), fs_->group(), tol))
    e.accumulate(g, Block(std::move(part)));
  return e;
}

GradedElement MatrixModelRep::random_element(std::mt19937_64& rng, int support,
                                             int degree_radius) const {
  // Collect the degrees realized by the charge vector, biased to small
  // canonical length.
  std::vector<GroupElement> degs;
  const auto& ch = fs_->charges();
  const Group& g = fs_->group();
  for (std::size_t i = 0; i < ch.size(); ++i)
    for (std::size_t j = 0; j < ch.size(); ++j) {
      GroupElement d = g.mul(ch[i], g.inv(ch[j]));
      if (g.canonical_length(d) <= degree_radius) degs.push_back(std::move(d));
    }
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  if (degs.empty()) fail(ErrorKind::Config, "no admissible degrees");
  std::uniform_int_distribution<std::size_t> pick(0, degs.size() - 1);
  std::normal_distribution<double> coef(0.0, 1.0);
  GradedElement e(fs_);
  for (int s = 0; s < support; ++s) {
    const GroupElement& d = degs[pick(rng)];
    Matrix m = Matrix::Zero(fs_->dim(), fs_->dim());
    for (int i = 0; i < fs_->dim(); ++i)
      for (int j = 0; j < fs_->dim(); ++j)
        if (fs_->entry_degree(i, j) == d) m(i, j) = cplx(coef(rng), coef(rng));
    e.accumulate(d, Block(std::move(m)));
  }
  return e;
}

}  // namespace gradealg
