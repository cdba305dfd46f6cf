#include "gradealg/fiber.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gradealg {

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() <= 128) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.adjoint() * m,
                                           Eigen::EigenvaluesOnly);
  double l = es.eigenvalues().size() ? es.eigenvalues().maxCoeff() : 0.0;
  return std::sqrt(std::max(0.0, l));
}

const Matrix& Block::matrix() const {
  if (!is_matrix()) fail(ErrorKind::Structure, "expected a matrix block");
  return std::get<Matrix>(v_);
}

const ShiftBlock& Block::shift() const {
  if (!is_shift()) fail(ErrorKind::Structure, "expected a shift block");
  return std::get<ShiftBlock>(v_);
}

Block FiberSystem::mul(const GroupElement& g, const Block& a,
                       const GroupElement& h, const Block& b) const {
  check_shape(g, a);
  check_shape(h, b);
  return raw_mul(a, b);
}

Block FiberSystem::adjoint(const GroupElement& g, const Block& a) const {
  check_shape(g, a);
  return raw_adjoint(a);
}

Block FiberSystem::add(const GroupElement& g, const Block& a, const Block& b) const {
  check_shape(g, a);
  check_shape(g, b);
  return raw_add(a, b);
}

MatrixFiberSystem::MatrixFiberSystem(Group g, std::vector<GroupElement> charges)
    : FiberSystem(std::move(g)), charges_(std::move(charges)) {
  if (charges_.empty()) fail(ErrorKind::Config, "matrix fiber system needs charges");
  for (const auto& c : charges_)
    if (!group().valid(c)) fail(ErrorKind::Config, "invalid charge element");
}

GroupElement MatrixFiberSystem::entry_degree(int i, int j) const {
  return group().mul(charges_[i], group().inv(charges_[j]));
}

Block MatrixFiberSystem::raw_mul(const Block& a, const Block& b) const {
  return Block(Matrix(a.matrix() * b.matrix()));
}

Block MatrixFiberSystem::raw_adjoint(const Block& a) const {
  return Block(Matrix(a.matrix().adjoint()));
}

Block MatrixFiberSystem::raw_add(const Block& a, const Block& b) const {
  return Block(Matrix(a.matrix() + b.matrix()));
}

Block MatrixFiberSystem::scale(cplx c, const Block& a) const {
  return Block(Matrix(c * a.matrix()));
}

double MatrixFiberSystem::norm(const GroupElement&, const Block& a) const {
  return operator_norm(a.matrix());
}

double MatrixFiberSystem::quick_norm(const Block& a) const {
  return a.matrix().norm();  // Frobenius dominates the operator norm
}

Block MatrixFiberSystem::unit() const {
  return Block(Matrix(Matrix::Identity(dim(), dim())));
}

void MatrixFiberSystem::check_shape(const GroupElement& g, const Block& a) const {
  const Matrix& m = a.matrix();
  if (m.rows() != dim() || m.cols() != dim())
    fail(ErrorKind::Structure, "matrix block dimension mismatch");
  constexpr double kTol = 1e-12;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const GroupElement gc = group().canon(g);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > kTol * scale && !(entry_degree(i, j) == gc))
        fail(ErrorKind::Structure,
             "matrix block has entries outside the degree-" + group().to_string(gc) +
                 " mask");
}

Matrix MatrixFiberSystem::degree_mask(const Matrix& m, const GroupElement& g) const {
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  const GroupElement gc = group().canon(g);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (entry_degree(i, j) == gc) out(i, j) = m(i, j);
  return out;
}

ShiftFiberSystem::ShiftFiberSystem(Group g, bool halfspace)
    : FiberSystem(std::move(g)), halfspace_(halfspace) {
  if (group().kind() != Group::Kind::LatticeMod || group().finite())
    fail(ErrorKind::Config, "shift fiber system needs a free lattice group");
}

Block ShiftFiberSystem::raw_mul(const Block& a, const Block& b) const {
  return Block(gradealg::mul(a.shift(), b.shift()));
}

Block ShiftFiberSystem::raw_adjoint(const Block& a) const {
  return Block(gradealg::adjoint(a.shift()));
}

Block ShiftFiberSystem::raw_add(const Block& a, const Block& b) const {
  return Block(gradealg::add(a.shift(), b.shift()));
}

Block ShiftFiberSystem::scale(cplx c, const Block& a) const {
  return Block(gradealg::scale(c, a.shift()));
}

double ShiftFiberSystem::norm(const GroupElement&, const Block& a) const {
  return a.shift().sup_norm();  // exact for weighted shifts
}

double ShiftFiberSystem::quick_norm(const Block& a) const {
  return a.shift().sup_norm();
}

Block ShiftFiberSystem::unit() const {
  std::vector<std::int64_t> zero(group().rank(), 0);
  return halfspace_
             ? Block(ShiftBlock::halfspace(zero, TailCoef::constant(group().rank(), 1.0)))
             : Block(ShiftBlock::lattice(zero, 1.0));
}

void ShiftFiberSystem::check_shape(const GroupElement& g, const Block& a) const {
  const ShiftBlock& s = a.shift();
  if (s.rank() != group().rank() || s.on_halfspace() != halfspace_)
    fail(ErrorKind::Structure, "shift block base mismatch");
  if (s.shift() != g.v)
    fail(ErrorKind::Structure, "shift block degree mismatch");
}

}  // namespace gradealg
