#include "gradealg/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <sstream>

namespace gradealg {

double DecayProfile::total() const {
  double s = 0;
  for (double x : shell_sum) s += x;
  return s;
}

DecayProfile profile_from_norms(const std::map<GroupElement, double>& norms,
                                const Group& g) {
  DecayProfile prof;
  for (const auto& [d, n] : norms) {
    const int shell = static_cast<int>(g.canonical_length(d));
    if (shell >= static_cast<int>(prof.shell_sum.size())) {
      prof.shell_sum.resize(shell + 1, 0.0);
      prof.shell_sup.resize(shell + 1, 0.0);
    }
    prof.shell_sum[shell] += n;
    prof.shell_sup[shell] = std::max(prof.shell_sup[shell], n);
  }
  return prof;
}

SymmetrySample check_symmetric_sample(const GradedElement& a, const ModelRep& rep,
                                      const Window& w) {
  GradedElement positive = graded_mul(graded_adjoint(a), a);
  Matrix m = rep.compress(positive, w);
  SymmetrySample out;
  out.herm_defect = (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (out.herm_defect > 1e-10 * scale)
    fail(ErrorKind::Representation,
         "compression of Phi* Phi is not Hermitian within tolerance");
  Matrix h = 0.5 * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  out.min_eig = es.eigenvalues().minCoeff();
  return out;
}

namespace {

Eigen::SparseMatrix<cplx> to_sparse(const Matrix& m, double drop = 0.0) {
  Eigen::SparseMatrix<cplx> s(m.rows(), m.cols());
  std::vector<Eigen::Triplet<cplx>> trips;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (std::abs(m(i, j)) > drop) trips.emplace_back(i, j, m(i, j));
  s.setFromTriplets(trips.begin(), trips.end());
  return s;
}

double one_norm(const Matrix& m) {
  double best = 0;
  for (int j = 0; j < m.cols(); ++j) best = std::max(best, m.col(j).cwiseAbs().sum());
  return best;
}

}  // namespace

InvertReport invert_graded(const GradedElement& a, const ModelRep& rep,
                           const Window& w) {
  const Matrix m = rep.compress(a, w);
  const auto n = m.rows();
  Eigen::SparseMatrix<cplx> ms = to_sparse(m);
  ms.makeCompressed();
  Eigen::SparseLU<Eigen::SparseMatrix<cplx>> lu;
  lu.compute(ms);
  if (lu.info() != Eigen::Success)
    fail(ErrorKind::Inversion, "window compression is numerically singular");
  Matrix inv = lu.solve(Matrix(Matrix::Identity(n, n)));
  if (lu.info() != Eigen::Success)
    fail(ErrorKind::Inversion, "linear solve failed on the window");

  InvertReport rep_out;
  rep_out.cond_estimate = one_norm(m) * one_norm(inv);

  // support radius of a: interior indices keep this distance from the
  // truncated window edges
  std::int64_t radius = 0;
  for (const auto& [g, _] : a.components())
    radius = std::max<std::int64_t>(
        radius, static_cast<std::int64_t>(a.group().canonical_length(g)));
  rep_out.interior_radius = radius;

  // residual on the interior: rows and columns at distance > radius
  Matrix e = ms * inv - Matrix::Identity(n, n);
  const std::vector<bool> interior = rep.interior_mask(w, radius);
  double res2 = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (interior[i] && interior[j]) res2 += std::norm(e(i, j));
  rep_out.residual_interior = std::sqrt(res2);

  // graded decomposition of the window inverse
  const auto charges = rep.charges(w);
  const Group& grp = a.group();
  const bool shift_model =
      dynamic_cast<const ShiftFiberSystem*>(rep.fibers().get()) != nullptr;
  if (shift_model) {
    // one sweep; each degree mask has at most one entry per column, so the
    // mask's operator norm is its largest entry
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const double v = std::abs(inv(i, j));
        if (v <= 1e-15) continue;
        GroupElement d = grp.mul(charges[i], grp.inv(charges[j]));
        auto [it, inserted] = rep_out.component_norms.emplace(std::move(d), v);
        if (!inserted) it->second = std::max(it->second, v);
      }
  } else {
    for (auto& [d, part] : split_by_degree(inv, charges, grp, 1e-15))
      rep_out.component_norms.emplace(d, operator_norm(part));
  }
  for (const auto& [d, v] : rep_out.component_norms) rep_out.inverse_l1 += v;
  rep_out.profile = profile_from_norms(rep_out.component_norms, grp);
  rep_out.profile.window = static_cast<std::int64_t>(n);
  return rep_out;
}

std::vector<double> radius_profile_l1(const GradedElement& a, int n_max,
                                      const Weight* nu, std::size_t support_cap) {
  if (n_max < 1) fail(ErrorKind::Config, "n_max must be >= 1");
  std::vector<double> out;
  GradedElement p = GradedElement::unit(a.fibers());
  for (int n = 1; n <= n_max; ++n) {
    p = graded_mul(p, a);
    if (p.support_size() > support_cap)
      fail(ErrorKind::Resource, "support growth exceeded cap in radius profile");
    const double norm = nu ? l1_norm(p, *nu) : l1_norm(p);
    out.push_back(std::pow(norm, 1.0 / n));
  }
  return out;
}

std::vector<double> radius_profile_operator(const GradedElement& a,
                                            const ModelRep& rep, const Window& w,
                                            int n_max, std::size_t support_cap) {
  if (n_max < 1) fail(ErrorKind::Config, "n_max must be >= 1");
  std::vector<double> out;
  GradedElement p = GradedElement::unit(a.fibers());
  for (int n = 1; n <= n_max; ++n) {
    p = graded_mul(p, a);
    if (p.support_size() > support_cap)
      fail(ErrorKind::Resource, "support growth exceeded cap in radius profile");
    out.push_back(std::pow(operator_norm(rep.compress(p, w)), 1.0 / n));
  }
  return out;
}

int numeric_rank(const Matrix& m, double tol) {
  Eigen::JacobiSVD<Matrix> svd(m);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

FredholmReport fredholm_probe(const GradedElement& a, const ModelRep& rep,
                              const std::vector<std::int64_t>& window_sizes,
                              double tol, std::int64_t eig_cap) {
  if (window_sizes.size() < 3)
    fail(ErrorKind::Config, "fredholm probe needs at least 3 window sizes");
  for (std::size_t i = 1; i < window_sizes.size(); ++i)
    if (window_sizes[i] <= window_sizes[i - 1])
      fail(ErrorKind::Config, "window sizes must be strictly increasing");

  FredholmReport out;
  out.tol = tol;
  for (std::int64_t size : window_sizes) {
    const Window w = rep.window_for(size);
    const Matrix m = rep.compress(a, w);
    FredholmWindowStat stat;
    stat.size = size;
    if (m.rows() <= 512) {
      Eigen::JacobiSVD<Matrix> svd(m);
      const auto& sv = svd.singularValues();
      stat.sigma_min = sv(sv.size() - 1);
      for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) < tol) ++stat.near_kernel_dim;
    } else {
      Eigen::SelfAdjointEigenSolver<Matrix> es(m.adjoint() * m,
                                               Eigen::EigenvaluesOnly);
      stat.sigma_min = std::sqrt(std::max(0.0, es.eigenvalues().minCoeff()));
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (std::sqrt(std::max(0.0, es.eigenvalues()(i))) < tol)
          ++stat.near_kernel_dim;
    }
    if (m.rows() <= eig_cap) {
      Eigen::ComplexEigenSolver<Matrix> ces(m, false);
      for (Eigen::Index i = 0; i < ces.eigenvalues().size(); ++i)
        stat.eigenvalues.push_back(ces.eigenvalues()(i));
    }
    out.windows.push_back(std::move(stat));
  }
  return out;
}

GradedElement quotient_compress(const GradedElement& a,
                                const std::vector<std::int64_t>& cut) {
  const auto* fs = dynamic_cast<const ShiftFiberSystem*>(a.fibers().get());
  if (!fs || !fs->halfspace())
    fail(ErrorKind::Domain,
         "quotient compression needs a halfspace shift model");
  GradedElement out(a.fibers());
  for (const auto& [g, b] : a.components())
    out.set(g, Block(b.shift().compress_away_box(cut)));
  return out;
}

Matrix quotient_compress_matrix(const Matrix& m, const Window& w,
                                const std::vector<std::int64_t>& cut) {
  Matrix out = m;
  for (std::size_t idx = 0; idx < w.dim(); ++idx) {
    const auto x = w.point(idx);
    bool in_cut = true;
    for (std::size_t c = 0; c < cut.size(); ++c)
      if (x[c] >= cut[c]) in_cut = false;
    if (in_cut) {
      out.row(static_cast<Eigen::Index>(idx)).setZero();
      out.col(static_cast<Eigen::Index>(idx)).setZero();
    }
  }
  return out;
}

}  // namespace gradealg
