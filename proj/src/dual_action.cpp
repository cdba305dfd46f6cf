#include "gradealg/dual_action.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace gradealg {

namespace {

void require_abelian_lattice(const Group& g) {
  if (g.kind() != Group::Kind::LatticeMod)
    fail(ErrorKind::Domain, "dual-action machinery needs an abelian lattice_mod group");
}

cplx unit_phase(double turns) {
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

// chi_m(x) for the grid point m.
cplx character_value(const Group& g, const std::vector<int>& sizes,
                     const std::vector<int>& m, const GroupElement& x) {
  double turns = 0;
  for (int i = 0; i < g.rank(); ++i)
    turns += static_cast<double>(m[i]) * static_cast<double>(x.v[i]) /
             static_cast<double>(sizes[i]);
  return unit_phase(turns);
}

bool next_grid_point(std::vector<int>& m, const std::vector<int>& sizes) {
  for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
    if (++m[i] < sizes[i]) return true;
    m[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<int> quadrature_sizes(const Group& g, int M) {
  require_abelian_lattice(g);
  if (M < 1) fail(ErrorKind::Config, "quadrature resolution must be >= 1");
  std::vector<int> sizes(g.rank());
  for (int i = 0; i < g.rank(); ++i)
    sizes[i] = g.moduli()[i] > 0 ? static_cast<int>(g.moduli()[i]) : M;
  return sizes;
}

std::vector<std::int64_t> degree_bandwidth(const Matrix& t,
                                           const std::vector<GroupElement>& charges,
                                           const Group& g, double tol) {
  require_abelian_lattice(g);
  std::vector<std::int64_t> bw(g.rank(), 0);
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j) {
      if (std::abs(t(i, j)) <= tol) continue;
      for (int c = 0; c < g.rank(); ++c)
        if (g.moduli()[c] == 0)
          bw[c] = std::max<std::int64_t>(bw[c],
              std::llabs(charges[i].v[c] - charges[j].v[c]));
    }
  return bw;
}

Matrix character_conjugate(const Matrix& t, const std::vector<GroupElement>& charges,
                           const Group& g, const std::vector<int>& sizes,
                           const std::vector<int>& m) {
  Eigen::VectorXcd u(t.rows());
  for (int b = 0; b < t.rows(); ++b)
    u(b) = character_value(g, sizes, m, charges[b]);
  return u.asDiagonal() * t * u.conjugate().asDiagonal();
}

namespace {

int default_resolution(const Matrix& t, const std::vector<GroupElement>& charges,
                       const Group& g) {
  auto bw = degree_bandwidth(t, charges, g);
  std::int64_t b = 0;
  for (auto x : bw) b = std::max(b, x);
  return static_cast<int>(2 * b + 1);
}

}  // namespace

SpectralComponent spectral_project(const Matrix& t,
                                   const std::vector<GroupElement>& charges,
                                   const Group& g, const GroupElement& degree,
                                   std::optional<int> M) {
  require_abelian_lattice(g);
  if (static_cast<int>(charges.size()) != t.rows() || t.rows() != t.cols())
    fail(ErrorKind::Structure, "charge metadata does not match the matrix");
  const int res = M.value_or(default_resolution(t, charges, g));
  const auto sizes = quadrature_sizes(g, res);
  const auto bw = degree_bandwidth(t, charges, g);

  SpectralComponent out;
  out.quadrature = sizes;
  for (int c = 0; c < g.rank(); ++c)
    if (g.moduli()[c] == 0 && sizes[c] <= bw[c]) out.aliasing_warning = true;

  const GroupElement deg = g.canon(degree);
  Matrix acc = Matrix::Zero(t.rows(), t.cols());
  std::vector<int> m(g.rank(), 0);
  std::size_t count = 0;
  do {
    acc += std::conj(character_value(g, sizes, m, deg)) *
           character_conjugate(t, charges, g, sizes, m);
    ++count;
  } while (next_grid_point(m, sizes));
  out.component = acc / static_cast<double>(count);
  return out;
}

GradedElement spectral_project(const GradedElement& a, const GroupElement& degree) {
  GradedElement out(a.fibers());
  if (const Block* b = a.component(degree)) out.set(degree, *b);
  return out;
}

MatrixDecomposition decompose(const Matrix& t,
                              const std::vector<GroupElement>& charges,
                              const Group& g,
                              const std::vector<GroupElement>& degree_window,
                              std::optional<int> M) {
  require_abelian_lattice(g);
  const int res = M.value_or(default_resolution(t, charges, g));
  const auto sizes = quadrature_sizes(g, res);
  const auto bw = degree_bandwidth(t, charges, g);

  MatrixDecomposition out;
  out.quadrature = sizes;
  for (int c = 0; c < g.rank(); ++c)
    if (g.moduli()[c] == 0 && sizes[c] <= bw[c]) out.aliasing_warning = true;

  for (const auto& d : degree_window)
    out.components.emplace(g.canon(d), Matrix::Zero(t.rows(), t.cols()));

  std::vector<int> m(g.rank(), 0);
  std::size_t count = 0;
  do {
    Matrix conj_t = character_conjugate(t, charges, g, sizes, m);
    for (auto& [d, acc] : out.components)
      acc += std::conj(character_value(g, sizes, m, d)) * conj_t;
    ++count;
  } while (next_grid_point(m, sizes));

  Matrix sum = Matrix::Zero(t.rows(), t.cols());
  for (auto& [d, acc] : out.components) {
    acc /= static_cast<double>(count);
    sum += acc;
  }
  out.residual = operator_norm(t - sum);
  return out;
}

std::vector<GroupElement> realized_degrees(const std::vector<GroupElement>& charges,
                                           const Group& g) {
  std::set<GroupElement> degs;
  for (const auto& a : charges)
    for (const auto& b : charges) degs.insert(g.mul(a, g.inv(b)));
  return {degs.begin(), degs.end()};
}

// ---- quotient machinery ----------------------------------------------------

QuotientMap::QuotientMap(const Group& g, const SubgroupSpec& spec) : group_(g) {
  require_abelian_lattice(g);
  const int k = g.rank();
  for (const auto& n : spec.elements)
    if (!g.valid(g.canon(n)))
      fail(ErrorKind::Validation, "subgroup element invalid for the group");

  if (!spec.as_generators) {
    // explicit subgroup: must contain e and be closed under the operations
    std::set<GroupElement> set;
    for (const auto& n : spec.elements) set.insert(g.canon(n));
    if (!set.count(g.id()))
      fail(ErrorKind::Validation, "subgroup list must contain the identity");
    for (const auto& a : set) {
      if (!set.count(g.inv(a)))
        fail(ErrorKind::Validation, "subgroup list is not closed under inverses");
      for (const auto& b : set)
        if (!set.count(g.mul(a, b)))
          fail(ErrorKind::Validation, "subgroup list is not closed under products");
    }
  }

  // Columns of the integer matrix spanning the preimage lattice in Z^k.
  std::vector<std::vector<std::int64_t>> cols;
  for (const auto& n : spec.elements) cols.push_back(g.canon(n).v);
  for (int i = 0; i < k; ++i)
    if (g.moduli()[i] > 0) {
      std::vector<std::int64_t> e(k, 0);
      e[i] = g.moduli()[i];
      cols.push_back(std::move(e));
    }

  // Diagonalize by unimodular row/column operations, tracking the row
  // transform U: then Z^k / span(cols) = sum_i Z/d_i via x -> (U x) mod d.
  const int mcols = static_cast<int>(cols.size());
  std::vector<std::vector<std::int64_t>> a(k, std::vector<std::int64_t>(mcols, 0));
  for (int j = 0; j < mcols; ++j)
    for (int i = 0; i < k; ++i) a[i][j] = cols[j][i];
  u_.assign(k, std::vector<std::int64_t>(k, 0));
  for (int i = 0; i < k; ++i) u_[i][i] = 1;

  auto row_sub = [&](int dst, int src, std::int64_t q) {
    for (int j = 0; j < mcols; ++j) a[dst][j] -= q * a[src][j];
    for (int j = 0; j < k; ++j) u_[dst][j] -= q * u_[src][j];
  };

  int t = 0;
  while (t < k && t < mcols) {
    int pi = -1, pj = -1;
    for (int i = t; i < k; ++i)
      for (int j = t; j < mcols; ++j)
        if (a[i][j] != 0 &&
            (pi < 0 || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    std::swap(u_[t], u_[pi]);
    for (int i = 0; i < k; ++i) std::swap(a[i][t], a[i][pj]);
    bool clean = true;
    for (int i = t + 1; i < k; ++i)
      if (a[i][t] != 0) {
        row_sub(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
    for (int j = t + 1; j < mcols; ++j)
      if (a[t][j] != 0) {
        std::int64_t q = a[t][j] / a[t][t];
        for (int i = 0; i < k; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
    if (clean) ++t;
  }

  d_.assign(k, 0);
  for (int i = 0; i < k && i < mcols; ++i) d_[i] = std::llabs(a[i][i]);

  quotient_ = Group::lattice_mod(d_);
}

GroupElement QuotientMap::project(const GroupElement& x) const {
  const GroupElement cx = group_.canon(x);
  const int k = group_.rank();
  GroupElement y;
  y.v.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < k; ++j) s += u_[i][j] * cx.v[j];
    y.v[i] = s;
  }
  return quotient_.canon(y);
}

CoarseElement coarsen(const GradedElement& a, const QuotientMap& q) {
  if (!(a.group() == q.group()))
    fail(ErrorKind::Structure, "element group does not match the quotient map");
  CoarseElement out;
  out.fs = a.fibers();
  out.quotient = q.quotient();
  for (const auto& [g, b] : a.components()) {
    GroupElement coset = q.project(g);
    auto it = out.parts.find(coset);
    if (it == out.parts.end()) {
      GradedElement part(a.fibers());
      part.set(g, b);
      out.parts.emplace(std::move(coset), std::move(part));
    } else {
      it->second.accumulate(g, b);
    }
  }
  return out;
}

CoarseElement coarse_mul(const CoarseElement& a, const CoarseElement& b) {
  CoarseElement out;
  out.fs = a.fs;
  out.quotient = a.quotient;
  for (const auto& [ca, pa] : a.parts)
    for (const auto& [cb, pb] : b.parts) {
      GroupElement coset = out.quotient.mul(ca, cb);
      GradedElement prod = graded_mul(pa, pb);
      auto it = out.parts.find(coset);
      if (it == out.parts.end())
        out.parts.emplace(std::move(coset), std::move(prod));
      else
        it->second = graded_add(it->second, prod);
    }
  // coset sums may cancel entirely; drop empty parts
  for (auto it = out.parts.begin(); it != out.parts.end();)
    it = it->second.components().empty() ? out.parts.erase(it) : std::next(it);
  return out;
}

double coarse_dist(const CoarseElement& a, const CoarseElement& b) {
  double s = 0;
  for (const auto& [c, p] : a.parts) {
    auto it = b.parts.find(c);
    if (it == b.parts.end())
      s += l1_norm(p);
    else
      s += l1_dist(p, it->second);
  }
  for (const auto& [c, p] : b.parts)
    if (!a.parts.count(c)) s += l1_norm(p);
  return s;
}

double coarse_l1_norm(const CoarseElement& a, const ModelRep& rep, const Window& w) {
  double s = 0;
  for (const auto& [c, p] : a.parts) s += operator_norm(rep.compress(p, w));
  return s;
}

}  // namespace gradealg
