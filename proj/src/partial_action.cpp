#include "gradealg/partial_action.hpp"

#include "gradealg/graded.hpp"

#include <algorithm>
#include <sstream>

namespace gradealg {

namespace {

void require_shape(const FinDimAlgebra& a, const AlgElement& x) {
  if (static_cast<int>(x.blocks.size()) != a.blocks())
    fail(ErrorKind::Structure, "algebra element block count mismatch");
  for (int b = 0; b < a.blocks(); ++b)
    if (x.blocks[b].rows() != a.block_sizes[b] ||
        x.blocks[b].cols() != a.block_sizes[b])
      fail(ErrorKind::Structure, "algebra element block size mismatch");
}

// Ad-equality of unitaries: U V^* must be a scalar multiple of the identity.
bool ad_equal(const Matrix& u, const Matrix& v, double tol) {
  if (u.rows() != v.rows()) return false;
  Matrix w = u * v.adjoint();
  cplx mean = w.trace() / static_cast<double>(w.rows());
  return (w - mean * Matrix::Identity(w.rows(), w.cols())).norm() <= tol &&
         std::abs(std::abs(mean) - 1.0) <= tol;
}

}  // namespace

AlgElement AlgElement::zero(const FinDimAlgebra& a) {
  AlgElement x;
  for (int s : a.block_sizes) x.blocks.push_back(Matrix::Zero(s, s));
  return x;
}

AlgElement AlgElement::unit(const FinDimAlgebra& a) {
  AlgElement x;
  for (int s : a.block_sizes) x.blocks.push_back(Matrix::Identity(s, s));
  return x;
}

AlgElement AlgElement::diagonal(const FinDimAlgebra& a, const Eigen::VectorXcd& values) {
  if (values.size() != a.blocks())
    fail(ErrorKind::Structure, "diagonal needs one value per block");
  AlgElement x = AlgElement::zero(a);
  for (int b = 0; b < a.blocks(); ++b) {
    if (a.block_sizes[b] != 1)
      fail(ErrorKind::Structure, "diagonal element needs size-1 blocks");
    x.blocks[b](0, 0) = values(b);
  }
  return x;
}

AlgElement alg_mul(const AlgElement& x, const AlgElement& y) {
  AlgElement z;
  z.blocks.reserve(x.blocks.size());
  for (std::size_t b = 0; b < x.blocks.size(); ++b)
    z.blocks.push_back(x.blocks[b] * y.blocks[b]);
  return z;
}

AlgElement alg_add(const AlgElement& x, const AlgElement& y) {
  AlgElement z;
  z.blocks.reserve(x.blocks.size());
  for (std::size_t b = 0; b < x.blocks.size(); ++b)
    z.blocks.push_back(x.blocks[b] + y.blocks[b]);
  return z;
}

AlgElement alg_scale(cplx c, const AlgElement& x) {
  AlgElement z;
  z.blocks.reserve(x.blocks.size());
  for (const auto& m : x.blocks) z.blocks.push_back(c * m);
  return z;
}

AlgElement alg_adjoint(const AlgElement& x) {
  AlgElement z;
  z.blocks.reserve(x.blocks.size());
  for (const auto& m : x.blocks) z.blocks.push_back(m.adjoint());
  return z;
}

double alg_norm(const AlgElement& x) {
  double s = 0;
  for (const auto& m : x.blocks) s = std::max(s, operator_norm(m));
  return s;
}

double alg_quick_norm(const AlgElement& x) {
  double s = 0;
  for (const auto& m : x.blocks) s = std::max(s, m.norm());
  return s;
}

double alg_dist(const AlgElement& x, const AlgElement& y) {
  double s = 0;
  for (std::size_t b = 0; b < x.blocks.size(); ++b)
    s = std::max(s, (x.blocks[b] - y.blocks[b]).norm());
  return s;
}

PartialSystem::PartialSystem(FinDimAlgebra algebra, Group group)
    : algebra_(std::move(algebra)), group_(std::move(group)) {
  if (algebra_.blocks() == 0) fail(ErrorKind::Config, "empty coefficient algebra");
  // A_e = A and theta_e = id are forced.
  Ideal full;
  PartialIso id;
  for (int b = 0; b < algebra_.blocks(); ++b) {
    full.blocks.insert(b);
    id.block_map[b] = b;
    id.unitary[b] = Matrix::Identity(algebra_.block_sizes[b], algebra_.block_sizes[b]);
  }
  data_.emplace(group_.id(), std::make_pair(std::move(full), std::move(id)));
}

PartialSystem& PartialSystem::set(const GroupElement& g, Ideal ideal, PartialIso theta) {
  const GroupElement gc = group_.canon(g);
  if (gc == group_.id())
    fail(ErrorKind::Config, "the identity data is fixed by the axioms");
  for (int b : ideal.blocks)
    if (b < 0 || b >= algebra_.blocks())
      fail(ErrorKind::Config, "ideal block index out of range");
  for (const auto& [src, dst] : theta.block_map) {
    if (src < 0 || src >= algebra_.blocks() || dst < 0 || dst >= algebra_.blocks())
      fail(ErrorKind::Config, "theta block index out of range");
    if (algebra_.block_sizes[src] != algebra_.block_sizes[dst])
      fail(ErrorKind::Config, "theta must map blocks of equal size");
    auto it = theta.unitary.find(src);
    if (it == theta.unitary.end())
      fail(ErrorKind::Config, "theta block lacks its unitary");
    if (it->second.rows() != algebra_.block_sizes[src] ||
        it->second.cols() != algebra_.block_sizes[src])
      fail(ErrorKind::Config, "theta unitary size mismatch");
  }
  data_.insert_or_assign(gc, std::make_pair(std::move(ideal), std::move(theta)));
  return *this;
}

bool PartialSystem::has(const GroupElement& g) const {
  return data_.count(group_.canon(g)) > 0;
}

const Ideal& PartialSystem::ideal(const GroupElement& g) const {
  auto it = data_.find(group_.canon(g));
  if (it == data_.end())
    fail(ErrorKind::Domain, "group element outside the stored window: " +
                                group_.to_string(g));
  return it->second.first;
}

const PartialIso& PartialSystem::theta(const GroupElement& g) const {
  auto it = data_.find(group_.canon(g));
  if (it == data_.end())
    fail(ErrorKind::Domain, "group element outside the stored window: " +
                                group_.to_string(g));
  return it->second.second;
}

std::vector<GroupElement> PartialSystem::window() const {
  std::vector<GroupElement> out;
  for (const auto& [g, _] : data_) out.push_back(g);
  return out;
}

AlgElement PartialSystem::apply_theta(const GroupElement& g, const AlgElement& a,
                                      double tol) const {
  require_shape(algebra_, a);
  const PartialIso& th = theta(g);
  const Ideal& dom = ideal(group_.inv(g));
  AlgElement out = AlgElement::zero(algebra_);
  for (int b = 0; b < algebra_.blocks(); ++b) {
    if (dom.blocks.count(b)) continue;
    if (a.blocks[b].norm() > tol)
      fail(ErrorKind::Consistency,
           "element leaves the domain ideal of theta_" + group_.to_string(g));
  }
  for (const auto& [src, dst] : th.block_map) {
    const Matrix& u = th.unitary.at(src);
    out.blocks[dst] += u * a.blocks[src] * u.adjoint();
  }
  return out;
}

double PartialSystem::ideal_defect(const GroupElement& g, const AlgElement& a) const {
  require_shape(algebra_, a);
  const Ideal& idl = ideal(g);
  double s = 0;
  for (int b = 0; b < algebra_.blocks(); ++b)
    if (!idl.blocks.count(b)) s = std::max(s, a.blocks[b].norm());
  return s;
}

PartialSystem PartialSystem::global(FinDimAlgebra algebra, Group group,
                                    const std::map<GroupElement, PartialIso>& thetas) {
  PartialSystem sys(std::move(algebra), std::move(group));
  Ideal full;
  for (int b = 0; b < sys.algebra().blocks(); ++b) full.blocks.insert(b);
  for (const auto& [g, th] : thetas) {
    if (sys.group().canon(g) == sys.group().id()) continue;
    sys.set(g, full, th);
  }
  return sys;
}

PartialActionReport validate_partial_action(const PartialSystem& sys, double tol) {
  PartialActionReport rep;
  const Group& grp = sys.group();
  auto window = sys.window();

  auto add = [&](const std::string& law, const GroupElement& g,
                 const GroupElement& h, const std::string& detail) {
    rep.violations.push_back({law, g, h, detail});
  };

  // (i) A_e = A, theta_e = id (forced by construction; verify anyway)
  const Ideal& ie = sys.ideal(grp.id());
  if (static_cast<int>(ie.blocks.size()) != sys.algebra().blocks())
    add("identity", grp.id(), grp.id(), "A_e is not the whole algebra");

  for (const auto& g : window) {
    const PartialIso& th = sys.theta(g);
    const Ideal& dom = sys.ideal(grp.inv(g));
    const Ideal& img = sys.ideal(g);
    // domain of theta_g must be exactly A_{g^-1}, image exactly A_g
    std::set<int> srcs, dsts;
    for (const auto& [s, d] : th.block_map) {
      srcs.insert(s);
      dsts.insert(d);
    }
    if (!sys.has(grp.inv(g))) {
      add("inverse", g, grp.inv(g), "window is not symmetric");
      continue;
    }
    if (srcs != dom.blocks)
      add("domain", g, grp.inv(g), "theta domain differs from A_{g^-1}");
    if (dsts != img.blocks)
      add("codomain", g, g, "theta image differs from A_g");

    // (iv) theta_{g^-1} = theta_g^-1
    const PartialIso& thi = sys.theta(grp.inv(g));
    for (const auto& [s, d] : th.block_map) {
      auto it = thi.block_map.find(d);
      if (it == thi.block_map.end() || it->second != s) {
        add("inverse", g, grp.inv(g), "block maps are not mutually inverse");
        continue;
      }
      const Matrix& u = th.unitary.at(s);
      const Matrix& v = thi.unitary.at(d);
      if (!ad_equal(v, u.adjoint(), tol))
        add("inverse", g, grp.inv(g), "unitaries are not mutually inverse");
    }
  }

  // (ii) + (iii) on pairs with gh inside the window
  for (const auto& g : window)
    for (const auto& h : window) {
      const GroupElement gh = grp.mul(g, h);
      if (!sys.has(gh)) continue;
      ++rep.pairs_checked;
      const PartialIso& th_g = sys.theta(g);
      const PartialIso& th_h = sys.theta(h);
      const PartialIso& th_gh = sys.theta(gh);
      const Ideal& a_gi = sys.ideal(grp.inv(g));
      const Ideal& a_h = sys.ideal(h);
      const Ideal& a_gh = sys.ideal(gh);
      // (ii): theta_g(A_{g^-1} cap A_h) subset A_{gh}
      for (int b : a_gi.blocks) {
        if (!a_h.blocks.count(b)) continue;
        auto it = th_g.block_map.find(b);
        if (it == th_g.block_map.end() || !a_gh.blocks.count(it->second))
          add("codomain", g, h, "theta_g(A_{g^-1} cap A_h) leaves A_{gh}");
      }
      // (iii): theta_g(theta_h(a)) = theta_{gh}(a) on
      // A_{h^-1} cap A_{(gh)^-1}
      const Ideal& a_hi = sys.ideal(grp.inv(h));
      const Ideal& a_ghi = sys.ideal(grp.inv(gh));
      for (int b : a_hi.blocks) {
        if (!a_ghi.blocks.count(b)) continue;
        auto ih = th_h.block_map.find(b);
        auto igh = th_gh.block_map.find(b);
        if (ih == th_h.block_map.end() || igh == th_gh.block_map.end()) {
          add("composition", g, h, "composite undefined on a shared block");
          continue;
        }
        auto ig = th_g.block_map.find(ih->second);
        if (ig == th_g.block_map.end() || ig->second != igh->second) {
          std::ostringstream os;
          os << "block " << b << " maps differ";
          add("composition", g, h, os.str());
          continue;
        }
        Matrix composed = th_g.unitary.at(ih->second) * th_h.unitary.at(b);
        if (!ad_equal(composed, th_gh.unitary.at(b), tol))
          add("composition", g, h, "unitary paths differ");
      }
    }
  return rep;
}

// ---- topological actions ----------------------------------------------------

TopPartialAction TopPartialAction::partial_shift(int last, int radius) {
  if (last < 1 || radius < 1) fail(ErrorKind::Config, "partial shift needs size >= 1");
  TopPartialAction act;
  act.points = last + 1;
  act.boundary.assign(act.points, false);
  act.group = Group::integers();
  for (int n = -radius; n <= radius; ++n) {
    PartialBijection b;
    for (int x = std::max(0, -n); x + n <= last && x <= last; ++x) b.fwd[x] = x + n;
    act.theta[GroupElement({n})] = std::move(b);
  }
  for (int x = 0; x <= last; ++x) act.orbit.push_back(x);
  return act;
}

TopPartialAction TopPartialAction::cycle(std::int64_t q) {
  if (q < 1) fail(ErrorKind::Config, "cycle needs q >= 1");
  TopPartialAction act;
  act.points = static_cast<int>(q);
  act.boundary.assign(act.points, false);
  act.group = Group::cyclic(q);
  for (std::int64_t n = 0; n < q; ++n) {
    PartialBijection b;
    for (int x = 0; x < act.points; ++x)
      b.fwd[x] = static_cast<int>((x + n) % q);
    act.theta[GroupElement({n})] = std::move(b);
  }
  for (int x = 0; x < act.points; ++x) act.orbit.push_back(x);
  return act;
}

PartialActionReport validate_top_action(const TopPartialAction& act) {
  PartialActionReport rep;
  const Group& grp = act.group;
  auto add = [&](const std::string& law, const GroupElement& g,
                 const GroupElement& h, const std::string& detail) {
    rep.violations.push_back({law, g, h, detail});
  };

  auto ite = act.theta.find(grp.id());
  if (ite == act.theta.end() ||
      static_cast<int>(ite->second.fwd.size()) != act.points) {
    add("identity", grp.id(), grp.id(), "Theta_e is not defined on all of X");
  } else {
    for (const auto& [x, y] : ite->second.fwd)
      if (x != y) add("identity", grp.id(), grp.id(), "Theta_e is not the identity");
  }

  for (const auto& [g, bij] : act.theta) {
    // injectivity
    std::set<int> seen;
    for (const auto& [x, y] : bij.fwd) {
      if (x < 0 || x >= act.points || y < 0 || y >= act.points)
        add("domain", g, g, "point id out of range");
      if (!seen.insert(y).second) add("domain", g, g, "partial map not injective");
    }
    // inverse map present and inverse
    auto iti = act.theta.find(grp.canon(grp.inv(g)));
    if (iti == act.theta.end()) {
      add("inverse", g, grp.inv(g), "window is not symmetric");
      continue;
    }
    for (const auto& [x, y] : bij.fwd) {
      auto back = iti->second.fwd.find(y);
      if (back == iti->second.fwd.end() || back->second != x)
        add("inverse", g, grp.inv(g), "Theta_{g^-1} is not the inverse map");
    }
  }

  // Theta_{gh} extends Theta_g o Theta_h
  for (const auto& [g, bg] : act.theta)
    for (const auto& [h, bh] : act.theta) {
      const GroupElement gh = grp.canon(grp.mul(g, h));
      auto it = act.theta.find(gh);
      if (it == act.theta.end()) continue;
      ++rep.pairs_checked;
      for (const auto& [x, y] : bh.fwd) {
        auto next = bg.fwd.find(y);
        if (next == bg.fwd.end()) continue;  // outside composite domain
        auto direct = it->second.fwd.find(x);
        if (direct == it->second.fwd.end() || direct->second != next->second)
          add("composition", g, h, "Theta_{gh} does not extend the composite");
      }
    }

  // trivial isotropy on the orbit
  for (const auto& [g, bij] : act.theta) {
    if (grp.canon(g) == grp.id()) continue;
    for (int y : act.orbit) {
      auto it = bij.fwd.find(y);
      if (it != bij.fwd.end() && it->second == y)
        add("isotropy", g, g, "orbit point fixed by a non-identity element");
    }
  }
  return rep;
}

OrbitTable::OrbitTable(const TopPartialAction& act) {
  const Group& grp = act.group;
  for (const auto& [g, bij] : act.theta) {
    if (grp.canon(g) == grp.id()) continue;
    for (const auto& [z, y] : bij.fwd) {
      auto [it, inserted] = g_.emplace(std::make_pair(z, y), g);
      if (!inserted && !(it->second == g))
        fail(ErrorKind::Validation,
             "orbit transition is not unique (nontrivial isotropy)");
    }
  }
  for (const auto& [x, _] : act.theta.at(grp.id()).fwd)
    g_.emplace(std::make_pair(x, x), grp.id());
}

std::optional<GroupElement> OrbitTable::transition(int z, int y) const {
  auto it = g_.find(std::make_pair(z, y));
  if (it == g_.end()) return std::nullopt;
  return it->second;
}

PartialSystem induce_function_system(const TopPartialAction& act) {
  PartialActionReport rep = validate_top_action(act);
  if (!rep.pass())
    fail(ErrorKind::Validation, "topological action fails its axioms: " +
                                    rep.violations.front().detail);
  PartialSystem sys(FinDimAlgebra::functions(act.points), act.group);
  for (const auto& [g, bij] : act.theta) {
    if (act.group.canon(g) == act.group.id()) continue;
    Ideal img;  // A_g = C(X_g), X_g = image of Theta_g
    PartialIso th;
    for (const auto& [x, y] : bij.fwd) {
      img.blocks.insert(y);
      // pullback along Theta_{g^-1}: the value at x moves to the point y
      th.block_map[x] = y;
      th.unitary[x] = Matrix::Identity(1, 1);
    }
    sys.set(g, std::move(img), std::move(th));
  }
  return sys;
}

// ---- l1 elements -------------------------------------------------------------

L1ThetaElement::L1ThetaElement(std::shared_ptr<const PartialSystem> sys)
    : sys_(std::move(sys)) {
  if (!sys_) fail(ErrorKind::Config, "null partial system");
}

L1ThetaElement& L1ThetaElement::set(const GroupElement& g, AlgElement a, double tol) {
  require_shape(sys_->algebra(), a);
  const GroupElement gc = sys_->group().canon(g);
  if (sys_->ideal_defect(gc, a) > tol)
    fail(ErrorKind::Validation,
         "component at " + sys_->group().to_string(gc) + " is not in A_g");
  if (alg_quick_norm(a) <= kPruneTol)
    vals_.erase(gc);
  else
    vals_.insert_or_assign(gc, std::move(a));
  return *this;
}

L1ThetaElement& L1ThetaElement::accumulate(const GroupElement& g, const AlgElement& a,
                                           double tol) {
  const GroupElement gc = sys_->group().canon(g);
  auto it = vals_.find(gc);
  if (it == vals_.end()) return set(gc, a, tol);
  AlgElement sum = alg_add(it->second, a);
  if (sys_->ideal_defect(gc, sum) > tol)
    fail(ErrorKind::Consistency,
         "accumulated component leaves its ideal at " + sys_->group().to_string(gc));
  if (alg_quick_norm(sum) <= kPruneTol)
    vals_.erase(it);
  else
    it->second = std::move(sum);
  return *this;
}

const AlgElement* L1ThetaElement::value(const GroupElement& g) const {
  auto it = vals_.find(sys_->group().canon(g));
  return it == vals_.end() ? nullptr : &it->second;
}

L1ThetaElement L1ThetaElement::unit(std::shared_ptr<const PartialSystem> sys) {
  L1ThetaElement e(sys);
  e.set(sys->group().id(), AlgElement::unit(sys->algebra()));
  return e;
}

L1ThetaElement theta_conv(const L1ThetaElement& x, const L1ThetaElement& y) {
  if (x.system().get() != y.system().get())
    fail(ErrorKind::Structure, "operands belong to different partial systems");
  const PartialSystem& sys = *x.system();
  const Group& grp = sys.group();
  L1ThetaElement out(x.system());
  for (const auto& [h, xh] : x.values()) {
    AlgElement pulled = sys.apply_theta(grp.inv(h), xh);
    for (const auto& [k, yk] : y.values()) {
      AlgElement term = sys.apply_theta(h, alg_mul(pulled, yk));
      out.accumulate(grp.mul(h, k), term, 1e-10);
    }
  }
  return out;
}

L1ThetaElement theta_adjoint(const L1ThetaElement& x) {
  const PartialSystem& sys = *x.system();
  const Group& grp = sys.group();
  L1ThetaElement out(x.system());
  for (const auto& [g, xg] : x.values()) {
    const GroupElement gi = grp.inv(g);
    out.set(gi, alg_adjoint(sys.apply_theta(gi, xg)), 1e-10);
  }
  return out;
}

L1ThetaElement theta_add(const L1ThetaElement& x, const L1ThetaElement& y) {
  L1ThetaElement out = x;
  for (const auto& [g, v] : y.values()) out.accumulate(g, v, 1e-10);
  return out;
}

L1ThetaElement theta_scale(cplx c, const L1ThetaElement& x) {
  L1ThetaElement out(x.system());
  for (const auto& [g, v] : x.values()) out.set(g, alg_scale(c, v), 1e-10);
  return out;
}

double l1_theta_norm(const L1ThetaElement& x) {
  double s = 0;
  for (const auto& [g, v] : x.values()) s += alg_norm(v);
  return s;
}

double theta_dist(const L1ThetaElement& x, const L1ThetaElement& y) {
  double s = 0;
  for (const auto& [g, v] : x.values()) {
    const AlgElement* w = y.value(g);
    s += w ? alg_dist(v, *w) : alg_quick_norm(v);
  }
  for (const auto& [g, w] : y.values())
    if (!x.value(g)) s += alg_quick_norm(w);
  return s;
}

L1ThetaElement global_crossed_conv(const L1ThetaElement& x, const L1ThetaElement& y) {
  const PartialSystem& sys = *x.system();
  const Group& grp = sys.group();
  L1ThetaElement out(x.system());
  for (const auto& [h, xh] : x.values())
    for (const auto& [k, yk] : y.values())
      out.accumulate(grp.mul(h, k), alg_mul(xh, sys.apply_theta(h, yk)), 1e-10);
  return out;
}

OrbitRepResult orbit_rep(const L1ThetaElement& x, const TopPartialAction& act,
                         const std::vector<int>& y_window) {
  for (int p : y_window)
    if (std::find(act.orbit.begin(), act.orbit.end(), p) == act.orbit.end())
      fail(ErrorKind::Domain, "window point is not on the distinguished orbit");
  if (static_cast<int>(x.system()->algebra().blocks()) != act.points)
    fail(ErrorKind::Structure, "element is not over the induced function system");

  OrbitTable table(act);
  const int n = static_cast<int>(y_window.size());
  OrbitRepResult out;
  out.window_points = y_window;
  out.matrix = Matrix::Zero(n, n);
  for (int p : y_window)
    if (act.boundary[p]) out.touches_boundary = true;

  for (int iy = 0; iy < n; ++iy)
    for (int iz = 0; iz < n; ++iz) {
      const int y = y_window[iy];
      const int z = y_window[iz];
      auto g = table.transition(z, y);
      if (!g) continue;
      const AlgElement* v = x.value(*g);
      if (!v) continue;
      out.matrix(iy, iz) = v->blocks[y](0, 0);
    }
  return out;
}

}  // namespace gradealg
