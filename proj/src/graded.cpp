#include "gradealg/graded.hpp"

#include <cmath>
#include <numbers>

namespace gradealg {

GradedElement::GradedElement(std::shared_ptr<const FiberSystem> fs)
    : fs_(std::move(fs)) {
  if (!fs_) fail(ErrorKind::Config, "null fiber system");
}

GradedElement GradedElement::unit(std::shared_ptr<const FiberSystem> fs) {
  GradedElement e(fs);
  e.set(fs->group().id(), fs->unit());
  return e;
}

GradedElement GradedElement::delta(std::shared_ptr<const FiberSystem> fs,
                                   const GroupElement& g, Block b) {
  GradedElement e(fs);
  e.set(g, std::move(b));
  return e;
}

const Block* GradedElement::component(const GroupElement& g) const {
  auto it = comp_.find(group().canon(g));
  return it == comp_.end() ? nullptr : &it->second;
}

GradedElement& GradedElement::set(const GroupElement& g, Block b) {
  const GroupElement gc = group().canon(g);
  fs_->check_shape(gc, b);
  if (fs_->quick_norm(b) <= kPruneTol)
    comp_.erase(gc);
  else
    comp_.insert_or_assign(gc, std::move(b));
  return *this;
}

GradedElement& GradedElement::accumulate(const GroupElement& g, const Block& b) {
  const GroupElement gc = group().canon(g);
  auto it = comp_.find(gc);
  if (it == comp_.end()) return set(gc, b);
  Block sum = fs_->add(gc, it->second, b);
  if (fs_->quick_norm(sum) <= kPruneTol)
    comp_.erase(it);
  else
    it->second = std::move(sum);
  return *this;
}

namespace {

void require_same_system(const GradedElement& a, const GradedElement& b) {
  if (a.fibers().get() != b.fibers().get())
    fail(ErrorKind::Structure, "operands belong to different fiber systems");
}

GradedElement convolve(const GradedElement& a, const GradedElement& b,
                       const Cocycle* omega) {
  require_same_system(a, b);
  const Group& g = a.group();
  GradedElement out(a.fibers());
  for (const auto& [h, bh] : a.components())
    for (const auto& [k, bk] : b.components()) {
      Block prod = a.fibers()->mul(h, bh, k, bk);
      if (omega) prod = a.fibers()->scale((*omega)(g, h, k), prod);
      out.accumulate(g.mul(h, k), prod);
    }
  return out;
}

}  // namespace

GradedElement graded_mul(const GradedElement& a, const GradedElement& b) {
  return convolve(a, b, nullptr);
}

GradedElement twisted_mul(const GradedElement& a, const GradedElement& b,
                          const Cocycle& omega) {
  return convolve(a, b, &omega);
}

GradedElement graded_adjoint(const GradedElement& a) {
  const Group& g = a.group();
  GradedElement out(a.fibers());
  for (const auto& [h, bh] : a.components())
    out.set(g.inv(h), a.fibers()->adjoint(h, bh));
  return out;
}

GradedElement graded_add(const GradedElement& a, const GradedElement& b) {
  require_same_system(a, b);
  GradedElement out = a;
  for (const auto& [h, bh] : b.components()) out.accumulate(h, bh);
  return out;
}

GradedElement graded_sub(const GradedElement& a, const GradedElement& b) {
  return graded_add(a, graded_scale(-1.0, b));
}

GradedElement graded_scale(cplx c, const GradedElement& a) {
  GradedElement out(a.fibers());
  for (const auto& [h, bh] : a.components()) out.set(h, a.fibers()->scale(c, bh));
  return out;
}

GradedElement graded_pow(const GradedElement& a, int n, std::size_t support_cap) {
  if (n < 0) fail(ErrorKind::Config, "graded_pow needs n >= 0");
  GradedElement out = GradedElement::unit(a.fibers());
  for (int i = 0; i < n; ++i) {
    out = graded_mul(out, a);
    if (out.support_size() > support_cap)
      fail(ErrorKind::Resource, "support growth exceeded cap in graded_pow");
  }
  return out;
}

double l1_norm(const GradedElement& a) {
  double s = 0;
  for (const auto& [g, b] : a.components()) s += a.fibers()->norm(g, b);
  return s;
}

double l1_norm(const GradedElement& a, const Weight& nu) {
  double s = 0;
  for (const auto& [g, b] : a.components())
    s += nu(a.group(), g) * a.fibers()->norm(g, b);
  return s;
}

std::map<GroupElement, double> component_norms(const GradedElement& a) {
  std::map<GroupElement, double> out;
  for (const auto& [g, b] : a.components()) out[g] = a.fibers()->norm(g, b);
  return out;
}

double l1_dist(const GradedElement& a, const GradedElement& b) {
  return l1_norm(graded_sub(a, b));
}

Cocycle Cocycle::trivial() {
  Cocycle c;
  c.f_ = [](const Group&, const GroupElement&, const GroupElement&) {
    return cplx(1.0);
  };
  return c;
}

Cocycle Cocycle::bicharacter(Eigen::MatrixXd theta) {
  Cocycle c;
  c.f_ = [theta = std::move(theta)](const Group& g, const GroupElement& a,
                                    const GroupElement& b) -> cplx {
    if (g.kind() != Group::Kind::LatticeMod)
      fail(ErrorKind::Domain, "bicharacter cocycle needs a lattice group");
    double phase = 0;
    for (int i = 0; i < g.rank(); ++i)
      for (int j = 0; j < g.rank(); ++j)
        phase += theta(i, j) * static_cast<double>(a.v[i]) *
                 static_cast<double>(b.v[j]);
    return std::polar(1.0, 2.0 * std::numbers::pi * phase);
  };
  return c;
}

Cocycle Cocycle::callable(
    std::function<cplx(const GroupElement&, const GroupElement&)> f) {
  Cocycle c;
  c.f_ = [f = std::move(f)](const Group&, const GroupElement& a,
                            const GroupElement& b) { return f(a, b); };
  return c;
}

cplx Cocycle::operator()(const Group& g, const GroupElement& a,
                         const GroupElement& b) const {
  return f_(g, a, b);
}

void Cocycle::validate(const Group& g, const std::vector<GroupElement>& sample) const {
  constexpr double kTol = 1e-12;
  for (const auto& a : sample) {
    if (std::abs(f_(g, a, g.id()) - cplx(1.0)) > kTol ||
        std::abs(f_(g, g.id(), a) - cplx(1.0)) > kTol)
      fail(ErrorKind::Validation, "cocycle is not normalized at the identity");
    if (std::abs(std::abs(f_(g, a, a)) - 1.0) > kTol)
      fail(ErrorKind::Validation, "cocycle values must be unimodular");
  }
  for (const auto& a : sample)
    for (const auto& b : sample)
      for (const auto& c : sample) {
        cplx lhs = f_(g, a, b) * f_(g, g.mul(a, b), c);
        cplx rhs = f_(g, b, c) * f_(g, a, g.mul(b, c));
        if (std::abs(lhs - rhs) > kTol)
          fail(ErrorKind::Validation, "cocycle identity fails on sampled triple");
      }
}

L1BlockFunction embed_T(const GradedElement& a) {
  L1BlockFunction f;
  f.fs = a.fibers();
  f.values = a.components();
  return f;
}

L1BlockFunction l1gb_convolve(const L1BlockFunction& a, const L1BlockFunction& b) {
  if (a.fs.get() != b.fs.get())
    fail(ErrorKind::Structure, "operands belong to different fiber systems");
  const Group& g = a.fs->group();
  L1BlockFunction out;
  out.fs = a.fs;
  for (const auto& [h, bh] : a.values)
    for (const auto& [k, bk] : b.values) {
      Block prod = a.fs->raw_mul(bh, bk);
      GroupElement tgt = g.mul(h, k);
      auto it = out.values.find(tgt);
      if (it == out.values.end())
        out.values.emplace(std::move(tgt), std::move(prod));
      else
        it->second = a.fs->raw_add(it->second, prod);
    }
  for (auto it = out.values.begin(); it != out.values.end();)
    it = a.fs->quick_norm(it->second) <= kPruneTol ? out.values.erase(it)
                                                   : std::next(it);
  return out;
}

L1BlockFunction l1gb_adjoint(const L1BlockFunction& a) {
  const Group& g = a.fs->group();
  L1BlockFunction out;
  out.fs = a.fs;
  for (const auto& [h, bh] : a.values)
    out.values.emplace(g.inv(h), a.fs->raw_adjoint(bh));
  return out;
}

double l1gb_norm(const L1BlockFunction& a) {
  double s = 0;
  for (const auto& [h, bh] : a.values) s += a.fs->norm(h, bh);
  return s;
}

double l1gb_dist(const L1BlockFunction& a, const L1BlockFunction& b) {
  if (a.fs.get() != b.fs.get())
    fail(ErrorKind::Structure, "operands belong to different fiber systems");
  double s = 0;
  for (const auto& [h, bh] : a.values) {
    auto it = b.values.find(h);
    if (it == b.values.end())
      s += a.fs->norm(h, bh);
    else
      s += a.fs->quick_norm(a.fs->raw_add(bh, a.fs->scale(-1.0, it->second)));
  }
  for (const auto& [h, bh] : b.values)
    if (!a.values.count(h)) s += b.fs->norm(h, bh);
  return s;
}

}  // namespace gradealg
