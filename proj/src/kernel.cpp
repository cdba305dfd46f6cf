#include "gradealg/kernel.hpp"

#include <algorithm>

namespace gradealg {

Kernel::Kernel(std::shared_ptr<const FiberSystem> fs,
               std::vector<GroupElement> window)
    : fs_(std::move(fs)), window_(std::move(window)) {
  if (!fs_) fail(ErrorKind::Config, "null fiber system");
  if (window_.empty()) fail(ErrorKind::Config, "kernel window is empty");
  for (auto& g : window_) g = fs_->group().canon(g);
  for (int i = 0; i < static_cast<int>(window_.size()); ++i) {
    if (!index_.emplace(window_[i], i).second)
      fail(ErrorKind::Config, "kernel window has duplicate elements");
  }
}

int Kernel::window_index(const GroupElement& g) const {
  auto it = index_.find(fs_->group().canon(g));
  return it == index_.end() ? -1 : it->second;
}

GroupElement Kernel::pair_degree(int i, int j) const {
  const Group& g = fs_->group();
  return g.mul(window_[i], g.inv(window_[j]));
}

const Block* Kernel::entry(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? nullptr : &it->second;
}

Kernel& Kernel::set(int i, int j, Block b) {
  if (i < 0 || j < 0 || i >= static_cast<int>(window_.size()) ||
      j >= static_cast<int>(window_.size()))
    fail(ErrorKind::Structure, "kernel index out of window");
  fs_->check_shape(pair_degree(i, j), b);
  if (fs_->quick_norm(b) <= kPruneTol)
    entries_.erase({i, j});
  else
    entries_.insert_or_assign({i, j}, std::move(b));
  return *this;
}

Kernel Kernel::identity(std::shared_ptr<const FiberSystem> fs,
                        std::vector<GroupElement> window) {
  Kernel k(fs, std::move(window));
  Block u = fs->unit();
  for (int i = 0; i < static_cast<int>(k.window().size()); ++i) k.set(i, i, u);
  return k;
}

KernelEnvelope kernel_envelope(const Kernel& k) {
  KernelEnvelope env;
  const int n = static_cast<int>(k.window().size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Block* b = k.entry(i, j);
      if (!b) continue;
      const GroupElement x = k.pair_degree(i, j);
      double nb = k.fibers()->norm(x, *b);
      auto [it, inserted] = env.kappa.emplace(x, nb);
      if (!inserted) it->second = std::max(it->second, nb);
    }
  for (const auto& [x, v] : env.kappa) env.norm += v;
  return env;
}

namespace {
void require_same_window(const Kernel& a, const Kernel& b) {
  if (a.fibers().get() != b.fibers().get() || !(a.window() == b.window()))
    fail(ErrorKind::Structure, "kernel windows do not match");
}
}  // namespace

Kernel kernel_mul(const Kernel& a, const Kernel& b) {
  require_same_window(a, b);
  const int n = static_cast<int>(a.window().size());
  Kernel out(a.fibers(), a.window());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Block acc;
      bool any = false;
      for (int k = 0; k < n; ++k) {
        const Block* x = a.entry(i, k);
        const Block* y = b.entry(k, j);
        if (!x || !y) continue;
        Block term = a.fibers()->mul(a.pair_degree(i, k), *x, a.pair_degree(k, j), *y);
        acc = any ? a.fibers()->raw_add(acc, term) : std::move(term);
        any = true;
      }
      if (any) out.set(i, j, std::move(acc));
    }
  return out;
}

Kernel kernel_adjoint(const Kernel& a) {
  const int n = static_cast<int>(a.window().size());
  Kernel out(a.fibers(), a.window());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Block* b = a.entry(j, i);
      if (b) out.set(i, j, a.fibers()->adjoint(a.pair_degree(j, i), *b));
    }
  return out;
}

Kernel kernel_sub(const Kernel& a, const Kernel& b) {
  require_same_window(a, b);
  const int n = static_cast<int>(a.window().size());
  Kernel out(a.fibers(), a.window());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Block* x = a.entry(i, j);
      const Block* y = b.entry(i, j);
      if (x && y)
        out.set(i, j, a.fibers()->raw_add(*x, a.fibers()->scale(-1.0, *y)));
      else if (x)
        out.set(i, j, *x);
      else if (y)
        out.set(i, j, a.fibers()->scale(-1.0, *y));
    }
  return out;
}

double kernel_entry_sup_dist(const Kernel& a, const Kernel& b) {
  Kernel d = kernel_sub(a, b);
  double sup = 0;
  const int n = static_cast<int>(d.window().size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (const Block* e = d.entry(i, j))
        sup = std::max(sup, d.fibers()->quick_norm(*e));
  return sup;
}

CovarianceReport check_covariant(const Kernel& k, double tol) {
  CovarianceReport rep;
  const int n = static_cast<int>(k.window().size());
  // Group entries by degree; covariance means all entries of one degree
  // agree (within the window, right translation moves along these sets).
  std::map<GroupElement, std::pair<int, int>> first;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const GroupElement x = k.pair_degree(i, j);
      const Block* b = k.entry(i, j);
      auto it = first.find(x);
      if (it == first.end()) {
        first.emplace(x, std::make_pair(i, j));
        continue;
      }
      const Block* ref = k.entry(it->second.first, it->second.second);
      double dev = 0;
      if (b && ref)
        dev = k.fibers()->quick_norm(
            k.fibers()->raw_add(*b, k.fibers()->scale(-1.0, *ref)));
      else if (b)
        dev = k.fibers()->quick_norm(*b);
      else if (ref)
        dev = k.fibers()->quick_norm(*ref);
      if (dev > rep.max_deviation) {
        rep.max_deviation = dev;
        rep.witness = {{k.window()[it->second.first], k.window()[it->second.second]},
                       {k.window()[i], k.window()[j]}};
      }
    }
  rep.covariant = rep.max_deviation <= tol;
  return rep;
}

Kernel upsilon(const GradedElement& a, std::vector<GroupElement> window) {
  Kernel k(a.fibers(), std::move(window));
  const int n = static_cast<int>(k.window().size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (const Block* b = a.component(k.pair_degree(i, j))) k.set(i, j, *b);
  return k;
}

GradedElement upsilon_inv(const Kernel& k, double tol) {
  CovarianceReport rep = check_covariant(k, tol);
  if (!rep.covariant)
    fail(ErrorKind::Domain, "upsilon_inv needs a covariant kernel");
  const int e = k.window_index(k.group().id());
  if (e < 0)
    fail(ErrorKind::Domain, "kernel window must contain the identity");
  GradedElement out(k.fibers());
  for (int i = 0; i < static_cast<int>(k.window().size()); ++i)
    if (const Block* b = k.entry(i, e)) out.set(k.pair_degree(i, e), *b);
  return out;
}

}  // namespace gradealg
