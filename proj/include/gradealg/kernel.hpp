#pragma once

#include "gradealg/graded.hpp"

namespace gradealg {

// Two-index operator-block matrix over a finite window of group elements,
// with the block at (g, h) living in the fiber of degree g h^-1.
class Kernel {
 public:
  Kernel(std::shared_ptr<const FiberSystem> fs, std::vector<GroupElement> window);

  const std::shared_ptr<const FiberSystem>& fibers() const { return fs_; }
  const Group& group() const { return fs_->group(); }
  const std::vector<GroupElement>& window() const { return window_; }
  int window_index(const GroupElement& g) const;  // -1 when absent

  GroupElement pair_degree(int i, int j) const;
  const Block* entry(int i, int j) const;
  Kernel& set(int i, int j, Block b);

  static Kernel identity(std::shared_ptr<const FiberSystem> fs,
                         std::vector<GroupElement> window);

 private:
  std::shared_ptr<const FiberSystem> fs_;
  std::vector<GroupElement> window_;
  std::map<GroupElement, int> index_;
  std::map<std::pair<int, int>, Block> entries_;
};

struct KernelEnvelope {
  std::map<GroupElement, double> kappa;  // minimal dominating envelope
  double norm = 0;                       // sum of the envelope
};

// kappa*(x) = sup { |K(g,h)| : g h^-1 = x } over the window; the norm is
// its l1 sum and realizes the defining infimum over dominating envelopes.
KernelEnvelope kernel_envelope(const Kernel& k);

Kernel kernel_mul(const Kernel& a, const Kernel& b);
Kernel kernel_adjoint(const Kernel& a);
Kernel kernel_sub(const Kernel& a, const Kernel& b);
double kernel_entry_sup_dist(const Kernel& a, const Kernel& b);

struct CovarianceReport {
  bool covariant = true;
  double max_deviation = 0;
  std::optional<std::pair<std::pair<GroupElement, GroupElement>,
                          std::pair<GroupElement, GroupElement>>>
      witness;  // pair of index pairs with equal degree but different blocks
};

CovarianceReport check_covariant(const Kernel& k, double tol = 1e-12);

// Upsilon(Phi)(g, h) = component of Phi at g h^-1.
Kernel upsilon(const GradedElement& a, std::vector<GroupElement> window);
// Inverse on covariant kernels: Phi_g = K(g, e); the window must contain
// the identity. Domain error if the kernel is not covariant.
GradedElement upsilon_inv(const Kernel& k, double tol = 1e-12);

}  // namespace gradealg
