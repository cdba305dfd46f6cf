#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "gradealg/fiber.hpp"
#include "gradealg/weight.hpp"

namespace gradealg {

// Zero blocks are pruned below this fiber-norm tolerance so supports stay
// finite under arithmetic.
inline constexpr double kPruneTol = 1e-14;

// Finitely supported degree-indexed family of fiber blocks. Immutable
// value semantics; all arithmetic goes through free functions. The
// canonical summation order of convolutions is lexicographic in the left
// factor's degree (std::map iteration), so results are deterministic.
class GradedElement {
 public:
  explicit GradedElement(std::shared_ptr<const FiberSystem> fs);

  static GradedElement unit(std::shared_ptr<const FiberSystem> fs);
  static GradedElement delta(std::shared_ptr<const FiberSystem> fs,
                             const GroupElement& g, Block b);

  const std::shared_ptr<const FiberSystem>& fibers() const { return fs_; }
  const Group& group() const { return fs_->group(); }
  const std::map<GroupElement, Block>& components() const { return comp_; }
  bool has(const GroupElement& g) const { return comp_.count(group().canon(g)) > 0; }
  const Block* component(const GroupElement& g) const;
  std::size_t support_size() const { return comp_.size(); }

  GradedElement& set(const GroupElement& g, Block b);           // checked + pruned
  GradedElement& accumulate(const GroupElement& g, const Block& b);  // += at degree

 private:
  std::shared_ptr<const FiberSystem> fs_;
  std::map<GroupElement, Block> comp_;
};

// 2-cocycle with values in the unit circle.
class Cocycle {
 public:
  static Cocycle trivial();
  // omega(x, y) = exp(2 pi i x^T theta y) on lattice groups
  static Cocycle bicharacter(Eigen::MatrixXd theta);
  static Cocycle callable(std::function<cplx(const GroupElement&, const GroupElement&)> f);

  cplx operator()(const Group& g, const GroupElement& a, const GroupElement& b) const;

  // Cocycle identity and normalization on sampled triples; Validation
  // error on failure (tolerance 1e-12).
  void validate(const Group& g, const std::vector<GroupElement>& sample) const;

 private:
  std::function<cplx(const Group&, const GroupElement&, const GroupElement&)> f_;
};

GradedElement graded_mul(const GradedElement& a, const GradedElement& b);
GradedElement twisted_mul(const GradedElement& a, const GradedElement& b,
                          const Cocycle& omega);
GradedElement graded_adjoint(const GradedElement& a);
GradedElement graded_add(const GradedElement& a, const GradedElement& b);
GradedElement graded_sub(const GradedElement& a, const GradedElement& b);
GradedElement graded_scale(cplx c, const GradedElement& a);
GradedElement graded_pow(const GradedElement& a, int n,
                         std::size_t support_cap = 200000);

double l1_norm(const GradedElement& a);
double l1_norm(const GradedElement& a, const Weight& nu);
// Degree -> fiber norm of the component.
std::map<GroupElement, double> component_norms(const GradedElement& a);
// l1 distance; elements must share the fiber system.
double l1_dist(const GradedElement& a, const GradedElement& b);

// An l1(G; B)-valued function: the codomain of the embedding T. Raw
// block arithmetic, no degree bookkeeping.
struct L1BlockFunction {
  std::shared_ptr<const FiberSystem> fs;
  std::map<GroupElement, Block> values;
};

// T(Phi)(g) = pi_g(Phi_g). Blocks are stored post-embedding, so this
// repackages components; the value is in the independent convolution /
// adjoint / norm routines below, which must agree with the graded ones.
L1BlockFunction embed_T(const GradedElement& a);
L1BlockFunction l1gb_convolve(const L1BlockFunction& a, const L1BlockFunction& b);
L1BlockFunction l1gb_adjoint(const L1BlockFunction& a);
double l1gb_norm(const L1BlockFunction& a);
double l1gb_dist(const L1BlockFunction& a, const L1BlockFunction& b);

}  // namespace gradealg
