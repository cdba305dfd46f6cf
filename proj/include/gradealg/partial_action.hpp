#pragma once

#include <set>

#include "gradealg/fiber.hpp"

namespace gradealg {

// Finite-dimensional coefficient C*-algebra: a direct sum of full matrix
// blocks. Functions on a finite point set are the all-sizes-1 case.
struct FinDimAlgebra {
  std::vector<int> block_sizes;
  int blocks() const { return static_cast<int>(block_sizes.size()); }
  static FinDimAlgebra functions(int points) {
    return FinDimAlgebra{std::vector<int>(points, 1)};
  }
};

struct AlgElement {
  std::vector<Matrix> blocks;  // one per block, zero matrices allowed

  static AlgElement zero(const FinDimAlgebra& a);
  static AlgElement unit(const FinDimAlgebra& a);
  // functions case: one value per point
  static AlgElement diagonal(const FinDimAlgebra& a, const Eigen::VectorXcd& values);
};

AlgElement alg_mul(const AlgElement& x, const AlgElement& y);
AlgElement alg_add(const AlgElement& x, const AlgElement& y);
AlgElement alg_scale(cplx c, const AlgElement& x);
AlgElement alg_adjoint(const AlgElement& x);
double alg_norm(const AlgElement& x);        // C* norm: max block operator norm
double alg_quick_norm(const AlgElement& x);  // Frobenius-type upper bound
double alg_dist(const AlgElement& x, const AlgElement& y);

// Ideal given by its central support: a set of block indices.
struct Ideal {
  std::set<int> blocks;
};

// *-isomorphism between two block-subalgebras: a block bijection with a
// per-block unitary (a at block b maps to U_b a_b U_b^* at block_map[b]).
struct PartialIso {
  std::map<int, int> block_map;
  std::map<int, Matrix> unitary;
};

// Partial C*-dynamical system data over a finite window of group
// elements: per-g ideals A_g and partial isomorphisms
// theta_g : A_{g^-1} -> A_g.
class PartialSystem {
 public:
  PartialSystem(FinDimAlgebra algebra, Group group);

  const FinDimAlgebra& algebra() const { return algebra_; }
  const Group& group() const { return group_; }

  PartialSystem& set(const GroupElement& g, Ideal ideal, PartialIso theta);
  bool has(const GroupElement& g) const;
  const Ideal& ideal(const GroupElement& g) const;
  const PartialIso& theta(const GroupElement& g) const;
  std::vector<GroupElement> window() const;

  // theta_g applied blockwise; blocks outside the domain ideal must be
  // below tol (Consistency error otherwise).
  AlgElement apply_theta(const GroupElement& g, const AlgElement& a,
                         double tol = 1e-10) const;
  // Membership defect of a in A_g: largest norm of a block outside the ideal.
  double ideal_defect(const GroupElement& g, const AlgElement& a) const;

  // Global action: every ideal is the whole algebra; thetas given by
  // unitary conjugations per group element.
  static PartialSystem global(FinDimAlgebra algebra, Group group,
                              const std::map<GroupElement, PartialIso>& thetas);

 private:
  FinDimAlgebra algebra_;
  Group group_;
  std::map<GroupElement, std::pair<Ideal, PartialIso>> data_;
};

struct PartialActionViolation {
  std::string law;  // "identity", "domain", "codomain", "composition", "inverse"
  GroupElement g, h;
  std::string detail;
};

struct PartialActionReport {
  std::vector<PartialActionViolation> violations;
  std::size_t pairs_checked = 0;
  bool pass() const { return violations.empty(); }
};

// Checks the partial-action axioms on all window pairs whose products
// stay in the window.
PartialActionReport validate_partial_action(const PartialSystem& sys,
                                            double tol = 1e-12);

// ---- topological partial actions ------------------------------------------

struct PartialBijection {
  std::map<int, int> fwd;  // domain point -> image point, injective
};

// Partial action of a group on a finite point set (a windowed stand-in
// for a compactification; boundary points are tagged).
struct TopPartialAction {
  int points = 0;
  std::vector<bool> boundary;           // size == points
  Group group = Group::integers();
  std::map<GroupElement, PartialBijection> theta;  // window, contains e
  std::vector<int> orbit;               // distinguished orbit Y (point ids)

  // Z acting by x -> x + n on {0, .., last}; window |n| <= radius.
  static TopPartialAction partial_shift(int last, int radius);
  // full cycle rotation on Z/q points (global action)
  static TopPartialAction cycle(std::int64_t q);
};

PartialActionReport validate_top_action(const TopPartialAction& act);

// Trivial-isotropy transition table on the orbit: g_{zy} with
// Theta_{g_{zy}}(z) = y, for window elements.
class OrbitTable {
 public:
  explicit OrbitTable(const TopPartialAction& act);
  // Validation error if isotropy is nontrivial on the orbit.
  std::optional<GroupElement> transition(int z, int y) const;

 private:
  std::map<std::pair<int, int>, GroupElement> g_;
};

// Functions-on-X system induced by a topological partial action:
// A_g = C(X_g), theta_g(a) = a o Theta_{g^-1}.
PartialSystem induce_function_system(const TopPartialAction& act);

// ---- l1 elements over a partial system -------------------------------------

class L1ThetaElement {
 public:
  explicit L1ThetaElement(std::shared_ptr<const PartialSystem> sys);

  const std::shared_ptr<const PartialSystem>& system() const { return sys_; }
  const std::map<GroupElement, AlgElement>& values() const { return vals_; }
  // Validation error when the value is not in A_g (tolerance 1e-12).
  L1ThetaElement& set(const GroupElement& g, AlgElement a, double tol = 1e-12);
  L1ThetaElement& accumulate(const GroupElement& g, const AlgElement& a,
                             double tol = 1e-12);
  const AlgElement* value(const GroupElement& g) const;

  static L1ThetaElement unit(std::shared_ptr<const PartialSystem> sys);

 private:
  std::shared_ptr<const PartialSystem> sys_;
  std::map<GroupElement, AlgElement> vals_;
};

L1ThetaElement theta_conv(const L1ThetaElement& x, const L1ThetaElement& y);
L1ThetaElement theta_adjoint(const L1ThetaElement& x);
L1ThetaElement theta_add(const L1ThetaElement& x, const L1ThetaElement& y);
L1ThetaElement theta_scale(cplx c, const L1ThetaElement& x);
double l1_theta_norm(const L1ThetaElement& x);
double theta_dist(const L1ThetaElement& x, const L1ThetaElement& y);

// Independent oracle for globally defined actions: the ordinary crossed
// product convolution (Phi * Psi)(g) = sum_h Phi(h) theta_h(Psi(h^-1 g)).
L1ThetaElement global_crossed_conv(const L1ThetaElement& x, const L1ThetaElement& y);

struct OrbitRepResult {
  Matrix matrix;
  std::vector<int> window_points;
  bool touches_boundary = false;  // some window point is boundary-tagged
};

// The orbit representation on l2(Y_window):
// (Pi(Phi) xi)(y) = sum_z Phi(g_{zy}, y) xi(z).
OrbitRepResult orbit_rep(const L1ThetaElement& x, const TopPartialAction& act,
                         const std::vector<int>& y_window);

}  // namespace gradealg
