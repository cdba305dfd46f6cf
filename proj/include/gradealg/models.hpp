#pragma once

#include "gradealg/model.hpp"

namespace gradealg {

// Weighted unilateral shifts on l2(N) built from a divisibility chain
// q_0 | q_1 | ... of coefficient periods; generators S, M_a and
// S_a = S M_a with a q_i-periodic. Z-graded by the shift amount.
class BunceDeddensModel : public ShiftModelRep {
 public:
  BunceDeddensModel(std::vector<std::int64_t> q_list, int stage,
                    std::int64_t default_window = 128);

  std::string name() const override;
  std::int64_t period() const { return q_; }
  const std::vector<std::int64_t>& chain() const { return q_list_; }

  // a is one period of a q-periodic sequence; its length must divide q_i.
  ShiftBlock shift_op() const;                        // S
  ShiftBlock mult_op(const std::vector<cplx>& a) const;   // M_a
  ShiftBlock weighted_shift(const std::vector<cplx>& a) const;  // S_a
  ShiftBlock range_proj() const;                      // Q = S S*

  GradedElement S(const std::vector<cplx>& a) const;  // S_a as an element
  GradedElement S() const;
  GradedElement M(const std::vector<cplx>& a) const;

  // a_{n-1} with the wrap-around entry fixed to keep the period.
  static std::vector<cplx> rotate_back(const std::vector<cplx>& a);

  GradedElement random_element(std::mt19937_64& rng, int support,
                               int degree_radius) const override;

 private:
  std::vector<cplx> check_period(const std::vector<cplx>& a) const;
  std::vector<std::int64_t> q_list_;
  int stage_;
  std::int64_t q_;
};

// Full matrix stage of an UHF chain p_0 | p_1 | ..., graded by the
// diagonal index, with the gauge-covariant connecting embedding into the
// next stage.
class UhfModel : public MatrixModelRep {
 public:
  UhfModel(std::vector<std::int64_t> p_list, int stage);

  std::string name() const override;
  std::int64_t dim() const { return p_; }
  const std::vector<std::int64_t>& chain() const { return p_list_; }
  int stage() const { return stage_; }

  // Ones on the k-th diagonal; the degree-k subspace has dimension p - |k|.
  Matrix diag_ones(std::int64_t k) const;
  GradedElement diag_element(std::int64_t k, cplx c = 1.0) const;

  // Gauge action: entry (i, j) scaled by z^(i-j).
  Matrix gauge(const Matrix& m, cplx z) const;

  std::shared_ptr<UhfModel> next_stage() const;
  // Covariant unital embedding into stage+1: r copies of m on the block
  // diagonal, new index a p + i. Preserves the diagonal degree.
  Matrix embed_matrix(const Matrix& m) const;
  // Multiplicity-style embedding (new index i r + a); unital and
  // injective but NOT gauge covariant. Kept for contrast in tests.
  Matrix embed_matrix_naive(const Matrix& m) const;

 private:
  std::vector<std::int64_t> p_list_;
  int stage_;
  std::int64_t p_;
};

// Fermionic creation/annihilation operators on the 2^d-dimensional Fock
// space over C^d, graded by mode degrees g_j in an abelian group (a(e_j)
// has degree g_j). Annihilators are linear in the vector argument; the
// inner product is conjugate-linear in its first slot.
class CarModel : public MatrixModelRep {
 public:
  // degrees empty means Z with every mode of degree 1.
  CarModel(int d, Group g, std::vector<GroupElement> degrees);
  static std::shared_ptr<CarModel> standard(int d);

  std::string name() const override;
  int modes() const { return d_; }
  const std::vector<GroupElement>& mode_degrees() const { return degrees_; }

  Matrix annihilator(int j) const;  // a(e_j)
  Matrix creator(int j) const;      // a*(e_j)
  Matrix a(const Eigen::VectorXcd& r) const;
  Matrix a_dag(const Eigen::VectorXcd& r) const;
  GradedElement element(const Matrix& m, double tol = 1e-13) const;

 private:
  int d_;
  std::vector<GroupElement> degrees_;
  mutable std::vector<Matrix> ann_cache_;
  const Matrix& ann(int j) const;
};

// Regular isometries W_p, p in N^k, on l2(N^k); the quasi-lattice order
// is componentwise with least upper bound the componentwise max.
class WienerHopfModel : public ShiftModelRep {
 public:
  explicit WienerHopfModel(int rank, std::int64_t default_extent = 12);

  std::string name() const override;
  ShiftBlock isometry(const std::vector<std::int64_t>& p) const;  // W_p
  GradedElement W(const std::vector<std::int64_t>& p) const;
  GradedElement W_dag(const std::vector<std::int64_t>& p) const;

  static std::vector<std::int64_t> lub(const std::vector<std::int64_t>& p,
                                       const std::vector<std::int64_t>& q);
  static bool in_monoid(const std::vector<std::int64_t>& p);

  GradedElement random_element(std::mt19937_64& rng, int support,
                               int degree_radius) const override;
};

// Regular representation of a finite cyclic group, graded over Z/q.
class CyclicModel : public MatrixModelRep {
 public:
  explicit CyclicModel(std::int64_t q);
  std::string name() const override;
  GradedElement delta(std::int64_t k, cplx c = 1.0) const;

 private:
  std::int64_t q_;
};

}  // namespace gradealg
