#pragma once

#include <Eigen/Dense>
#include <memory>
#include <variant>

#include "gradealg/group.hpp"
#include "gradealg/shift_block.hpp"

namespace gradealg {

using Matrix = Eigen::MatrixXcd;

// Largest singular value (dense; eigensolver route above 128 rows).
double operator_norm(const Matrix& m);

// A fiber block: a dense operator block (matrix models) or an exact
// weighted-shift operator (shift models).
class Block {
 public:
  Block() = default;
  Block(Matrix m) : v_(std::move(m)) {}
  Block(ShiftBlock s) : v_(std::move(s)) {}

  bool is_matrix() const { return std::holds_alternative<Matrix>(v_); }
  bool is_shift() const { return std::holds_alternative<ShiftBlock>(v_); }
  const Matrix& matrix() const;
  const ShiftBlock& shift() const;

 private:
  std::variant<Matrix, ShiftBlock> v_;
};

// Degree-indexed family of fiber spaces with a bilinear product
// F_g x F_h -> F_gh, a conjugate-linear adjoint F_g -> F_{g^-1}, vector
// space operations and a norm oracle. Blocks are stored post-embedding,
// so the raw_* operations are plain operator arithmetic and the degree
// arguments are used for shape checking only.
class FiberSystem {
 public:
  explicit FiberSystem(Group g) : group_(std::move(g)) {}
  virtual ~FiberSystem() = default;

  const Group& group() const { return group_; }

  Block mul(const GroupElement& g, const Block& a, const GroupElement& h,
            const Block& b) const;
  Block adjoint(const GroupElement& g, const Block& a) const;
  Block add(const GroupElement& g, const Block& a, const Block& b) const;

  virtual Block raw_mul(const Block& a, const Block& b) const = 0;
  virtual Block raw_adjoint(const Block& a) const = 0;
  virtual Block raw_add(const Block& a, const Block& b) const = 0;
  virtual Block scale(cplx c, const Block& a) const = 0;

  // Norm oracle (operator norm); models may use exact formulas.
  virtual double norm(const GroupElement& g, const Block& a) const = 0;
  // Cheap upper bound of the norm, used for zero pruning.
  virtual double quick_norm(const Block& a) const = 0;

  virtual Block unit() const = 0;  // identity block at degree e
  virtual void check_shape(const GroupElement& g, const Block& a) const = 0;
  virtual bool has_norm() const { return true; }
  virtual std::string name() const = 0;

 private:
  Group group_;
};

// Fibers inside a fixed matrix algebra, graded by a charge vector on the
// basis: the degree of entry (i, j) is c(i) c(j)^-1. Covers the UHF
// stages, the CAR Fock representation and regular representations of
// finite groups.
class MatrixFiberSystem : public FiberSystem {
 public:
  MatrixFiberSystem(Group g, std::vector<GroupElement> charges);

  int dim() const { return static_cast<int>(charges_.size()); }
  const std::vector<GroupElement>& charges() const { return charges_; }
  GroupElement entry_degree(int i, int j) const;

  Block raw_mul(const Block& a, const Block& b) const override;
  Block raw_adjoint(const Block& a) const override;
  Block raw_add(const Block& a, const Block& b) const override;
  Block scale(cplx c, const Block& a) const override;
  double norm(const GroupElement& g, const Block& a) const override;
  double quick_norm(const Block& a) const override;
  Block unit() const override;
  void check_shape(const GroupElement& g, const Block& a) const override;
  std::string name() const override { return "matrix[" + std::to_string(dim()) + "]"; }

  // Extracts the degree-g part of an arbitrary matrix (entry mask).
  Matrix degree_mask(const Matrix& m, const GroupElement& g) const;

 private:
  std::vector<GroupElement> charges_;
};

// Fibers of weighted-shift blocks over N^k or Z^k, graded by the shift.
class ShiftFiberSystem : public FiberSystem {
 public:
  // group must be the free lattice Z^k; halfspace selects l2(N^k).
  ShiftFiberSystem(Group g, bool halfspace);

  bool halfspace() const { return halfspace_; }

  Block raw_mul(const Block& a, const Block& b) const override;
  Block raw_adjoint(const Block& a) const override;
  Block raw_add(const Block& a, const Block& b) const override;
  Block scale(cplx c, const Block& a) const override;
  double norm(const GroupElement& g, const Block& a) const override;
  double quick_norm(const Block& a) const override;
  Block unit() const override;
  void check_shape(const GroupElement& g, const Block& a) const override;
  std::string name() const override {
    return halfspace_ ? "shift[N^" + std::to_string(group().rank()) + "]"
                      : "shift[Z^" + std::to_string(group().rank()) + "]";
  }

 private:
  bool halfspace_;
};

}  // namespace gradealg
