#pragma once

#include <random>

#include "gradealg/graded.hpp"

namespace gradealg {

// A finite rectangular window of basis indices for compressing operators
// to matrices: the box prod_i [lo_i, hi_i).
struct Window {
  std::vector<std::int64_t> lo, hi;

  static Window box(std::vector<std::int64_t> hi);  // lo = 0
  static Window centered(int rank, std::int64_t half);  // [-half, half]
  std::size_t dim() const;
  int rank() const { return static_cast<int>(lo.size()); }
  bool contains(const std::vector<std::int64_t>& x) const;
  std::size_t index(const std::vector<std::int64_t>& x) const;  // row-major
  std::vector<std::int64_t> point(std::size_t idx) const;
};

// A concrete representation of a graded model: fiber system, window
// compression and per-basis degree metadata (the charge c(i) for which
// matrix entry (i, j) has degree c(i) c(j)^-1).
class ModelRep {
 public:
  virtual ~ModelRep() = default;

  virtual std::string name() const = 0;
  virtual std::shared_ptr<const FiberSystem> fibers() const = 0;
  virtual Window default_window() const = 0;
  // A window scaled to roughly n basis vectors per axis; matrix models
  // ignore n (they are already finite-dimensional and exact).
  virtual Window window_for(std::int64_t n) const = 0;
  virtual std::vector<GroupElement> charges(const Window& w) const = 0;
  virtual Matrix compress(const GradedElement& a, const Window& w) const = 0;
  // Basis indices unaffected by window truncation for supports of the
  // given degree radius (all of them for exact finite models).
  virtual std::vector<bool> interior_mask(const Window& w, std::int64_t radius) const = 0;
  virtual GradedElement random_element(std::mt19937_64& rng, int support,
                                       int degree_radius) const = 0;
  GradedElement unit() const { return GradedElement::unit(fibers()); }
};

// Compress a single block placed at a degree.
Matrix compress_block(const ModelRep& rep, const GroupElement& g, const Block& b,
                      const Window& w);

// Entrywise degree split of a window matrix along the charge metadata.
std::map<GroupElement, Matrix> split_by_degree(const Matrix& m,
                                               const std::vector<GroupElement>& charges,
                                               const Group& g, double tol = 0.0);
Matrix mask_degree(const Matrix& m, const std::vector<GroupElement>& charges,
                   const Group& g, const GroupElement& degree);

// Shift models over N^k / Z^k share the compression logic.
class ShiftModelRep : public ModelRep {
 public:
  ShiftModelRep(std::shared_ptr<const ShiftFiberSystem> fs, Window default_window);

  std::shared_ptr<const FiberSystem> fibers() const override { return fs_; }
  const ShiftFiberSystem& shift_fibers() const { return *fs_; }
  Window default_window() const override { return default_; }
  Window window_for(std::int64_t n) const override;
  std::vector<GroupElement> charges(const Window& w) const override;
  Matrix compress(const GradedElement& a, const Window& w) const override;
  std::vector<bool> interior_mask(const Window& w, std::int64_t radius) const override;

 protected:
  std::shared_ptr<const ShiftFiberSystem> fs_;
  Window default_;
};

// Regular representation of Z^k on l2(Z^k) with scalar fibers; the
// rank-1 case is the bilateral shift model.
class LatticeShiftModel : public ShiftModelRep {
 public:
  explicit LatticeShiftModel(int rank, std::int64_t default_half = 64);
  std::string name() const override;
  GradedElement random_element(std::mt19937_64& rng, int support,
                               int degree_radius) const override;
  // c * (shift by g)
  GradedElement delta(const GroupElement& g, cplx c = 1.0) const;
};

// Matrix models (fixed finite dimension, exact).
class MatrixModelRep : public ModelRep {
 public:
  explicit MatrixModelRep(std::shared_ptr<const MatrixFiberSystem> fs);

  std::shared_ptr<const FiberSystem> fibers() const override { return fs_; }
  const MatrixFiberSystem& matrix_fibers() const { return *fs_; }
  Window default_window() const override;
  Window window_for(std::int64_t) const override { return default_window(); }
  std::vector<GroupElement> charges(const Window& w) const override;
  Matrix compress(const GradedElement& a, const Window& w) const override;
  std::vector<bool> interior_mask(const Window& w, std::int64_t) const override;
  GradedElement random_element(std::mt19937_64& rng, int support,
                               int degree_radius) const override;

  // Split an arbitrary matrix into a graded element along the charges.
  GradedElement element_from_matrix(const Matrix& m, double tol = 1e-13) const;

 protected:
  std::shared_ptr<const MatrixFiberSystem> fs_;
};

}  // namespace gradealg
