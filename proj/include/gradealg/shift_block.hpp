#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "gradealg/error.hpp"

namespace gradealg {

using cplx = std::complex<double>;

// Coefficient function on N^k whose tail is periodic per coordinate:
// values are stored on the box prod_i [0, T_i + P_i) and repeat with
// period P_i beyond the transient T_i. Exact evaluation everywhere.
class TailCoef {
 public:
  TailCoef() = default;
  TailCoef(std::vector<int> transient, std::vector<int> period,
           std::vector<cplx> data);

  static TailCoef constant(int rank, cplx c);
  static TailCoef from_function(std::vector<int> transient, std::vector<int> period,
                                const std::function<cplx(const std::vector<std::int64_t>&)>& f);
  // rank-1 helper: periodic sequence given by one period of values
  static TailCoef periodic(std::vector<cplx> period_values, int transient = 0,
                           const std::vector<cplx>& transient_values = {});

  int rank() const { return static_cast<int>(trans_.size()); }
  const std::vector<int>& transient() const { return trans_; }
  const std::vector<int>& period() const { return period_; }
  cplx eval(const std::vector<std::int64_t>& x) const;
  double sup_abs() const;  // exact sup of |c| over N^k
  bool is_constant() const;

 private:
  std::vector<int> trans_, period_, extent_;
  std::vector<cplx> data_;
  std::size_t fold_index(const std::vector<std::int64_t>& x) const;
};

// Exact "weighted shift" operator block: delta_x -> c(x) delta_{x+d} on
// l2(N^k) (halfspace) or l2(Z^k) (lattice; constant coefficient only).
// Products, adjoints and sums of such blocks stay in the class, so the
// generator words of the shift-type models are represented with no
// truncation.
class ShiftBlock {
 public:
  ShiftBlock() = default;

  static ShiftBlock halfspace(std::vector<std::int64_t> shift, TailCoef coef);
  static ShiftBlock lattice(std::vector<std::int64_t> shift, cplx c);
  static ShiftBlock zero(bool halfspace, int rank);

  int rank() const { return static_cast<int>(shift_.size()); }
  bool on_halfspace() const { return halfspace_; }
  const std::vector<std::int64_t>& shift() const { return shift_; }
  const TailCoef& coef() const { return coef_; }

  // 0 outside the halfspace domain
  cplx coef_at(const std::vector<std::int64_t>& x) const;

  double sup_norm() const { return coef_.sup_abs(); }

  friend ShiftBlock mul(const ShiftBlock& a, const ShiftBlock& b);  // a after b
  friend ShiftBlock adjoint(const ShiftBlock& a);
  friend ShiftBlock add(const ShiftBlock& a, const ShiftBlock& b);  // same shift
  friend ShiftBlock scale(cplx c, const ShiftBlock& a);

  // Zeroes all matrix entries with row or column inside the box [0, cut):
  // the compression to the complement of a finite window.
  ShiftBlock compress_away_box(const std::vector<std::int64_t>& cut) const;

  // Apply to a basis vector index; returns target index and coefficient
  // (coefficient 0 when the image leaves the halfspace).
  std::pair<std::vector<std::int64_t>, cplx> apply_basis(
      const std::vector<std::int64_t>& x) const;

 private:
  bool halfspace_ = true;
  std::vector<std::int64_t> shift_;
  TailCoef coef_;
};

ShiftBlock mul(const ShiftBlock& a, const ShiftBlock& b);
ShiftBlock adjoint(const ShiftBlock& a);
ShiftBlock add(const ShiftBlock& a, const ShiftBlock& b);
ShiftBlock scale(cplx c, const ShiftBlock& a);

}  // namespace gradealg
