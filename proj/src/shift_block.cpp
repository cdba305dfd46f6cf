#include "gradealg/shift_block.hpp"

#include <algorithm>
#include <numeric>

namespace gradealg {

namespace {
constexpr std::size_t kBoxCap = 1u << 22;

std::size_t box_size(const std::vector<int>& extent) {
  std::size_t n = 1;
  for (int e : extent) {
    n *= static_cast<std::size_t>(e);
    if (n > kBoxCap) fail(ErrorKind::Resource, "shift block coefficient box exceeds cap");
  }
  return n;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }
}  // namespace

TailCoef::TailCoef(std::vector<int> transient, std::vector<int> period,
                   std::vector<cplx> data)
    : trans_(std::move(transient)), period_(std::move(period)) {
  if (trans_.size() != period_.size())
    fail(ErrorKind::Config, "tail coef transient/period rank mismatch");
  extent_.resize(trans_.size());
  for (std::size_t i = 0; i < trans_.size(); ++i) {
    if (trans_[i] < 0 || period_[i] < 1)
      fail(ErrorKind::Config, "tail coef needs transient >= 0 and period >= 1");
    extent_[i] = trans_[i] + period_[i];
  }
  if (data.size() != box_size(extent_))
    fail(ErrorKind::Config, "tail coef data size does not match box");
  data_ = std::move(data);
}

TailCoef TailCoef::constant(int rank, cplx c) {
  return TailCoef(std::vector<int>(rank, 0), std::vector<int>(rank, 1), {c});
}

TailCoef TailCoef::from_function(
    std::vector<int> transient, std::vector<int> period,
    const std::function<cplx(const std::vector<std::int64_t>&)>& f) {
  const int k = static_cast<int>(transient.size());
  std::vector<int> extent(k);
  for (int i = 0; i < k; ++i) extent[i] = transient[i] + period[i];
  std::vector<cplx> data(box_size(extent));
  std::vector<std::int64_t> x(k, 0);
  for (std::size_t idx = 0; idx < data.size(); ++idx) {
    std::size_t rem = idx;
    for (int i = k - 1; i >= 0; --i) {
      x[i] = static_cast<std::int64_t>(rem % extent[i]);
      rem /= extent[i];
    }
    data[idx] = f(x);
  }
  return TailCoef(std::move(transient), std::move(period), std::move(data));
}

TailCoef TailCoef::periodic(std::vector<cplx> period_values, int transient,
                            const std::vector<cplx>& transient_values) {
  if (period_values.empty()) fail(ErrorKind::Config, "empty period");
  if (static_cast<int>(transient_values.size()) != transient)
    fail(ErrorKind::Config, "transient values size mismatch");
  std::vector<cplx> data = transient_values;
  data.insert(data.end(), period_values.begin(), period_values.end());
  return TailCoef({transient}, {static_cast<int>(period_values.size())},
                  std::move(data));
}

std::size_t TailCoef::fold_index(const std::vector<std::int64_t>& x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < trans_.size(); ++i) {
    std::int64_t xi = x[i];
    if (xi >= extent_[i]) xi = trans_[i] + (xi - trans_[i]) % period_[i];
    idx = idx * static_cast<std::size_t>(extent_[i]) + static_cast<std::size_t>(xi);
  }
  return idx;
}

cplx TailCoef::eval(const std::vector<std::int64_t>& x) const {
  if (x.size() != trans_.size()) fail(ErrorKind::Structure, "coef rank mismatch");
  for (auto xi : x)
    if (xi < 0) return 0.0;
  return data_[fold_index(x)];
}

double TailCoef::sup_abs() const {
  double s = 0;
  for (const auto& c : data_) s = std::max(s, std::abs(c));
  return s;
}

bool TailCoef::is_constant() const {
  for (const auto& c : data_)
    if (c != data_[0]) return false;
  return true;
}

ShiftBlock ShiftBlock::halfspace(std::vector<std::int64_t> shift, TailCoef coef) {
  const int k = static_cast<int>(shift.size());
  if (coef.rank() != k) fail(ErrorKind::Structure, "shift/coef rank mismatch");
  // Mask the region whose image leaves N^k, growing the transient so the
  // mask is inside the explicit box.
  std::vector<int> trans(k), period = coef.period();
  bool needs_mask = false;
  for (int i = 0; i < k; ++i) {
    trans[i] = static_cast<int>(std::max<std::int64_t>(
        coef.transient()[i], shift[i] < 0 ? -shift[i] : 0));
    if (shift[i] < 0) needs_mask = true;
  }
  TailCoef masked =
      (needs_mask || trans != coef.transient())
          ? TailCoef::from_function(trans, period,
                                    [&](const std::vector<std::int64_t>& x) {
                                      for (int i = 0; i < static_cast<int>(x.size()); ++i)
                                        if (x[i] + shift[i] < 0) return cplx(0.0);
                                      return coef.eval(x);
                                    })
          : std::move(coef);
  ShiftBlock b;
  b.halfspace_ = true;
  b.shift_ = std::move(shift);
  b.coef_ = std::move(masked);
  return b;
}

ShiftBlock ShiftBlock::lattice(std::vector<std::int64_t> shift, cplx c) {
  ShiftBlock b;
  b.halfspace_ = false;
  b.coef_ = TailCoef::constant(static_cast<int>(shift.size()), c);
  b.shift_ = std::move(shift);
  return b;
}

ShiftBlock ShiftBlock::zero(bool halfspace, int rank) {
  std::vector<std::int64_t> d(rank, 0);
  return halfspace ? ShiftBlock::halfspace(d, TailCoef::constant(rank, 0.0))
                   : ShiftBlock::lattice(d, 0.0);
}

cplx ShiftBlock::coef_at(const std::vector<std::int64_t>& x) const {
  if (halfspace_) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < 0 || x[i] + shift_[i] < 0) return 0.0;
    return coef_.eval(x);
  }
  return coef_.eval(std::vector<std::int64_t>(x.size(), 0));
}

ShiftBlock mul(const ShiftBlock& a, const ShiftBlock& b) {
  if (a.rank() != b.rank() || a.halfspace_ != b.halfspace_)
    fail(ErrorKind::Structure, "shift block base mismatch");
  const int k = a.rank();
  std::vector<std::int64_t> d(k);
  for (int i = 0; i < k; ++i) d[i] = a.shift_[i] + b.shift_[i];
  if (!a.halfspace_) {
    return ShiftBlock::lattice(
        d, a.coef_.eval(std::vector<std::int64_t>(k, 0)) *
               b.coef_.eval(std::vector<std::int64_t>(k, 0)));
  }
  std::vector<int> trans(k), period(k);
  for (int i = 0; i < k; ++i) {
    trans[i] = static_cast<int>(
        std::max({static_cast<std::int64_t>(b.coef_.transient()[i]),
                  static_cast<std::int64_t>(a.coef_.transient()[i]) - b.shift_[i],
                  std::int64_t{0}}));
    period[i] = lcm_int(a.coef_.period()[i], b.coef_.period()[i]);
  }
  std::vector<std::int64_t> y(k);
  TailCoef c = TailCoef::from_function(
      trans, period, [&](const std::vector<std::int64_t>& x) -> cplx {
        cplx cb = b.coef_at(x);
        if (cb == cplx(0.0)) return 0.0;
        for (int i = 0; i < k; ++i) y[i] = x[i] + b.shift_[i];
        return a.coef_at(y) * cb;
      });
  return ShiftBlock::halfspace(std::move(d), std::move(c));
}

ShiftBlock adjoint(const ShiftBlock& a) {
  const int k = a.rank();
  std::vector<std::int64_t> d(k);
  for (int i = 0; i < k; ++i) d[i] = -a.shift_[i];
  if (!a.halfspace_) {
    return ShiftBlock::lattice(
        d, std::conj(a.coef_.eval(std::vector<std::int64_t>(k, 0))));
  }
  std::vector<int> trans(k);
  for (int i = 0; i < k; ++i)
    trans[i] = static_cast<int>(std::max<std::int64_t>(
        0, a.coef_.transient()[i] + a.shift_[i]));
  std::vector<std::int64_t> y(k);
  TailCoef c = TailCoef::from_function(
      trans, a.coef_.period(), [&](const std::vector<std::int64_t>& x) -> cplx {
        for (int i = 0; i < k; ++i) {
          y[i] = x[i] - a.shift_[i];
          if (y[i] < 0) return 0.0;
        }
        return std::conj(a.coef_.eval(y));
      });
  return ShiftBlock::halfspace(std::move(d), std::move(c));
}

ShiftBlock add(const ShiftBlock& a, const ShiftBlock& b) {
  if (a.rank() != b.rank() || a.halfspace_ != b.halfspace_)
    fail(ErrorKind::Structure, "shift block base mismatch");
  if (a.shift_ != b.shift_)
    fail(ErrorKind::Structure, "cannot add shift blocks of different shifts");
  const int k = a.rank();
  if (!a.halfspace_) {
    std::vector<std::int64_t> z(k, 0);
    return ShiftBlock::lattice(a.shift_, a.coef_.eval(z) + b.coef_.eval(z));
  }
  std::vector<int> trans(k), period(k);
  for (int i = 0; i < k; ++i) {
    trans[i] = std::max(a.coef_.transient()[i], b.coef_.transient()[i]);
    period[i] = lcm_int(a.coef_.period()[i], b.coef_.period()[i]);
  }
  TailCoef c = TailCoef::from_function(
      trans, period, [&](const std::vector<std::int64_t>& x) {
        return a.coef_.eval(x) + b.coef_.eval(x);
      });
  return ShiftBlock::halfspace(a.shift_, std::move(c));
}

ShiftBlock scale(cplx s, const ShiftBlock& a) {
  if (!a.halfspace_) {
    std::vector<std::int64_t> z(a.rank(), 0);
    return ShiftBlock::lattice(a.shift_, s * a.coef_.eval(z));
  }
  TailCoef c = TailCoef::from_function(
      a.coef_.transient(), a.coef_.period(),
      [&](const std::vector<std::int64_t>& x) { return s * a.coef_.eval(x); });
  return ShiftBlock::halfspace(a.shift_, std::move(c));
}

ShiftBlock ShiftBlock::compress_away_box(const std::vector<std::int64_t>& cut) const {
  if (!halfspace_) fail(ErrorKind::Domain, "box compression needs a halfspace block");
  const int k = rank();
  if (static_cast<int>(cut.size()) != k) fail(ErrorKind::Structure, "cut rank mismatch");
  std::vector<int> trans(k);
  for (int i = 0; i < k; ++i)
    trans[i] = static_cast<int>(std::max<std::int64_t>(
        {static_cast<std::int64_t>(coef_.transient()[i]), cut[i],
         cut[i] - shift_[i], 0}));
  auto in_cut = [&](const std::vector<std::int64_t>& x) {
    for (int i = 0; i < k; ++i)
      if (x[i] >= cut[i]) return false;
    return true;
  };
  std::vector<std::int64_t> y(k);
  TailCoef c = TailCoef::from_function(
      trans, coef_.period(), [&](const std::vector<std::int64_t>& x) -> cplx {
        if (in_cut(x)) return 0.0;
        for (int i = 0; i < k; ++i) y[i] = x[i] + shift_[i];
        if (in_cut(y)) return 0.0;
        return coef_at(x);
      });
  return ShiftBlock::halfspace(shift_, std::move(c));
}

std::pair<std::vector<std::int64_t>, cplx> ShiftBlock::apply_basis(
    const std::vector<std::int64_t>& x) const {
  std::vector<std::int64_t> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + shift_[i];
  return {y, coef_at(x)};
}

}  // namespace gradealg
