#include "gradealg/weight.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gradealg {

Weight Weight::constant() { return Weight(); }

Weight Weight::polynomial(double s) {
  Weight w;
  w.kind_ = Kind::Polynomial;
  w.param_ = s;
  return w;
}

Weight Weight::exponential(double a) {
  Weight w;
  w.kind_ = Kind::Exponential;
  w.param_ = a;
  return w;
}

Weight Weight::table(std::map<GroupElement, double> values) {
  Weight w;
  w.kind_ = Kind::Table;
  w.values_ = std::move(values);
  return w;
}

double Weight::operator()(const Group& g, const GroupElement& x) const {
  switch (kind_) {
    case Kind::Constant: return 1.0;
    case Kind::Polynomial: return std::pow(1.0 + g.canonical_length(x), param_);
    case Kind::Exponential: return std::pow(param_, g.canonical_length(x));
    case Kind::Table: {
      auto it = values_.find(g.canon(x));
      if (it == values_.end())
        fail(ErrorKind::Domain, "weight table has no entry for " + g.to_string(x));
      return it->second;
    }
  }
  fail(ErrorKind::Config, "bad weight kind");
}

std::string Weight::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Constant: os << "constant"; break;
    case Kind::Polynomial: os << "polynomial(s=" << param_ << ")"; break;
    case Kind::Exponential: os << "exponential(a=" << param_ << ")"; break;
    case Kind::Table: os << "table[" << values_.size() << "]"; break;
  }
  return os.str();
}

WeightReport validate_weight(const Group& g, const GeneratingSet& V,
                             const Weight& nu, int radius) {
  constexpr double kRelTol = 1e-12;
  BallTable ball = build_ball(g, V, radius);
  WeightReport rep;
  rep.radius = radius;
  std::vector<GroupElement> pts;
  pts.reserve(ball.dist.size());
  for (const auto& [x, _] : ball.dist) pts.push_back(x);

  for (const auto& x : pts) {
    double wx = nu(g, x);
    if (wx < 1.0 - kRelTol)
      rep.violations.push_back({"range", x, g.id(), wx, 1.0});
    double wi = nu(g, g.inv(x));
    if (std::abs(wx - wi) > kRelTol * std::max(1.0, std::abs(wx)))
      rep.violations.push_back({"symmetry", x, g.inv(x), wx, wi});
  }
  for (const auto& x : pts)
    for (const auto& y : pts) {
      double lhs = nu(g, g.mul(x, y));
      double rhs = nu(g, x) * nu(g, y);
      ++rep.pairs_checked;
      if (lhs > rhs * (1.0 + kRelTol))
        rep.violations.push_back({"submultiplicative", x, y, lhs, rhs});
    }
  return rep;
}

UgrsProfile ugrs_profile(const Group& g, const GeneratingSet& V,
                         const Weight& nu, int n_max, std::size_t element_cap) {
  if (n_max < 1) fail(ErrorKind::Config, "n_max must be >= 1");
  BallTable ball = build_ball(g, V, n_max, element_cap);
  UgrsProfile prof;
  prof.truncated = ball.truncated;
  // Running sup over the ball V^n; empty shells past exhaustion leave it
  // unchanged, which is correct since V^n is then the whole group.
  double sup = nu(g, g.id());
  const int reach = ball.truncated ? ball.radius : n_max;
  for (int n = 1; n <= reach; ++n) {
    for (const auto& x : ball.shell(n)) sup = std::max(sup, nu(g, x));
    prof.values.push_back(std::pow(sup, 1.0 / n));
  }
  return prof;
}

ShellReport shell_constant(const Group& g, const GeneratingSet& V,
                           const Weight& nu, int n_max) {
  if (n_max < 1) fail(ErrorKind::Config, "n_max must be >= 1");
  BallTable ball = build_ball(g, V, n_max);
  ShellReport rep;
  for (int n = 1; n <= n_max; ++n) {
    const auto& sh = ball.shell(n);
    if (sh.empty()) {
      rep.exhausted = true;
      break;
    }
    double sup = -std::numeric_limits<double>::infinity();
    double inf = std::numeric_limits<double>::infinity();
    for (const auto& x : sh) {
      double w = nu(g, x);
      sup = std::max(sup, w);
      inf = std::min(inf, w);
    }
    rep.ratios.push_back(sup / inf);
    rep.last_shell = n;
  }
  for (double r : rep.ratios) rep.constant = std::max(rep.constant, r);
  return rep;
}

std::vector<double> derived_integer_weight(const Group& g, const GeneratingSet& V,
                                           const Weight& nu, int n_max) {
  BallTable ball = build_ball(g, V, n_max);
  std::vector<double> v(static_cast<std::size_t>(n_max) + 1);
  double sup = nu(g, g.id());
  v[0] = sup;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& x : ball.shell(std::min(n, ball.radius)))
      sup = std::max(sup, nu(g, x));
    v[n] = sup;
  }
  return v;
}

}  // namespace gradealg
