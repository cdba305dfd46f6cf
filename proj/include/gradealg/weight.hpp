#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradealg/group.hpp"

namespace gradealg {

// Weight menu: constant 1, polynomial (1+|g|)^s, exponential a^|g| and
// explicit tables, with |g| the group's canonical length.
class Weight {
 public:
  enum class Kind { Constant, Polynomial, Exponential, Table };

  static Weight constant();
  static Weight polynomial(double s);
  static Weight exponential(double a);
  static Weight table(std::map<GroupElement, double> values);

  double operator()(const Group& g, const GroupElement& x) const;
  Kind kind() const { return kind_; }
  std::string describe() const;

 private:
  Kind kind_ = Kind::Constant;
  double param_ = 1.0;
  std::map<GroupElement, double> values_;
};

struct WeightViolation {
  std::string law;  // "range", "symmetry", "submultiplicative"
  GroupElement g, h;
  double lhs = 0, rhs = 0;
};

struct WeightReport {
  std::vector<WeightViolation> violations;
  int radius = 0;
  std::size_t pairs_checked = 0;
  bool pass() const { return violations.empty(); }
};

// Checks nu >= 1, nu(g^-1) = nu(g) and nu(gh) <= nu(g)nu(h) on the
// radius-ball (all pairs).
WeightReport validate_weight(const Group& g, const GeneratingSet& V,
                             const Weight& nu, int radius);

struct UgrsProfile {
  std::vector<double> values;  // values[n-1] = sup_{V^n} nu^(1/n)
  bool truncated = false;      // enumeration cap reached; partial result
  double limit_estimate() const { return values.empty() ? 1.0 : values.back(); }
};

// s_n = sup over n-fold products of generators of nu(g_1...g_n)^(1/n),
// computed as the sup over the ball V^n (e in V makes the two agree).
UgrsProfile ugrs_profile(const Group& g, const GeneratingSet& V,
                         const Weight& nu, int n_max,
                         std::size_t element_cap = 2'000'000);

struct ShellReport {
  std::vector<double> ratios;  // per-shell sup/inf, shells 1..n
  double constant = 1.0;       // max ratio observed
  int last_shell = 0;          // last non-empty shell inspected
  bool exhausted = false;      // group ran out before n_max
};

// Smallest C with sup_shell nu <= C inf_shell nu over shells V^n \ V^(n-1)
// (identity alone makes up shell 0), up to n_max.
ShellReport shell_constant(const Group& g, const GeneratingSet& V,
                           const Weight& nu, int n_max);

// v(n) = sup_{V^|n|} nu, the induced weight on Z; index 0..n_max.
std::vector<double> derived_integer_weight(const Group& g, const GeneratingSet& V,
                                           const Weight& nu, int n_max);

}  // namespace gradealg
