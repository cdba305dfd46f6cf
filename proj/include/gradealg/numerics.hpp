#pragma once

#include "gradealg/model.hpp"
#include "gradealg/weight.hpp"

namespace gradealg {

// Per-shell aggregation of component norms along word-length shells.
struct DecayProfile {
  std::vector<double> shell_sum;
  std::vector<double> shell_sup;
  std::string norm_type = "l1";
  std::int64_t window = 0;
  double total() const;
};

DecayProfile profile_from_norms(const std::map<GroupElement, double>& norms,
                                const Group& g);

struct SymmetrySample {
  double min_eig = 0;       // smallest eigenvalue of the compressed Phi* Phi
  double herm_defect = 0;   // max |M - M*| entry before symmetrization
};

// Compresses Phi* Phi (computed algebraically, no truncation) and returns
// the smallest eigenvalue; Representation error when the compression is
// not Hermitian to 1e-10.
SymmetrySample check_symmetric_sample(const GradedElement& a, const ModelRep& rep,
                                      const Window& w);

struct InvertReport {
  std::map<GroupElement, double> component_norms;  // graded parts of the inverse
  DecayProfile profile;
  double residual_interior = 0;  // Frobenius norm of M Minv - I on the interior
  double cond_estimate = 0;      // 1-norm condition estimate
  double inverse_l1 = 0;         // sum of component norms on the window
  std::int64_t interior_radius = 0;
};

// Window inversion with graded decomposition of the inverse.
// Inversion error (with condition estimate in the message) when the
// compression is numerically singular.
InvertReport invert_graded(const GradedElement& a, const ModelRep& rep,
                           const Window& w);

// ||a^n||^(1/n) in the l1 norm (optionally weighted).
std::vector<double> radius_profile_l1(const GradedElement& a, int n_max,
                                      const Weight* nu = nullptr,
                                      std::size_t support_cap = 200000);
// Same in the compressed operator norm.
std::vector<double> radius_profile_operator(const GradedElement& a,
                                            const ModelRep& rep, const Window& w,
                                            int n_max,
                                            std::size_t support_cap = 200000);

struct FredholmWindowStat {
  std::int64_t size = 0;
  double sigma_min = 0;
  int near_kernel_dim = 0;
  std::vector<cplx> eigenvalues;  // compression spectrum (small windows only)
};

struct FredholmReport {
  std::vector<FredholmWindowStat> windows;
  double tol = 0;
};

// Heuristic finite-section report over increasing windows; no theorem is
// asserted. Config error unless at least 3 strictly increasing sizes.
FredholmReport fredholm_probe(const GradedElement& a, const ModelRep& rep,
                              const std::vector<std::int64_t>& window_sizes,
                              double tol = 1e-8, std::int64_t eig_cap = 256);

int numeric_rank(const Matrix& m, double tol = 1e-10);

// Compression of every component to the complement of the box [0, cut):
// the finite-window stand-in for passing to the quotient by the ideal of
// operators supported in the box. Exact on shift models.
GradedElement quotient_compress(const GradedElement& a,
                                const std::vector<std::int64_t>& cut);
// The same compression applied to a window matrix (rows and columns in
// the cut zeroed).
Matrix quotient_compress_matrix(const Matrix& m, const Window& w,
                                const std::vector<std::int64_t>& cut);

}  // namespace gradealg
