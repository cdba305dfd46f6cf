#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gradealg/group.hpp"
#include "gradealg/shift_block.hpp"

namespace gradealg {

// Edge of a k-colored graph; composition lambda mu needs s(lambda) = r(mu),
// and an edge sequence [e1, .., en] composes left to right with
// s(e_i) = r(e_{i+1}).
struct KEdge {
  int id = 0;
  int color = 0;
  int src = 0;  // s(e)
  int rng = 0;  // r(e)
  std::string name;
};

// Morphism in canonical color-ordered form: the edge sequence lists the
// color-0 block first, then color-1, etc. Uniqueness of this form is the
// factorization property, checked exhaustively by factorization_check.
struct Morph {
  int rng = 0, src = 0;
  std::vector<int> degree;
  std::vector<int> seq;

  auto operator<=>(const Morph&) const = default;
};

struct KGraphSpec {
  int colors = 1;
  int vertices = 1;
  std::vector<KEdge> edges;
  // commuting squares e f = f' e' as edge-id quadruples {e, f, fp, ep}
  // with color(e) = color(ep) < color(f) = color(fp)
  std::vector<std::array<int, 4>> squares;
  std::vector<int> degree_cap;  // enumeration cap per color
};

struct FactorizationReport {
  bool unique = true;
  std::size_t morphisms_checked = 0;
  std::size_t splits_checked = 0;
  std::optional<Morph> witness;  // morphism with a non-unique factorization
};

struct AperiodicityResult {
  bool aperiodic = true;
  bool complete = true;  // every pair was decided within the caps
  std::size_t pairs_checked = 0;
  std::optional<std::pair<Morph, Morph>> witness;  // undecided/periodic pair
};

class KGraph {
 public:
  explicit KGraph(KGraphSpec spec);

  // single vertex with `loops` loops of one color
  static KGraph loops_1graph(int loops, int cap);
  // single vertex, loops per color, with flip squares a b = b a
  static KGraph flip_2graph(int loops0, int loops1, int cap0, int cap1);

  int colors() const { return spec_.colors; }
  int vertices() const { return spec_.vertices; }
  const std::vector<int>& cap() const { return spec_.degree_cap; }
  const KEdge& edge(int id) const;
  const std::vector<KEdge>& edges() const { return spec_.edges; }
  const std::vector<std::array<int, 4>>& squares() const { return spec_.squares; }

  Morph vertex(int v) const;
  Morph from_edges(const std::vector<int>& seq) const;  // normalizes
  std::string to_string(const Morph& m) const;

  // All morphisms of the exact degree; Resource error beyond the cap.
  const std::vector<Morph>& morphisms(const std::vector<int>& degree) const;
  std::vector<Morph> morphisms_at(const std::vector<int>& degree, int range_vertex) const;
  // Degrees componentwise <= bound (within cap).
  std::vector<std::vector<int>> degrees_upto(const std::vector<int>& bound) const;

  Morph compose(const Morph& a, const Morph& b) const;
  // All (alpha, beta) with alpha beta = m and d(alpha) = head.
  std::vector<std::pair<Morph, Morph>> factorizations(const Morph& m,
                                                      const std::vector<int>& head) const;
  FactorizationReport factorization_check() const;

  std::vector<Morph> mce(const Morph& mu, const Morph& nu) const;
  // Independent route: intersect the two extension sets.
  std::vector<Morph> mce_pairing(const Morph& mu, const Morph& nu) const;

  AperiodicityResult aperiodicity(const std::vector<int>& pair_cap, int depth) const;

  // Raw-finiteness / no-sources within the cap; Validation error if not.
  void check_admissible() const;

 private:
  KGraphSpec spec_;
  std::map<std::pair<int, int>, std::pair<int, int>> to_normal_;  // (f', e') -> (e, f)
  std::map<std::pair<int, int>, std::pair<int, int>> to_anti_;    // (e, f) -> (f', e')
  mutable std::map<std::vector<int>, std::vector<Morph>> enum_cache_;

  std::vector<int> normalize(std::vector<int> seq) const;
  void validate_spec() const;
};

// ---- symbolic Cuntz-Krieger algebra ----------------------------------------

// Finite span of S_lambda S*_mu with s(lambda) = s(mu).
class CkElement {
 public:
  explicit CkElement(const KGraph* g) : graph_(g) {}

  static CkElement S(const KGraph& g, const Morph& lambda);
  static CkElement S_dag(const KGraph& g, const Morph& lambda);
  static CkElement vertex_proj(const KGraph& g, int v);
  static CkElement unit(const KGraph& g);  // sum of vertex projections

  const KGraph* graph() const { return graph_; }
  const std::map<std::pair<Morph, Morph>, cplx>& terms() const { return terms_; }
  CkElement& add_term(const Morph& ket, const Morph& bra, cplx c);

 private:
  const KGraph* graph_;
  std::map<std::pair<Morph, Morph>, cplx> terms_;
};

CkElement ck_mul(const CkElement& x, const CkElement& y);
CkElement ck_add(const CkElement& x, const CkElement& y);
CkElement ck_scale(cplx c, const CkElement& x);
CkElement ck_adjoint(const CkElement& x);
bool ck_is_zero(const CkElement& x, double tol = 1e-12);
// Rewrites every term to ket degree exactly `level` using the relation
// S_v = sum over Lambda^n(v) of S_lambda S*_lambda.
CkElement ck_expand(const CkElement& x, const std::vector<int>& level);
// Equality modulo that relation: expand both to a common level and compare.
bool ck_equal(const CkElement& x, const CkElement& y, double tol = 1e-12);

// Functor into an abelian group, determined by per-edge values; must be
// constant on commuting squares.
class KFunctor {
 public:
  KFunctor(Group target, std::map<int, GroupElement> edge_values);
  // the degree functor d into Z^k
  static KFunctor degree(const KGraph& g);

  const Group& target() const { return target_; }
  GroupElement value(const KGraph& g, const Morph& m) const;
  // F(ket) F(bra)^-1; Domain error if the element is not homogeneous.
  GroupElement term_degree(const KGraph& g, const Morph& ket, const Morph& bra) const;
  void validate(const KGraph& g) const;

 private:
  Group target_;
  std::map<int, GroupElement> edge_values_;
};

}  // namespace gradealg
