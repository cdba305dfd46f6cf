#include "gradealg/kgraph.hpp"

#include <algorithm>
#include <sstream>

namespace gradealg {

namespace {
constexpr std::size_t kMorphCap = 200000;

std::vector<int> add_deg(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

std::vector<int> sub_deg(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

bool leq_deg(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<int> max_deg(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

bool nonneg(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}
}  // namespace

KGraph::KGraph(KGraphSpec spec) : spec_(std::move(spec)) {
  validate_spec();
  for (const auto& sq : spec_.squares) {
    if (!to_normal_.emplace(std::make_pair(sq[2], sq[3]), std::make_pair(sq[0], sq[1]))
             .second ||
        !to_anti_.emplace(std::make_pair(sq[0], sq[1]), std::make_pair(sq[2], sq[3]))
             .second)
      fail(ErrorKind::Config, "duplicate commuting square");
  }
  // every anti-normal composable pair must have a unique completion
  if (spec_.colors > 1) {
    for (const auto& f : spec_.edges)
      for (const auto& e : spec_.edges) {
        if (e.color >= f.color) continue;
        if (f.src == e.rng && !to_normal_.count({f.id, e.id}))
          fail(ErrorKind::Config, "missing commuting square for a bi-colored path");
        if (e.src == f.rng && !to_anti_.count({e.id, f.id}))
          fail(ErrorKind::Config, "missing commuting square for a bi-colored path");
      }
  }
}

void KGraph::validate_spec() const {
  if (spec_.colors < 1) fail(ErrorKind::Config, "k-graph needs >= 1 color");
  if (spec_.vertices < 1) fail(ErrorKind::Config, "k-graph needs >= 1 vertex");
  if (static_cast<int>(spec_.degree_cap.size()) != spec_.colors)
    fail(ErrorKind::Config, "degree cap must have one entry per color");
  for (int c : spec_.degree_cap)
    if (c < 1) fail(ErrorKind::Config, "degree caps must be >= 1");
  std::set<int> ids;
  for (const auto& e : spec_.edges) {
    if (!ids.insert(e.id).second) fail(ErrorKind::Config, "duplicate edge id");
    if (e.color < 0 || e.color >= spec_.colors)
      fail(ErrorKind::Config, "edge color out of range");
    if (e.src < 0 || e.src >= spec_.vertices || e.rng < 0 || e.rng >= spec_.vertices)
      fail(ErrorKind::Config, "edge endpoint out of range");
  }
  for (const auto& sq : spec_.squares) {
    const KEdge &e = edge(sq[0]), &f = edge(sq[1]), &fp = edge(sq[2]), &ep = edge(sq[3]);
    if (!(e.color == ep.color && f.color == fp.color && e.color < f.color))
      fail(ErrorKind::Config, "square colors are inconsistent");
    if (e.src != f.rng || fp.src != ep.rng || e.rng != fp.rng || f.src != ep.src)
      fail(ErrorKind::Config, "square endpoints do not commute");
  }
}

KGraph KGraph::loops_1graph(int loops, int cap) {
  KGraphSpec spec;
  spec.colors = 1;
  spec.vertices = 1;
  for (int i = 0; i < loops; ++i)
    spec.edges.push_back({i, 0, 0, 0, std::string(1, static_cast<char>('a' + i))});
  spec.degree_cap = {cap};
  return KGraph(std::move(spec));
}

KGraph KGraph::flip_2graph(int loops0, int loops1, int cap0, int cap1) {
  KGraphSpec spec;
  spec.colors = 2;
  spec.vertices = 1;
  int id = 0;
  for (int i = 0; i < loops0; ++i)
    spec.edges.push_back({id++, 0, 0, 0, std::string(1, static_cast<char>('a' + i))});
  for (int i = 0; i < loops1; ++i)
    spec.edges.push_back({id++, 1, 0, 0, std::string(1, static_cast<char>('x' + i))});
  // flip squares: a b = b a
  for (int i = 0; i < loops0; ++i)
    for (int j = 0; j < loops1; ++j)
      spec.squares.push_back({i, loops0 + j, loops0 + j, i});
  spec.degree_cap = {cap0, cap1};
  return KGraph(std::move(spec));
}

const KEdge& KGraph::edge(int id) const {
  for (const auto& e : spec_.edges)
    if (e.id == id) return e;
  fail(ErrorKind::Config, "unknown edge id");
}

Morph KGraph::vertex(int v) const {
  if (v < 0 || v >= spec_.vertices) fail(ErrorKind::Config, "vertex out of range");
  Morph m;
  m.rng = m.src = v;
  m.degree.assign(spec_.colors, 0);
  return m;
}

std::vector<int> KGraph::normalize(std::vector<int> seq) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
      const KEdge& x = edge(seq[p]);
      const KEdge& y = edge(seq[p + 1]);
      if (x.color > y.color) {
        auto it = to_normal_.find({seq[p], seq[p + 1]});
        if (it == to_normal_.end())
          fail(ErrorKind::Config, "no commuting square for an adjacent pair");
        seq[p] = it->second.first;
        seq[p + 1] = it->second.second;
        moved = true;
      }
    }
  }
  return seq;
}

Morph KGraph::from_edges(const std::vector<int>& raw) const {
  Morph m;
  m.degree.assign(spec_.colors, 0);
  if (raw.empty()) fail(ErrorKind::Config, "empty sequence needs a vertex morphism");
  for (std::size_t i = 0; i + 1 < raw.size(); ++i)
    if (edge(raw[i]).src != edge(raw[i + 1]).rng)
      fail(ErrorKind::Domain, "edge sequence is not composable");
  for (int id : raw) ++m.degree[edge(id).color];
  if (!leq_deg(m.degree, spec_.degree_cap))
    fail(ErrorKind::Resource, "morphism degree exceeds the enumeration cap");
  m.seq = normalize(raw);
  m.rng = edge(m.seq.front()).rng;
  m.src = edge(m.seq.back()).src;
  return m;
}

std::string KGraph::to_string(const Morph& m) const {
  if (m.seq.empty()) return "v" + std::to_string(m.src);
  std::ostringstream os;
  for (int id : m.seq) {
    const KEdge& e = edge(id);
    os << (e.name.empty() ? "e" + std::to_string(id) : e.name);
  }
  return os.str();
}

const std::vector<Morph>& KGraph::morphisms(const std::vector<int>& degree) const {
  if (static_cast<int>(degree.size()) != spec_.colors)
    fail(ErrorKind::Config, "degree rank mismatch");
  if (!nonneg(degree) || !leq_deg(degree, spec_.degree_cap))
    fail(ErrorKind::Resource, "degree outside the enumeration cap");
  auto it = enum_cache_.find(degree);
  if (it != enum_cache_.end()) return it->second;

  std::vector<Morph> out;
  if (std::all_of(degree.begin(), degree.end(), [](int x) { return x == 0; })) {
    for (int v = 0; v < spec_.vertices; ++v) out.push_back(vertex(v));
  } else {
    // reduce along the last positive color: paths of pure color extend
    // color-ordered prefixes
    int c = spec_.colors - 1;
    while (degree[c] == 0) --c;
    std::vector<int> head = degree;
    --head[c];
    for (const Morph& m : morphisms(head))
      for (const auto& e : spec_.edges) {
        if (e.color != c || e.rng != m.src) continue;
        Morph ext = m;
        ext.seq.push_back(e.id);
        ext.src = e.src;
        ++ext.degree[c];
        out.push_back(std::move(ext));
      }
    if (out.size() > kMorphCap)
      fail(ErrorKind::Resource, "morphism enumeration exceeds cap");
  }
  std::sort(out.begin(), out.end());
  return enum_cache_.emplace(degree, std::move(out)).first->second;
}

std::vector<Morph> KGraph::morphisms_at(const std::vector<int>& degree,
                                        int range_vertex) const {
  std::vector<Morph> out;
  for (const Morph& m : morphisms(degree))
    if (m.rng == range_vertex) out.push_back(m);
  return out;
}

std::vector<std::vector<int>> KGraph::degrees_upto(const std::vector<int>& bound) const {
  std::vector<std::vector<int>> out = {std::vector<int>(spec_.colors, 0)};
  for (int c = 0; c < spec_.colors; ++c) {
    std::vector<std::vector<int>> next;
    for (const auto& d : out)
      for (int x = 0; x <= bound[c]; ++x) {
        auto e = d;
        e[c] = x;
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

Morph KGraph::compose(const Morph& a, const Morph& b) const {
  if (a.src != b.rng) fail(ErrorKind::Domain, "morphisms are not composable");
  std::vector<int> deg = add_deg(a.degree, b.degree);
  if (!leq_deg(deg, spec_.degree_cap))
    fail(ErrorKind::Resource, "composite degree exceeds the enumeration cap");
  Morph m;
  m.degree = std::move(deg);
  m.rng = a.seq.empty() ? b.rng : a.rng;
  m.src = b.seq.empty() ? a.src : b.src;
  std::vector<int> seq = a.seq;
  seq.insert(seq.end(), b.seq.begin(), b.seq.end());
  m.seq = normalize(std::move(seq));
  return m;
}

std::vector<std::pair<Morph, Morph>> KGraph::factorizations(
    const Morph& m, const std::vector<int>& head) const {
  if (!nonneg(head) || !leq_deg(head, m.degree))
    fail(ErrorKind::Config, "factorization head degree must be <= d(m)");
  std::vector<std::pair<Morph, Morph>> out;
  const std::vector<int> tail = sub_deg(m.degree, head);
  for (const Morph& alpha : morphisms_at(head, m.rng))
    for (const Morph& beta : morphisms_at(tail, alpha.src)) {
      if (beta.src != m.src) continue;
      if (compose(alpha, beta) == m) out.emplace_back(alpha, beta);
    }
  return out;
}

FactorizationReport KGraph::factorization_check() const {
  FactorizationReport rep;
  for (const auto& deg : degrees_upto(spec_.degree_cap)) {
    for (const Morph& m : morphisms(deg)) {
      ++rep.morphisms_checked;
      for (const auto& head : degrees_upto(deg)) {
        if (!leq_deg(head, deg)) continue;
        ++rep.splits_checked;
        auto f = factorizations(m, head);
        if (f.size() != 1) {
          rep.unique = false;
          rep.witness = m;
          return rep;
        }
      }
    }
  }
  return rep;
}

std::vector<Morph> KGraph::mce(const Morph& mu, const Morph& nu) const {
  std::vector<Morph> out;
  if (mu.rng != nu.rng) return out;
  const std::vector<int> m = max_deg(mu.degree, nu.degree);
  if (!leq_deg(m, spec_.degree_cap))
    fail(ErrorKind::Resource, "mce degree exceeds the enumeration cap");
  for (const Morph& rho : morphisms_at(m, mu.rng)) {
    if (factorizations(rho, mu.degree).empty()) continue;
    bool extends_mu = false, extends_nu = false;
    for (const auto& [a, b] : factorizations(rho, mu.degree))
      if (a == mu) extends_mu = true;
    for (const auto& [a, b] : factorizations(rho, nu.degree))
      if (a == nu) extends_nu = true;
    if (extends_mu && extends_nu) out.push_back(rho);
  }
  return out;
}

std::vector<Morph> KGraph::mce_pairing(const Morph& mu, const Morph& nu) const {
  std::vector<Morph> out;
  if (mu.rng != nu.rng) return out;
  const std::vector<int> m = max_deg(mu.degree, nu.degree);
  if (!leq_deg(m, spec_.degree_cap))
    fail(ErrorKind::Resource, "mce degree exceeds the enumeration cap");
  std::set<Morph> from_mu, from_nu;
  for (const Morph& ext : morphisms_at(sub_deg(m, mu.degree), mu.src))
    from_mu.insert(compose(mu, ext));
  for (const Morph& ext : morphisms_at(sub_deg(m, nu.degree), nu.src))
    from_nu.insert(compose(nu, ext));
  std::set_intersection(from_mu.begin(), from_mu.end(), from_nu.begin(),
                        from_nu.end(), std::back_inserter(out));
  return out;
}

AperiodicityResult KGraph::aperiodicity(const std::vector<int>& pair_cap,
                                        int depth) const {
  AperiodicityResult res;
  std::vector<int> depth_cap(spec_.colors, depth);
  // collect candidate pairs
  std::vector<Morph> all;
  for (const auto& d : degrees_upto(pair_cap))
    for (const Morph& m : morphisms(d)) all.push_back(m);
  for (const Morph& mu : all)
    for (const Morph& nu : all) {
      if (!(mu < nu) || mu.src != nu.src) continue;
      ++res.pairs_checked;
      bool separated = false;
      bool all_candidates_within_cap = true;
      for (const auto& ld : degrees_upto(depth_cap)) {
        if (!leq_deg(add_deg(max_deg(mu.degree, nu.degree), ld), spec_.degree_cap)) {
          all_candidates_within_cap = false;
          continue;
        }
        for (const Morph& lambda : morphisms_at(ld, mu.src)) {
          if (mce(compose(mu, lambda), compose(nu, lambda)).empty()) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) {
        res.aperiodic = false;
        res.witness = {mu, nu};
        if (!all_candidates_within_cap) res.complete = false;
        return res;
      }
    }
  return res;
}

void KGraph::check_admissible() const {
  for (int v = 0; v < spec_.vertices; ++v)
    for (int c = 0; c < spec_.colors; ++c) {
      bool has_incoming = false;
      for (const auto& e : spec_.edges)
        if (e.color == c && e.rng == v) has_incoming = true;
      if (!has_incoming)
        fail(ErrorKind::Validation,
             "vertex " + std::to_string(v) + " is a source in color " +
                 std::to_string(c));
    }
}

// ---- symbolic Cuntz-Krieger algebra ----------------------------------------

CkElement CkElement::S(const KGraph& g, const Morph& lambda) {
  CkElement x(&g);
  x.add_term(lambda, g.vertex(lambda.src), 1.0);
  return x;
}

CkElement CkElement::S_dag(const KGraph& g, const Morph& lambda) {
  CkElement x(&g);
  x.add_term(g.vertex(lambda.src), lambda, 1.0);
  return x;
}

CkElement CkElement::vertex_proj(const KGraph& g, int v) {
  CkElement x(&g);
  x.add_term(g.vertex(v), g.vertex(v), 1.0);
  return x;
}

CkElement CkElement::unit(const KGraph& g) {
  CkElement x(&g);
  for (int v = 0; v < g.vertices(); ++v) x.add_term(g.vertex(v), g.vertex(v), 1.0);
  return x;
}

CkElement& CkElement::add_term(const Morph& ket, const Morph& bra, cplx c) {
  if (ket.src != bra.src)
    fail(ErrorKind::Structure, "S_k S*_b needs s(k) = s(b)");
  auto key = std::make_pair(ket, bra);
  auto it = terms_.find(key);
  cplx v = (it == terms_.end() ? cplx(0.0) : it->second) + c;
  if (std::abs(v) <= 1e-14) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(std::move(key), v);
  } else {
    it->second = v;
  }
  return *this;
}

CkElement ck_mul(const CkElement& x, const CkElement& y) {
  if (x.graph() != y.graph())
    fail(ErrorKind::Structure, "operands belong to different k-graphs");
  const KGraph& g = *x.graph();
  CkElement out(&g);
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms()) {
      const Morph& mu = tx.second;
      const Morph& nu = ty.first;
      // S*_mu S_nu = sum over rho in MCE(mu, nu) of S_alpha S*_beta with
      // rho = mu alpha = nu beta
      for (const Morph& rho : g.mce(mu, nu)) {
        auto fa = g.factorizations(rho, mu.degree);
        auto fb = g.factorizations(rho, nu.degree);
        const Morph* alpha = nullptr;
        const Morph* beta = nullptr;
        for (const auto& [a, b] : fa)
          if (a == mu) alpha = &b;
        for (const auto& [a, b] : fb)
          if (a == nu) beta = &b;
        if (!alpha || !beta)
          fail(ErrorKind::Consistency, "mce element does not factor as expected");
        out.add_term(g.compose(tx.first, *alpha), g.compose(ty.second, *beta),
                     cx * cy);
      }
    }
  return out;
}

CkElement ck_add(const CkElement& x, const CkElement& y) {
  CkElement out = x;
  for (const auto& [t, c] : y.terms()) out.add_term(t.first, t.second, c);
  return out;
}

CkElement ck_scale(cplx c, const CkElement& x) {
  CkElement out(x.graph());
  for (const auto& [t, v] : x.terms()) out.add_term(t.first, t.second, c * v);
  return out;
}

CkElement ck_adjoint(const CkElement& x) {
  CkElement out(x.graph());
  for (const auto& [t, v] : x.terms()) out.add_term(t.second, t.first, std::conj(v));
  return out;
}

bool ck_is_zero(const CkElement& x, double tol) {
  for (const auto& [t, v] : x.terms())
    if (std::abs(v) > tol) return false;
  return true;
}

CkElement ck_expand(const CkElement& x, const std::vector<int>& level) {
  const KGraph& g = *x.graph();
  CkElement out(&g);
  for (const auto& [t, c] : x.terms()) {
    std::vector<int> ext(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
      ext[i] = level[i] - t.first.degree[i];
      if (ext[i] < 0)
        fail(ErrorKind::Config, "expansion level below an existing term degree");
    }
    for (const Morph& alpha : g.morphisms_at(ext, t.first.src))
      out.add_term(g.compose(t.first, alpha), g.compose(t.second, alpha), c);
  }
  return out;
}

bool ck_equal(const CkElement& x, const CkElement& y, double tol) {
  if (x.graph() != y.graph()) return false;
  std::vector<int> level(static_cast<std::size_t>(x.graph()->colors()), 0);
  for (const auto& [t, c] : x.terms())
    for (std::size_t i = 0; i < level.size(); ++i)
      level[i] = std::max(level[i], t.first.degree[i]);
  for (const auto& [t, c] : y.terms())
    for (std::size_t i = 0; i < level.size(); ++i)
      level[i] = std::max(level[i], t.first.degree[i]);
  CkElement ex = ck_expand(x, level);
  CkElement ey = ck_expand(y, level);
  for (const auto& [t, c] : ey.terms()) ex.add_term(t.first, t.second, -c);
  return ck_is_zero(ex, tol);
}

KFunctor::KFunctor(Group target, std::map<int, GroupElement> edge_values)
    : target_(std::move(target)), edge_values_(std::move(edge_values)) {
  if (!target_.is_abelian())
    fail(ErrorKind::Config, "functor target must be abelian");
}

KFunctor KFunctor::degree(const KGraph& g) {
  Group target = Group::lattice(g.colors());
  std::map<int, GroupElement> vals;
  for (const auto& e : g.edges()) {
    GroupElement v = target.id();
    v.v[e.color] = 1;
    vals.emplace(e.id, std::move(v));
  }
  return KFunctor(std::move(target), std::move(vals));
}

GroupElement KFunctor::value(const KGraph&, const Morph& m) const {
  GroupElement acc = target_.id();
  for (int id : m.seq) {
    auto it = edge_values_.find(id);
    if (it == edge_values_.end())
      fail(ErrorKind::Config,
           "functor has no value for edge " + std::to_string(id));
    acc = target_.mul(acc, it->second);
  }
  return acc;
}

GroupElement KFunctor::term_degree(const KGraph& g, const Morph& ket,
                                   const Morph& bra) const {
  if (ket.src != bra.src) fail(ErrorKind::Domain, "term is not a valid S S* pair");
  return target_.mul(value(g, ket), target_.inv(value(g, bra)));
}

void KFunctor::validate(const KGraph& g) const {
  for (const auto& e : g.edges())
    if (!edge_values_.count(e.id))
      fail(ErrorKind::Config, "functor must assign a value to every edge");
  // constant on commuting squares: F(e) F(f) = F(f') F(e')
  for (const auto& sq : g.squares()) {
    GroupElement lhs =
        target_.mul(edge_values_.at(sq[0]), edge_values_.at(sq[1]));
    GroupElement rhs =
        target_.mul(edge_values_.at(sq[2]), edge_values_.at(sq[3]));
    if (!(target_.canon(lhs) == target_.canon(rhs)))
      fail(ErrorKind::Validation, "functor is not constant on a square");
  }
}

}  // namespace gradealg
