#include "gradealg/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

namespace gradealg {

namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t q) {
  if (q == 0) return x;
  std::int64_t r = x % q;
  return r < 0 ? r + q : r;
}

double l1_of(const std::vector<std::int64_t>& v) {
  double s = 0;
  for (auto x : v) s += std::llabs(x);
  return s;
}

}  // namespace

Group Group::lattice(int k) {
  if (k < 1) fail(ErrorKind::Config, "lattice rank must be >= 1");
  return lattice_mod(std::vector<std::int64_t>(k, 0));
}

Group Group::lattice_mod(std::vector<std::int64_t> moduli) {
  if (moduli.empty()) fail(ErrorKind::Config, "lattice_mod needs at least one factor");
  for (auto q : moduli)
    if (q < 0) fail(ErrorKind::Config, "lattice_mod moduli must be >= 0");
  Group g;
  g.kind_ = Kind::LatticeMod;
  g.rank_ = static_cast<int>(moduli.size());
  g.moduli_ = std::move(moduli);
  g.abelian_ = true;
  return g;
}

Group Group::heisenberg() {
  Group g;
  g.kind_ = Kind::Heisenberg;
  g.rank_ = 3;
  g.abelian_ = false;
  return g;
}

Group Group::finite_table(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(ErrorKind::Config, "empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorKind::Config, "multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= n) fail(ErrorKind::Config, "table entry out of range");
  }
  int id = -1;
  for (int i = 0; i < n; ++i) {
    bool is_id = true;
    for (int j = 0; j < n; ++j)
      if (table[i][j] != j || table[j][i] != j) { is_id = false; break; }
    if (is_id) { id = i; break; }
  }
  if (id < 0) fail(ErrorKind::Config, "table group has no identity");
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (table[i][j] == id && table[j][i] == id) { inv[i] = j; break; }
    if (inv[i] < 0) fail(ErrorKind::Config, "table group element lacks an inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail(ErrorKind::Config, "multiplication table is not associative");
  bool abelian = true;
  for (int a = 0; a < n && abelian; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a][b] != table[b][a]) { abelian = false; break; }

  Group g;
  g.kind_ = Kind::FiniteTable;
  g.rank_ = 1;
  g.table_ = std::move(table);
  g.table_inv_ = std::move(inv);
  g.table_id_ = id;
  g.abelian_ = abelian;
  return g;
}

GroupElement Group::id() const {
  switch (kind_) {
    case Kind::LatticeMod: return GroupElement(std::vector<std::int64_t>(rank_, 0));
    case Kind::Heisenberg: return GroupElement({0, 0, 0});
    case Kind::FiniteTable: return GroupElement({table_id_});
  }
  fail(ErrorKind::Config, "bad group kind");
}

bool Group::valid(const GroupElement& a) const {
  if (static_cast<int>(a.v.size()) != rank_) return false;
  if (kind_ == Kind::LatticeMod) {
    for (int i = 0; i < rank_; ++i)
      if (moduli_[i] > 0 && (a.v[i] < 0 || a.v[i] >= moduli_[i])) return false;
  } else if (kind_ == Kind::FiniteTable) {
    if (a.v[0] < 0 || a.v[0] >= static_cast<std::int64_t>(table_.size())) return false;
  }
  return true;
}

GroupElement Group::canon(const GroupElement& a) const {
  if (kind_ != Kind::LatticeMod) return a;
  GroupElement r = a;
  for (int i = 0; i < rank_; ++i) r.v[i] = mod_reduce(r.v[i], moduli_[i]);
  return r;
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  switch (kind_) {
    case Kind::LatticeMod: {
      GroupElement r;
      r.v.resize(rank_);
      for (int i = 0; i < rank_; ++i) r.v[i] = mod_reduce(a.v[i] + b.v[i], moduli_[i]);
      return r;
    }
    case Kind::Heisenberg:
      return GroupElement({a.v[0] + b.v[0], a.v[1] + b.v[1],
                           a.v[2] + b.v[2] + a.v[0] * b.v[1]});
    case Kind::FiniteTable:
      return GroupElement({table_[a.v[0]][b.v[0]]});
  }
  fail(ErrorKind::Config, "bad group kind");
}

GroupElement Group::inv(const GroupElement& a) const {
  switch (kind_) {
    case Kind::LatticeMod: {
      GroupElement r;
      r.v.resize(rank_);
      for (int i = 0; i < rank_; ++i) r.v[i] = mod_reduce(-a.v[i], moduli_[i]);
      return r;
    }
    case Kind::Heisenberg:
      return GroupElement({-a.v[0], -a.v[1], -a.v[2] + a.v[0] * a.v[1]});
    case Kind::FiniteTable:
      return GroupElement({table_inv_[a.v[0]]});
  }
  fail(ErrorKind::Config, "bad group kind");
}

GroupElement Group::pow(const GroupElement& a, std::int64_t n) const {
  GroupElement base = n < 0 ? inv(a) : a;
  std::int64_t m = n < 0 ? -n : n;
  GroupElement r = id();
  for (std::int64_t i = 0; i < m; ++i) r = mul(r, base);
  return r;
}

bool Group::is_abelian() const { return abelian_; }

bool Group::finite() const {
  if (kind_ == Kind::FiniteTable) return true;
  if (kind_ == Kind::Heisenberg) return false;
  return std::all_of(moduli_.begin(), moduli_.end(), [](auto q) { return q > 0; });
}

std::optional<std::size_t> Group::order() const {
  if (!finite()) return std::nullopt;
  if (kind_ == Kind::FiniteTable) return table_.size();
  std::size_t n = 1;
  for (auto q : moduli_) n *= static_cast<std::size_t>(q);
  return n;
}

std::vector<GroupElement> Group::elements() const {
  if (!finite()) fail(ErrorKind::Domain, "elements() needs a finite group");
  std::vector<GroupElement> out;
  if (kind_ == Kind::FiniteTable) {
    for (std::size_t i = 0; i < table_.size(); ++i)
      out.push_back(GroupElement({static_cast<std::int64_t>(i)}));
    return out;
  }
  out.push_back(GroupElement(std::vector<std::int64_t>(rank_, 0)));
  for (int i = 0; i < rank_; ++i) {
    std::vector<GroupElement> next;
    for (const auto& e : out)
      for (std::int64_t x = 0; x < moduli_[i]; ++x) {
        GroupElement f = e;
        f.v[i] = x;
        next.push_back(f);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double Group::canonical_length(const GroupElement& a) const {
  switch (kind_) {
    case Kind::LatticeMod: {
      double s = 0;
      for (int i = 0; i < rank_; ++i) {
        std::int64_t q = moduli_[i];
        std::int64_t x = mod_reduce(a.v[i], q);
        s += (q > 0) ? static_cast<double>(std::min(x, q - x))
                     : static_cast<double>(std::llabs(a.v[i]));
      }
      return s;
    }
    case Kind::Heisenberg:
      return std::max(l1_of(a.v), l1_of(inv(a).v));
    case Kind::FiniteTable:
      return a.v[0] == table_id_ ? 0.0 : 1.0;
  }
  fail(ErrorKind::Config, "bad group kind");
}

std::string Group::to_string(const GroupElement& a) const {
  std::ostringstream os;
  if (a.v.size() == 1) {
    os << a.v[0];
  } else {
    os << "(";
    for (std::size_t i = 0; i < a.v.size(); ++i) os << (i ? "," : "") << a.v[i];
    os << ")";
  }
  return os.str();
}

std::string Group::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::LatticeMod: {
      os << "lattice_mod[";
      for (int i = 0; i < rank_; ++i) os << (i ? "," : "") << moduli_[i];
      os << "]";
      break;
    }
    case Kind::Heisenberg: os << "heisenberg"; break;
    case Kind::FiniteTable: os << "table[" << table_.size() << "]"; break;
  }
  return os.str();
}

bool Group::operator==(const Group& o) const {
  return kind_ == o.kind_ && rank_ == o.rank_ && moduli_ == o.moduli_ &&
         table_ == o.table_;
}

GeneratingSet GeneratingSet::standard(const Group& g) {
  GeneratingSet V;
  V.elems.push_back(g.id());
  switch (g.kind()) {
    case Group::Kind::LatticeMod:
      for (int i = 0; i < g.rank(); ++i) {
        GroupElement e = g.id();
        e.v[i] = 1;
        V.elems.push_back(g.canon(e));
      }
      break;
    case Group::Kind::Heisenberg:
      V.elems.push_back(GroupElement({1, 0, 0}));
      V.elems.push_back(GroupElement({0, 1, 0}));
      break;
    case Group::Kind::FiniteTable:
      for (const auto& e : g.elements()) V.elems.push_back(e);
      break;
  }
  std::sort(V.elems.begin(), V.elems.end());
  V.elems.erase(std::unique(V.elems.begin(), V.elems.end()), V.elems.end());
  return V;
}

void GeneratingSet::validate(const Group& g) const {
  bool has_id = false;
  for (const auto& e : elems) {
    if (!g.valid(e)) fail(ErrorKind::Config, "generating set element invalid for group");
    if (g.canon(e) == g.id()) has_id = true;
  }
  if (!has_id) fail(ErrorKind::Config, "generating set must contain the identity");
}

std::vector<GroupElement> GeneratingSet::expansion_set(const Group& g) const {
  std::vector<GroupElement> out;
  for (const auto& e : elems) {
    out.push_back(g.canon(e));
    if (symmetric_closure) out.push_back(g.inv(e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<GroupElement>& BallTable::shell(int n) const {
  static const std::vector<GroupElement> empty;
  if (n < 0 || n >= static_cast<int>(shells.size())) return empty;
  return shells[n];
}

BallTable build_ball(const Group& g, const GeneratingSet& V, int radius,
                     std::size_t element_cap) {
  V.validate(g);
  if (radius < 0) fail(ErrorKind::Config, "ball radius must be >= 0");
  const auto gens = V.expansion_set(g);

  BallTable t;
  t.radius = radius;
  t.dist[g.id()] = 0;
  t.shells.push_back({g.id()});
  std::vector<GroupElement> frontier = {g.id()};
  for (int n = 1; n <= radius; ++n) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        GroupElement y = g.mul(x, s);
        if (t.dist.emplace(y, n).second) {
          next.push_back(y);
          if (t.dist.size() > element_cap) {
            t.truncated = true;
            t.radius = n - 1;
            t.shells.push_back(std::move(next));
            return t;
          }
        }
      }
    }
    if (next.empty()) {
      t.exhausted = true;
      t.radius = n - 1;
      break;
    }
    std::sort(next.begin(), next.end());
    t.shells.push_back(next);
    frontier = std::move(next);
  }
  return t;
}

std::optional<int> word_length(const Group& g, const GeneratingSet& V,
                               const GroupElement& x, int radius_cap) {
  if (radius_cap < 1) fail(ErrorKind::Config, "radius_cap must be >= 1");
  const GroupElement cx = g.canon(x);
  // Expand lazily; stop as soon as x is found.
  V.validate(g);
  const auto gens = V.expansion_set(g);
  if (cx == g.id()) return 0;
  std::map<GroupElement, int> dist;
  dist[g.id()] = 0;
  std::vector<GroupElement> frontier = {g.id()};
  for (int n = 1; n <= radius_cap; ++n) {
    std::vector<GroupElement> next;
    for (const auto& y : frontier)
      for (const auto& s : gens) {
        GroupElement z = g.mul(y, s);
        if (dist.emplace(z, n).second) {
          if (z == cx) return n;
          next.push_back(z);
        }
      }
    if (next.empty()) return std::nullopt;
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace gradealg
