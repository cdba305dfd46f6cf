#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradealg/error.hpp"

namespace gradealg {

// A group element is an integer tuple. The owning Group fixes its meaning:
// lattice coordinates, a residue tuple, a Heisenberg triple, or a single
// multiplication-table index.
struct GroupElement {
  std::vector<std::int64_t> v;

  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> coords) : v(std::move(coords)) {}
  GroupElement(std::initializer_list<std::int64_t> coords) : v(coords) {}

  auto operator<=>(const GroupElement&) const = default;
};

// Discrete groups with exact integer arithmetic. Supported kinds:
//   LatticeMod  - prod_i Z/q_i with q_i = 0 meaning a free Z factor
//                 (covers Z, Z^k, Z/q and finite abelian products)
//   Heisenberg  - H_3(Z) on integer triples (x, y, z)
//   FiniteTable - arbitrary finite group given by its multiplication table
class Group {
 public:
  enum class Kind { LatticeMod, Heisenberg, FiniteTable };

  static Group integers() { return lattice_mod({0}); }
  static Group lattice(int k);
  static Group cyclic(std::int64_t q) { return lattice_mod({q}); }
  static Group lattice_mod(std::vector<std::int64_t> moduli);
  static Group heisenberg();
  // table[i][j] = index of g_i * g_j; validated (identity, inverses,
  // associativity) on construction.
  static Group finite_table(std::vector<std::vector<int>> table);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }

  GroupElement id() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement canon(const GroupElement& a) const;
  GroupElement pow(const GroupElement& a, std::int64_t n) const;

  bool valid(const GroupElement& a) const;
  bool is_abelian() const;
  bool finite() const;
  std::optional<std::size_t> order() const;
  // All elements of a finite group; Domain error for infinite groups.
  std::vector<GroupElement> elements() const;

  // Canonical length used by the weight formula menu: l1 with circular
  // distance on finite factors (LatticeMod), max(|g|_1, |g^-1|_1) for
  // Heisenberg, discrete 0/1 length for table groups.
  double canonical_length(const GroupElement& a) const;

  std::string to_string(const GroupElement& a) const;
  std::string describe() const;

  bool operator==(const Group& o) const;

 private:
  Kind kind_ = Kind::LatticeMod;
  int rank_ = 1;
  std::vector<std::int64_t> moduli_;          // LatticeMod
  std::vector<std::vector<int>> table_;       // FiniteTable
  std::vector<int> table_inv_;                // FiniteTable
  int table_id_ = 0;                          // FiniteTable
  bool abelian_ = true;
};

// Finite generating set; must contain the identity. With
// symmetric_closure the inverses are adjoined when expanding balls.
struct GeneratingSet {
  std::vector<GroupElement> elems;
  bool symmetric_closure = true;

  static GeneratingSet standard(const Group& g);
  // Elements actually used when expanding (inverses adjoined if requested).
  std::vector<GroupElement> expansion_set(const Group& g) const;
  void validate(const Group& g) const;
};

// Word-length table out to a radius, built by breadth-first expansion.
// shells[n] holds the elements of word length exactly n (shells[0] = {e}).
struct BallTable {
  std::map<GroupElement, int> dist;
  std::vector<std::vector<GroupElement>> shells;
  int radius = 0;
  bool exhausted = false;  // ball stopped growing before the radius
  bool truncated = false;  // element cap hit; table is partial

  std::size_t size() const { return dist.size(); }
  const std::vector<GroupElement>& shell(int n) const;
};

BallTable build_ball(const Group& g, const GeneratingSet& V, int radius,
                     std::size_t element_cap = 2'000'000);

// Minimal n with g in V^n; nullopt when not reached within radius_cap.
std::optional<int> word_length(const Group& g, const GeneratingSet& V,
                               const GroupElement& x, int radius_cap);

}  // namespace gradealg
