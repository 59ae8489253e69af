#pragma once

#include <memory>
#include <string>
#include <vector>

namespace qoc {

/// Finite group as a Cayley table over element indices 0..n-1.
/// Index 0 is always the identity. Immutable after construction.
struct GroupTable {
  int n = 0;
  std::vector<int> table;  // row-major, table[i*n+j] = index of g_i * g_j
  std::vector<int> inv;    // inv[i] * i = identity
  std::string name;

  int mul(int i, int j) const { return table[std::size_t(i) * n + j]; }
  int inverse(int i) const { return inv[std::size_t(i)]; }

  int element_order(int i) const;
  bool is_abelian() const;
  /// Sorted multiset of element orders; a cheap isomorphism invariant.
  std::vector<int> order_multiset() const;
  /// Indices of the elements in the center.
  std::vector<int> center() const;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Validates the Cayley-table axioms (identity at index 0, Latin square,
/// associativity) and fills inverses. Throws NotAGroup / IdentityNotFirst.
GroupTable build_from_table(const std::vector<std::vector<int>>& raw,
                            std::string name = "");

/// Cyclic group C_n, table[i][j] = (i+j) mod n.
GroupTable build_cyclic(int n);

/// Dihedral group of order 2m: <r,s | r^m = s^2 = 1, srs = r^-1>,
/// elements ordered 1, r, ..., r^(m-1), s, rs, ..., r^(m-1)s.
GroupTable build_dihedral(int m);

/// Dicyclic group of order 8t+4: <a,b | a^(2t+1) = b^2, b^4 = 1,
/// b^-1 a b = a^-1>, elements ordered a^i b^j with a of order 4t+2.
GroupTable build_dicyclic(int t);

/// Split metacyclic group C_m x| C_r with c a c^-1 = a^k; requires
/// k^r = 1 (mod m) and gcd(k, m) = 1. Elements a^i c^j indexed j*m + i.
GroupTable build_metacyclic(int m, int r, int k);

/// Generalized dihedral group of an abelian group A: A x| C2 with the
/// involution acting by inversion. Order 2|A|.
GroupTable build_generalized_dihedral(const GroupTable& a);

/// Direct product; pair (x, y) is indexed x*|h| + y.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

/// Relabels elements: new index i is old index perm[i]. perm[0] must be 0.
GroupTable reorder_group(const GroupTable& g, const std::vector<int>& perm,
                         std::string name = "");

/// Greedy small generating set (never contains the identity).
std::vector<int> minimal_generating_set(const GroupTable& g);

/// Backtracking isomorphism test for orders <= 100; order-multiset
/// prefilter, then generator-image search. Throws TooLarge above 100.
bool is_isomorphic_small(const GroupTable& g, const GroupTable& h);

}  // namespace qoc
