#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qoc/cocycle.hpp"
#include "qoc/group.hpp"

namespace qoc {

/// Central extension E_psi of <-1> by G: elements (u, g) with
/// (u,g)(v,h) = (uv psi(g,h), gh). Index of (u, g) is g + n*[u = -1],
/// so the canonical transversal {(1,g)} is 0..n-1 and z = (-1,1) is n.
struct ExtensionGroup {
  GroupTable table;  // order 2n
  GroupPtr base;     // G, order n
  int z_element = 0;
  std::vector<int> proj;  // element -> base index

  std::vector<int> canonical_transversal() const;
};

ExtensionGroup central_extension(const Cocycle& psi);

/// Quotient of e by the central order-2 subgroup {1, z}: cosets ordered by
/// their least member. Returns the quotient table and the projection map.
std::pair<GroupTable, std::vector<int>> quotient_by_central_involution(
    const GroupTable& e, int z);

/// The cocycle psi_T(g,h) = sigma(g) sigma(h) sigma(gh)^-1 read off a
/// normalized transversal T (throws NotATransversal / NotNormalized).
/// The ExtensionGroup overload indexes G by the extension's base group;
/// the raw overload builds the quotient ordering itself.
Cocycle transversal_cocycle(const ExtensionGroup& e, const std::vector<int>& t_set);
Cocycle transversal_cocycle(const GroupTable& e, int z, const std::vector<int>& t_set);

enum class TransversalKind { quasi_hadamard_subset, relative_qds, relative_ds };

struct TransversalCertificate {
  TransversalKind kind;
  int t = 0;                  // |E| = 8t+4
  std::vector<int> transversal;
  std::vector<int> s_set;     // empty for relative_ds
  // |T cap xT| for every x outside Z, sorted by x.
  std::vector<std::pair<int, int>> profile;
};

/// Quasi-Hadamard subset test: the intersection profile takes the value
/// 2t+1 on exactly 2t+1 elements of T \ {1} (these form S) and 2t or 2t+2
/// on the rest of T. Requires |E| = 8t+4, z central of order 2, t_set a
/// normalized transversal.
std::optional<TransversalCertificate> verify_quasi_hadamard_subset(
    const GroupTable& e, int z, const std::vector<int>& t_set);

/// Relative (4t+2, 2, 4t+2, 2t+1)-quasi-difference-set test; same profile
/// computation with the S condition read coset-wise over all of E \ Z.
std::optional<TransversalCertificate> verify_relative_qds(
    const GroupTable& e, int z, const std::vector<int>& r_set);

/// Ordinary relative difference set: |R cap xR| = lambda for every
/// x in E \ N. Throws ParameterMismatch when sizes disagree.
bool verify_relative_ds(const GroupTable& e, const std::vector<int>& n_subgroup,
                        const std::vector<int>& r_set, int v, int m, int k,
                        int lambda);

/// All k-subsets D of g with every x != 1 covered exactly
/// k(k-1)/(|g|-1) times by differences d1 d2^-1. Returns empty when no
/// integral lambda exists. Requires |g| <= 16 and nontrivial k.
std::vector<std::vector<int>> ordinary_difference_set_search(const GroupTable& g,
                                                             int k);

struct ExtensionTypeResult {
  bool identified = false;
  std::string name;        // set when identified
  std::string invariants;  // always set; order/abelian/center/order multiset
};

/// Identifies E_psi among Z2 x G, C_{8t+4} and Q_{8t+4}; reports
/// invariants when no candidate matches.
ExtensionTypeResult extension_type(const Cocycle& psi);

}  // namespace qoc
