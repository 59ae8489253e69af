#pragma once

#include <optional>
#include <vector>

#include "qoc/gf2.hpp"
#include "qoc/group.hpp"
#include "qoc/matrix.hpp"

namespace qoc {

/// Normalized Z2-valued 2-cocycle over a group, stored as its sign matrix.
/// coeffs, when present, are coordinates in a CocycleSpace basis.
struct Cocycle {
  GroupPtr group;
  SignMatrix signs;
  std::optional<BitVec> coeffs;

  int order() const { return group->n; }
  int8_t at(int g, int h) const { return signs.at(g, h); }
};

/// Free-position bit layout for order-n cocycles: entry (g,h) with
/// g,h >= 1 sits at bit (g-1)*(n-1) + (h-1); 1 means sign -1.
BitVec sign_bits(const SignMatrix& m);
SignMatrix bits_to_signs(int n, const BitVec& bits);

/// True iff m is normalized (m[0][0] = +1) and satisfies the cocycle
/// identity for all triples. Throws DimensionMismatch when sizes differ.
bool is_cocycle(const SignMatrix& m, const GroupTable& g);

/// Validating constructor; throws NotACocycle.
Cocycle make_cocycle(GroupPtr group, SignMatrix signs);

/// The coboundary of phi: G -> {-1,+1} with phi[0] = +1:
/// (d phi)(g,h) = phi(g) phi(h) phi(gh). Throws NotNormalized.
Cocycle coboundary(GroupPtr group, const std::vector<int8_t>& phi);

/// The cocyclic matrix of psi under the group's fixed element ordering.
SignMatrix cocyclic_matrix(const Cocycle& psi);

/// Shift action psi |-> psi * d(psi_a) where psi_a(x) = psi(a, x).
/// Composition satisfies shift(shift(psi,a),b) = shift(psi, ab).
Cocycle shift(const Cocycle& psi, int a);

/// The full shift orbit {shift(psi, a) | a in G}, deduplicated.
std::vector<Cocycle> shift_orbit(const Cocycle& psi);

/// Relabels rows and columns by the group relabeling perm (see
/// reorder_group); the result is the same cocycle displayed over the
/// reordered group.
Cocycle reorder_cocycle(const Cocycle& psi, const std::vector<int>& perm,
                        GroupPtr reordered);

/// Z^2(G, Z2) as a GF(2) vector space: a basis whose first
/// coboundary_dim() vectors span the coboundary subspace B^2, completed
/// with one representative per independent H^2 direction.
class CocycleSpace {
 public:
  /// Solves the cocycle identity as a homogeneous GF(2) system over the
  /// (n-1)^2 free positions. Requires |G| <= 44 (throws TooLarge).
  static CocycleSpace compute(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  int dim_z2() const { return int(basis_.size()); }
  int coboundary_dim() const { return cb_dim_; }
  int dim_h2() const { return dim_z2() - cb_dim_; }

  const std::vector<BitVec>& basis() const { return basis_; }
  Cocycle basis_cocycle(int i) const;

  /// One cocycle per nontrivial H^2 generator (basis vectors past the
  /// coboundary block). For |G| = 4t+2 there is exactly one.
  const std::vector<Cocycle>& h2_reps() const { return h2_reps_; }

  /// Cocycle with the given coefficients over basis() (size dim_z2()).
  Cocycle from_coeffs(const BitVec& coeffs) const;

  /// Coefficients of psi over basis(), or nullopt if psi is not in the
  /// span (i.e. not a cocycle over this group).
  std::optional<BitVec> coeffs_of(const Cocycle& psi) const;

  bool is_coboundary_element(const Cocycle& psi) const;

  /// Coordinates within the coboundary block only; nullopt when the bits
  /// are not a coboundary.
  std::optional<BitVec> coboundary_coords(const BitVec& bits) const;
  BitVec coboundary_combine(const BitVec& coords) const;

 private:
  GroupPtr group_;
  int cb_dim_ = 0;
  std::vector<BitVec> basis_;
  std::vector<Cocycle> h2_reps_;
  Rref cb_rref_{0};
  CoordSpan full_span_{0};
};

/// Convenience wrapper matching the operation name.
inline CocycleSpace cocycle_space(GroupPtr g) { return CocycleSpace::compute(std::move(g)); }

}  // namespace qoc
