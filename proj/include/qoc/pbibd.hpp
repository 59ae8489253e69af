#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "qoc/extension.hpp"
#include "qoc/matrix.hpp"

namespace qoc {

/// Phi = [[A, A-bar], [A-bar, A]] with A = (J+M)/2, as a 0/1 matrix.
IntMatrix expand_matrix(const SignMatrix& m);

/// The +-1 expanded matrix [[M, -M], [-M, M]].
IntMatrix expanded_pm_matrix(const SignMatrix& m);

struct AssociationScheme {
  int size = 0;  // 8t+4
  std::array<IntMatrix, 5> a;
  // p^k_{ij} for i <= j, keyed (i,j,k); filled by verify_association_scheme.
  std::map<std::tuple<int, int, int>, long long> structure_constants;
};

/// The five associate matrices built from a parity-sorted order-(4t+2)
/// matrix M whose Grammian has the exact two-block form:
///   D1 = (Gr(M) + 2(I2 (x) J) - (4t+4) I) / 4,
///   D2 = (2(I2 (x) J) + 4t I - Gr(M)) / 4,
///   A0 = I,  A1 = (J2-I2) (x) I,  A2 = J2 (x) (J2-I2) (x) J,
///   A3 = I2 (x) D1 + (J2-I2) (x) D2,  A4 = I2 (x) D2 + (J2-I2) (x) D1.
/// Throws NotBlockGramForm when D1/D2 are not 0/1.
AssociationScheme associate_matrices(const SignMatrix& m, int t);

struct SchemeCheckResult {
  bool ok = false;
  std::string violated;  // description of the first failed condition
};

/// Checks A0 = I, sum A_i = J, symmetry, and closure of products with
/// nonnegative integer structure constants (recorded on the scheme).
SchemeCheckResult verify_association_scheme(AssociationScheme& scheme);

struct PBIBDCertificate {
  int v = 0, b = 0, r = 0, k = 0;
  std::array<int, 4> lambdas{};  // (0, 2t+1, 2t+2, 2t)
  IntMatrix incidence;
  AssociationScheme scheme;
};

/// Succeeds iff Phi Phi^T = (4t+2)A0 + (2t+1)A2 + (2t+2)A3 + 2t A4 and
/// J Phi = (4t+2) J.
std::optional<PBIBDCertificate> verify_pbibd(const IntMatrix& phi,
                                             const AssociationScheme& scheme,
                                             int t);
/// Names the first violated equation instead of just failing.
std::optional<PBIBDCertificate> verify_pbibd(const IntMatrix& phi,
                                             const AssociationScheme& scheme,
                                             int t, std::string* violation);

/// True iff the +-1 version of phi is group-developed over e under the
/// canonical indexing (entry (x,y) = u-component of xy) and z stabilizes
/// every point class {(1,g), (-1,g)} setwise.
bool verify_regular_action(const IntMatrix& phi, const ExtensionGroup& e);

/// Extracts R = {x : Phi[1,x] = 1} and S = {x in R : (Phi Phi^T)[1,x] =
/// 2t+1} and returns the verified relative-QDS certificate. Requires phi
/// to pass verify_pbibd and verify_regular_action (throws
/// PreconditionFailed naming the failing check).
TransversalCertificate pbibd_to_rqds(const IntMatrix& phi, const ExtensionGroup& e);

}  // namespace qoc
