#pragma once

#include <optional>
#include <vector>

#include "qoc/cocycle.hpp"
#include "qoc/matrix.hpp"

namespace qoc {

/// Sum of |row sum| over all non-initial rows. Requires a normalized
/// first row (throws NotNormalizedFirstRow).
long long row_excess(const SignMatrix& m);

/// Exact Grammian M M^T.
IntMatrix grammian(const SignMatrix& m);

/// Number of rows containing an even number of +1 entries.
int even_row_count(const SignMatrix& m);

/// True iff every non-initial row of the cocyclic matrix sums to zero,
/// i.e. the matrix is Hadamard.
bool is_orthogonal(const Cocycle& psi);

/// Witness record for quasi-orthogonality over a group of order 4t+2.
struct QOCertificate {
  int t = 0;
  long long row_excess = 0;
  int even_rows = 0;
  std::vector<int> x1_plus;   // rows with sum +2
  std::vector<int> x1_minus;  // rows with sum -2
  std::vector<int> x2;        // rows with sum 0
  bool gram_abs_block_ok = false;
};

/// Row-sum characterization: succeeds iff |X1| = 2t and |X2| = 2t+1.
/// Requires |G| = 4t+2 >= 6 (throws WrongOrderClass).
std::optional<QOCertificate> quasi_orthogonal_certificate(const Cocycle& psi);

/// True iff abs(Gr(M)), after moving even rows first (parity determines
/// block membership, no permutation search), equals
/// diag(4tI + 2J, 4tI + 2J).
bool gram_block_form(const SignMatrix& m);

/// Stable permutation placing even rows before odd rows; perm[new] = old.
std::vector<int> parity_sort_permutation(const SignMatrix& m);

/// Maximal |det| of a +-1 matrix of order 4t+2 (Ehlich–Wojtas):
/// 2(4t+1)(4t)^(2t).
BigInt ew_bound(int t);

/// Order-2q matrix K (x) A where A is the renormalized quadratic-residue
/// circulant core for a prime q = 3 (mod 4) and K = [[1,1],[1,-1]].
/// Throws NotValidPrime otherwise.
SignMatrix circulant_core_matrix(int q);

}  // namespace qoc
