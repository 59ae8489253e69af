#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qoc/cocycle.hpp"
#include "qoc/extension.hpp"
#include "qoc/matrix.hpp"

namespace qoc {

enum class SearchMode { exhaustive, orbit, random };

struct SearchParams {
  SearchMode mode = SearchMode::exhaustive;
  uint64_t seed = 0;    // random mode
  uint64_t budget = 0;  // 0 = mode default (exhaustive: unlimited)
  int jobs = 1;
  std::size_t witness_cap = 64;
  // When nonzero (power of two), exhaustive workers recompute all row sums
  // from scratch at that step interval and abort on any mismatch.
  uint64_t self_check_interval = 0;
};

/// Canonical witness: the lexicographically least coboundary coordinate
/// vector in the shift orbit, relative to the CocycleSpace basis.
struct SearchWitness {
  int class_index = 0;  // 0 = coboundary class, 1 = nontrivial class
  uint64_t cobo_coords = 0;
  uint64_t orbit_size = 0;
};

struct ClassReport {
  std::string label;
  uint64_t examined = 0;  // states walked (orbit mode: representatives)
  uint64_t qo_count = 0;  // orbit mode: QO orbits among representatives
  uint64_t qo_total = 0;  // sum of orbit sizes of QO orbits; else == qo_count
};

struct SearchReport {
  std::string group_name;
  int order = 0;
  SearchMode mode = SearchMode::exhaustive;
  uint64_t space_size = 0;  // states examined over all classes
  bool partial = false;     // budget ran out
  std::vector<ClassReport> classes;
  std::vector<SearchWitness> witnesses;  // capped, sorted (class, lex coords)
  double elapsed_seconds = 0;
  int dim_z2 = 0;
  int coboundary_dim = 0;
};

/// Gray-code enumeration of each cohomology class (class representative
/// XOR coboundary span) with O(rows) incremental row-sum updates; counts
/// quasi-orthogonal cocycles and collects canonical witnesses.
/// Requires |G| = 4t+2 (WrongOrderClass); exhaustive mode additionally
/// requires |G| <= 30 (TooLargeForExhaustive).
SearchReport search_quasi_orthogonal(GroupPtr g, const SearchParams& params);

/// Rebuilds the witness cocycle from its coordinates.
Cocycle witness_cocycle(const CocycleSpace& space, const SearchWitness& w);

struct ConjectureResult {
  int t = 0;
  bool verified = false;
  bool budget_exhausted = false;
  std::optional<Cocycle> witness;  // over D_{4t+2}, non-coboundary class
  bool extension_is_dicyclic = false;
  std::optional<TransversalCertificate> qhs;
};

/// For each t <= t_max, searches the non-coboundary class over D_{4t+2}
/// for a quasi-orthogonal cocycle, builds E_psi, confirms E_psi is
/// Q_{8t+4}, and certifies the canonical quasi-Hadamard subset.
/// budget_per_t = 0 uses the default (covers the full class for t <= 6).
std::vector<ConjectureResult> verify_conjecture(int t_max,
                                                uint64_t budget_per_t = 0);

struct MaxdetResult {
  BigInt best_abs_det;
  Cocycle witness;  // first state attaining the maximum (class order, Gray order)
  bool meets_ew = false;
  // True when every state attaining the maximum has RE = 4t.
  bool all_best_quasi_orthogonal = false;
  uint64_t examined = 0;
};

/// Exact |det| maximization over all cocycles of g (or only the
/// quasi-orthogonal ones when restrict_qo). Requires |G| = 4t+2 and
/// |G| <= 14.
MaxdetResult maxdet_search(GroupPtr g, bool restrict_qo = false);

}  // namespace qoc
