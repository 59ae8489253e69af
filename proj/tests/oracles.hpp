// Test-only brute-force oracles, kept independent of the library's
// solver/search paths on purpose.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <qoc/group.hpp>
#include <qoc/matrix.hpp>
#include <random>
#include <vector>

namespace oracle {

// Direct check of the cocycle identity; no normalization shortcuts.
inline bool naive_is_cocycle(const qoc::SignMatrix& m, const qoc::GroupTable& g) {
  if (m.at(0, 0) != 1) return false;
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      for (int z = 0; z < g.n; ++z)
        if (m.at(x, y) * m.at(g.mul(x, y), z) != m.at(x, g.mul(y, z)) * m.at(y, z))
          return false;
  return true;
}

// Enumerates every normalized sign matrix over g (2^((n-1)^2) candidates,
// practical only for n <= 6) and returns the cocycles found.
inline std::vector<qoc::SignMatrix> enumerate_cocycles_bruteforce(
    const qoc::GroupTable& g) {
  const int n = g.n;
  const int bits = (n - 1) * (n - 1);
  // Precompute the nontrivial triples once; order them for early rejection.
  struct Triple { int x, y, z, xy, yz; };
  std::vector<Triple> triples;
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int z = 1; z < n; ++z)
        triples.push_back({x, y, z, g.mul(x, y), g.mul(y, z)});

  std::vector<qoc::SignMatrix> out;
  qoc::SignMatrix m(n, 1);
  for (uint64_t v = 0; v < (uint64_t(1) << bits); ++v) {
    uint64_t w = v;
    for (int x = 1; x < n; ++x)
      for (int y = 1; y < n; ++y) {
        m.put(x, y, (w & 1) ? int8_t(-1) : int8_t(1));
        w >>= 1;
      }
    bool ok = true;
    for (const Triple& t : triples) {
      if (m.at(t.x, t.y) * m.at(t.xy, t.z) != m.at(t.x, t.yz) * m.at(t.y, t.z)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(m);
  }
  return out;
}

inline long long naive_row_excess(const qoc::SignMatrix& m) {
  long long re = 0;
  for (int i = 1; i < m.n; ++i) re += std::llabs(m.row_sum(i));
  return re;
}

// Cofactor-expansion determinant, O(n!).
inline long long cofactor_det(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  long long det = 0, sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    det += sign * a[0][c] * cofactor_det(minor);
    sign = -sign;
  }
  return det;
}

// Random normalized phi for coboundary tests.
inline std::vector<int8_t> random_phi(int n, std::mt19937_64& rng) {
  std::vector<int8_t> phi(std::size_t(n), 1);
  for (int i = 1; i < n; ++i) phi[std::size_t(i)] = (rng() & 1) ? int8_t(1) : int8_t(-1);
  return phi;
}

}  // namespace oracle
