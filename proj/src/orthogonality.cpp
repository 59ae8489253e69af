#include "qoc/orthogonality.hpp"

#include <algorithm>
#include <cstdlib>

#include "qoc/error.hpp"

namespace qoc {

long long row_excess(const SignMatrix& m) {
  if (!m.first_row_all_plus())
    throw Error(ErrorCode::NotNormalizedFirstRow, "first row must be all +1");
  long long re = 0;
  for (int i = 1; i < m.n; ++i) re += std::llabs(m.row_sum(i));
  return re;
}

IntMatrix grammian(const SignMatrix& m) {
  const int n = m.n;
  IntMatrix gr(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      long long s = 0;
      for (int k = 0; k < n; ++k) s += m.at(i, k) * m.at(j, k);
      gr.put(i, j, s);
      gr.put(j, i, s);
    }
  return gr;
}

int even_row_count(const SignMatrix& m) {
  int e = 0;
  for (int i = 0; i < m.n; ++i) e += m.row_even(i);
  return e;
}

bool is_orthogonal(const Cocycle& psi) {
  const SignMatrix& m = psi.signs;
  for (int i = 1; i < m.n; ++i)
    if (m.row_sum(i) != 0) return false;
  return true;
}

std::optional<QOCertificate> quasi_orthogonal_certificate(const Cocycle& psi) {
  const int n = psi.order();
  if (n % 4 != 2 || n < 6)
    throw Error(ErrorCode::WrongOrderClass, "|G| must be 4t+2 >= 6");
  const int t = (n - 2) / 4;
  QOCertificate cert;
  cert.t = t;
  const SignMatrix& m = psi.signs;
  for (int i = 1; i < n; ++i) {
    long long s = m.row_sum(i);
    cert.row_excess += std::llabs(s);
    if (s == 2) cert.x1_plus.push_back(i);
    else if (s == -2) cert.x1_minus.push_back(i);
    else if (s == 0) cert.x2.push_back(i);
  }
  cert.even_rows = even_row_count(m);
  if (int(cert.x1_plus.size() + cert.x1_minus.size()) != 2 * t ||
      int(cert.x2.size()) != 2 * t + 1)
    return std::nullopt;
  cert.gram_abs_block_ok = gram_block_form(m);
  return cert;
}

std::vector<int> parity_sort_permutation(const SignMatrix& m) {
  std::vector<int> perm;
  perm.reserve(std::size_t(m.n));
  for (int i = 0; i < m.n; ++i)
    if (m.row_even(i)) perm.push_back(i);
  for (int i = 0; i < m.n; ++i)
    if (!m.row_even(i)) perm.push_back(i);
  return perm;
}

bool gram_block_form(const SignMatrix& m) {
  const int n = m.n;
  if (n % 4 != 2 || n < 6) return false;
  const int t = (n - 2) / 4;
  if (even_row_count(m) != 2 * t + 1) return false;
  std::vector<int> perm = parity_sort_permutation(m);
  IntMatrix gr = grammian(m);
  const int half = 2 * t + 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long v = std::llabs(gr.at(perm[std::size_t(i)], perm[std::size_t(j)]));
      long long want;
      if (i / half != j / half) want = 0;
      else want = (i == j) ? 4 * t + 2 : 2;
      if (v != want) return false;
    }
  return true;
}

BigInt ew_bound(int t) {
  if (t < 1) throw Error(ErrorCode::ParameterMismatch, "t must be positive");
  BigInt b = 2 * (4 * t + 1);
  BigInt p = 1;
  for (int i = 0; i < 2 * t; ++i) p *= 4 * t;
  return b * p;
}

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

SignMatrix circulant_core_matrix(int q) {
  if (q < 3 || !is_prime(q) || q % 4 != 3)
    throw Error(ErrorCode::NotValidPrime, "q must be a prime = 3 (mod 4)");

  // chi(k): +1 for quadratic residues mod q, -1 otherwise; core puts -1
  // on the diagonal (position 0 of the circulant's first row).
  std::vector<int8_t> chi(std::size_t(q), -1);
  for (int k = 1; k < q; ++k) chi[std::size_t((long long)(k)*k % q)] = 1;
  std::vector<int8_t> first(std::size_t(q), 0);
  first[0] = -1;
  for (int k = 1; k < q; ++k) first[std::size_t(k)] = chi[std::size_t(k)];

  SignMatrix core(q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      core.put(i, j, first[std::size_t(((j - i) % q + q) % q)]);

  // Renormalize: negate columns until row 0 is all +1, then rows (other
  // than row 0) until column 0 is all +1.
  for (int j = 0; j < q; ++j)
    if (core.at(0, j) == -1)
      for (int i = 0; i < q; ++i) core.put(i, j, int8_t(-core.at(i, j)));
  for (int i = 1; i < q; ++i)
    if (core.at(i, 0) == -1)
      for (int j = 0; j < q; ++j) core.put(i, j, int8_t(-core.at(i, j)));

  // K (x) A with K = [[1,1],[1,-1]].
  SignMatrix out(2 * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      int8_t v = core.at(i, j);
      out.put(i, j, v);
      out.put(i, j + q, v);
      out.put(i + q, j, v);
      out.put(i + q, j + q, int8_t(-v));
    }
  return out;
}

}  // namespace qoc
