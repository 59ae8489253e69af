#include "qoc/pbibd.hpp"

#include <algorithm>

#include "qoc/error.hpp"
#include "qoc/orthogonality.hpp"

namespace qoc {

IntMatrix expand_matrix(const SignMatrix& m) {
  const int n = m.n;
  IntMatrix phi(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long a = (1 + m.at(i, j)) / 2;  // (J+M)/2
      phi.put(i, j, a);
      phi.put(i + n, j + n, a);
      phi.put(i, j + n, 1 - a);
      phi.put(i + n, j, 1 - a);
    }
  return phi;
}

IntMatrix expanded_pm_matrix(const SignMatrix& m) {
  const int n = m.n;
  IntMatrix em(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      em.put(i, j, m.at(i, j));
      em.put(i + n, j + n, m.at(i, j));
      em.put(i, j + n, -m.at(i, j));
      em.put(i + n, j, -m.at(i, j));
    }
  return em;
}

AssociationScheme associate_matrices(const SignMatrix& m, int t) {
  const int n = m.n;
  if (n != 4 * t + 2)
    throw Error(ErrorCode::DimensionMismatch, "matrix order must be 4t+2");
  IntMatrix gr = grammian(m);
  IntMatrix i2j = kron(IntMatrix::identity(2), IntMatrix::ones(2 * t + 1));
  IntMatrix in = IntMatrix::identity(n);

  IntMatrix d1 = gr + 2 * i2j - (4 * t + 4) * in;
  IntMatrix d2 = 2 * i2j + (4 * t) * in - gr;
  for (long long& v : d1.a) {
    if (v % 4 != 0) throw Error(ErrorCode::NotBlockGramForm, "Delta1 not integral");
    v /= 4;
  }
  for (long long& v : d2.a) {
    if (v % 4 != 0) throw Error(ErrorCode::NotBlockGramForm, "Delta2 not integral");
    v /= 4;
  }
  if (!d1.is_zero_one() || !d2.is_zero_one())
    throw Error(ErrorCode::NotBlockGramForm,
                "Grammian does not have the exact two-block form");

  IntMatrix j2 = IntMatrix::ones(2), i2 = IntMatrix::identity(2);
  IntMatrix j2mi2 = j2 - i2;
  AssociationScheme s;
  s.size = 2 * n;
  s.a[0] = IntMatrix::identity(2 * n);
  s.a[1] = kron(j2mi2, in);
  s.a[2] = kron(j2, kron(j2mi2, IntMatrix::ones(2 * t + 1)));
  s.a[3] = kron(i2, d1) + kron(j2mi2, d2);
  s.a[4] = kron(i2, d2) + kron(j2mi2, d1);
  for (const IntMatrix& ai : s.a)
    if (!ai.is_zero_one())
      throw Error(ErrorCode::NotBlockGramForm, "associate matrix not 0/1");
  return s;
}

SchemeCheckResult verify_association_scheme(AssociationScheme& scheme) {
  SchemeCheckResult res;
  const int n = scheme.size;
  if (scheme.a[0] != IntMatrix::identity(n)) {
    res.violated = "A0 != I";
    return res;
  }
  IntMatrix sum(n, n);
  for (const IntMatrix& ai : scheme.a) sum = sum + ai;
  if (sum != IntMatrix::ones(n)) {
    res.violated = "sum A_i != J";
    return res;
  }
  for (int i = 0; i < 5; ++i)
    if (scheme.a[std::size_t(i)] != scheme.a[std::size_t(i)].transposed()) {
      res.violated = "A" + std::to_string(i) + " not symmetric";
      return res;
    }

  // The A_i have disjoint supports, so each p^k_{ij} can be read off any
  // position where A_k is 1; then the whole product must match.
  std::array<std::pair<int, int>, 5> probe;
  for (int k = 0; k < 5; ++k) {
    probe[std::size_t(k)] = {-1, -1};
    for (int x = 0; x < n && probe[std::size_t(k)].first < 0; ++x)
      for (int y = 0; y < n; ++y)
        if (scheme.a[std::size_t(k)].at(x, y) == 1) {
          probe[std::size_t(k)] = {x, y};
          break;
        }
    if (probe[std::size_t(k)].first < 0) {
      res.violated = "A" + std::to_string(k) + " is zero";
      return res;
    }
  }

  scheme.structure_constants.clear();
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) {
      IntMatrix prod = scheme.a[std::size_t(i)] * scheme.a[std::size_t(j)];
      IntMatrix recon(n, n);
      for (int k = 0; k < 5; ++k) {
        long long p = prod.at(probe[std::size_t(k)].first, probe[std::size_t(k)].second);
        if (p < 0) {
          res.violated = "negative structure constant";
          return res;
        }
        scheme.structure_constants[{i, j, k}] = p;
        recon = recon + p * scheme.a[std::size_t(k)];
      }
      if (recon != prod) {
        res.violated = "A" + std::to_string(i) + "A" + std::to_string(j) +
                       " not in the span of the scheme";
        return res;
      }
    }
  res.ok = true;
  return res;
}

std::optional<PBIBDCertificate> verify_pbibd(const IntMatrix& phi,
                                             const AssociationScheme& scheme,
                                             int t) {
  return verify_pbibd(phi, scheme, t, nullptr);
}

std::optional<PBIBDCertificate> verify_pbibd(const IntMatrix& phi,
                                             const AssociationScheme& scheme,
                                             int t, std::string* violation) {
  const int n = 8 * t + 4;
  if (phi.rows != n || phi.cols != n || scheme.size != n)
    throw Error(ErrorCode::DimensionMismatch, "Phi must be (8t+4)x(8t+4)");
  if (!phi.is_zero_one()) throw Error(ErrorCode::MalformedInput, "Phi must be 0/1");

  auto fail = [&](const std::string& why) {
    if (violation) *violation = why;
    return std::nullopt;
  };

  // J Phi = (4t+2) J: constant column sums.
  for (int j = 0; j < n; ++j) {
    long long s = 0;
    for (int i = 0; i < n; ++i) s += phi.at(i, j);
    if (s != 4 * t + 2) return fail("J Phi != kJ");
  }
  IntMatrix want = (4 * t + 2) * scheme.a[0] + (2 * t + 1) * scheme.a[2] +
                   (2 * t + 2) * scheme.a[3] + (2 * t) * scheme.a[4];
  if (phi * phi.transposed() != want)
    return fail("Phi Phi^T != rI + sum lambda_i A_i");

  PBIBDCertificate cert;
  cert.v = cert.b = n;
  cert.r = cert.k = 4 * t + 2;
  cert.lambdas = {0, 2 * t + 1, 2 * t + 2, 2 * t};
  cert.incidence = phi;
  cert.scheme = scheme;
  return cert;
}

bool verify_regular_action(const IntMatrix& phi, const ExtensionGroup& e) {
  const int n = e.table.n;
  if (phi.rows != n || phi.cols != n)
    throw Error(ErrorCode::DimensionMismatch, "Phi and E sizes differ");
  const int half = n / 2;
  // phi(u,g) = u under the canonical indexing; +-1 entry is 2*Phi - 1.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int dev = e.table.mul(x, y) < half ? 1 : -1;
      if (2 * phi.at(x, y) - 1 != dev) return false;
    }
  // R1 point classes {x, zx} must be stabilized by z: z pairs index i
  // with i +- half under the canonical indexing.
  for (int x = 0; x < n; ++x)
    if (e.table.mul(e.z_element, x) != (x + half) % n) return false;
  return true;
}

TransversalCertificate pbibd_to_rqds(const IntMatrix& phi, const ExtensionGroup& e) {
  const int n = e.table.n;
  if (n % 8 != 4)
    throw Error(ErrorCode::PreconditionFailed, "|E| must be 8t+4");
  const int t = (n - 4) / 8;
  if (!verify_regular_action(phi, e))
    throw Error(ErrorCode::PreconditionFailed, "verify_regular_action failed");
  AssociationScheme scheme;
  try {
    // Recover M from the development: top-left block of the +-1 matrix.
    SignMatrix m(n / 2);
    for (int i = 0; i < n / 2; ++i)
      for (int j = 0; j < n / 2; ++j)
        m.put(i, j, int8_t(2 * phi.at(i, j) - 1));
    scheme = associate_matrices(m, t);
  } catch (const Error&) {
    throw Error(ErrorCode::PreconditionFailed, "associate matrices unavailable");
  }
  SchemeCheckResult sc = verify_association_scheme(scheme);
  if (!sc.ok)
    throw Error(ErrorCode::PreconditionFailed, "scheme check failed: " + sc.violated);
  if (!verify_pbibd(phi, scheme, t))
    throw Error(ErrorCode::PreconditionFailed, "verify_pbibd failed");

  IntMatrix gram = phi * phi.transposed();
  std::vector<int> r_set;
  for (int x = 0; x < n; ++x)
    if (phi.at(0, x) == 1) r_set.push_back(x);
  auto cert = verify_relative_qds(e.table, e.z_element, r_set);
  if (!cert)
    throw Error(ErrorCode::PreconditionFailed, "extracted R failed the QDS profile");
  // Cross-check the paper's extraction of S against the profile-based one.
  std::vector<int> s_from_gram;
  for (int x : r_set)
    if (x != 0 && gram.at(0, x) == 2 * t + 1) s_from_gram.push_back(x);
  std::sort(s_from_gram.begin(), s_from_gram.end());
  if (s_from_gram != cert->s_set)
    throw Error(ErrorCode::PreconditionFailed, "S extraction mismatch");
  return *cert;
}

}  // namespace qoc
