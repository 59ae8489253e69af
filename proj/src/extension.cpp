#include "qoc/extension.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qoc/error.hpp"

namespace qoc {

namespace {

void require_central_involution(const GroupTable& e, int z) {
  if (z <= 0 || z >= e.n || e.mul(z, z) != 0)
    throw Error(ErrorCode::WrongOrder, "z is not an involution");
  for (int x = 0; x < e.n; ++x)
    if (e.mul(z, x) != e.mul(x, z))
      throw Error(ErrorCode::WrongOrder, "z is not central");
}

// T must pick exactly one element out of every coset {x, zx}.
void require_transversal(const GroupTable& e, int z, const std::vector<int>& t_set,
                         bool require_identity) {
  if (int(t_set.size()) != e.n / 2)
    throw Error(ErrorCode::NotATransversal, "wrong transversal size");
  std::vector<bool> covered(std::size_t(e.n), false);
  for (int x : t_set) {
    if (x < 0 || x >= e.n)
      throw Error(ErrorCode::NotATransversal, "element out of range");
    if (covered[std::size_t(x)])
      throw Error(ErrorCode::NotATransversal, "two elements in one coset");
    covered[std::size_t(x)] = true;
    covered[std::size_t(e.mul(z, x))] = true;
  }
  bool has_identity =
      std::find(t_set.begin(), t_set.end(), 0) != t_set.end();
  if (require_identity && !has_identity)
    throw Error(ErrorCode::NotNormalized, "transversal must contain 1");
}

std::vector<std::pair<int, int>> intersection_profile(
    const GroupTable& e, int z, const std::vector<int>& t_set) {
  std::vector<bool> in_t(std::size_t(e.n), false);
  for (int x : t_set) in_t[std::size_t(x)] = true;
  std::vector<std::pair<int, int>> profile;
  profile.reserve(std::size_t(e.n - 2));
  for (int x = 0; x < e.n; ++x) {
    if (x == 0 || x == z) continue;
    int c = 0;
    for (int t : t_set) c += in_t[std::size_t(e.mul(x, t))];
    profile.emplace_back(x, c);
  }
  return profile;
}

}  // namespace

std::vector<int> ExtensionGroup::canonical_transversal() const {
  std::vector<int> t(std::size_t(base->n), 0);
  std::iota(t.begin(), t.end(), 0);
  return t;
}

ExtensionGroup central_extension(const Cocycle& psi) {
  const GroupTable& g = *psi.group;
  const int n = g.n, tn = 2 * n;
  GroupTable tab;
  tab.n = tn;
  tab.name = "E(" + (g.name.empty() ? "G" : g.name) + ")";
  tab.table.resize(std::size_t(tn) * tn);
  for (int i = 0; i < tn; ++i) {
    int u = i < n ? 1 : -1, gi = i % n;
    for (int j = 0; j < tn; ++j) {
      int v = j < n ? 1 : -1, gj = j % n;
      int w = u * v * psi.at(gi, gj);
      tab.table[std::size_t(i) * tn + j] = g.mul(gi, gj) + (w == -1 ? n : 0);
    }
  }
  // Same validation path as any other constructor.
  std::vector<std::vector<int>> raw(static_cast<std::size_t>(tn), std::vector<int>(static_cast<std::size_t>(tn), 0));
  for (int i = 0; i < tn; ++i)
    for (int j = 0; j < tn; ++j) raw[std::size_t(i)][std::size_t(j)] = tab.table[std::size_t(i) * tn + j];
  ExtensionGroup e;
  e.table = build_from_table(raw, tab.name);
  e.base = psi.group;
  e.z_element = n;
  e.proj.resize(std::size_t(tn));
  for (int i = 0; i < tn; ++i) e.proj[std::size_t(i)] = i % n;
  return e;
}

std::pair<GroupTable, std::vector<int>> quotient_by_central_involution(
    const GroupTable& e, int z) {
  require_central_involution(e, z);
  const int n = e.n;
  std::vector<int> rep_of(std::size_t(n), 0);
  for (int x = 0; x < n; ++x) rep_of[std::size_t(x)] = std::min(x, e.mul(z, x));
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (rep_of[std::size_t(x)] == x) reps.push_back(x);
  std::vector<int> coset_id(std::size_t(n), -1);
  for (std::size_t c = 0; c < reps.size(); ++c) coset_id[std::size_t(reps[c])] = int(c);
  for (int x = 0; x < n; ++x) coset_id[std::size_t(x)] = coset_id[std::size_t(rep_of[std::size_t(x)])];

  const int qn = n / 2;
  std::vector<std::vector<int>> raw(static_cast<std::size_t>(qn), std::vector<int>(static_cast<std::size_t>(qn), 0));
  for (int i = 0; i < qn; ++i)
    for (int j = 0; j < qn; ++j)
      raw[std::size_t(i)][std::size_t(j)] =
          coset_id[std::size_t(e.mul(reps[std::size_t(i)], reps[std::size_t(j)]))];
  GroupTable q = build_from_table(raw, (e.name.empty() ? "E" : e.name) + "/Z");
  return {std::move(q), std::move(coset_id)};
}

namespace {

Cocycle transversal_cocycle_impl(const GroupTable& e, int z,
                                 const std::vector<int>& t_set,
                                 GroupPtr quotient, const std::vector<int>& proj) {
  require_central_involution(e, z);
  require_transversal(e, z, t_set, /*require_identity=*/true);
  const int qn = quotient->n;
  std::vector<int> sigma(std::size_t(qn), -1);
  for (int x : t_set) sigma[std::size_t(proj[std::size_t(x)])] = x;
  SignMatrix m(qn);
  for (int g = 0; g < qn; ++g)
    for (int h = 0; h < qn; ++h) {
      int p = e.mul(sigma[std::size_t(g)], sigma[std::size_t(h)]);
      int s = e.mul(p, e.inverse(sigma[std::size_t(quotient->mul(g, h))]));
      // s is 1 or z by construction.
      m.put(g, h, s == 0 ? int8_t(1) : int8_t(-1));
    }
  return make_cocycle(std::move(quotient), std::move(m));
}

}  // namespace

Cocycle transversal_cocycle(const ExtensionGroup& e, const std::vector<int>& t_set) {
  return transversal_cocycle_impl(e.table, e.z_element, t_set, e.base, e.proj);
}

Cocycle transversal_cocycle(const GroupTable& e, int z, const std::vector<int>& t_set) {
  auto [q, proj] = quotient_by_central_involution(e, z);
  return transversal_cocycle_impl(e, z, t_set,
                                  std::make_shared<const GroupTable>(std::move(q)), proj);
}

std::optional<TransversalCertificate> verify_quasi_hadamard_subset(
    const GroupTable& e, int z, const std::vector<int>& t_set) {
  if (e.n % 8 != 4 || e.n < 12)
    throw Error(ErrorCode::WrongOrder, "|E| must be 8t+4 >= 12");
  require_central_involution(e, z);
  require_transversal(e, z, t_set, /*require_identity=*/true);
  const int t = (e.n - 4) / 8;

  TransversalCertificate cert;
  cert.kind = TransversalKind::quasi_hadamard_subset;
  cert.t = t;
  cert.transversal = t_set;
  std::sort(cert.transversal.begin(), cert.transversal.end());
  cert.profile = intersection_profile(e, z, t_set);

  std::vector<int> value_of(std::size_t(e.n), -1);
  for (auto [x, c] : cert.profile) value_of[std::size_t(x)] = c;

  // Checking x over T \ Z suffices; the mirror identity forces the rest.
  for (int x : cert.transversal) {
    if (x == 0) continue;
    int c = value_of[std::size_t(x)];
    if (c == 2 * t + 1) cert.s_set.push_back(x);
    else if (c != 2 * t && c != 2 * t + 2) return std::nullopt;
  }
  if (int(cert.s_set.size()) != 2 * t + 1) return std::nullopt;
  return cert;
}

std::optional<TransversalCertificate> verify_relative_qds(
    const GroupTable& e, int z, const std::vector<int>& r_set) {
  if (e.n % 8 != 4 || e.n < 12)
    throw Error(ErrorCode::WrongOrder, "|E| must be 8t+4 >= 12");
  require_central_involution(e, z);
  require_transversal(e, z, r_set, /*require_identity=*/true);
  const int t = (e.n - 4) / 8;

  TransversalCertificate cert;
  cert.kind = TransversalKind::relative_qds;
  cert.t = t;
  cert.transversal = r_set;
  std::sort(cert.transversal.begin(), cert.transversal.end());
  cert.profile = intersection_profile(e, z, r_set);

  std::vector<int> value_of(std::size_t(e.n), -1);
  for (auto [x, c] : cert.profile) value_of[std::size_t(x)] = c;

  for (int x : cert.transversal)
    if (x != 0 && value_of[std::size_t(x)] == 2 * t + 1) cert.s_set.push_back(x);
  if (int(cert.s_set.size()) != 2 * t + 1) return std::nullopt;

  std::vector<bool> in_sz(std::size_t(e.n), false);
  for (int s : cert.s_set) {
    in_sz[std::size_t(s)] = true;
    in_sz[std::size_t(e.mul(s, z))] = true;
  }
  for (auto [x, c] : cert.profile) {
    if (in_sz[std::size_t(x)]) {
      if (c != 2 * t + 1) return std::nullopt;
    } else if (c != 2 * t && c != 2 * t + 2) {
      return std::nullopt;
    }
  }
  return cert;
}

bool verify_relative_ds(const GroupTable& e, const std::vector<int>& n_subgroup,
                        const std::vector<int>& r_set, int v, int m, int k,
                        int lambda) {
  if (e.n != v * m || int(n_subgroup.size()) != m || int(r_set.size()) != k)
    throw Error(ErrorCode::ParameterMismatch, "(v,m,k) do not match the input");
  std::vector<bool> in_n(std::size_t(e.n), false);
  for (int x : n_subgroup) {
    if (x < 0 || x >= e.n) throw Error(ErrorCode::ParameterMismatch, "N out of range");
    in_n[std::size_t(x)] = true;
  }
  if (!in_n[0]) throw Error(ErrorCode::ParameterMismatch, "N must contain 1");
  for (int x : n_subgroup)
    for (int y : n_subgroup)
      if (!in_n[std::size_t(e.mul(x, y))])
        throw Error(ErrorCode::ParameterMismatch, "N is not a subgroup");
  for (int x : n_subgroup)
    for (int g = 0; g < e.n; ++g)
      if (!in_n[std::size_t(e.mul(e.mul(g, x), e.inverse(g)))])
        throw Error(ErrorCode::ParameterMismatch, "N is not normal");

  std::vector<bool> in_r(std::size_t(e.n), false);
  for (int x : r_set) in_r[std::size_t(x)] = true;
  for (int x = 0; x < e.n; ++x) {
    if (in_n[std::size_t(x)]) continue;
    int c = 0;
    for (int r : r_set) c += in_r[std::size_t(e.mul(x, r))];
    if (c != lambda) return false;
  }
  return true;
}

std::vector<std::vector<int>> ordinary_difference_set_search(const GroupTable& g,
                                                             int k) {
  const int n = g.n;
  if (n > 16) throw Error(ErrorCode::TooLarge, "difference set search limited to order 16");
  if (k <= 1 || k >= n - 1)
    throw Error(ErrorCode::ParameterMismatch, "trivial k excluded");
  std::vector<std::vector<int>> found;
  long long kk = (long long)(k) * (k - 1);
  if (kk % (n - 1) != 0) return found;
  const int lambda = int(kk / (n - 1));

  std::vector<int> idx(std::size_t(k), 0);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> count(std::size_t(n), 0);
  while (true) {
    std::fill(count.begin(), count.end(), 0);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (a != b) ++count[std::size_t(g.mul(idx[std::size_t(a)], g.inverse(idx[std::size_t(b)])))];
    bool ok = true;
    for (int x = 1; x < n && ok; ++x) ok = count[std::size_t(x)] == lambda;
    if (ok) found.push_back(idx);

    // next combination
    int i = k - 1;
    while (i >= 0 && idx[std::size_t(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[std::size_t(i)];
    for (int j = i + 1; j < k; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
  }
  return found;
}

ExtensionTypeResult extension_type(const Cocycle& psi) {
  const int n = psi.order();
  if (n % 4 != 2 || n < 6)
    throw Error(ErrorCode::WrongOrderClass, "|G| must be 4t+2 >= 6");
  ExtensionGroup e = central_extension(psi);

  ExtensionTypeResult res;
  {
    std::ostringstream os;
    os << "order=" << e.table.n << " abelian=" << (e.table.is_abelian() ? 1 : 0)
       << " center=" << e.table.center().size() << " orders=";
    for (int o : e.table.order_multiset()) os << o << ",";
    res.invariants = os.str();
  }

  CocycleSpace space = cocycle_space(psi.group);
  const std::string gname = psi.group->name.empty() ? "G" : psi.group->name;
  std::vector<std::pair<std::string, GroupTable>> candidates;
  if (space.is_coboundary_element(psi)) {
    candidates.emplace_back("C2x" + gname, direct_product(build_cyclic(2), *psi.group));
  } else {
    candidates.emplace_back("C" + std::to_string(2 * n), build_cyclic(2 * n));
    candidates.emplace_back("Q" + std::to_string(2 * n), build_dicyclic((n - 2) / 4));
    candidates.emplace_back("C2x" + gname, direct_product(build_cyclic(2), *psi.group));
  }
  for (auto& [name, cand] : candidates) {
    if (is_isomorphic_small(e.table, cand)) {
      res.identified = true;
      res.name = name;
      return res;
    }
  }
  return res;
}

}  // namespace qoc
