#include "qoc/group.hpp"

#include <algorithm>
#include <numeric>

#include "qoc/error.hpp"

namespace qoc {

namespace {

// Validates all GroupTable invariants and computes inverses.
void validate_and_finish(GroupTable& g) {
  const int n = g.n;
  for (int j = 0; j < n; ++j)
    if (g.mul(0, j) != j || g.mul(j, 0) != j)
      throw Error(ErrorCode::IdentityNotFirst, "index 0 is not an identity");

  std::vector<bool> seen(std::size_t(n), false);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n; ++j) {
      int v = g.mul(i, j);
      if (v < 0 || v >= n || seen[std::size_t(v)])
        throw Error(ErrorCode::NotAGroup, "row " + std::to_string(i) +
                                              " is not a permutation");
      seen[std::size_t(v)] = true;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (int i = 0; i < n; ++i) {
      int v = g.mul(i, j);
      if (seen[std::size_t(v)])
        throw Error(ErrorCode::NotAGroup, "column " + std::to_string(j) +
                                              " is not a permutation");
      seen[std::size_t(v)] = true;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
          throw Error(ErrorCode::NotAGroup, "associativity fails");

  g.inv.assign(std::size_t(n), -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.mul(i, j) == 0) g.inv[std::size_t(i)] = j;
}

// Closure of a generating set; returns sorted element list.
std::vector<int> closure(const GroupTable& g, const std::vector<int>& gens) {
  std::vector<bool> in(std::size_t(g.n), false);
  std::vector<int> frontier{0};
  in[0] = true;
  for (int s : gens)
    if (!in[std::size_t(s)]) { in[std::size_t(s)] = true; frontier.push_back(s); }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    int x = frontier[head];
    for (int s : gens) {
      int y = g.mul(x, s);
      if (!in[std::size_t(y)]) { in[std::size_t(y)] = true; frontier.push_back(y); }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < g.n; ++i) if (in[std::size_t(i)]) out.push_back(i);
  return out;
}

}  // namespace

int GroupTable::element_order(int i) const {
  int ord = 1, x = i;
  while (x != 0) { x = mul(x, i); ++ord; }
  return ord;
}

bool GroupTable::is_abelian() const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

std::vector<int> GroupTable::order_multiset() const {
  std::vector<int> orders(std::size_t(n), 0);
  for (int i = 0; i < n; ++i) orders[std::size_t(i)] = element_order(i);
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<int> GroupTable::center() const {
  std::vector<int> z;
  for (int i = 0; i < n; ++i) {
    bool central = true;
    for (int j = 0; j < n && central; ++j) central = mul(i, j) == mul(j, i);
    if (central) z.push_back(i);
  }
  return z;
}

GroupTable build_from_table(const std::vector<std::vector<int>>& raw,
                            std::string name) {
  const int n = int(raw.size());
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty table");
  GroupTable g;
  g.n = n;
  g.name = std::move(name);
  g.table.resize(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    if (int(raw[std::size_t(i)].size()) != n)
      throw Error(ErrorCode::NotAGroup, "table is not square");
    for (int j = 0; j < n; ++j) g.table[std::size_t(i) * n + j] = raw[std::size_t(i)][std::size_t(j)];
  }
  validate_and_finish(g);
  return g;
}

GroupTable build_cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::ParameterMismatch, "n must be positive");
  GroupTable g;
  g.n = n;
  g.name = "C" + std::to_string(n);
  g.table.resize(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[std::size_t(i) * n + j] = (i + j) % n;
  validate_and_finish(g);
  return g;
}

GroupTable build_metacyclic(int m, int r, int k) {
  if (m < 1 || r < 1) throw Error(ErrorCode::ParameterMismatch, "m, r must be positive");
  k = ((k % m) + m) % m;
  // Need k^r = 1 mod m for c^r = 1 to be consistent with the action.
  {
    long long p = 1;
    for (int e = 0; e < r; ++e) p = (p * k) % m;
    if (p % m != 1 % m)
      throw Error(ErrorCode::ParameterMismatch, "k^r != 1 (mod m)");
  }
  const int n = m * r;
  // Powers of k for each c-exponent.
  std::vector<long long> kp(std::size_t(r), 0);
  kp[0] = 1 % m;
  for (int j = 1; j < r; ++j) kp[std::size_t(j)] = (kp[std::size_t(j - 1)] * k) % m;

  GroupTable g;
  g.n = n;
  g.name = "M(" + std::to_string(m) + "," + std::to_string(r) + "," + std::to_string(k) + ")";
  g.table.resize(std::size_t(n) * n);
  // a^i c^j * a^u c^v = a^(i + k^j u) c^(j+v), with c a = a^k c.
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < m; ++i)
      for (int v = 0; v < r; ++v)
        for (int u = 0; u < m; ++u) {
          int ii = int((i + kp[std::size_t(j)] * u) % m);
          int jj = (j + v) % r;
          g.table[std::size_t(j * m + i) * n + (v * m + u)] = jj * m + ii;
        }
  validate_and_finish(g);
  return g;
}

GroupTable build_dihedral(int m) {
  if (m < 1) throw Error(ErrorCode::ParameterMismatch, "m must be positive");
  GroupTable g = build_metacyclic(m, 2, m - 1);
  g.name = "D" + std::to_string(2 * m);
  return g;
}

GroupTable build_dicyclic(int t) {
  if (t < 1) throw Error(ErrorCode::ParameterMismatch, "t must be positive");
  const int am = 4 * t + 2;  // order of a
  const int n = 8 * t + 4;
  GroupTable g;
  g.n = n;
  g.name = "Q" + std::to_string(n);
  g.table.resize(std::size_t(n) * n);
  // Elements a^i b^j, index i + am*j. Relations give
  // a^i b^j * a^u b^v = a^(i + (-1)^j u + (2t+1)[j+v=2]) b^((j+v) mod 2).
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < am; ++i)
      for (int v = 0; v < 2; ++v)
        for (int u = 0; u < am; ++u) {
          int e = (j == 0) ? u : (am - u) % am;
          int ii = (i + e + ((j + v == 2) ? (2 * t + 1) : 0)) % am;
          int jj = (j + v) % 2;
          g.table[std::size_t(i + am * j) * n + (u + am * v)] = ii + am * jj;
        }
  validate_and_finish(g);
  return g;
}

GroupTable build_generalized_dihedral(const GroupTable& a) {
  if (!a.is_abelian())
    throw Error(ErrorCode::ParameterMismatch, "generalized dihedral needs an abelian group");
  const int m = a.n, n = 2 * m;
  GroupTable g;
  g.n = n;
  g.name = "Dih(" + (a.name.empty() ? std::to_string(m) : a.name) + ")";
  g.table.resize(std::size_t(n) * n);
  // (x, j)(y, l) = (x * y^((-1)^j), j+l)
  for (int j = 0; j < 2; ++j)
    for (int x = 0; x < m; ++x)
      for (int l = 0; l < 2; ++l)
        for (int y = 0; y < m; ++y) {
          int yy = (j == 0) ? y : a.inverse(y);
          g.table[std::size_t(x + m * j) * n + (y + m * l)] =
              a.mul(x, yy) + m * ((j + l) % 2);
        }
  validate_and_finish(g);
  return g;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const int n = g.n * h.n;
  GroupTable p;
  p.n = n;
  p.name = (g.name.empty() ? "?" : g.name) + "x" + (h.name.empty() ? "?" : h.name);
  p.table.resize(std::size_t(n) * n);
  for (int x1 = 0; x1 < g.n; ++x1)
    for (int y1 = 0; y1 < h.n; ++y1)
      for (int x2 = 0; x2 < g.n; ++x2)
        for (int y2 = 0; y2 < h.n; ++y2)
          p.table[std::size_t(x1 * h.n + y1) * n + (x2 * h.n + y2)] =
              g.mul(x1, x2) * h.n + h.mul(y1, y2);
  validate_and_finish(p);
  return p;
}

GroupTable reorder_group(const GroupTable& g, const std::vector<int>& perm,
                         std::string name) {
  if (int(perm.size()) != g.n || perm[0] != 0)
    throw Error(ErrorCode::ParameterMismatch, "bad relabeling permutation");
  std::vector<int> where(std::size_t(g.n), -1);  // old index -> new index
  for (int i = 0; i < g.n; ++i) where[std::size_t(perm[std::size_t(i)])] = i;
  GroupTable out;
  out.n = g.n;
  out.name = name.empty() ? g.name : std::move(name);
  out.table.resize(std::size_t(g.n) * g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      out.table[std::size_t(i) * g.n + j] =
          where[std::size_t(g.mul(perm[std::size_t(i)], perm[std::size_t(j)]))];
  validate_and_finish(out);
  return out;
}

std::vector<int> minimal_generating_set(const GroupTable& g) {
  std::vector<int> gens;
  std::vector<int> got = closure(g, gens);
  while (int(got.size()) < g.n) {
    // Add the first element not yet generated.
    std::vector<bool> in(std::size_t(g.n), false);
    for (int x : got) in[std::size_t(x)] = true;
    for (int i = 1; i < g.n; ++i)
      if (!in[std::size_t(i)]) { gens.push_back(i); break; }
    got = closure(g, gens);
  }
  return gens;
}

namespace {

// Attempts to extend gens->images to a full isomorphism by closure.
bool extend_isomorphism(const GroupTable& g, const GroupTable& h,
                        const std::vector<int>& gens,
                        const std::vector<int>& images) {
  std::vector<int> f(std::size_t(g.n), -1);
  std::vector<bool> hit(std::size_t(h.n), false);
  f[0] = 0;
  hit[0] = true;
  std::vector<int> order{0};
  for (std::size_t s = 0; s < gens.size(); ++s) {
    int x = gens[s], y = images[s];
    if (f[std::size_t(x)] == -1) {
      if (hit[std::size_t(y)]) return false;
      f[std::size_t(x)] = y;
      hit[std::size_t(y)] = true;
      order.push_back(x);
    } else if (f[std::size_t(x)] != y) {
      return false;
    }
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    int x = order[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int xs = g.mul(x, gens[s]);
      int ys = h.mul(f[std::size_t(x)], images[s]);
      if (f[std::size_t(xs)] == -1) {
        if (hit[std::size_t(ys)]) return false;
        f[std::size_t(xs)] = ys;
        hit[std::size_t(ys)] = true;
        order.push_back(xs);
      } else if (f[std::size_t(xs)] != ys) {
        return false;
      }
    }
  }
  if (int(order.size()) != g.n) return false;  // gens did not generate
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (f[std::size_t(g.mul(i, j))] != h.mul(f[std::size_t(i)], f[std::size_t(j)]))
        return false;
  return true;
}

bool search_images(const GroupTable& g, const GroupTable& h,
                   const std::vector<int>& gens,
                   const std::vector<std::vector<int>>& candidates,
                   std::vector<int>& images, std::size_t depth) {
  if (depth == gens.size())
    return extend_isomorphism(g, h, gens, images);
  for (int cand : candidates[depth]) {
    images[depth] = cand;
    // Partial consistency: the assigned prefix must already extend on the
    // subgroup it generates.
    std::vector<int> pg(gens.begin(), gens.begin() + long(depth) + 1);
    std::vector<int> pi(images.begin(), images.begin() + long(depth) + 1);
    bool ok = true;
    {
      // Quick check: partial map on <prefix> must be consistent.
      std::vector<int> f(std::size_t(g.n), -1);
      std::vector<bool> hit(std::size_t(h.n), false);
      f[0] = 0; hit[0] = true;
      std::vector<int> order{0};
      for (std::size_t s = 0; s < pg.size() && ok; ++s) {
        int x = pg[s], y = pi[s];
        if (f[std::size_t(x)] == -1) {
          if (hit[std::size_t(y)]) { ok = false; break; }
          f[std::size_t(x)] = y; hit[std::size_t(y)] = true; order.push_back(x);
        } else if (f[std::size_t(x)] != y) ok = false;
      }
      for (std::size_t head = 0; head < order.size() && ok; ++head) {
        int x = order[head];
        for (std::size_t s = 0; s < pg.size(); ++s) {
          int xs = g.mul(x, pg[s]);
          int ys = h.mul(f[std::size_t(x)], pi[s]);
          if (f[std::size_t(xs)] == -1) {
            if (hit[std::size_t(ys)]) { ok = false; break; }
            f[std::size_t(xs)] = ys; hit[std::size_t(ys)] = true; order.push_back(xs);
          } else if (f[std::size_t(xs)] != ys) { ok = false; break; }
        }
      }
    }
    if (ok && search_images(g, h, gens, candidates, images, depth + 1))
      return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic_small(const GroupTable& g, const GroupTable& h) {
  if (g.n > 100 || h.n > 100)
    throw Error(ErrorCode::TooLarge, "isomorphism test limited to order <= 100");
  if (g.n != h.n) return false;
  if (g.order_multiset() != h.order_multiset()) return false;
  if (g.is_abelian() != h.is_abelian()) return false;
  if (g.center().size() != h.center().size()) return false;

  std::vector<int> gens = minimal_generating_set(g);
  if (gens.empty()) return true;  // trivial group
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) {
    int ord = g.element_order(gens[s]);
    for (int y = 0; y < h.n; ++y)
      if (h.element_order(y) == ord) candidates[s].push_back(y);
  }
  std::vector<int> images(gens.size(), -1);
  return search_images(g, h, gens, candidates, images, 0);
}

}  // namespace qoc
