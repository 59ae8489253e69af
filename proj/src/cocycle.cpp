#include "qoc/cocycle.hpp"

#include <algorithm>
#include <stdexcept>

#include "qoc/error.hpp"

namespace qoc {

BitVec sign_bits(const SignMatrix& m) {
  const int n = m.n;
  BitVec b(std::size_t(n - 1) * (n - 1));
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h)
      if (m.at(g, h) == -1) b.set(std::size_t(g - 1) * (n - 1) + (h - 1), true);
  return b;
}

SignMatrix bits_to_signs(int n, const BitVec& bits) {
  SignMatrix m(n, 1);
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h)
      if (bits.get(std::size_t(g - 1) * (n - 1) + (h - 1))) m.put(g, h, -1);
  return m;
}

bool is_cocycle(const SignMatrix& m, const GroupTable& g) {
  if (m.n != g.n) throw Error(ErrorCode::DimensionMismatch, "matrix/group size mismatch");
  if (m.at(0, 0) != 1) return false;
  const int n = g.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = g.mul(x, y);
      for (int z = 0; z < n; ++z)
        if (m.at(x, y) * m.at(xy, z) != m.at(x, g.mul(y, z)) * m.at(y, z))
          return false;
    }
  return true;
}

Cocycle make_cocycle(GroupPtr group, SignMatrix signs) {
  if (!is_cocycle(signs, *group))
    throw Error(ErrorCode::NotACocycle, "matrix violates the cocycle identity");
  return Cocycle{std::move(group), std::move(signs), std::nullopt};
}

Cocycle coboundary(GroupPtr group, const std::vector<int8_t>& phi) {
  const int n = group->n;
  if (int(phi.size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "phi size mismatch");
  if (phi[0] != 1) throw Error(ErrorCode::NotNormalized, "phi[0] must be +1");
  SignMatrix m(n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      m.put(g, h, int8_t(phi[std::size_t(g)] * phi[std::size_t(h)] *
                         phi[std::size_t(group->mul(g, h))]));
  return Cocycle{std::move(group), std::move(m), std::nullopt};
}

SignMatrix cocyclic_matrix(const Cocycle& psi) { return psi.signs; }

Cocycle shift(const Cocycle& psi, int a) {
  const GroupTable& g = *psi.group;
  const int n = g.n;
  SignMatrix m(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      m.put(x, y, int8_t(psi.at(x, y) * psi.at(a, x) * psi.at(a, y) *
                         psi.at(a, g.mul(x, y))));
  return Cocycle{psi.group, std::move(m), std::nullopt};
}

std::vector<Cocycle> shift_orbit(const Cocycle& psi) {
  std::vector<Cocycle> orbit;
  for (int a = 0; a < psi.group->n; ++a) {
    Cocycle s = shift(psi, a);
    bool seen = false;
    for (const Cocycle& o : orbit)
      if (o.signs == s.signs) { seen = true; break; }
    if (!seen) orbit.push_back(std::move(s));
  }
  return orbit;
}

Cocycle reorder_cocycle(const Cocycle& psi, const std::vector<int>& perm,
                        GroupPtr reordered) {
  const int n = psi.order();
  SignMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.put(i, j, psi.at(perm[std::size_t(i)], perm[std::size_t(j)]));
  return make_cocycle(std::move(reordered), std::move(m));
}

CocycleSpace CocycleSpace::compute(GroupPtr gp) {
  const GroupTable& g = *gp;
  const int n = g.n;
  if (n > 44) throw Error(ErrorCode::TooLarge, "cocycle space limited to order 44");
  const std::size_t ncols = std::size_t(n - 1) * (n - 1);
  auto pos = [n](int x, int y) { return std::size_t(x - 1) * (n - 1) + (y - 1); };

  // The cocycle identity for all triples follows from the triples whose
  // third argument runs over a generating set: the identity's defect is a
  // 3-coboundary, and d(g,h,kl) = d(h,k,l) + d(gh,k,l) + d(g,hk,l) + d(g,h,k).
  std::vector<int> gens = minimal_generating_set(g);
  Rref eqs(ncols);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int s : gens) {
        BitVec e(ncols);
        e.flip(pos(x, y));
        int xy = g.mul(x, y);
        if (xy != 0) e.flip(pos(xy, s));
        int ys = g.mul(y, s);
        if (ys != 0) e.flip(pos(x, ys));
        e.flip(pos(y, s));
        if (e.any()) eqs.add(std::move(e));
      }

  std::vector<bool> is_pivot(ncols, false);
  for (int p : eqs.pivots()) is_pivot[std::size_t(p)] = true;
  std::vector<BitVec> z2_basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    BitVec x(ncols);
    x.set(f, true);
    for (std::size_t r = 0; r < eqs.rank(); ++r)
      if (eqs.rows()[r].get(f)) x.set(std::size_t(eqs.pivots()[r]), true);
    z2_basis.push_back(std::move(x));
  }

  // Paranoid full-triple verification of each basis vector.
  for (const BitVec& v : z2_basis)
    if (!is_cocycle(bits_to_signs(n, v), g))
      throw std::logic_error("cocycle space solver produced a non-cocycle");

  CocycleSpace sp;
  sp.group_ = gp;
  sp.cb_rref_ = Rref(ncols);
  for (int a = 1; a < n; ++a) {
    BitVec v(ncols);
    for (int x = 1; x < n; ++x)
      for (int y = 1; y < n; ++y) {
        int cnt = (x == a) + (y == a) + (g.mul(x, y) == a);
        if (cnt & 1) v.set(pos(x, y), true);
      }
    sp.cb_rref_.add(std::move(v));
  }
  sp.cb_dim_ = int(sp.cb_rref_.rank());

  sp.full_span_ = CoordSpan(ncols);
  sp.basis_.reserve(z2_basis.size());
  for (const BitVec& v : sp.cb_rref_.rows()) {
    sp.full_span_.add(v);
    sp.basis_.push_back(v);
  }
  for (const BitVec& v : z2_basis) {
    if (sp.full_span_.add(v)) {
      sp.basis_.push_back(v);
      sp.h2_reps_.push_back(
          Cocycle{gp, bits_to_signs(n, v), std::nullopt});
    }
  }
  if (int(sp.basis_.size()) != int(z2_basis.size()))
    throw std::logic_error("coboundaries escaped the cocycle space");

  // Record unit coefficient vectors on the H^2 representatives.
  for (std::size_t r = 0; r < sp.h2_reps_.size(); ++r) {
    BitVec c(sp.basis_.size());
    c.set(std::size_t(sp.cb_dim_) + r, true);
    sp.h2_reps_[r].coeffs = std::move(c);
  }
  return sp;
}

Cocycle CocycleSpace::basis_cocycle(int i) const {
  BitVec c(basis_.size());
  c.set(std::size_t(i), true);
  return from_coeffs(c);
}

Cocycle CocycleSpace::from_coeffs(const BitVec& coeffs) const {
  const int n = group_->n;
  BitVec bits(std::size_t(n - 1) * (n - 1));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (coeffs.get(i)) bits ^= basis_[i];
  Cocycle psi{group_, bits_to_signs(n, bits), coeffs};
  return psi;
}

std::optional<BitVec> CocycleSpace::coeffs_of(const Cocycle& psi) const {
  return full_span_.coords(sign_bits(psi.signs));
}

bool CocycleSpace::is_coboundary_element(const Cocycle& psi) const {
  return cb_rref_.in_span(sign_bits(psi.signs));
}

std::optional<BitVec> CocycleSpace::coboundary_coords(const BitVec& bits) const {
  return cb_rref_.coords(bits);
}

BitVec CocycleSpace::coboundary_combine(const BitVec& coords) const {
  return cb_rref_.combine(coords);
}

}  // namespace qoc
