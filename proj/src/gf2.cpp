#include "qoc/gf2.hpp"

#include <algorithm>

namespace qoc {

bool Rref::add(BitVec v) {
  // Reduce against existing rows.
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (v.get(pivots_[r])) v ^= rows_[r];
  int p = v.lowest_set();
  if (p < 0) return false;
  // Clear the new pivot column from earlier rows to keep the basis reduced.
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].get(std::size_t(p))) rows_[r] ^= v;
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t idx = std::size_t(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

BitVec Rref::reduce(BitVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (v.get(pivots_[r])) v ^= rows_[r];
  return v;
}

std::optional<BitVec> Rref::coords(const BitVec& v) const {
  BitVec rem = v;
  BitVec c(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rem.get(pivots_[r])) {
      rem ^= rows_[r];
      c.set(r, true);
    }
  }
  if (!rem.none()) return std::nullopt;
  return c;
}

BitVec Rref::combine(const BitVec& coords) const {
  BitVec v(ncols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (coords.get(r)) v ^= rows_[r];
  return v;
}

namespace {
constexpr std::size_t kMaxBasis = 4096;  // expression width; ample here
}

bool CoordSpan::add(const BitVec& v) {
  BitVec rem = v;
  BitVec e(kMaxBasis);
  e.set(nbasis_, true);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rem.get(std::size_t(pivots_[r]))) {
      rem ^= rows_[r];
      e ^= expr_[r];
    }
  }
  ++nbasis_;
  int p = rem.lowest_set();
  if (p < 0) { --nbasis_; return false; }
  rows_.push_back(std::move(rem));
  pivots_.push_back(p);
  expr_.push_back(std::move(e));
  return true;
}

std::optional<BitVec> CoordSpan::coords(const BitVec& v) const {
  BitVec rem = v;
  BitVec e(kMaxBasis);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rem.get(std::size_t(pivots_[r]))) {
      rem ^= rows_[r];
      e ^= expr_[r];
    }
  }
  if (!rem.none()) return std::nullopt;
  BitVec out(nbasis_);
  for (std::size_t i = 0; i < nbasis_; ++i) out.set(i, e.get(i));
  return out;
}

std::vector<BitVec> nullspace_basis(const std::vector<BitVec>& equations,
                                    std::size_t ncols) {
  Rref rref(ncols);
  for (const BitVec& e : equations) rref.add(e);

  std::vector<bool> is_pivot(ncols, false);
  for (int p : rref.pivots()) is_pivot[std::size_t(p)] = true;

  std::vector<BitVec> basis;
  basis.reserve(ncols - rref.rank());
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    BitVec x(ncols);
    x.set(f, true);
    // Each RREF row reads x_p = sum over free columns of row[f]*x_f.
    for (std::size_t r = 0; r < rref.rank(); ++r)
      if (rref.rows()[r].get(f)) x.set(std::size_t(rref.pivots()[r]), true);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace qoc
