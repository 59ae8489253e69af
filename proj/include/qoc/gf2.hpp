#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace qoc {

/// Dense bit vector over GF(2), packed into 64-bit words. Bit 0 is the
/// first coordinate; lexicographic comparisons read coordinates in order.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    uint64_t m = uint64_t(1) << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }

  void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  bool none() const {
    for (uint64_t x : w_) if (x) return false;
    return true;
  }
  bool any() const { return !none(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  /// Index of the lowest set bit, or -1 when none.
  int lowest_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
    return -1;
  }

  bool operator==(const BitVec& o) const = default;

  /// True when this vector precedes o lexicographically (coordinate 0 first;
  /// 0 sorts before 1).
  bool lex_less(const BitVec& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      uint64_t d = w_[k] ^ o.w_[k];
      if (d) {
        int b = std::countr_zero(d);
        return !((w_[k] >> b) & 1u);
      }
    }
    return false;
  }

  /// Packs the first 64 bits; requires size() <= 64.
  uint64_t to_u64() const { return w_.empty() ? 0 : w_[0]; }

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  std::size_t nbits_ = 0;
  std::vector<uint64_t> w_;
};

/// Incrementally maintained reduced row echelon basis over GF(2).
class Rref {
 public:
  explicit Rref(std::size_t ncols) : ncols_(ncols) {}

  /// Reduces v against the current basis and inserts the remainder if
  /// nonzero. Returns true when v was independent (rank grew).
  bool add(BitVec v);

  /// Remainder of v after reduction against the basis.
  BitVec reduce(BitVec v) const;

  bool in_span(const BitVec& v) const { return reduce(v).none(); }

  /// Coordinates of v in terms of rows(), or nullopt when v is outside the
  /// span. coords.size() == rank().
  std::optional<BitVec> coords(const BitVec& v) const;

  /// Linear combination of rows() given by coordinate bits.
  BitVec combine(const BitVec& coords) const;

  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }

 private:
  std::size_t ncols_;
  std::vector<BitVec> rows_;   // sorted by pivot column
  std::vector<int> pivots_;
};

/// Basis of the solution space of the homogeneous system rows(v)·x = 0.
std::vector<BitVec> nullspace_basis(const std::vector<BitVec>& equations,
                                    std::size_t ncols);

/// Span of a fixed ordered basis that can express members in the ORIGINAL
/// basis order (unlike Rref, whose coordinates follow pivot order).
class CoordSpan {
 public:
  explicit CoordSpan(std::size_t ncols) : ncols_(ncols) {}

  /// Appends a basis vector; returns false (and ignores it) if dependent.
  bool add(const BitVec& v);

  /// Coordinates of v over the appended basis vectors, in insertion order.
  std::optional<BitVec> coords(const BitVec& v) const;

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t ncols_;
  std::size_t nbasis_ = 0;
  std::vector<BitVec> rows_;   // echelon rows
  std::vector<int> pivots_;
  std::vector<BitVec> expr_;   // rows_[r] as a combination of inserted vectors
};

}  // namespace qoc
