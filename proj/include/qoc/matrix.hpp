#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace qoc {

using BigInt = boost::multiprecision::cpp_int;

/// Dense square {-1,+1} matrix.
struct SignMatrix {
  int n = 0;
  std::vector<int8_t> a;  // row-major

  SignMatrix() = default;
  explicit SignMatrix(int order, int8_t fill = 1)
      : n(order), a(std::size_t(order) * order, fill) {}

  int8_t at(int i, int j) const { return a[std::size_t(i) * n + j]; }
  void put(int i, int j, int8_t v) { a[std::size_t(i) * n + j] = v; }

  long long row_sum(int i) const;
  bool first_row_all_plus() const;
  bool first_col_all_plus() const;
  /// True when row i contains an even number of +1 entries.
  bool row_even(int i) const;

  /// Rows as strings of '+'/'-' (the .sgn body).
  std::vector<std::string> to_strings() const;

  bool operator==(const SignMatrix& o) const = default;
};

/// Dense integer matrix with 64-bit entries. Large enough for every exact
/// design-theory check here; determinants go through BigInt separately.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c, long long fill = 0)
      : rows(r), cols(c), a(std::size_t(r) * c, fill) {}

  long long at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
  void put(int i, int j, long long v) { a[std::size_t(i) * cols + j] = v; }

  bool operator==(const IntMatrix& o) const = default;

  static IntMatrix identity(int n);
  static IntMatrix ones(int n);  // J
  static IntMatrix from_sign(const SignMatrix& m);

  IntMatrix transposed() const;
  IntMatrix abs() const;
  bool is_zero_one() const;
};

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator*(long long c, const IntMatrix& x);
IntMatrix kron(const IntMatrix& x, const IntMatrix& y);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant_exact(const IntMatrix& m);
BigInt determinant_exact(const SignMatrix& m);

/// Bareiss over int64 — exact for +-1 matrices up to order 16, where all
/// intermediate values are minors bounded by Hadamard's inequality.
long long determinant_pm1_small(const SignMatrix& m);

}  // namespace qoc
