#include "qoc/matrix.hpp"

#include <cstdlib>

#include "qoc/error.hpp"

namespace qoc {

long long SignMatrix::row_sum(int i) const {
  long long s = 0;
  for (int j = 0; j < n; ++j) s += at(i, j);
  return s;
}

bool SignMatrix::first_row_all_plus() const {
  for (int j = 0; j < n; ++j)
    if (at(0, j) != 1) return false;
  return true;
}

bool SignMatrix::first_col_all_plus() const {
  for (int i = 0; i < n; ++i)
    if (at(i, 0) != 1) return false;
  return true;
}

bool SignMatrix::row_even(int i) const {
  int plus = 0;
  for (int j = 0; j < n; ++j) plus += at(i, j) == 1;
  return plus % 2 == 0;
}

std::vector<std::string> SignMatrix::to_strings() const {
  std::vector<std::string> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::string& s = out[std::size_t(i)];
    s.resize(std::size_t(n));
    for (int j = 0; j < n; ++j) s[std::size_t(j)] = at(i, j) == 1 ? '+' : '-';
  }
  return out;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.put(i, i, 1);
  return m;
}

IntMatrix IntMatrix::ones(int n) { return IntMatrix(n, n, 1); }

IntMatrix IntMatrix::from_sign(const SignMatrix& s) {
  IntMatrix m(s.n, s.n);
  for (std::size_t k = 0; k < s.a.size(); ++k) m.a[k] = s.a[k];
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.put(j, i, at(i, j));
  return t;
}

IntMatrix IntMatrix::abs() const {
  IntMatrix m = *this;
  for (long long& v : m.a) v = std::llabs(v);
  return m;
}

bool IntMatrix::is_zero_one() const {
  for (long long v : a)
    if (v != 0 && v != 1) return false;
  return true;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw Error(ErrorCode::DimensionMismatch, "matrix add");
  IntMatrix z = x;
  for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] += y.a[k];
  return z;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw Error(ErrorCode::DimensionMismatch, "matrix sub");
  IntMatrix z = x;
  for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] -= y.a[k];
  return z;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw Error(ErrorCode::DimensionMismatch, "matrix mul");
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        z.a[std::size_t(i) * z.cols + j] += v * y.at(k, j);
    }
  return z;
}

IntMatrix operator*(long long c, const IntMatrix& x) {
  IntMatrix z = x;
  for (long long& v : z.a) v *= c;
  return z;
}

IntMatrix kron(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix z(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      long long v = x.at(i, j);
      if (v == 0) continue;
      for (int p = 0; p < y.rows; ++p)
        for (int q = 0; q < y.cols; ++q)
          z.put(i * y.rows + p, j * y.cols + q, v * y.at(p, q));
    }
  return z;
}

namespace {

// Single-step fraction-free elimination; divisions are exact.
template <typename Int>
Int bareiss(std::vector<Int> m, int n) {
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[std::size_t(k) * n + k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[std::size_t(i) * n + k] != 0) { p = i; break; }
      if (p < 0) return Int(0);
      for (int j = 0; j < n; ++j)
        std::swap(m[std::size_t(k) * n + j], m[std::size_t(p) * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int v = m[std::size_t(i) * n + j] * m[std::size_t(k) * n + k] -
                m[std::size_t(i) * n + k] * m[std::size_t(k) * n + j];
        m[std::size_t(i) * n + j] = v / prev;
      }
    prev = m[std::size_t(k) * n + k];
  }
  Int det = m[std::size_t(n - 1) * n + (n - 1)];
  return sign < 0 ? Int(-det) : det;
}

}  // namespace

BigInt determinant_exact(const IntMatrix& m) {
  if (m.rows != m.cols)
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  std::vector<BigInt> w(m.a.begin(), m.a.end());
  return bareiss(std::move(w), m.rows);
}

BigInt determinant_exact(const SignMatrix& m) {
  return determinant_exact(IntMatrix::from_sign(m));
}

long long determinant_pm1_small(const SignMatrix& m) {
  if (m.n > 16) throw Error(ErrorCode::TooLarge, "int64 determinant limited to order 16");
  std::vector<long long> w(m.a.begin(), m.a.end());
  return bareiss(std::move(w), m.n);
}

}  // namespace qoc
