#include "rspin/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace rspin {

namespace {

using I128 = __int128;

Int narrow(I128 v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw internal_error("integer overflow in exact linear algebra");
  return static_cast<Int>(v);
}

}  // namespace

Int checked_add(Int a, Int b) { return narrow(static_cast<I128>(a) + b); }
Int checked_mul(Int a, Int b) { return narrow(static_cast<I128>(a) * b); }

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vec Mat::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_row(int i, const Vec& v) {
  for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Mat::set_col(int j, const Vec& v) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw dimension_error("matrix product shape mismatch");
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      Int aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
    }
  return c;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols() != static_cast<int>(v.size())) throw dimension_error("matrix-vector shape mismatch");
  Vec r(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) r[i] = checked_add(r[i], checked_mul(a(i, j), v[j]));
  return r;
}

Int gcd_int(Int a, Int b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  Int x1, y1;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = checked_add(x1, -checked_mul(a / b, y1));
  return g;
}

Int det(const Mat& m) {
  if (m.rows() != m.cols()) throw dimension_error("det of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination on an __int128 working copy.
  std::vector<std::vector<I128>> a(n, std::vector<I128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  I128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return narrow(sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1]);
}

Mat hnf_cols(const Mat& m) {
  int rows = m.rows(), cols = m.cols();
  Mat w = m;
  int pivot_col = 0;
  for (int r = 0; r < rows && pivot_col < cols; ++r) {
    // Clear row r to a single gcd entry at pivot_col using column operations.
    while (true) {
      int nz = -1;
      for (int j = pivot_col + 1; j < cols; ++j)
        if (w(r, j) != 0) { nz = j; break; }
      if (nz < 0) break;
      if (w(r, pivot_col) == 0) {
        for (int i = 0; i < rows; ++i) std::swap(w(i, pivot_col), w(i, nz));
        continue;
      }
      Int x, y;
      Int g = ext_gcd(w(r, pivot_col), w(r, nz), x, y);
      Int a = w(r, pivot_col) / g, b = w(r, nz) / g;
      // (col_p, col_z) <- (x col_p + y col_z, -b col_p + a col_z)
      for (int i = 0; i < rows; ++i) {
        Int cp = w(i, pivot_col), cz = w(i, nz);
        w(i, pivot_col) = checked_add(checked_mul(x, cp), checked_mul(y, cz));
        w(i, nz) = checked_add(checked_mul(-b, cp), checked_mul(a, cz));
      }
    }
    if (w(r, pivot_col) == 0) continue;
    if (w(r, pivot_col) < 0)
      for (int i = 0; i < rows; ++i) w(i, pivot_col) = -w(i, pivot_col);
    // Reduce earlier columns against this pivot.
    for (int j = 0; j < pivot_col; ++j) {
      Int q = w(r, j) >= 0 ? w(r, j) / w(r, pivot_col)
                           : -((-w(r, j) + w(r, pivot_col) - 1) / w(r, pivot_col));
      if (q != 0)
        for (int i = 0; i < rows; ++i)
          w(i, j) = checked_add(w(i, j), -checked_mul(q, w(i, pivot_col)));
    }
    ++pivot_col;
  }
  Mat h(rows, pivot_col);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < pivot_col; ++j) h(i, j) = w(i, j);
  return h;
}

Mat kernel_basis(const Mat& m) {
  // Column-reduce [m; I] so that kernel vectors appear under zero columns.
  int rows = m.rows(), cols = m.cols();
  Mat w(rows + cols, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) w(i, j) = m(i, j);
  for (int j = 0; j < cols; ++j) w(rows + j, j) = 1;

  int pivot_col = 0;
  for (int r = 0; r < rows && pivot_col < cols; ++r) {
    while (true) {
      int nz = -1;
      for (int j = pivot_col + 1; j < cols; ++j)
        if (w(r, j) != 0) { nz = j; break; }
      if (nz < 0) break;
      if (w(r, pivot_col) == 0) {
        for (int i = 0; i < rows + cols; ++i) std::swap(w(i, pivot_col), w(i, nz));
        continue;
      }
      Int x, y;
      Int g = ext_gcd(w(r, pivot_col), w(r, nz), x, y);
      Int a = w(r, pivot_col) / g, b = w(r, nz) / g;
      for (int i = 0; i < rows + cols; ++i) {
        Int cp = w(i, pivot_col), cz = w(i, nz);
        w(i, pivot_col) = checked_add(checked_mul(x, cp), checked_mul(y, cz));
        w(i, nz) = checked_add(checked_mul(-b, cp), checked_mul(a, cz));
      }
    }
    if (w(r, pivot_col) != 0) ++pivot_col;
  }
  // Columns pivot_col..cols-1 have zero image.
  Mat k(cols, cols - pivot_col);
  for (int j = pivot_col; j < cols; ++j)
    for (int i = 0; i < cols; ++i) k(i, j - pivot_col) = w(rows + i, j);
  return k;
}

int rank(const Mat& m) { return hnf_cols(m).cols(); }

Mat inverse_unimodular(const Mat& m) {
  if (m.rows() != m.cols()) throw dimension_error("inverse of non-square matrix");
  Int d = det(m);
  if (d != 1 && d != -1) throw rank_error("matrix is not unimodular");
  int n = m.rows();
  // Gauss-Jordan over Q is exact here because every pivot stays +-1 after
  // integer row reduction with the Bezout trick.
  Mat w = m, inv = Mat::identity(n);
  for (int c = 0; c < n; ++c) {
    // Make w(c,c) = +-1 via row combinations (possible: column c of the
    // remaining minor has gcd 1 since det is a unit).
    while (true) {
      int best = -1;
      for (int i = c; i < n; ++i)
        if (w(i, c) != 0 && (best < 0 || std::abs(w(i, c)) < std::abs(w(best, c)))) best = i;
      if (best < 0) throw rank_error("matrix is singular");
      if (best != c)
        for (int j = 0; j < n; ++j) {
          std::swap(w(c, j), w(best, j));
          std::swap(inv(c, j), inv(best, j));
        }
      bool done = true;
      for (int i = c + 1; i < n; ++i) {
        if (w(i, c) == 0) continue;
        Int q = w(i, c) / w(c, c);
        for (int j = 0; j < n; ++j) {
          w(i, j) = checked_add(w(i, j), -checked_mul(q, w(c, j)));
          inv(i, j) = checked_add(inv(i, j), -checked_mul(q, inv(c, j)));
        }
        if (w(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (std::abs(w(c, c)) != 1) throw rank_error("matrix is not unimodular");
  }
  for (int c = n - 1; c >= 0; --c) {
    if (w(c, c) < 0)
      for (int j = 0; j < n; ++j) { w(c, j) = -w(c, j); inv(c, j) = -inv(c, j); }
    for (int i = 0; i < c; ++i) {
      Int q = w(i, c);
      if (q == 0) continue;
      for (int j = 0; j < n; ++j) {
        w(i, j) = checked_add(w(i, j), -checked_mul(q, w(c, j)));
        inv(i, j) = checked_add(inv(i, j), -checked_mul(q, inv(c, j)));
      }
    }
  }
  return inv;
}

Vec solve_unimodular(const Mat& m, const Vec& b) { return inverse_unimodular(m) * b; }

Vec reduce_mod_lattice(const Mat& hnf, const Vec& v) {
  Vec r = v;
  int rows = hnf.rows(), cols = hnf.cols();
  if (static_cast<int>(v.size()) != rows) throw dimension_error("reduce_mod_lattice shape mismatch");
  for (int j = 0; j < cols; ++j) {
    int p = -1;
    for (int i = 0; i < rows; ++i)
      if (hnf(i, j) != 0) { p = i; break; }
    if (p < 0) continue;
    Int piv = hnf(p, j);
    Int q = r[p] >= 0 ? r[p] / piv : -((-r[p] + piv - 1) / piv);
    if (q != 0)
      for (int i = 0; i < rows; ++i) r[i] = checked_add(r[i], -checked_mul(q, hnf(i, j)));
  }
  return r;
}

}  // namespace rspin
