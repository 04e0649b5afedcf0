#pragma once

#include <cstdint>
#include <vector>

#include "rspin/errors.hpp"

namespace rspin {

using Int = std::int64_t;
using Vec = std::vector<Int>;

// Dense integer matrix, row-major.  All algorithms here are exact; entries
// are kept in int64 with __int128 intermediates and overflow checks, which
// is ample for the lattice sizes this project works at (dimension <= ~250,
// entries tiny).
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  Int operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);
  void set_col(int j, const Vec& v);

  Mat transposed() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

// Determinant by fraction-free (Bareiss) elimination.
Int det(const Mat& m);

// Column-style Hermite normal form of the lattice spanned by the columns of
// `m`.  Zero columns are dropped; the result has one column per lattice
// basis vector, in echelon shape with positive pivots and reduced entries
// above them.  Two integer lattices are equal iff their HNFs are equal.
Mat hnf_cols(const Mat& m);

// Basis for the integer kernel {x : m x = 0}, returned as columns.
Mat kernel_basis(const Mat& m);

int rank(const Mat& m);

// Inverse of a unimodular matrix (det = +-1); throws rank_error otherwise.
Mat inverse_unimodular(const Mat& m);

// Solve m x = b exactly over the integers for square unimodular m.
Vec solve_unimodular(const Mat& m, const Vec& b);

// Reduce `v` modulo the lattice spanned by the columns of an HNF matrix
// (as produced by hnf_cols).  The result is the canonical representative
// of v in the quotient.
Vec reduce_mod_lattice(const Mat& hnf, const Vec& v);

Int gcd_int(Int a, Int b);
// Extended gcd: returns g and sets x, y with a x + b y = g, g >= 0.
Int ext_gcd(Int a, Int b, Int& x, Int& y);

inline Int mod_norm(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace rspin
