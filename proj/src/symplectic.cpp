#include "rspin/symplectic.hpp"

#include <algorithm>
#include <unordered_set>

namespace rspin {

Int intersection_pairing(const HomologyClass& u, const HomologyClass& v) {
  if (u.size() != v.size()) throw dimension_error("intersection pairing length mismatch");
  int g = genus_of(u);
  Int s = 0;
  for (int i = 0; i < g; ++i) {
    s = checked_add(s, checked_mul(u[2 * i], v[2 * i + 1]));
    s = checked_add(s, -checked_mul(u[2 * i + 1], v[2 * i]));
  }
  return s;
}

Mat standard_form(int g) {
  Mat j(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

bool SymplecticMap::is_symplectic() const {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  int g = m.rows() / 2;
  Mat j = standard_form(g);
  return m.transposed() * j * m == j;
}

HomologyClass apply_transvection(const HomologyClass& c, Int e, const HomologyClass& v) {
  Int coef = checked_mul(e, intersection_pairing(v, c));
  HomologyClass r = v;
  for (size_t i = 0; i < r.size(); ++i) r[i] = checked_add(r[i], checked_mul(coef, c[i]));
  return r;
}

SymplecticMap transvection(const HomologyClass& c, Int e) {
  int n = static_cast<int>(c.size());
  Mat m = Mat::identity(n);
  for (int j = 0; j < n; ++j) {
    HomologyClass ej(n, 0);
    ej[j] = 1;
    Int coef = checked_mul(e, intersection_pairing(ej, c));
    for (int i = 0; i < n; ++i) m(i, j) = checked_add(m(i, j), checked_mul(coef, c[i]));
  }
  return SymplecticMap(m);
}

// ---------------------------------------------------------------------------

SymplecticBasis symplectic_basis_from_gram(const Mat& gram, const std::vector<Vec>& vectors) {
  int n = static_cast<int>(vectors.size());
  if (n == 0 || n % 2 != 0) throw dimension_error("need 2g input vectors");
  if (gram.rows() != n || gram.cols() != n) throw dimension_error("gram shape mismatch");
  Int d = det(gram);
  if (d != 1 && d != -1) throw rank_error("input span is not unimodular symplectic");

  // Work with coefficient vectors relative to the inputs; `pair_of` computes
  // the symplectic product of two coefficient vectors through the Gram
  // matrix.
  auto pair_of = [&](const Vec& a, const Vec& b) {
    Int s = 0;
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (b[j] != 0 && gram(i, j) != 0)
          s = checked_add(s, checked_mul(checked_mul(a[i], b[j]), gram(i, j)));
    }
    return s;
  };

  std::vector<Vec> pool;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    pool.push_back(e);
  }

  std::vector<Vec> out;
  while (!pool.empty()) {
    Vec u = pool.front();
    // Build w with <u, w> = 1 by accumulating Bezout combinations.
    Vec w;
    Int gcur = 0;
    for (size_t k = 1; k < pool.size(); ++k) {
      Int p = pair_of(u, pool[k]);
      if (p == 0) continue;
      if (gcur == 0) {
        w = pool[k];
        gcur = p;
        if (std::abs(gcur) == 1) break;
        continue;
      }
      Int x, y;
      Int g2 = ext_gcd(gcur, p, x, y);
      for (int i = 0; i < n; ++i)
        w[i] = checked_add(checked_mul(x, w[i]), checked_mul(y, pool[k][i]));
      gcur = g2;
      if (std::abs(gcur) == 1) break;
    }
    if (std::abs(gcur) != 1)
      throw rank_error("input span is not unimodular symplectic (no dual vector)");
    if (gcur == -1)
      for (auto& c : w) c = -c;

    // Orthogonalize the rest of the pool against the new pair.
    std::vector<Vec> next;
    for (size_t k = 1; k < pool.size(); ++k) {
      Vec v = pool[k];
      Int a = pair_of(v, w), b = pair_of(v, u);
      // v' = v - a u + b w  satisfies <v', u> = <v', w> = 0.
      for (int i = 0; i < n; ++i)
        v[i] = checked_add(v[i], checked_add(-checked_mul(a, u[i]), checked_mul(b, w[i])));
      bool zero = std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
      if (!zero) next.push_back(v);
    }
    out.push_back(u);
    out.push_back(w);
    pool = std::move(next);
  }
  if (static_cast<int>(out.size()) != n)
    throw rank_error("symplectic reduction did not produce a full basis");

  SymplecticBasis result;
  result.change = Mat(n, n);
  for (int k = 0; k < n; ++k) result.change.set_col(k, out[k]);
  // Materialize output vectors in the callers' coordinates.
  if (!vectors.empty()) {
    int dim = static_cast<int>(vectors[0].size());
    for (int k = 0; k < n; ++k) {
      Vec v(dim, 0);
      for (int i = 0; i < n; ++i)
        if (out[k][i] != 0)
          for (int d2 = 0; d2 < dim; ++d2)
            v[d2] = checked_add(v[d2], checked_mul(out[k][i], vectors[i][d2]));
      result.basis.push_back(v);
    }
  }
  return result;
}

SymplecticBasis symplectic_basis_from_unimodular(const std::vector<HomologyClass>& vectors) {
  int n = static_cast<int>(vectors.size());
  if (n == 0) throw dimension_error("need 2g input vectors");
  Mat gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram(i, j) = intersection_pairing(vectors[i], vectors[j]);
  return symplectic_basis_from_gram(gram, vectors);
}

// ---------------------------------------------------------------------------

QuadForm2 make_quadform(int g, const std::vector<int>& basis_values) {
  if (static_cast<int>(basis_values.size()) != 2 * g)
    throw dimension_error("quadratic form needs 2g basis values");
  if (2 * g > 31) throw resource_error("quadratic form dimension above representation bound");
  QuadForm2 q;
  q.g = g;
  for (int k = 0; k < 2 * g; ++k)
    if (basis_values[k] & 1) q.basis_bits |= 1u << k;
  return q;
}

int quad_value_bits(const QuadForm2& q, std::uint32_t v) {
  // Polarization: q(sum e_k) = sum q(e_k) + sum_{k<l} <e_k, e_l>, and in the
  // reference basis <e_{2i}, e_{2i+1}> = 1 are the only nonzero products.
  int val = 0;
  for (int k = 0; k < 2 * q.g; ++k)
    if ((v >> k) & 1) val ^= (q.basis_bits >> k) & 1;
  for (int i = 0; i < q.g; ++i)
    if (((v >> (2 * i)) & 1) && ((v >> (2 * i + 1)) & 1)) val ^= 1;
  return val;
}

int quad_value(const QuadForm2& q, const HomologyClass& h) {
  if (static_cast<int>(h.size()) != 2 * q.g) throw dimension_error("class/form dimension mismatch");
  std::uint32_t v = 0;
  for (size_t k = 0; k < h.size(); ++k)
    if (h[k] & 1) v |= 1u << k;
  return quad_value_bits(q, v);
}

int arf(const QuadForm2& q) {
  int a = 0;
  for (int i = 0; i < q.g; ++i)
    a ^= ((q.basis_bits >> (2 * i)) & 1) & ((q.basis_bits >> (2 * i + 1)) & 1);
  return a;
}

int quad_value_in_basis(const std::vector<int>& basis_values, const Mat& gram, const Vec& coeffs) {
  int n = static_cast<int>(basis_values.size());
  if (gram.rows() != n || static_cast<int>(coeffs.size()) != n)
    throw dimension_error("quad_value_in_basis shape mismatch");
  int val = 0;
  for (int i = 0; i < n; ++i)
    if (coeffs[i] & 1) val ^= basis_values[i] & 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((coeffs[i] & 1) && (coeffs[j] & 1)) val ^= static_cast<int>(gram(i, j)) & 1;
  return val;
}

QuadForm2 quadform_from_spanning(int g, const std::vector<HomologyClass>& classes,
                                 const std::vector<int>& qvals) {
  int n = 2 * g;
  if (classes.size() != qvals.size()) throw dimension_error("classes/values size mismatch");
  // Row-reduce the class vectors mod 2, tracking q through polarization:
  // adding rows a, b costs q(a+b) = q(a) + q(b) + <a,b> mod 2.
  struct RowQ {
    std::uint32_t bits;
    int q;
  };
  auto pair_mod2 = [&](std::uint32_t a, std::uint32_t b) {
    int s = 0;
    for (int i = 0; i < g; ++i) {
      s ^= ((a >> (2 * i)) & 1) & ((b >> (2 * i + 1)) & 1);
      s ^= ((a >> (2 * i + 1)) & 1) & ((b >> (2 * i)) & 1);
    }
    return s;
  };
  std::vector<RowQ> pivots(n, RowQ{0, 0});
  std::vector<char> have(n, 0);
  for (size_t k = 0; k < classes.size(); ++k) {
    if (static_cast<int>(classes[k].size()) != n) throw dimension_error("class length mismatch");
    std::uint32_t bits = 0;
    for (int i = 0; i < n; ++i)
      if (classes[k][i] & 1) bits |= 1u << i;
    int q = qvals[k] & 1;
    for (int col = 0; col < n && bits; ++col) {
      if (!((bits >> col) & 1)) continue;
      if (!have[col]) {
        pivots[col] = {bits, q};
        have[col] = 1;
        bits = 0;
      } else {
        q ^= pivots[col].q ^ pair_mod2(bits, pivots[col].bits);
        bits ^= pivots[col].bits;
      }
    }
  }
  for (int col = 0; col < n; ++col)
    if (!have[col]) throw rank_error("classes do not span homology mod 2");
  // Evaluate q on the standard basis vectors by elimination (each pivot has
  // its lowest set bit at its column, so ascending reduction terminates).
  std::vector<int> basis_vals(n, 0);
  for (int e = 0; e < n; ++e) {
    std::uint32_t rem = 1u << e, acc_bits = 0;
    int acc_q = 0;
    for (int col = 0; col < n; ++col) {
      if (!((rem >> col) & 1)) continue;
      acc_q ^= pivots[col].q ^ pair_mod2(acc_bits, pivots[col].bits);
      acc_bits ^= pivots[col].bits;
      rem ^= pivots[col].bits;
    }
    if (rem != 0 || acc_bits != (1u << e)) throw internal_error("basis reconstruction failed");
    basis_vals[e] = acc_q;
  }
  return make_quadform(g, basis_vals);
}

// ---------------------------------------------------------------------------

namespace f2 {

Matrix identity(int n) {
  Matrix m = 0;
  for (int i = 0; i < n; ++i) m |= static_cast<Matrix>(1u << i) << (8 * i);
  return m;
}

std::uint32_t apply(Matrix a, std::uint32_t v, int n) {
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    std::uint32_t row = (a >> (8 * i)) & 0xffu;
    r |= static_cast<std::uint32_t>(__builtin_parity(row & v)) << i;
  }
  return r;
}

Matrix multiply(Matrix a, Matrix b, int n) {
  // (a b)(v) = a(b(v)); rows of the product are rows of a pushed through b^T.
  Matrix c = 0;
  for (int i = 0; i < n; ++i) {
    std::uint32_t arow = (a >> (8 * i)) & 0xffu;
    std::uint32_t crow = 0;
    for (int k = 0; k < n; ++k)
      if ((arow >> k) & 1) crow ^= (b >> (8 * k)) & 0xffu;
    c |= static_cast<Matrix>(crow) << (8 * i);
  }
  return c;
}

Matrix transvection_matrix(std::uint32_t v, int n, const Mat& form) {
  Matrix m = identity(n);
  for (int j = 0; j < n; ++j) {
    // column j gains <e_j, v> v; fold into rows.
    int coef = 0;
    for (int k = 0; k < n; ++k)
      if ((v >> k) & 1) coef ^= static_cast<int>(form(j, k)) & 1;
    if (coef)
      for (int i = 0; i < n; ++i)
        if ((v >> i) & 1) m ^= static_cast<Matrix>(1u << j) << (8 * i);
  }
  return m;
}

unsigned long long sp_group_order(int g) {
  unsigned long long order = 1;
  for (int i = 1; i <= g; ++i) {
    order <<= 2 * i - 1;  // 2^{g^2} accumulated as 2^{2i-1}
    unsigned long long f = 1;
    for (int k = 0; k < i; ++k) f *= 4;
    order *= (f - 1);
  }
  return order;
}

QuadForm2 pull_back(const QuadForm2& q, Matrix a) {
  // (A.q)(e_k) = q(A^{-1} e_k); callers pass involutions, so A^{-1} = A and
  // we read off values of q on the columns of A.
  QuadForm2 r;
  r.g = q.g;
  int n = 2 * q.g;
  for (int k = 0; k < n; ++k) {
    std::uint32_t col = 0;
    for (int i = 0; i < n; ++i)
      if ((a >> (8 * i + k)) & 1) col |= 1u << i;
    if (quad_value_bits(q, col)) r.basis_bits |= 1u << k;
  }
  return r;
}

}  // namespace f2

StabilizerGroup stabilizer_group_f2(const QuadForm2& q) {
  int n = 2 * q.g;
  if (n > f2::kMaxDim) throw resource_error("stabilizer enumeration bound is 2g <= 8");
  (void)f2::kMaxDim;
  Mat form = standard_form(q.g);

  std::vector<f2::Matrix> gens;
  for (std::uint32_t v = 1; v < (1u << n); ++v)
    if (quad_value_bits(q, v)) gens.push_back(f2::transvection_matrix(v, n, form));

  std::unordered_set<f2::Matrix> seen;
  std::vector<f2::Matrix> frontier{f2::identity(n)};
  seen.insert(frontier[0]);
  std::vector<f2::Matrix> order_out(frontier);
  while (!frontier.empty()) {
    std::vector<f2::Matrix> next;
    for (f2::Matrix m : frontier)
      for (f2::Matrix t : gens) {
        f2::Matrix p = f2::multiply(t, m, n);
        if (seen.insert(p).second) {
          next.push_back(p);
          order_out.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  StabilizerGroup sg;
  sg.g = q.g;
  sg.elements = std::move(order_out);
  return sg;
}

std::vector<std::uint32_t> quadform_orbit(const QuadForm2& q) {
  int n = 2 * q.g;
  if (n > f2::kMaxDim) throw resource_error("orbit enumeration bound is 2g <= 8");
  Mat form = standard_form(q.g);
  std::vector<f2::Matrix> gens;
  for (std::uint32_t v = 1; v < (1u << n); ++v)
    gens.push_back(f2::transvection_matrix(v, n, form));

  std::unordered_set<std::uint32_t> seen{q.basis_bits};
  std::vector<std::uint32_t> frontier{q.basis_bits}, out{q.basis_bits};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t state : frontier) {
      QuadForm2 cur;
      cur.g = q.g;
      cur.basis_bits = state;
      for (f2::Matrix t : gens) {
        std::uint32_t img = f2::pull_back(cur, t).basis_bits;
        if (seen.insert(img).second) {
          next.push_back(img);
          out.push_back(img);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace rspin
