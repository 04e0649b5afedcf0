#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rspin/linalg.hpp"

namespace rspin {

// Homology classes are integer vectors of length 2g in the reference
// symplectic basis, ordered (x1, y1, x2, y2, ..., xg, yg).
using HomologyClass = Vec;

inline int genus_of(const HomologyClass& v) {
  if (v.size() % 2 != 0 || v.empty()) throw dimension_error("homology vector length must be 2g");
  return static_cast<int>(v.size()) / 2;
}

// <u, v> with <x_i, y_i> = +1 in the reference basis.
Int intersection_pairing(const HomologyClass& u, const HomologyClass& v);

// Standard symplectic Gram matrix J0 for 2g coordinates in (x,y) pair order.
Mat standard_form(int g);

// Integral symplectic map, acting on column vectors.
struct SymplecticMap {
  Mat m;
  explicit SymplecticMap(Mat mm) : m(std::move(mm)) {}
  HomologyClass apply(const HomologyClass& v) const { return m * v; }
  bool is_symplectic() const;
};

// Homology action of the e-th power of a Dehn twist about a curve in class
// c: v |-> v + e <v, c> c.
SymplecticMap transvection(const HomologyClass& c, Int e);
HomologyClass apply_transvection(const HomologyClass& c, Int e, const HomologyClass& v);

// ---------------------------------------------------------------------------
// Symplectic Gram-Schmidt over Z.
//
// Given 2g vectors spanning a unimodular symplectic lattice (with the
// pairing supplied as a callback so callers can use either the reference
// form or a computed Gram matrix), produce a basis (x1,y1,...,xg,yg) with
// the standard pairings.  Returns the basis vectors expressed as integer
// combinations of the inputs (the change-of-basis matrix C, column k =
// coefficients of output vector k in terms of the inputs) together with the
// output vectors themselves when the inputs live in coordinates.
// ---------------------------------------------------------------------------
struct SymplecticBasis {
  std::vector<Vec> basis;  // output vectors (in the same coordinates as the inputs)
  Mat change;              // column k = expansion of basis[k] in the input vectors
};

// `pairing(i, j)` must return the symplectic product of input vectors i, j.
// Throws rank_error when the inputs do not span unimodularly.
SymplecticBasis symplectic_basis_from_gram(const Mat& gram, const std::vector<Vec>& vectors);

// Convenience wrapper using the reference intersection pairing.
SymplecticBasis symplectic_basis_from_unimodular(const std::vector<HomologyClass>& vectors);

// ---------------------------------------------------------------------------
// Quadratic forms over F2 and the Arf invariant.
// ---------------------------------------------------------------------------

// A quadratic form on (F2)^{2g} with the standard symplectic form, stored by
// its 2g basis values q(x1), q(y1), ..., q(yg).  Values on arbitrary vectors
// come from iterated polarization q(a+b) = q(a) + q(b) + <a,b>.
struct QuadForm2 {
  int g = 1;
  std::uint32_t basis_bits = 0;  // bit k = q(basis vector k)

  int value_on_basis(int k) const { return (basis_bits >> k) & 1; }
};

QuadForm2 make_quadform(int g, const std::vector<int>& basis_values);

// q evaluated on a mod-2 vector given as bitmask (bit k = coordinate k).
int quad_value_bits(const QuadForm2& q, std::uint32_t v);
// q evaluated on an integer homology class (reduced mod 2).
int quad_value(const QuadForm2& q, const HomologyClass& h);

// Arf(q) = sum q(x_i) q(y_i) mod 2.
int arf(const QuadForm2& q);

// Polarized evaluation of an arbitrary F2 quadratic form given by values on
// an arbitrary basis with Gram matrix `gram`:  coefficients `coeffs` expand
// the argument in that basis.
int quad_value_in_basis(const std::vector<int>& basis_values, const Mat& gram, const Vec& coeffs);

// Reconstruct the quadratic form on (F2)^{2g} (reference symplectic
// coordinates) from q-values on a spanning family of classes.  Throws
// rank_error when the classes do not span mod 2.
QuadForm2 quadform_from_spanning(int g, const std::vector<HomologyClass>& classes,
                                 const std::vector<int>& qvals);

// ---------------------------------------------------------------------------
// The finite symplectic group Sp(2g, F2), elements as bit-packed matrices.
// Row i of the matrix lives in byte i of the word, so 2g <= 8.
// ---------------------------------------------------------------------------
namespace f2 {

using Matrix = std::uint64_t;  // row i = bits [8i, 8i+8)

constexpr int kMaxDim = 8;

Matrix identity(int n);
Matrix multiply(Matrix a, Matrix b, int n);
std::uint32_t apply(Matrix a, std::uint32_t v, int n);
// Symplectic transvection x |-> x + <x,v> v over F2.
Matrix transvection_matrix(std::uint32_t v, int n, const Mat& form);

// Order of Sp(2g, F2).
unsigned long long sp_group_order(int g);

// Pullback action of a matrix on a quadratic form: (A.q)(x) = q(A^{-1} x).
// For the involutive transvection generators used here A = A^{-1}, so we
// evaluate q(A x) directly when closing orbits.
QuadForm2 pull_back(const QuadForm2& q, Matrix a);

}  // namespace f2

// BFS closure of the subgroup of Sp(2g,F2) generated by transvections in all
// vectors v with q(v) = 1.  Throws resource_error when 2g > 8.
struct StabilizerGroup {
  int g;
  std::vector<f2::Matrix> elements;
  unsigned long long order() const { return elements.size(); }
};
StabilizerGroup stabilizer_group_f2(const QuadForm2& q);

// Orbit of q under all of Sp(2g,F2) (generated by all nonzero transvections),
// as the set of basis-value words.  Used as the orbit-stabilizer oracle.
std::vector<std::uint32_t> quadform_orbit(const QuadForm2& q);

}  // namespace rspin
