#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rspin/linalg.hpp"
#include "rspin/symplectic.hpp"

using namespace rspin;

namespace {

HomologyClass basis_vec(int g, int k) {
  HomologyClass v(2 * g, 0);
  v[k] = 1;
  return v;
}

}  // namespace

TEST_CASE("integer linear algebra basics") {
  Mat m(2, 2);
  m(0, 0) = 3;
  m(0, 1) = 1;
  m(1, 0) = 5;
  m(1, 1) = 2;
  CHECK(det(m) == 1);
  Mat inv = inverse_unimodular(m);
  CHECK(inv * m == Mat::identity(2));

  // HNF-based lattice equality: {(2,0),(1,1)} and {(1,1),(1,-1)} both span
  // the index-2 sublattice of even coordinate sum.
  Mat a(2, 2), b(2, 2);
  a(0, 0) = 2; a(1, 0) = 0; a(0, 1) = 1; a(1, 1) = 1;
  b(0, 0) = 1; b(1, 0) = 1; b(0, 1) = 1; b(1, 1) = -1;
  CHECK(hnf_cols(a) == hnf_cols(b));

  Mat k(1, 3);
  k(0, 0) = 2; k(0, 1) = -1; k(0, 2) = 0;
  Mat kb = kernel_basis(k);
  CHECK(kb.cols() == 2);
  for (int j = 0; j < kb.cols(); ++j)
    CHECK(2 * kb(0, j) - kb(1, j) == 0);
}

TEST_CASE("intersection pairing on the reference basis") {
  int g = 2;
  auto x1 = basis_vec(g, 0), y1 = basis_vec(g, 1), x2 = basis_vec(g, 2), y2 = basis_vec(g, 3);
  CHECK(intersection_pairing(x1, y1) == 1);
  CHECK(intersection_pairing(y1, x1) == -1);
  CHECK(intersection_pairing(x1, x2) == 0);

  // <x1 + y2, y1 + x2> = 1 + (-1) = 0
  HomologyClass u = x1, v = y1;
  for (int i = 0; i < 4; ++i) u[i] += y2[i];
  for (int i = 0; i < 4; ++i) v[i] += x2[i];
  CHECK(intersection_pairing(u, v) == 0);

  CHECK_THROWS_AS(intersection_pairing(x1, HomologyClass(6, 0)), dimension_error);

  // <v, v> = 0, bilinearity on random vectors.
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    HomologyClass a(4), b(4), c(4);
    for (int i = 0; i < 4; ++i) { a[i] = d(rng); b[i] = d(rng); c[i] = d(rng); }
    CHECK(intersection_pairing(a, a) == 0);
    CHECK(intersection_pairing(a, b) == -intersection_pairing(b, a));
    HomologyClass ab(4);
    Int s = d(rng), t = d(rng);
    for (int i = 0; i < 4; ++i) ab[i] = s * a[i] + t * b[i];
    CHECK(intersection_pairing(ab, c) == s * intersection_pairing(a, c) + t * intersection_pairing(b, c));
  }
}

TEST_CASE("transvections act symplectically") {
  int g = 2;
  auto x1 = basis_vec(g, 0), y1 = basis_vec(g, 1);

  // transvection(y1, 1) sends x1 to x1 + y1
  CHECK(apply_transvection(y1, 1, x1) == HomologyClass{1, 1, 0, 0});
  CHECK(transvection(y1, 0).m == Mat::identity(4));

  std::mt19937 rng(11);
  std::uniform_int_distribution<Int> d(-9, 9);
  std::uniform_int_distribution<Int> de(-3, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    HomologyClass c(4), u(4), v(4);
    for (int i = 0; i < 4; ++i) { c[i] = d(rng); u[i] = d(rng); v[i] = d(rng); }
    Int e = de(rng);
    HomologyClass tu = apply_transvection(c, e, u), tv = apply_transvection(c, e, v);
    CHECK(intersection_pairing(tu, tv) == intersection_pairing(u, v));
    // additivity in the exponent
    Int a = de(rng), b = de(rng);
    CHECK(apply_transvection(c, a, apply_transvection(c, b, u)) == apply_transvection(c, a + b, u));
  }
  CHECK(transvection(HomologyClass{1, 2, -3, 4}, 2).is_symplectic());
}

TEST_CASE("symplectic basis from a unimodular span") {
  int g = 2;
  std::vector<HomologyClass> ref;
  for (int k = 0; k < 4; ++k) ref.push_back(basis_vec(g, k));
  SymplecticBasis sb = symplectic_basis_from_unimodular(ref);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(intersection_pairing(sb.basis[i], sb.basis[j]) == standard_form(g)(i, j));
  // the reference basis is already symplectic, so it comes back unchanged
  CHECK(sb.change == Mat::identity(4));

  // (x1, x1+y1, x2, y2)
  std::vector<HomologyClass> mixed{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  sb = symplectic_basis_from_unimodular(mixed);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(intersection_pairing(sb.basis[i], sb.basis[j]) == standard_form(g)(i, j));

  // genus-2 chain classes (tridiagonal Gram) also symplectify
  std::vector<HomologyClass> chain{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}};
  Mat gram(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gram(i, j) = intersection_pairing(chain[i], chain[j]);
  sb = symplectic_basis_from_gram(gram, chain);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(intersection_pairing(sb.basis[i], sb.basis[j]) == standard_form(g)(i, j));

  // non-unimodular input is rejected
  std::vector<HomologyClass> bad{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK_THROWS_AS(symplectic_basis_from_unimodular(bad), rank_error);
}

TEST_CASE("quadratic forms and Arf") {
  QuadForm2 zero = make_quadform(2, {0, 0, 0, 0});
  CHECK(quad_value_bits(zero, 0) == 0);
  CHECK(arf(zero) == 0);

  // q(x1 + y1) = q(x1) + q(y1) + 1
  QuadForm2 q = make_quadform(2, {1, 0, 1, 1});
  CHECK(quad_value(q, {1, 1, 0, 0}) == (1 ^ 0 ^ 1));
  // q(x1 + x2) = q(x1) + q(x2)
  CHECK(quad_value(q, {1, 0, 1, 0}) == (1 ^ 1));

  QuadForm2 odd = make_quadform(2, {1, 1, 0, 0});
  CHECK(arf(odd) == 1);

  // Lemma-style count: 10 of the 16 genus-2 forms are even.
  int even = 0;
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    QuadForm2 f{2, bits};
    if (arf(f) == 0) ++even;
  }
  CHECK(even == 10);
}

TEST_CASE("Sp(2g,F2) orbits and stabilizers") {
  CHECK(f2::sp_group_order(2) == 720);
  CHECK(f2::sp_group_order(3) == 1451520ull);

  // orbit-stabilizer for g = 2: orbits of sizes 10 and 6
  QuadForm2 even = make_quadform(2, {0, 0, 0, 0});
  QuadForm2 odd = make_quadform(2, {1, 1, 0, 0});
  auto orb_even = quadform_orbit(even);
  auto orb_odd = quadform_orbit(odd);
  CHECK(orb_even.size() == 10);
  CHECK(orb_odd.size() == 6);

  StabilizerGroup se = stabilizer_group_f2(even);
  StabilizerGroup so = stabilizer_group_f2(odd);
  // The transvection closure equals the full form stabilizer for the odd
  // form; for the even genus-2 form the transvections famously generate
  // only an index-2 subgroup of O+(4,2) (order 36 of 72).  From genus 3 on
  // there is no exception.
  CHECK(se.order() == 36);
  CHECK(so.order() == 120);  // 720 / 6

  // Arf is constant on orbits.
  for (auto bits : orb_even) CHECK(arf(QuadForm2{2, bits}) == 0);
  for (auto bits : orb_odd) CHECK(arf(QuadForm2{2, bits}) == 1);

  // every element of the closure fixes q under pullback
  for (f2::Matrix m : se.elements) {
    for (std::uint32_t v = 0; v < 16; ++v)
      CHECK(quad_value_bits(even, f2::apply(m, v, 4)) == quad_value_bits(even, v));
  }
}

TEST_CASE("Sp(6,F2) stabilizer orders via orbit-stabilizer") {
  QuadForm2 even = make_quadform(3, {0, 0, 0, 0, 0, 0});
  QuadForm2 odd = make_quadform(3, {1, 1, 0, 0, 0, 0});
  REQUIRE(arf(even) == 0);
  REQUIRE(arf(odd) == 1);
  auto orb_even = quadform_orbit(even);
  auto orb_odd = quadform_orbit(odd);
  CHECK(orb_even.size() == 36);
  CHECK(orb_odd.size() == 28);
  StabilizerGroup se = stabilizer_group_f2(even);
  StabilizerGroup so = stabilizer_group_f2(odd);
  CHECK(se.order() == 1451520ull / 36);  // 40320: full stabilizer reached
  CHECK(so.order() == 1451520ull / 28);  // 51840
}
