#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rspin/spin.hpp"

using namespace rspin;

TEST_CASE("make_spin validates the modulus") {
  CHECK_NOTHROW(make_spin(2, 2, {0, 0, 0, 0}));
  CHECK_THROWS_AS(make_spin(3, 2, {0, 0, 0, 0}), modulus_error);
  CHECK_NOTHROW(make_spin(4, 3, {1, 2, 3, 0, 1, 2}));
  CHECK_THROWS_AS(make_spin(2, 2, {0, 0, 0}), dimension_error);
  CHECK_THROWS_AS(make_spin(0, 2, {0, 0, 0, 0}), modulus_error);
  // residues are normalized into [0, r)
  CHECK(make_spin(4, 3, {-1, 5, 3, 0, 1, 2}).values == std::vector<Int>{3, 1, 3, 0, 1, 2});
}

TEST_CASE("arf_spin on basis examples") {
  CHECK(arf_spin(make_spin(2, 2, {1, 1, 1, 1})) == 0);
  CHECK(arf_spin(make_spin(2, 2, {0, 0, 0, 0})) == 0);  // sum = g = 2
  CHECK(arf_spin(make_spin(2, 3, {0, 0, 0, 0, 0, 0})) == 1);  // sum = g = 3
  CHECK_THROWS_AS(arf_spin(make_spin(1, 2, {0, 0, 0, 0})), parity_error);

  // agreement with the associated quadratic form q = phi + 1 mod 2
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Int> v(4);
    for (int k = 0; k < 4; ++k) v[k] = (mask >> k) & 1;
    SpinStructure s = make_spin(2, 2, v);
    CHECK(arf_spin(s) == arf(quadform_of_spin(s)));
  }
}

TEST_CASE("count_by_arf closed forms and enumeration") {
  SpinCounts c = count_by_arf(2, 2);
  CHECK(c.total == 16);
  CHECK(*c.even_count == 10);
  CHECK(*c.odd_count == 6);
  CHECK(c.enumerated);

  c = count_by_arf(3, 4);
  CHECK(c.total == 4096);
  CHECK(*c.even_count == 2304);
  CHECK(*c.odd_count == 1792);
  CHECK(c.enumerated);

  c = count_by_arf(3, 1);
  CHECK(c.total == 1);
  CHECK(!c.even_count);

  c = count_by_arf(4, 6);
  CHECK(c.total == 1679616ull);
  CHECK(*c.even_count == 892296ull);
  CHECK(*c.odd_count == 787320ull);

  CHECK_THROWS_AS(count_by_arf(3, 3), modulus_error);
}

TEST_CASE("admissibility of framed curves") {
  FramedCurve a{"a", {1, 0, 0, 0}, 0};
  CHECK(is_admissible(a, 2));
  FramedCurve b{"b", {1, 0, 0, 0}, 1};
  CHECK(!is_admissible(b, 2));
  FramedCurve zero{"z", {0, 0, 0, 0}, 0};
  CHECK(!is_admissible(zero, 2));
  // orientation reversal preserves admissibility
  FramedCurve arev{"a'", {-1, 0, 0, 0}, 0};
  CHECK(is_admissible(arev, 2) == is_admissible(a, 2));
}
