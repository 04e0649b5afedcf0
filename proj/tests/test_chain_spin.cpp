#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rspin/chain_spin.hpp"

using namespace rspin;

TEST_CASE("reference realization sanity") {
  for (int g : {2, 3, 4, 5}) {
    const HumphriesReference& ref = humphries_reference(g);
    CHECK(stratum(ref.origami) == std::vector<int>{2 * g - 2});
    CHECK(genus(ref.origami) == g);
    // lambda has unit coefficients at c_1 and c_3 only
    for (int j = 0; j < 2 * g; ++j) {
      Int expect = (j == 0 || j == 2) ? 1 : 0;
      CHECK(std::abs(ref.lambda[j]) == expect);
    }
  }
}

TEST_CASE("chain twist basics") {
  // v_j = 0 fixes the state; e = r is the identity
  ChainSpin s = make_chain_spin(2, 2, {1, 0, 1, 0});
  CHECK(chain_twist(s, 2, 1).values == s.values);  // v_2 = 0
  for (int j = 0; j <= 4; ++j) CHECK(chain_twist(chain_twist(s, j, 1), j, 1).values == s.values);

  // twisting at j=2 with v_2 = 1 flips the adjacent v_1
  ChainSpin t = make_chain_spin(2, 2, {1, 1, 0, 0});
  ChainSpin t2 = chain_twist(t, 2, 1);
  CHECK(t2.values[1] == 0);

  // exponent additivity
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int g = 2 + static_cast<int>(rng() % 2);
    int r = (rng() % 2) ? 2 : 2 * g - 2;
    std::vector<Int> v(2 * g);
    for (auto& x : v) x = static_cast<Int>(rng() % r);
    ChainSpin c = make_chain_spin(r, g, v);
    int j = static_cast<int>(rng() % (2 * g + 1));
    Int a = static_cast<Int>(rng() % 5) - 2, b = static_cast<Int>(rng() % 5) - 2;
    CHECK(chain_twist(chain_twist(c, j, a), j, b).values == chain_twist(c, j, a + b).values);
  }
}

TEST_CASE("affine relation is preserved by twists") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    int g = 2 + static_cast<int>(rng() % 2);
    int r = 2 * g - 2;
    std::vector<Int> v(2 * g);
    for (auto& x : v) x = static_cast<Int>(rng() % r);
    ChainSpin s = make_chain_spin(r, g, v);
    for (int step = 0; step < 6; ++step) {
      int j = static_cast<int>(rng() % (2 * g + 1));
      s = chain_twist(s, j, (rng() % 2) ? 1 : -1);
    }
    // rebuilding from the free coordinates reproduces v_0
    std::vector<Int> freev(s.values.begin() + 1, s.values.end());
    CHECK(make_chain_spin(r, g, freev).values == s.values);
  }
}

TEST_CASE("orbit structure reproduces the two-orbit classification") {
  auto sizes22 = chain_orbit_sizes(2, 2);
  CHECK(sizes22 == std::vector<unsigned long long>{10, 6});

  auto sizes32 = chain_orbit_sizes(3, 2);
  CHECK(sizes32 == std::vector<unsigned long long>{36, 28});

  auto sizes31 = chain_orbit_sizes(3, 1);
  CHECK(sizes31 == std::vector<unsigned long long>{1});

  auto sizes34 = chain_orbit_sizes(3, 4);
  CHECK(sizes34 == std::vector<unsigned long long>{2304, 1792});
}

TEST_CASE("Arf is constant along orbits and labels them") {
  for (auto [g, r] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 4}}) {
    // one state of each parity
    std::vector<Int> zero(2 * g, 0);
    ChainSpin s0 = make_chain_spin(r, g, zero);
    auto orbit = chain_orbit(s0);
    int a = chain_arf(s0);
    for (const auto& t : orbit) CHECK(chain_arf(t) == a);

    unsigned long long half = 1;
    for (int i = 0; i < 2 * g; ++i) half *= static_cast<unsigned long long>(r / 2);
    unsigned long long even_size = half * ((1ull << (g - 1)) * ((1ull << g) + 1));
    unsigned long long odd_size = half * ((1ull << (g - 1)) * ((1ull << g) - 1));
    CHECK(orbit.size() == (a == 0 ? even_size : odd_size));
  }
}

TEST_CASE("chain/frame coordinate conversions agree") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    int g = 2 + static_cast<int>(rng() % 3);
    std::vector<int> divisors;
    for (int r = 1; r <= 2 * g - 2; ++r)
      if ((2 * g - 2) % r == 0) divisors.push_back(r);
    int r = divisors[rng() % divisors.size()];
    std::vector<Int> v(2 * g);
    for (auto& x : v) x = static_cast<Int>(rng() % r);
    ChainSpin s = make_chain_spin(r, g, v);
    SpinStructure phi = spin_from_chain(s);
    ChainSpin back = chain_from_spin(phi);
    CHECK(back.values == s.values);
    if (r % 2 == 0) CHECK(arf_spin(phi) == chain_arf(s));
  }
}
