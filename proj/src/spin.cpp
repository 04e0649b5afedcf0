#include "rspin/spin.hpp"

#include <algorithm>
#include <string>

namespace rspin {

SpinStructure make_spin(int r, int g, const std::vector<Int>& values) {
  if (g < 2) throw dimension_error("spin structures need genus >= 2");
  if (r < 1) throw modulus_error("modulus must be a positive integer (r = 0 torus case is rejected)");
  if ((2 * g - 2) % r != 0)
    throw modulus_error("r must divide 2g-2 (no r-spin structures otherwise): r=" + std::to_string(r) +
                        ", g=" + std::to_string(g));
  if (static_cast<int>(values.size()) != 2 * g)
    throw dimension_error("expected 2g basis values");
  SpinStructure s;
  s.r = r;
  s.g = g;
  s.values.resize(2 * g);
  for (int i = 0; i < 2 * g; ++i) s.values[i] = mod_norm(values[i], r);
  return s;
}

int arf_spin(const SpinStructure& phi) {
  if (phi.r % 2 != 0) throw parity_error("Arf invariant requires r even");
  int a = 0;
  for (int i = 0; i < phi.g; ++i)
    a ^= static_cast<int>(((phi.values[2 * i] + 1) & 1) & ((phi.values[2 * i + 1] + 1) & 1));
  return a;
}

QuadForm2 quadform_of_spin(const SpinStructure& phi) {
  if (phi.r % 2 != 0) throw parity_error("quadratic form requires r even");
  std::vector<int> q(2 * phi.g);
  for (int k = 0; k < 2 * phi.g; ++k) q[k] = static_cast<int>((phi.values[k] + 1) & 1);
  return make_quadform(phi.g, q);
}

SpinCounts count_by_arf(int g, int r, unsigned long long enumeration_limit) {
  if (g < 2) throw dimension_error("genus >= 2 required");
  if (r < 1 || (2 * g - 2) % r != 0) throw modulus_error("r must divide 2g-2");

  auto pow_u = [](unsigned long long b, int e) {
    unsigned long long p = 1;
    for (int i = 0; i < e; ++i) p *= b;
    return p;
  };

  SpinCounts c;
  c.total = pow_u(r, 2 * g);
  if (r % 2 == 0) {
    unsigned long long half = pow_u(r / 2, 2 * g);
    unsigned long long even_forms = (1ull << (g - 1)) * ((1ull << g) + 1);
    unsigned long long odd_forms = (1ull << (g - 1)) * ((1ull << g) - 1);
    c.even_count = half * even_forms;
    c.odd_count = half * odd_forms;
  }

  if (c.total <= enumeration_limit) {
    unsigned long long even = 0, odd = 0;
    std::vector<Int> v(2 * g, 0);
    unsigned long long n = c.total;
    for (unsigned long long it = 0; it < n; ++it) {
      if (r % 2 == 0) {
        int a = 0;
        for (int i = 0; i < g; ++i)
          a ^= static_cast<int>(((v[2 * i] + 1) & 1) & ((v[2 * i + 1] + 1) & 1));
        (a ? odd : even) += 1;
      }
      for (int k = 0; k < 2 * g; ++k) {
        if (++v[k] < r) break;
        v[k] = 0;
      }
    }
    if (r % 2 == 0 && (even != *c.even_count || odd != *c.odd_count))
      throw internal_error("closed-form spin counts disagree with exhaustive enumeration");
    c.enumerated = true;
  }
  return c;
}

bool is_admissible(const FramedCurve& c, int r) {
  bool nonzero = std::any_of(c.h.begin(), c.h.end(), [](Int x) { return x != 0; });
  if (!nonzero) return false;
  return mod_norm(c.w, r) == 0;
}

}  // namespace rspin
