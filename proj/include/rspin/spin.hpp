#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rspin/symplectic.hpp"

namespace rspin {

// An r-spin structure on a closed genus-g surface, stored by its values on
// the reference geometric symplectic basis (x1, y1, ..., xg, yg).  Values on
// a geometric basis determine the structure and every value vector occurs,
// so this struct *is* the structure.
struct SpinStructure {
  int r = 2;
  int g = 2;
  std::vector<Int> values;  // 2g residues in [0, r)
};

// Validates r | 2g-2, g >= 2, r >= 1 and normalizes residues.
SpinStructure make_spin(int r, int g, const std::vector<Int>& values);

// Arf(phi) = sum (phi(x_i)+1)(phi(y_i)+1) mod 2; requires r even.
int arf_spin(const SpinStructure& phi);

// The associated quadratic form q = phi + 1 mod 2 (r even).
QuadForm2 quadform_of_spin(const SpinStructure& phi);

struct SpinCounts {
  unsigned long long total = 0;
  // Present only when r is even.
  std::optional<unsigned long long> even_count;
  std::optional<unsigned long long> odd_count;
  bool enumerated = false;  // true when the closed forms were cross-checked exhaustively
};

// Closed-form counts r^{2g} and (r/2)^{2g} 2^{g-1}(2^g +- 1), verified by
// exhaustive enumeration whenever r^{2g} <= enumeration_limit.
SpinCounts count_by_arf(int g, int r, unsigned long long enumeration_limit = 10'000'000ull);

// A framed curve: a homology class plus a winding value mod r.  The class
// lives in the reference basis of the ambient surface.
struct FramedCurve {
  std::string name;
  HomologyClass h;
  Int w = 0;  // residue mod r of the ambient structure
};

// Admissible = nonzero class and winding 0 (twists about it fix the ambient
// spin structure).
bool is_admissible(const FramedCurve& c, int r);

}  // namespace rspin
