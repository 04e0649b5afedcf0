#pragma once

#include <map>
#include <vector>

#include "rspin/origami.hpp"
#include "rspin/spin.hpp"

namespace rspin {

// Reference geometric realization of the Humphries curve family
// c_0, ..., c_{2g}: the cylinder cores of the staircase origami form the
// 2g-chain c_1..c_{2g}, and c_0 is a fixed five-step curve crossing only
// c_4.  All reference data (pairings, homology expansions, windings by
// turning number) is computed from this one origami.
struct HumphriesReference {
  int g;
  Origami origami;
  std::vector<CombCurve> curves;        // index 0..2g, curves[0] = c_0
  Mat pairings;                         // (2g+1)^2 signed crossing numbers
  std::vector<HomologyClass> classes;   // classes on the staircase
  Vec lambda;                           // [c_0] = sum lambda_j [c_j], j = 1..2g
  std::vector<Int> windings;            // integer turning numbers (0,...,0 and -1)
  Mat chain_gram;                       // pairings of c_1..c_{2g}
  Mat frame_change;                     // symplectification of the chain basis
  Mat frame_change_inv;
  std::vector<int> frame_ref_q;         // q-values of the frame vectors for the
                                        // reference structure (windings all even)
};

const HumphriesReference& humphries_reference(int g);

// The staircase origami itself (2g-1 squares, stratum (2g-2)).
Origami staircase_origami(int g);

// An r-spin structure recorded by its values on the Humphries curves.  The
// value at c_0 is determined by the other 2g values through the affine
// coherence relation of the reference realization; stored states always
// satisfy it.
struct ChainSpin {
  int r;
  int g;
  std::vector<Int> values;  // 2g+1 residues, index 0 = c_0
};

// Builds a state from the free coordinates (values at c_1..c_{2g}).
ChainSpin make_chain_spin(int r, int g, const std::vector<Int>& free_values);

// Action of T_{c_j}^e on the structure: v_i -> v_i - e <c_i, c_j> v_j.
ChainSpin chain_twist(const ChainSpin& state, int j, Int e);

// Arf invariant of the mod-2 reduction, computed through the symplectified
// chain basis; requires r even.
int chain_arf(const ChainSpin& state);

// BFS closure under all chain twists with e = +-1.  Throws resource_error
// when r^{2g} exceeds the bound.
std::vector<ChainSpin> chain_orbit(const ChainSpin& start,
                                   unsigned long long state_bound = 10'000'000ull);

// Orbit partition of the full state space; returns orbit sizes (descending).
std::vector<unsigned long long> chain_orbit_sizes(int g, int r,
                                                  unsigned long long state_bound = 10'000'000ull);

// Conversion between Humphries-chain coordinates and reference symplectic
// frame coordinates, through the torsor of spin structures over
// Hom(H1, Z/r) anchored at the staircase winding structure.
SpinStructure spin_from_chain(const ChainSpin& state);
ChainSpin chain_from_spin(const SpinStructure& phi);

}  // namespace rspin
