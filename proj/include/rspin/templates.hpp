#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rspin/curve_system.hpp"
#include "rspin/spin.hpp"

namespace rspin {

// The curve system C(kappa, Arf): the chain/spider a-family together with
// the b-curves at the partial-sum indices of kappa (b_0 = a_0 is always
// present).  The layout is synthesized against the construction's gate
// invariants (tree graph, stratum, Arf, zero-distribution of the b-cuts)
// and cached as versioned data files; see data/templates/.
struct PrototypeTemplate {
  int g = 0;
  std::vector<int> kappa;
  std::optional<int> arf;  // required iff gcd(kappa) is even
  std::vector<int> b_indices;  // partial sums, ending with 0 for b_0
  CurveSystem system;
};

// Builds (or loads) the template for the given stratum partition.  kappa is
// a partition of 2g-2 with g >= 3; arf must be supplied exactly when
// gcd(kappa) is even, and arf = 1 is forced at g = 3.
PrototypeTemplate curve_system_for(const std::vector<int>& kappa, std::optional<int> arf);

// A prototype square-tiled surface: the Thurston-Veech origami of
// C(kappa, Arf) with every system curve realized as a cylinder.
struct Prototype {
  PrototypeTemplate tmpl;
  Origami origami;
  std::map<std::string, Cylinder> cylinder_of;
  QuadForm2 qform;            // quadratic form of the induced structure (gcd even)
  SpinStructure spin;         // canonical representative of the induced structure
  std::vector<FramedCurve> framed;  // named curves with classes and windings
};

Prototype prototype(const std::vector<int>& kappa, std::optional<int> arf);

// Arf invariant of an origami's winding structure, reconstructed from the
// cylinder cores (which span homology on Thurston-Veech surfaces).
int origami_arf(const Origami& o);

// Verifies the gate invariants of a built prototype: stratum, genus, tree
// graph, cylinder bijection, admissible cores, the b-cut zero counts, the
// quarter-square complement, and the Arf parameter.  Throws on failure.
void verify_prototype(const Prototype& p);

// Template (de)serialization: named curves with family tags and cyclic
// intersection lists, one per line:
//   curve <name> <h|v> <orientation> : p1 p2 ...
std::string template_to_text(const PrototypeTemplate& t);
PrototypeTemplate template_from_text(const std::string& text);

// Directory with bundled template data; overridden by $RSPIN_TEMPLATE_DIR.
std::string template_data_dir();

}  // namespace rspin
