#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rspin/origami.hpp"
#include "rspin/spin.hpp"

namespace rspin {

// One curve of a transverse curve system: a cyclic sequence of intersection
// point ids.  Curves of the same family are disjoint; every point lies on
// exactly one h-curve and one v-curve.
struct SystemCurve {
  std::string name;
  char family;              // 'h' or 'v'
  std::vector<int> points;  // cyclic order of crossings along the curve
  int orientation = 1;      // declared orientation (+1/-1)
};

struct CurveSystem {
  std::vector<SystemCurve> curves;
  int num_points = 0;
  // optional crossing signs relative to the declared orientations; empty
  // means all positive
  std::vector<int> crossing_signs;

  const SystemCurve& curve(const std::string& name) const;
};

void validate_system(const CurveSystem& cs);

struct IntersectionGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // curve indices, one per shared point
  bool connected = false;
  bool tree = false;  // arboreal
};

IntersectionGraph intersection_graph(const CurveSystem& cs);

// The Thurston-Veech square-tiled surface of a filling transverse system:
// one unit square per intersection point, sigma_h and sigma_v following the
// h- and v-curves.  Orientations are propagated from the lexicographically
// first h-curve so that every crossing is positively oriented; an odd
// obstruction cycle raises orientability_error.
struct BuiltOrigami {
  Origami origami;
  std::map<std::string, Cylinder> cylinder_of;  // curve name -> its cylinder
};

BuiltOrigami build_origami(const CurveSystem& cs);

}  // namespace rspin
