#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rspin/linalg.hpp"
#include "rspin/symplectic.hpp"

namespace rspin {

// Sides of a unit square.
enum class Side : std::uint8_t { Left = 0, Right = 1, Bottom = 2, Top = 3 };

Side opposite(Side s);
const char* side_name(Side s);

// One passage of a curve through a square: it enters through `in` and
// leaves through `out`.  U-turns (in == out) are rejected as degenerate.
struct Step {
  int sq;
  Side in, out;
  bool operator==(const Step& o) const { return sq == o.sq && in == o.in && out == o.out; }
};

// A combinatorial closed curve: a cyclic sequence of steps whose consecutive
// gluings are consistent.  Curves live in square interiors and cross edges
// transversally away from the corners.
struct CombCurve {
  std::vector<Step> steps;
};

// A square-tiled translation surface: unit squares 0..n-1 with sigma_h(q)
// the square to the right of q and sigma_v(q) the square on top of q.
class Origami {
 public:
  Origami(std::vector<int> sigma_h, std::vector<int> sigma_v);

  int size() const { return n_; }
  int right_of(int q) const { return sh_[q]; }
  int left_of(int q) const { return sh_inv_[q]; }
  int above(int q) const { return sv_[q]; }
  int below(int q) const { return sv_inv_[q]; }
  const std::vector<int>& sigma_h() const { return sh_; }
  const std::vector<int>& sigma_v() const { return sv_; }

  // Square and entry side reached when leaving square q through `out`.
  std::pair<int, Side> continue_through(int q, Side out) const;

  bool operator==(const Origami& o) const { return sh_ == o.sh_ && sv_ == o.sv_; }

 private:
  int n_;
  std::vector<int> sh_, sv_, sh_inv_, sv_inv_;
};

// --- basic invariants ------------------------------------------------------

// Cycles of the commutator sigma_h sigma_v sigma_h^-1 sigma_v^-1; a cycle of
// length l is a cone point of angle 2 pi l.
std::vector<std::vector<int>> vertex_cycles(const Origami& o);

// Zero orders: l-1 for every commutator cycle of length l >= 2, sorted
// descending.  Their sum is 2g-2.
std::vector<int> stratum(const Origami& o);

int genus(const Origami& o);

// gcd of the stratum; 0 for the torus (empty stratum).
int stratum_gcd(const Origami& o);

// --- cylinders -------------------------------------------------------------

enum class Direction { Horizontal, Vertical };

struct Cylinder {
  Direction dir;
  std::vector<int> squares;  // cyclic, in sigma order
  CombCurve core;            // crosses each square straight through
};

std::vector<Cylinder> cylinders(const Origami& o, Direction dir);

// --- curves ----------------------------------------------------------------

// Throws curve_error when the steps are inconsistent with the gluings or
// contain a U-turn.
void validate_curve(const Origami& o, const CombCurve& c);

// Quarter-turn contribution of a single step: straight 0, left +1, right -1.
int step_turn(const Step& s);

// Full turns of the tangent direction; the quarter-turn total of any valid
// closed curve is divisible by 4 (trivial holonomy).
Int turning_number(const Origami& o, const CombCurve& c);

struct Winding {
  Int value;  // residue mod r, or the integer turning number when r == 0
  int r;      // gcd of the stratum; 0 flags the torus case
};

Winding winding_number(const Origami& o, const CombCurve& c);

// --- homology --------------------------------------------------------------

// Cached homology coordinates of an origami.  The basis is symplectic:
// coordinates are vectors of length 2g ordered (x1, y1, ..., xg, yg) with
// the reference pairing equal to the algebraic intersection number of
// curves.
class OrigamiHomology {
 public:
  explicit OrigamiHomology(const Origami& o);

  int genus() const { return g_; }

  // Chain of a curve over the dual graph: coefficient of the rightward edge
  // out of q at index q, of the upward edge out of q at index n+q.
  Vec dual_chain(const Origami& o, const CombCurve& c) const;

  // Class of a curve in the symplectic basis.
  HomologyClass curve_class(const Origami& o, const CombCurve& c) const;
  HomologyClass chain_class(const Vec& dual_chain) const;

 private:
  int n_, g_;
  std::vector<int> tree_parent_edge_;  // dual-graph spanning tree, edge index per square
  std::vector<int> nontree_edges_;     // dual edge ids of fundamental cycles
  std::vector<int> edge_cycle_index_;  // dual edge -> fundamental cycle index or -1
  std::vector<Vec> fundamental_cycles_;  // as dual chains (length 2n)
  Mat face_hnf_;                         // face lattice in fundamental-cycle coordinates
  std::vector<int> pivot_rows_;          // rows of face_hnf_ pivots
  std::vector<int> free_rows_;           // complement rows: H1 coordinates pre-symplectification
  Mat sympl_change_inv_;                 // maps free-row coordinates to symplectic coordinates

  Vec cycle_coords(const Vec& chain) const;  // express a closed chain in fundamental cycles
};

// Signed crossing count of two combinatorial curves; equals the algebraic
// intersection of their classes.
Int signed_crossings(const Origami& o, const CombCurve& c, const CombCurve& d);

// --- shears and transport --------------------------------------------------

// Re-glues the top edges of a horizontal cylinder shifted by e along the
// cycle (or the right edges of a vertical cylinder); the stratum is
// unchanged.  For horizontal cylinders: sigma_v'(q) = sigma_v(sigma_h^-e q)
// on the cylinder.
Origami cylinder_shear(const Origami& o, const Cylinder& cyl, Int e);

// Image of a curve under the shear homeomorphism, as a curve on
// cylinder_shear(o, cyl, e).  Corner passages are rerouted tautly; at e = 0
// the curve is returned unchanged.
CombCurve transport_curve(const Origami& o, const Cylinder& cyl, Int e, const CombCurve& c);

// --- neighborhoods, faces, complements --------------------------------------

// Small counterclockwise loop around the vertex containing the bottom-left
// corner of square q0 (one quarter-turn step per incident square corner).
CombCurve vertex_loop(const Origami& o, int q0);

// The (square, corner) incidences of each vertex class, corner encoded as
// 0=BL, 1=BR, 2=TR, 3=TL.
std::vector<std::vector<std::pair<int, int>>> vertex_corners(const Origami& o);

// Boundary components of a regular neighborhood of a union of curves,
// oriented with the neighborhood to the LEFT.  Requires that crossing
// strands never share a square side (true for unions of cylinder cores and
// the configurations used here).
std::vector<CombCurve> neighborhood_boundaries(const Origami& o, const std::vector<CombCurve>& curves);

// Number of transversal crossing points among a family of curves (pairwise,
// by the same strand model as signed_crossings).
int geometric_crossings(const Origami& o, const CombCurve& c, const CombCurve& d);

// Complement analysis of a union of pairwise disjoint straight cylinder
// cores: regions with their boundary-circle counts and the total zero order
// of the cone points they contain.
struct ComplementRegion {
  int boundary_circles = 0;
  int zero_order_sum = 0;  // sum of (cone angle / 2pi - 1) over contained vertices
  int cells = 0;
};
std::vector<ComplementRegion> complement_of_disjoint_cores(const Origami& o,
                                                           const std::vector<Cylinder>& cores);

// True when the complement of the union of all listed cores consists of
// quarter-square disks only (the filling condition for a Thurston-Veech
// system realized as cylinders).
bool complement_is_quarter_square_disks(const Origami& o, const std::vector<Cylinder>& cores);

// --- text format -------------------------------------------------------------
//
// Origami file format:
//   line 1: n
//   line 2: sigma_h in cycle notation, e.g. (1 2)(3)
//   line 3: sigma_v in cycle notation
// Squares are numbered 1..n in files, 0..n-1 in memory.  Curves are written
// as whitespace-separated (square:entry:exit) triples with sides l,r,b,t.

std::string to_text(const Origami& o);
Origami origami_from_text(const std::string& text);
std::string curve_to_text(const CombCurve& c);
CombCurve curve_from_text(const std::string& text);

}  // namespace rspin
