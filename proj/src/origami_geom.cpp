#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "rspin/origami.hpp"

namespace rspin {

namespace {

using I128 = __int128;

// Small exact rational; denominators stay tiny (products of per-edge
// crossing counts), so int64 with gcd normalization is plenty.
struct Rat {
  long long n = 0, d = 1;
  Rat() = default;
  Rat(long long nn, long long dd) : n(nn), d(dd) { norm(); }
  void norm() {
    if (d < 0) { n = -n; d = -d; }
    long long g = std::abs(std::__gcd(n, d));
    if (g > 1) { n /= g; d /= g; }
    if (d == 0) throw internal_error("rational with zero denominator");
  }
};

Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.n * b.d - b.n * a.d, a.d * b.d);
}
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.n * b.n, a.d * b.d); }
Rat rat_div(const Rat& a, const Rat& b) { return Rat(a.n * b.d, a.d * b.n); }
int cmp(const Rat& a, const Rat& b) {
  I128 l = static_cast<I128>(a.n) * b.d, r = static_cast<I128>(b.n) * a.d;
  return l < r ? -1 : (l > r ? 1 : 0);
}

struct Pt {
  Rat x, y;
};

// Position of a boundary point in counterclockwise order around the square,
// as an exactly comparable key.  Side ranks: bottom 0, right 1, top 2
// (descending), left 3 (descending).
struct BKey {
  int rank;
  Rat t;  // oriented so that larger = further along CCW
};
int side_rank(Side s) {
  switch (s) {
    case Side::Bottom: return 0;
    case Side::Right: return 1;
    case Side::Top: return 2;
    case Side::Left: return 3;
  }
  return -1;
}
BKey boundary_key(Side s, const Rat& pos) {
  BKey k;
  k.rank = side_rank(s);
  k.t = (s == Side::Top || s == Side::Left) ? Rat(-pos.n, pos.d) : pos;
  return k;
}
int cmp(const BKey& a, const BKey& b) {
  if (a.rank != b.rank) return a.rank < b.rank ? -1 : 1;
  return cmp(a.t, b.t);
}
// Is x strictly inside the CCW arc from a to b?
bool in_arc(const BKey& x, const BKey& a, const BKey& b) {
  int ab = cmp(a, b);
  if (ab == 0) throw internal_error("degenerate arc");
  if (ab < 0) return cmp(a, x) < 0 && cmp(x, b) < 0;
  return cmp(a, x) < 0 || cmp(x, b) < 0;
}

Pt side_point(Side s, const Rat& pos) {
  switch (s) {
    case Side::Bottom: return {pos, Rat(0, 1)};
    case Side::Top: return {pos, Rat(1, 1)};
    case Side::Left: return {Rat(0, 1), pos};
    case Side::Right: return {Rat(1, 1), pos};
  }
  throw internal_error("bad side");
}

// Identify the origami edge crossed when leaving square q through side s:
// vertical edges are keyed by the square whose RIGHT side they are,
// horizontal by the square whose TOP side they are.
std::pair<int, int> edge_id(const Origami& o, int q, Side out) {
  switch (out) {
    case Side::Right: return {0, q};
    case Side::Left: return {0, o.left_of(q)};
    case Side::Top: return {1, q};
    case Side::Bottom: return {1, o.below(q)};
  }
  throw internal_error("bad side");
}

struct Strand {
  int curve, step;
  int sq;
  Side in, out;
  Rat tin, tout;  // positions on the entry/exit edges
  Pt a, b;        // entry and exit points in square coordinates
};

// Assign transversal positions to every edge crossing of the given curves
// (in order), then build the strand list.
std::vector<Strand> build_strands(const Origami& o, const std::vector<CombCurve>& curves) {
  for (const auto& c : curves) validate_curve(o, c);
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& c : curves)
    for (const Step& s : c.steps) edge_count[edge_id(o, s.sq, s.out)] += 1;

  std::map<std::pair<int, int>, int> edge_used;
  std::vector<Strand> strands;
  for (size_t k = 0; k < curves.size(); ++k) {
    const auto& steps = curves[k].steps;
    size_t m = steps.size();
    // position of the transition after step i
    std::vector<Rat> pos(m);
    for (size_t i = 0; i < m; ++i) {
      auto e = edge_id(o, steps[i].sq, steps[i].out);
      pos[i] = Rat(++edge_used[e], edge_count[e] + 1);
    }
    for (size_t i = 0; i < m; ++i) {
      Strand s;
      s.curve = static_cast<int>(k);
      s.step = static_cast<int>(i);
      s.sq = steps[i].sq;
      s.in = steps[i].in;
      s.out = steps[i].out;
      s.tin = pos[(i + m - 1) % m];
      s.tout = pos[i];
      s.a = side_point(s.in, s.tin);
      s.b = side_point(s.out, s.tout);
      strands.push_back(s);
    }
  }
  return strands;
}

struct StrandCrossing {
  int s1, s2;   // indices into the strand list, s1 < s2
  Rat t1, t2;   // parameters along each strand
  int sign;     // det(dir1, dir2)
};

std::optional<StrandCrossing> cross_strands(const std::vector<Strand>& strands, int i, int j) {
  const Strand& p = strands[i];
  const Strand& q = strands[j];
  if (p.sq != q.sq) return std::nullopt;
  BKey A = boundary_key(p.in, p.tin), B = boundary_key(p.out, p.tout);
  BKey C = boundary_key(q.in, q.tin), D = boundary_key(q.out, q.tout);
  bool cin = in_arc(C, A, B), din = in_arc(D, A, B);
  if (cin == din) return std::nullopt;
  StrandCrossing x;
  x.s1 = i;
  x.s2 = j;
  x.sign = cin ? 1 : -1;
  // Intersection parameters of the straight chords.
  Pt zero{Rat(0, 1), Rat(0, 1)};
  Pt db{p.b.x - p.a.x, p.b.y - p.a.y};
  Pt dd{q.b.x - q.a.x, q.b.y - q.a.y};
  Rat denom = db.x * dd.y - db.y * dd.x;
  Pt ca{q.a.x - p.a.x, q.a.y - p.a.y};
  x.t1 = rat_div(ca.x * dd.y - ca.y * dd.x, denom);
  x.t2 = rat_div(ca.x * db.y - ca.y * db.x, denom);
  (void)zero;
  return x;
}

}  // namespace

Int signed_crossings(const Origami& o, const CombCurve& c, const CombCurve& d) {
  std::vector<Strand> strands = build_strands(o, {c, d});
  size_t nc = c.steps.size();
  Int total = 0;
  for (size_t i = 0; i < nc; ++i)
    for (size_t j = nc; j < strands.size(); ++j)
      if (auto x = cross_strands(strands, static_cast<int>(i), static_cast<int>(j))) total += x->sign;
  return total;
}

int geometric_crossings(const Origami& o, const CombCurve& c, const CombCurve& d) {
  std::vector<Strand> strands = build_strands(o, {c, d});
  size_t nc = c.steps.size();
  int total = 0;
  for (size_t i = 0; i < nc; ++i)
    for (size_t j = nc; j < strands.size(); ++j)
      if (cross_strands(strands, static_cast<int>(i), static_cast<int>(j))) total += 1;
  return total;
}

// ---------------------------------------------------------------------------
// Boundary components of a regular neighborhood.
// ---------------------------------------------------------------------------

namespace {

CombCurve reversed(const CombCurve& c) {
  CombCurve r;
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) r.steps.push_back({it->sq, it->out, it->in});
  return r;
}

struct Arc {
  int curve;
  int from_x, to_x;      // crossing ids
  int from_strand, to_strand;
  // Directed versions: id 2*arc (forward), 2*arc+1 (reversed).
};

struct Segment {
  int sq;
  std::optional<Side> in, out;  // nullopt = starts/ends at a crossing
};

}  // namespace

std::vector<CombCurve> neighborhood_boundaries(const Origami& o, const std::vector<CombCurve>& curves) {
  std::vector<Strand> strands = build_strands(o, curves);
  size_t ncurves = curves.size();

  struct XRef {
    int xid;
    int strand;
    Rat t;
    int other_end;  // 0 or 1: which end of the crossing this reference is
  };
  struct Crossing {
    int s[2];
    Rat t[2];
    int sign;
  };
  std::vector<Crossing> xs;
  for (size_t i = 0; i < strands.size(); ++i)
    for (size_t j = i + 1; j < strands.size(); ++j) {
      auto x = cross_strands(strands, static_cast<int>(i), static_cast<int>(j));
      if (!x) continue;
      if (strands[i].curve == strands[j].curve)
        throw configuration_error("neighborhood_boundaries requires simple curves");
      xs.push_back({{x->s1, x->s2}, {x->t1, x->t2}, x->sign});
    }

  std::vector<CombCurve> out;
  // Crossing sequence along each curve.
  std::vector<std::vector<XRef>> seq(ncurves);
  for (size_t xid = 0; xid < xs.size(); ++xid)
    for (int end = 0; end < 2; ++end) {
      const Strand& s = strands[xs[xid].s[end]];
      seq[s.curve].push_back({static_cast<int>(xid), xs[xid].s[end], xs[xid].t[end], end});
    }
  for (size_t k = 0; k < ncurves; ++k) {
    std::sort(seq[k].begin(), seq[k].end(), [&](const XRef& a, const XRef& b) {
      int sa = strands[a.strand].step, sb = strands[b.strand].step;
      if (sa != sb) return sa < sb;
      int c = cmp(a.t, b.t);
      if (c == 0) throw configuration_error("triple intersections are not supported");
      return c < 0;
    });
    if (seq[k].empty()) {
      // An isolated circle: its annulus neighborhood has two boundary
      // circles; with the neighborhood on the left these are the reversed
      // copy (left side) and the parallel copy (right side).
      out.push_back(reversed(curves[k]));
      out.push_back(curves[k]);
    }
  }

  // Arcs between consecutive crossings along each curve.
  std::vector<Arc> arcs;
  // at crossing x: directed arc ids leaving x along each ray:
  //   ray 0: forward along curve 1 (out), ray 1: backward along curve-1
  //   (reversal of the arc arriving), same for curve 2.
  struct XPort {
    int out_fwd = -1, in_rev = -1;  // directed arc ids leaving x along/against the curve
  };
  std::vector<std::array<XPort, 2>> ports(xs.size());

  for (size_t k = 0; k < ncurves; ++k) {
    size_t m = seq[k].size();
    for (size_t a = 0; a < m; ++a) {
      const XRef& from = seq[k][a];
      const XRef& to = seq[k][(a + 1) % m];
      int arc_id = static_cast<int>(arcs.size());
      arcs.push_back({static_cast<int>(k), from.xid, to.xid, from.strand, to.strand});
      ports[from.xid][from.other_end].out_fwd = 2 * arc_id;
      ports[to.xid][to.other_end].in_rev = 2 * arc_id + 1;
    }
  }

  // Rotation (CCW) of the four directed-arc ids leaving each crossing.
  // With sign = det(d1, d2) > 0 the CCW ray order is (d1, d2, -d1, -d2).
  std::vector<std::array<int, 4>> rotation(xs.size());
  for (size_t x = 0; x < xs.size(); ++x) {
    int o1 = ports[x][0].out_fwd, r1 = ports[x][0].in_rev;
    int o2 = ports[x][1].out_fwd, r2 = ports[x][1].in_rev;
    if (o1 < 0 || r1 < 0 || o2 < 0 || r2 < 0) throw internal_error("crossing port missing");
    if (xs[x].sign > 0)
      rotation[x] = {o1, o2, r1, r2};
    else
      rotation[x] = {o1, r2, r1, o2};
  }

  auto arc_reverse = [&](int directed) { return directed ^ 1; };
  auto arc_target = [&](int directed) {
    const Arc& a = arcs[directed / 2];
    return directed % 2 == 0 ? a.to_x : a.from_x;
  };
  // next directed arc of the face (complement region kept on the LEFT):
  // CW-next ray after the reversal ray of the arriving arc.
  auto face_next = [&](int directed) {
    int x = arc_target(directed);
    int ray = arc_reverse(directed);
    for (int i = 0; i < 4; ++i)
      if (rotation[x][i] == ray) return rotation[x][(i + 3) % 4];
    throw internal_error("arriving arc not found in rotation");
  };

  // Segment list of a directed arc.
  auto arc_segments = [&](int directed) {
    const Arc& a = arcs[directed / 2];
    const auto& steps = curves[a.curve].steps;
    size_t m = steps.size();
    int s_from = directed % 2 == 0 ? a.from_strand : a.to_strand;
    int s_to = directed % 2 == 0 ? a.to_strand : a.from_strand;
    int i = strands[s_from].step, j = strands[s_to].step;
    std::vector<Segment> segs;
    if (a.from_strand == a.to_strand) {
      // Both crossings on one strand.  The arc between consecutive crossings
      // is internal to the square when the parameter increases; otherwise it
      // wraps around the whole curve and the generic walk below applies.
      auto t_on = [&](int xid) {
        const Crossing& cx = xs[xid];
        return cx.s[0] == a.from_strand ? cx.t[0] : cx.t[1];
      };
      if (a.from_x != a.to_x && cmp(t_on(a.from_x), t_on(a.to_x)) < 0) {
        segs.push_back({strands[a.from_strand].sq, std::nullopt, std::nullopt});
        return segs;
      }
    }
    if (directed % 2 == 0) {
      segs.push_back({steps[i].sq, std::nullopt, steps[i].out});
      for (size_t p = (i + 1) % m; p != static_cast<size_t>(j); p = (p + 1) % m)
        segs.push_back({steps[p].sq, steps[p].in, steps[p].out});
      segs.push_back({steps[j].sq, steps[j].in, std::nullopt});
    } else {
      // reversed travel: swap step sides
      segs.push_back({steps[i].sq, std::nullopt, steps[i].in});
      for (size_t p = (i + m - 1) % m; p != static_cast<size_t>(j); p = (p + m - 1) % m)
        segs.push_back({steps[p].sq, steps[p].out, steps[p].in});
      segs.push_back({steps[j].sq, steps[j].out, std::nullopt});
    }
    return segs;
  };

  // Trace faces.
  std::vector<char> used(2 * arcs.size(), 0);
  for (size_t start = 0; start < 2 * arcs.size(); ++start) {
    if (used[start]) continue;
    std::vector<int> face;
    int cur = static_cast<int>(start);
    do {
      used[cur] = 1;
      face.push_back(cur);
      cur = face_next(cur);
    } while (cur != static_cast<int>(start));

    // Stitch segments into steps.
    std::vector<Segment> segs;
    for (int directed : face) {
      auto s = arc_segments(directed);
      segs.insert(segs.end(), s.begin(), s.end());
    }
    // Two cyclic sweeps: the first primes the carried entry side across the
    // wrap, the second emits the steps.
    std::vector<Step> steps;
    std::optional<Side> entry;
    for (int sweep = 0; sweep < 2; ++sweep)
      for (const Segment& sg : segs) {
        if (sg.in) entry = sg.in;
        if (sg.out) {
          if (entry) {
            if (*entry == *sg.out) throw internal_error("boundary corner produced a U-turn step");
            if (sweep == 1) steps.push_back({sg.sq, *entry, *sg.out});
            entry.reset();
          } else if (sweep == 1) {
            throw internal_error("boundary segment exits without an entry side");
          }
        }
      }
    if (steps.empty()) throw internal_error("boundary face entirely inside one square");
    // The trace kept the complement region on the left, i.e. the
    // neighborhood on the right; reverse for the conventional orientation.
    CombCurve bdry{steps};
    out.push_back(reversed(bdry));
  }

  for (auto& b : out) validate_curve(o, b);
  return out;
}

// ---------------------------------------------------------------------------
// Complement regions of a disjoint union of straight cylinder cores.
// ---------------------------------------------------------------------------

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<ComplementRegion> complement_of_disjoint_cores(const Origami& o,
                                                           const std::vector<Cylinder>& cores) {
  int n = o.size();
  std::vector<char> hstr(n, 0), vstr(n, 0);
  for (const auto& cyl : cores)
    for (int q : cyl.squares) {
      char& flag = cyl.dir == Direction::Horizontal ? hstr[q] : vstr[q];
      flag = 1;
    }
  for (int q = 0; q < n; ++q)
    if (hstr[q] && vstr[q])
      throw configuration_error("complement analysis requires pairwise disjoint cores");

  // Cells per square: 0 whole, 1 below / 2 above an h-strand, 3 left / 4
  // right of a v-strand.  Cell ids: 5*q + code.
  auto right_cell = [&](int q) { return 5 * q + (vstr[q] ? 4 : 0); };
  auto left_cell = [&](int q) { return 5 * q + (vstr[q] ? 3 : 0); };
  auto top_cell = [&](int q) { return 5 * q + (hstr[q] ? 2 : 0); };
  auto bottom_cell = [&](int q) { return 5 * q + (hstr[q] ? 1 : 0); };

  DSU dsu(5 * n);
  for (int q = 0; q < n; ++q) {
    int r = o.right_of(q);
    if (hstr[q]) {
      // edge cut by the horizontal strand: half-edges glue cellwise
      dsu.unite(5 * q + 1, 5 * r + 1);
      dsu.unite(5 * q + 2, 5 * r + 2);
    } else {
      dsu.unite(right_cell(q), left_cell(r));
    }
    int u = o.above(q);
    if (vstr[q]) {
      dsu.unite(5 * q + 3, 5 * u + 3);
      dsu.unite(5 * q + 4, 5 * u + 4);
    } else {
      dsu.unite(top_cell(q), bottom_cell(u));
    }
  }

  auto cell_of = [&](int q, int corner) {
    // corner 0=BL, 1=BR, 2=TR, 3=TL
    if (hstr[q]) return 5 * q + (corner <= 1 ? 1 : 2);
    if (vstr[q]) return 5 * q + ((corner == 0 || corner == 3) ? 3 : 4);
    return 5 * q;
  };

  std::vector<char> cell_exists(5 * n, 0);
  for (int q = 0; q < n; ++q) {
    if (hstr[q]) cell_exists[5 * q + 1] = cell_exists[5 * q + 2] = 1;
    else if (vstr[q]) cell_exists[5 * q + 3] = cell_exists[5 * q + 4] = 1;
    else cell_exists[5 * q] = 1;
  }

  std::map<int, int> region_index;
  std::vector<ComplementRegion> regions;
  for (int c = 0; c < 5 * n; ++c)
    if (cell_exists[c]) {
      int root = dsu.find(c);
      if (!region_index.count(root)) {
        region_index[root] = static_cast<int>(regions.size());
        regions.push_back({});
      }
      regions[region_index[root]].cells += 1;
    }

  // Boundary circles: one per (core, side).
  for (const auto& cyl : cores) {
    int q0 = cyl.squares[0];
    int above, below2;
    if (cyl.dir == Direction::Horizontal) {
      above = dsu.find(5 * q0 + 2);
      below2 = dsu.find(5 * q0 + 1);
    } else {
      above = dsu.find(5 * q0 + 4);
      below2 = dsu.find(5 * q0 + 3);
    }
    regions[region_index[above]].boundary_circles += 1;
    regions[region_index[below2]].boundary_circles += 1;
  }

  // Cone points.
  for (const auto& cls : vertex_corners(o)) {
    int k = static_cast<int>(cls.size()) / 4 - 1;  // zero order
    int root = dsu.find(cell_of(cls[0].first, cls[0].second));
    for (const auto& [q, corner] : cls)
      if (dsu.find(cell_of(q, corner)) != root)
        throw internal_error("vertex corners straddle complement regions");
    regions[region_index[root]].zero_order_sum += k;
  }

  return regions;
}

bool complement_is_quarter_square_disks(const Origami& o, const std::vector<Cylinder>& cores) {
  int n = o.size();
  std::vector<char> hstr(n, 0), vstr(n, 0);
  for (const auto& cyl : cores)
    for (int q : cyl.squares) (cyl.dir == Direction::Horizontal ? hstr[q] : vstr[q]) = 1;
  for (int q = 0; q < n; ++q)
    if (!hstr[q] || !vstr[q]) return false;

  // Quadrant cells 4*q + corner (0=BL,1=BR,2=TR,3=TL); every edge is cut.
  DSU dsu(4 * n);
  for (int q = 0; q < n; ++q) {
    int r = o.right_of(q), u = o.above(q);
    dsu.unite(4 * q + 1, 4 * r + 0);  // lower halves of the right edge
    dsu.unite(4 * q + 2, 4 * r + 3);  // upper halves
    dsu.unite(4 * q + 3, 4 * u + 0);  // left halves of the top edge
    dsu.unite(4 * q + 2, 4 * u + 1);  // right halves
  }
  // Complement = quarter-square disks iff the quadrant regions are exactly
  // the corner classes of the vertices (one disk around each cone point).
  for (const auto& cls : vertex_corners(o)) {
    int root = dsu.find(4 * cls[0].first + cls[0].second);
    for (const auto& [q, corner] : cls)
      if (dsu.find(4 * q + corner) != root) return false;
    // region size must not exceed the class size
    int count = 0;
    for (int c = 0; c < 4 * n; ++c)
      if (dsu.find(c) == root) ++count;
    if (count != static_cast<int>(cls.size())) return false;
  }
  return true;
}

}  // namespace rspin
