#include "rspin/origami.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rspin {

Side opposite(Side s) {
  switch (s) {
    case Side::Left: return Side::Right;
    case Side::Right: return Side::Left;
    case Side::Bottom: return Side::Top;
    case Side::Top: return Side::Bottom;
  }
  throw internal_error("bad side");
}

const char* side_name(Side s) {
  switch (s) {
    case Side::Left: return "l";
    case Side::Right: return "r";
    case Side::Bottom: return "b";
    case Side::Top: return "t";
  }
  return "?";
}

namespace {

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

void check_perm(const std::vector<int>& p, const char* what) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v])
      throw curve_error(std::string(what) + " is not a permutation");
    seen[v] = 1;
  }
}

}  // namespace

Origami::Origami(std::vector<int> sigma_h, std::vector<int> sigma_v)
    : n_(static_cast<int>(sigma_h.size())), sh_(std::move(sigma_h)), sv_(std::move(sigma_v)) {
  if (n_ == 0 || static_cast<int>(sv_.size()) != n_)
    throw dimension_error("origami permutations must be nonempty and of equal degree");
  check_perm(sh_, "sigma_h");
  check_perm(sv_, "sigma_v");
  sh_inv_ = inverse_perm(sh_);
  sv_inv_ = inverse_perm(sv_);
  // Connectivity: <sigma_h, sigma_v> must act transitively.
  std::vector<char> vis(n_, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int w : {sh_[q], sv_[q], sh_inv_[q], sv_inv_[q]})
      if (!vis[w]) {
        vis[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n_) throw connectivity_error("origami surface is disconnected");
}

std::pair<int, Side> Origami::continue_through(int q, Side out) const {
  switch (out) {
    case Side::Right: return {sh_[q], Side::Left};
    case Side::Left: return {sh_inv_[q], Side::Right};
    case Side::Top: return {sv_[q], Side::Bottom};
    case Side::Bottom: return {sv_inv_[q], Side::Top};
  }
  throw internal_error("bad side");
}

std::vector<std::vector<int>> vertex_cycles(const Origami& o) {
  int n = o.size();
  auto comm = [&](int q) { return o.right_of(o.above(o.left_of(o.below(q)))); };
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int q = 0; q < n; ++q) {
    if (seen[q]) continue;
    std::vector<int> cyc;
    int cur = q;
    do {
      seen[cur] = 1;
      cyc.push_back(cur);
      cur = comm(cur);
    } while (cur != q);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::vector<int> stratum(const Origami& o) {
  std::vector<int> k;
  for (const auto& cyc : vertex_cycles(o))
    if (cyc.size() >= 2) k.push_back(static_cast<int>(cyc.size()) - 1);
  std::sort(k.rbegin(), k.rend());
  return k;
}

int genus(const Origami& o) {
  int v = static_cast<int>(vertex_cycles(o).size());
  int chi = v - o.size();
  if ((2 - chi) % 2 != 0) throw internal_error("odd Euler characteristic");
  return (2 - chi) / 2;
}

int stratum_gcd(const Origami& o) {
  Int g = 0;
  for (int k : stratum(o)) g = gcd_int(g, k);
  return static_cast<int>(g);
}

std::vector<Cylinder> cylinders(const Origami& o, Direction dir) {
  const std::vector<int>& perm = dir == Direction::Horizontal ? o.sigma_h() : o.sigma_v();
  std::vector<char> seen(o.size(), 0);
  std::vector<Cylinder> out;
  for (int q = 0; q < o.size(); ++q) {
    if (seen[q]) continue;
    Cylinder cyl;
    cyl.dir = dir;
    int cur = q;
    do {
      seen[cur] = 1;
      cyl.squares.push_back(cur);
      Step s;
      s.sq = cur;
      s.in = dir == Direction::Horizontal ? Side::Left : Side::Bottom;
      s.out = dir == Direction::Horizontal ? Side::Right : Side::Top;
      cyl.core.steps.push_back(s);
      cur = perm[cur];
    } while (cur != q);
    out.push_back(std::move(cyl));
  }
  return out;
}

void validate_curve(const Origami& o, const CombCurve& c) {
  if (c.steps.empty()) throw curve_error("empty curve");
  size_t m = c.steps.size();
  for (size_t i = 0; i < m; ++i) {
    const Step& s = c.steps[i];
    if (s.sq < 0 || s.sq >= o.size()) throw curve_error("curve step on missing square");
    if (s.in == s.out) throw curve_error("degenerate U-turn step");
    const Step& t = c.steps[(i + 1) % m];
    auto [sq, side] = o.continue_through(s.sq, s.out);
    if (t.sq != sq || t.in != side)
      throw curve_error("curve steps are not glued consistently at step " + std::to_string(i));
  }
}

namespace {

// Direction of travel when entering through a side (dx, dy).
std::pair<int, int> entry_dir(Side in) {
  switch (in) {
    case Side::Left: return {1, 0};
    case Side::Right: return {-1, 0};
    case Side::Bottom: return {0, 1};
    case Side::Top: return {0, -1};
  }
  throw internal_error("bad side");
}

std::pair<int, int> exit_dir(Side out) {
  switch (out) {
    case Side::Left: return {-1, 0};
    case Side::Right: return {1, 0};
    case Side::Bottom: return {0, -1};
    case Side::Top: return {0, 1};
  }
  throw internal_error("bad side");
}

}  // namespace

int step_turn(const Step& s) {
  auto [ax, ay] = entry_dir(s.in);
  auto [bx, by] = exit_dir(s.out);
  if (ax == bx && ay == by) return 0;
  // CCW quarter rotation of (ax, ay) is (-ay, ax).
  if (bx == -ay && by == ax) return 1;
  if (bx == ay && by == -ax) return -1;
  throw internal_error("U-turn reached turning computation");
}

Int turning_number(const Origami& o, const CombCurve& c) {
  validate_curve(o, c);
  Int total = 0;
  for (const Step& s : c.steps) total += step_turn(s);
  if (mod_norm(total, 4) != 0)
    throw internal_error("quarter-turn total not divisible by 4: holonomy violated (gluing bug)");
  return total / 4;
}

Winding winding_number(const Origami& o, const CombCurve& c) {
  Int t = turning_number(o, c);
  int r = stratum_gcd(o);
  if (r == 0) return {t, 0};
  return {mod_norm(t, r), r};
}

// --- homology ----------------------------------------------------------------

OrigamiHomology::OrigamiHomology(const Origami& o) : n_(o.size()) {
  // Dual graph on squares; edge ids: h_q = q, v_q = n + q.
  // Spanning tree by BFS from square 0.
  std::vector<int> parent_edge(n_, -2);  // signed: +1+id forward, -(1+id) backward
  std::vector<int> parent(n_, -1);
  parent_edge[0] = -1;
  std::vector<int> order{0};
  for (size_t head = 0; head < order.size(); ++head) {
    int q = order[head];
    struct Nb {
      int to;
      int edge;
      bool fwd;
    };
    Nb nbs[4] = {{o.right_of(q), q, true},
                 {o.above(q), n_ + q, true},
                 {o.left_of(q), o.left_of(q), false},
                 {o.below(q), n_ + o.below(q), false}};
    for (const Nb& nb : nbs)
      if (parent_edge[nb.to] == -2) {
        parent_edge[nb.to] = nb.fwd ? (1 + nb.edge) : -(1 + nb.edge);
        parent[nb.to] = q;
        order.push_back(nb.to);
      }
  }
  tree_parent_edge_ = parent_edge;

  std::vector<char> in_tree(2 * n_, 0);
  for (int q = 0; q < n_; ++q)
    if (parent_edge[q] != -1 && parent_edge[q] != -2) in_tree[std::abs(parent_edge[q]) - 1] = 1;

  edge_cycle_index_.assign(2 * n_, -1);
  for (int e = 0; e < 2 * n_; ++e)
    if (!in_tree[e]) {
      edge_cycle_index_[e] = static_cast<int>(nontree_edges_.size());
      nontree_edges_.push_back(e);
    }

  // Chain of the tree path from q up to the root.
  auto path_to_root = [&](int q) {
    Vec chain(2 * n_, 0);
    while (parent_edge[q] != -1) {
      int pe = parent_edge[q];
      int edge = std::abs(pe) - 1;
      // parent_edge oriented parent -> q when pe > 0; path goes q -> parent.
      chain[edge] += pe > 0 ? -1 : 1;
      q = parent[q];
    }
    return chain;
  };

  auto edge_ends = [&](int e) {
    // h_q: q -> right_of(q); v_q: q -> above(q)
    if (e < n_) return std::pair<int, int>(e, o.right_of(e));
    return std::pair<int, int>(e - n_, o.above(e - n_));
  };

  for (int e : nontree_edges_) {
    auto [from, to] = edge_ends(e);
    Vec cyc(2 * n_, 0);
    cyc[e] = 1;
    Vec a = path_to_root(to), b = path_to_root(from);
    // cycle = e + (to -> root) - (from -> root)
    for (int i = 0; i < 2 * n_; ++i) cyc[i] += a[i] - b[i];
    fundamental_cycles_.push_back(std::move(cyc));
  }

  int m = static_cast<int>(nontree_edges_.size());  // = n + 1
  // Face relations: the dual 2-cells sit around origami vertices; their
  // boundaries are the vertex loops.
  std::vector<std::vector<int>> vcyc = vertex_cycles(o);
  Mat faces(m, static_cast<int>(vcyc.size()));
  for (size_t f = 0; f < vcyc.size(); ++f) {
    CombCurve loop = vertex_loop(o, vcyc[f][0]);
    Vec chain = dual_chain(o, loop);
    Vec coords = cycle_coords(chain);
    for (int i = 0; i < m; ++i) faces(i, static_cast<int>(f)) = coords[i];
  }
  face_hnf_ = hnf_cols(faces);

  pivot_rows_.clear();
  for (int j = 0; j < face_hnf_.cols(); ++j) {
    int p = -1;
    for (int i = 0; i < m; ++i)
      if (face_hnf_(i, j) != 0) { p = i; break; }
    if (p < 0) throw internal_error("zero face column after HNF");
    if (face_hnf_(p, j) != 1)
      throw internal_error("face lattice is not primitive (torsion in H1?)");
    pivot_rows_.push_back(p);
  }
  std::vector<char> is_pivot(m, 0);
  for (int p : pivot_rows_) is_pivot[p] = 1;
  for (int i = 0; i < m; ++i)
    if (!is_pivot[i]) free_rows_.push_back(i);

  g_ = rspin::genus(o);
  if (static_cast<int>(free_rows_.size()) != 2 * g_)
    throw internal_error("homology rank mismatch");

  if (g_ > 0) {
    // Intersection form on the free-row basis, then symplectify.  The Gram
    // entry pairs a dual cycle with the square-complex copy of the other
    // (push each dual edge to the bottom-left: h_q -> bottom edge of q,
    // v_q -> left edge of q); a rightward dual edge h_q crosses the upward
    // square edge L_{sh q} positively and v_q crosses B_{sv q} negatively.
    auto pair_chains = [&](const Vec& alpha, const Vec& beta) {
      // square chain of beta: L_q coefficient = beta[v_q] = beta[n+q],
      // B_q coefficient = beta[h_q] = beta[q].
      Int s = 0;
      for (int q = 0; q < n_; ++q) {
        s = checked_add(s, checked_mul(alpha[q], beta[n_ + o.right_of(q)]));
        s = checked_add(s, -checked_mul(alpha[n_ + q], beta[o.above(q)]));
      }
      return s;
    };

    // Representative dual chains for the free-row basis vectors, reduced or
    // not -- the pairing only depends on the homology class, and the raw
    // fundamental cycles represent exactly the free-row unit vectors after
    // face reduction.  We must pair homologous representatives consistently,
    // so reduce free-row unit vectors through the face lattice first.
    std::vector<Vec> reps;
    for (int r : free_rows_) {
      Vec coords(m, 0);
      coords[r] = 1;
      Vec red = reduce_mod_lattice(face_hnf_, coords);
      Vec chain(2 * n_, 0);
      for (int i = 0; i < m; ++i)
        if (red[i] != 0)
          for (int eidx = 0; eidx < 2 * n_; ++eidx)
            chain[eidx] = checked_add(chain[eidx], checked_mul(red[i], fundamental_cycles_[i][eidx]));
      reps.push_back(std::move(chain));
    }

    Mat gram(2 * g_, 2 * g_);
    for (int i = 0; i < 2 * g_; ++i)
      for (int j = 0; j < 2 * g_; ++j) gram(i, j) = pair_chains(reps[i], reps[j]);

    std::vector<Vec> units;
    for (int i = 0; i < 2 * g_; ++i) {
      Vec e(2 * g_, 0);
      e[i] = 1;
      units.push_back(e);
    }
    SymplecticBasis sb = symplectic_basis_from_gram(gram, units);
    sympl_change_inv_ = inverse_unimodular(sb.change);
  }
}

Vec OrigamiHomology::dual_chain(const Origami& o, const CombCurve& c) const {
  validate_curve(o, c);
  Vec chain(2 * n_, 0);
  for (const Step& s : c.steps) {
    switch (s.out) {
      case Side::Right: chain[s.sq] += 1; break;
      case Side::Left: chain[o.left_of(s.sq)] -= 1; break;
      case Side::Top: chain[n_ + s.sq] += 1; break;
      case Side::Bottom: chain[n_ + o.below(s.sq)] -= 1; break;
    }
  }
  return chain;
}

Vec OrigamiHomology::cycle_coords(const Vec& chain) const {
  int m = static_cast<int>(nontree_edges_.size());
  Vec coords(m, 0);
  for (int i = 0; i < m; ++i) coords[i] = chain[nontree_edges_[i]];
  // Consistency: chain must equal the corresponding combination of
  // fundamental cycles (i.e. be a closed chain).
  Vec rebuilt(2 * n_, 0);
  for (int i = 0; i < m; ++i)
    if (coords[i] != 0)
      for (int e = 0; e < 2 * n_; ++e)
        rebuilt[e] = checked_add(rebuilt[e], checked_mul(coords[i], fundamental_cycles_[i][e]));
  if (rebuilt != chain) throw internal_error("dual chain is not a cycle");
  return coords;
}

HomologyClass OrigamiHomology::chain_class(const Vec& chain) const {
  Vec coords = cycle_coords(chain);
  Vec red = reduce_mod_lattice(face_hnf_, coords);
  for (int p : pivot_rows_)
    if (red[p] != 0) throw internal_error("face reduction left a pivot residue");
  Vec freev(free_rows_.size(), 0);
  for (size_t i = 0; i < free_rows_.size(); ++i) freev[i] = red[free_rows_[i]];
  if (g_ == 0) return {};
  return sympl_change_inv_ * freev;
}

HomologyClass OrigamiHomology::curve_class(const Origami& o, const CombCurve& c) const {
  return chain_class(dual_chain(o, c));
}

// --- shears -------------------------------------------------------------------

namespace {

int power_along_cycle(const std::vector<int>& squares, int q, Int e) {
  // position of q in the cycle, advanced by e
  int len = static_cast<int>(squares.size());
  int pos = -1;
  for (int i = 0; i < len; ++i)
    if (squares[i] == q) { pos = i; break; }
  if (pos < 0) throw curve_error("square not on the cylinder");
  Int np = mod_norm(pos + e, len);
  return squares[static_cast<size_t>(np)];
}

}  // namespace

Origami cylinder_shear(const Origami& o, const Cylinder& cyl, Int e) {
  std::vector<int> sh = o.sigma_h(), sv = o.sigma_v();
  if (cyl.dir == Direction::Horizontal) {
    for (int q : cyl.squares) sv[q] = o.sigma_v()[power_along_cycle(cyl.squares, q, -e)];
  } else {
    for (int q : cyl.squares) sh[q] = o.sigma_h()[power_along_cycle(cyl.squares, q, -e)];
  }
  return Origami(sh, sv);
}

namespace {

// Remove degenerate U-turn steps by fusing them into their neighbours.  A
// U-turn (B, s, s) sits between (A, w, s') and (A, s'', y) with both
// neighbours in the square the excursion left; the taut path is (A, w, y).
void cancel_uturns(std::vector<Step>& steps) {
  bool changed = true;
  while (changed && steps.size() > 1) {
    changed = false;
    for (size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].in != steps[i].out) continue;
      size_t prev = (i + steps.size() - 1) % steps.size();
      size_t next = (i + 1) % steps.size();
      if (prev == i || next == i) throw internal_error("curve degenerated during rerouting");
      if (steps[prev].sq != steps[next].sq)
        throw internal_error("inconsistent U-turn neighbourhood");
      steps[prev].out = steps[next].out;
      // erase i and next (careful with ordering)
      if (next > i) {
        steps.erase(steps.begin() + next);
        steps.erase(steps.begin() + i);
      } else {
        steps.erase(steps.begin() + i);
        steps.erase(steps.begin() + next);
      }
      changed = true;
      break;
    }
  }
}

}  // namespace

CombCurve transport_curve(const Origami& o, const Cylinder& cyl, Int e, const CombCurve& c) {
  validate_curve(o, c);
  if (e == 0) return c;

  std::vector<char> on_cyl(o.size(), 0);
  for (int q : cyl.squares) on_cyl[q] = 1;
  bool horiz = cyl.dir == Direction::Horizontal;

  // For a horizontal cylinder the re-glued edges are the tops of cylinder
  // squares; a crossing through "top of q" is rerouted to exit the top of
  // sigma_h^e(q) via |e| horizontal passes (the affine shear moves the top
  // circle e squares along the cycle).  Downward crossings mirror this on
  // the entry side.  Vertical cylinders swap the roles of the axes.
  Side upOut = horiz ? Side::Top : Side::Right;
  Side dnOut = horiz ? Side::Bottom : Side::Left;
  Side fwdOut = horiz ? Side::Right : Side::Top;  // positive shear direction
  Side fwdIn = horiz ? Side::Left : Side::Bottom;
  Side bwdOut = fwdIn;
  Side bwdIn = fwdOut;
  auto advance = [&](int q, Int k) { return power_along_cycle(cyl.squares, q, k); };
  auto before_of = [&](int q) { return horiz ? o.below(q) : o.left_of(q); };

  size_t m = c.steps.size();
  auto up_cross = [&](size_t i) { return c.steps[i].out == upOut && on_cyl[c.steps[i].sq]; };
  auto dn_cross = [&](size_t i) {
    return c.steps[i].out == dnOut && on_cyl[before_of(c.steps[i].sq)];
  };

  Int k = std::abs(e);
  std::vector<Step> out;
  for (size_t i = 0; i < m; ++i) {
    Step s = c.steps[i];
    size_t prev = (i + m - 1) % m;
    Side in_side = dn_cross(prev) ? (e > 0 ? bwdIn : fwdIn) : s.in;
    Side out_side = up_cross(i) ? (e > 0 ? fwdOut : bwdOut) : s.out;
    out.push_back({s.sq, in_side, out_side});

    if (up_cross(i)) {
      int q = s.sq;
      Side passIn = e > 0 ? fwdIn : bwdIn;
      Side passOut = e > 0 ? fwdOut : bwdOut;
      for (Int j = 1; j < k; ++j) out.push_back({advance(q, e > 0 ? j : -j), passIn, passOut});
      out.push_back({advance(q, e), passIn, upOut});
    } else if (dn_cross(i)) {
      int w = before_of(s.sq);
      Side backOut = e > 0 ? bwdOut : fwdOut;
      Side backIn = e > 0 ? bwdIn : fwdIn;
      out.push_back({advance(w, e), opposite(dnOut), backOut});
      for (Int j = k - 1; j >= 1; --j) out.push_back({advance(w, e > 0 ? j : -j), backIn, backOut});
    }
  }

  cancel_uturns(out);
  CombCurve img{out};
  return img;
}

// --- vertex loops -------------------------------------------------------------

CombCurve vertex_loop(const Origami& o, int q0) {
  CombCurve c;
  int a = q0;
  do {
    int b = o.left_of(a);
    int cc = o.below(b);
    int d = o.right_of(cc);
    c.steps.push_back({a, Side::Bottom, Side::Left});
    c.steps.push_back({b, Side::Right, Side::Bottom});
    c.steps.push_back({cc, Side::Top, Side::Right});
    c.steps.push_back({d, Side::Left, Side::Top});
    a = o.above(d);
  } while (a != q0);
  return c;
}

std::vector<std::vector<std::pair<int, int>>> vertex_corners(const Origami& o) {
  // corner codes: 0=BL, 1=BR, 2=TR, 3=TL
  std::vector<std::vector<std::pair<int, int>>> classes;
  std::vector<std::vector<char>> seen(o.size(), std::vector<char>(4, 0));
  for (int q = 0; q < o.size(); ++q) {
    if (seen[q][0]) continue;
    std::vector<std::pair<int, int>> cls;
    int a = q;
    do {
      int b = o.left_of(a);
      int cc = o.below(b);
      int d = o.right_of(cc);
      seen[a][0] = 1;
      seen[b][1] = 1;
      seen[cc][2] = 1;
      seen[d][3] = 1;
      cls.emplace_back(a, 0);
      cls.emplace_back(b, 1);
      cls.emplace_back(cc, 2);
      cls.emplace_back(d, 3);
      a = o.above(d);
    } while (a != q);
    classes.push_back(std::move(cls));
  }
  return classes;
}

// --- text format ---------------------------------------------------------------

namespace {

std::string perm_to_cycles(const std::vector<int>& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    if (p[i] == static_cast<int>(i)) {
      seen[i] = 1;
      out += "(" + std::to_string(i + 1) + ")";
      continue;
    }
    out += "(";
    size_t cur = i;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = 1;
      if (!first) out += " ";
      out += std::to_string(cur + 1);
      first = false;
      cur = p[cur];
    }
    out += ")";
  }
  return out;
}

std::vector<int> cycles_to_perm(const std::string& s, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<char> used(n, 0);
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] != '(') ++i;
    if (i >= s.size()) break;
    ++i;
    std::vector<int> cyc;
    while (i < s.size() && s[i] != ')') {
      while (i < s.size() && (s[i] == ' ' || s[i] == ',')) ++i;
      if (i < s.size() && isdigit(s[i])) {
        int v = 0;
        while (i < s.size() && isdigit(s[i])) v = v * 10 + (s[i++] - '0');
        if (v < 1 || v > n) throw curve_error("cycle entry out of range");
        if (used[v - 1]) throw curve_error("repeated entry in cycle notation: not a permutation");
        used[v - 1] = 1;
        cyc.push_back(v - 1);
      } else if (s[i] != ')') {
        throw curve_error("bad cycle notation");
      }
    }
    if (i < s.size()) ++i;  // skip ')'
    for (size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return p;
}

Side side_from_char(char c) {
  switch (c) {
    case 'l': return Side::Left;
    case 'r': return Side::Right;
    case 'b': return Side::Bottom;
    case 't': return Side::Top;
  }
  throw curve_error(std::string("bad side character '") + c + "'");
}

}  // namespace

std::string to_text(const Origami& o) {
  std::ostringstream os;
  os << o.size() << "\n" << perm_to_cycles(o.sigma_h()) << "\n" << perm_to_cycles(o.sigma_v()) << "\n";
  return os.str();
}

Origami origami_from_text(const std::string& text) {
  std::istringstream is(text);
  int n;
  if (!(is >> n) || n <= 0) throw curve_error("bad origami header");
  std::string line, hline, vline;
  std::getline(is, line);
  if (!std::getline(is, hline) || !std::getline(is, vline))
    throw curve_error("origami text needs two permutation lines");
  return Origami(cycles_to_perm(hline, n), cycles_to_perm(vline, n));
}

std::string curve_to_text(const CombCurve& c) {
  std::string out;
  for (const Step& s : c.steps) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(s.sq + 1) + ":" + side_name(s.in) + ":" + side_name(s.out) + ")";
  }
  return out;
}

CombCurve curve_from_text(const std::string& text) {
  CombCurve c;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] != '(') ++i;
    if (i >= text.size()) break;
    ++i;
    int sq = 0;
    while (i < text.size() && isdigit(text[i])) sq = sq * 10 + (text[i++] - '0');
    if (i >= text.size() || text[i] != ':') throw curve_error("bad curve triple");
    Side in = side_from_char(text[++i]);
    if (text[i + 1] != ':') throw curve_error("bad curve triple");
    Side out = side_from_char(text[i + 2]);
    i += 3;
    if (i >= text.size() || text[i] != ')') throw curve_error("bad curve triple");
    ++i;
    c.steps.push_back({sq - 1, in, out});
  }
  if (c.steps.empty()) throw curve_error("empty curve text");
  return c;
}

}  // namespace rspin
