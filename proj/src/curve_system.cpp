#include "rspin/curve_system.hpp"

#include <algorithm>
#include <set>

namespace rspin {

const SystemCurve& CurveSystem::curve(const std::string& name) const {
  for (const auto& c : curves)
    if (c.name == name) return c;
  throw configuration_error("no curve named " + name);
}

void validate_system(const CurveSystem& cs) {
  if (cs.num_points <= 0) throw configuration_error("curve system has no intersections");
  std::vector<int> on_h(cs.num_points, -1), on_v(cs.num_points, -1);
  for (size_t k = 0; k < cs.curves.size(); ++k) {
    const SystemCurve& c = cs.curves[k];
    if (c.points.empty()) throw configuration_error("curve without intersections: " + c.name);
    if (c.family != 'h' && c.family != 'v') throw configuration_error("bad family tag");
    std::set<int> seen;
    for (int p : c.points) {
      if (p < 0 || p >= cs.num_points) throw configuration_error("intersection id out of range");
      if (!seen.insert(p).second)
        throw configuration_error("curve passes an intersection twice: " + c.name);
      std::vector<int>& reg = c.family == 'h' ? on_h : on_v;
      if (reg[p] != -1) throw configuration_error("intersection on two curves of one family");
      reg[p] = static_cast<int>(k);
    }
  }
  for (int p = 0; p < cs.num_points; ++p)
    if (on_h[p] < 0 || on_v[p] < 0)
      throw configuration_error("intersection " + std::to_string(p) + " not on both families");
  // network condition: two curves share at most one point
  std::set<std::pair<int, int>> pairs;
  for (int p = 0; p < cs.num_points; ++p)
    if (!pairs.insert({on_h[p], on_v[p]}).second)
      throw configuration_error("two curves intersect more than once");
}

IntersectionGraph intersection_graph(const CurveSystem& cs) {
  validate_system(cs);
  IntersectionGraph gr;
  gr.vertices = static_cast<int>(cs.curves.size());
  std::vector<int> on_h(cs.num_points, -1), on_v(cs.num_points, -1);
  for (size_t k = 0; k < cs.curves.size(); ++k)
    for (int p : cs.curves[k].points)
      (cs.curves[k].family == 'h' ? on_h : on_v)[p] = static_cast<int>(k);
  for (int p = 0; p < cs.num_points; ++p) gr.edges.push_back({on_h[p], on_v[p]});

  std::vector<std::vector<int>> adj(gr.vertices);
  for (auto [a, b] : gr.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> vis(gr.vertices, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  gr.connected = count == gr.vertices;
  gr.tree = gr.connected && static_cast<int>(gr.edges.size()) == gr.vertices - 1;
  return gr;
}

BuiltOrigami build_origami(const CurveSystem& cs) {
  validate_system(cs);
  IntersectionGraph gr = intersection_graph(cs);
  if (!gr.connected) throw configuration_error("intersection graph must be connected");

  // Orientation propagation: flipping a curve reverses its cycle; every
  // crossing must end up positively oriented.  With crossing signs s_p the
  // constraint is eps_h eps_v s_p = +1, a 2-coloring of the intersection
  // graph; an inconsistent (odd) cycle is the non-orientable case.
  std::vector<int> on_h(cs.num_points, -1), on_v(cs.num_points, -1);
  for (size_t k = 0; k < cs.curves.size(); ++k)
    for (int p : cs.curves[k].points)
      (cs.curves[k].family == 'h' ? on_h : on_v)[p] = static_cast<int>(k);

  auto sign_of = [&](int p) {
    int declared = cs.crossing_signs.empty() ? 1 : cs.crossing_signs[p];
    return declared;
  };

  int ncur = static_cast<int>(cs.curves.size());
  std::vector<int> eps(ncur, 0);
  // start from the lexicographically first h-curve
  int start = -1;
  for (int k = 0; k < ncur; ++k)
    if (cs.curves[k].family == 'h' && (start < 0 || cs.curves[k].name < cs.curves[start].name))
      start = k;
  if (start < 0) throw configuration_error("system has no h-curves");
  eps[start] = 1;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int p : cs.curves[v].points) {
      int w = cs.curves[v].family == 'h' ? on_v[p] : on_h[p];
      int want = eps[v] * sign_of(p);
      if (eps[w] == 0) {
        eps[w] = want;
        stack.push_back(w);
      } else if (eps[w] != want) {
        throw orientability_error("orientation propagation hit an odd obstruction cycle at crossing " +
                                  std::to_string(p));
      }
    }
  }
  for (int k = 0; k < ncur; ++k)
    if (eps[k] == 0) throw configuration_error("curve not reached by propagation");

  std::vector<int> sh(cs.num_points), sv(cs.num_points);
  for (int k = 0; k < ncur; ++k) {
    std::vector<int> pts = cs.curves[k].points;
    if (eps[k] * cs.curves[k].orientation < 0) std::reverse(pts.begin(), pts.end());
    std::vector<int>& perm = cs.curves[k].family == 'h' ? sh : sv;
    size_t len = pts.size();
    for (size_t i = 0; i < len; ++i) perm[pts[i]] = pts[(i + 1) % len];
  }

  BuiltOrigami built{Origami(sh, sv), {}};
  auto hcyl = cylinders(built.origami, Direction::Horizontal);
  auto vcyl = cylinders(built.origami, Direction::Vertical);
  for (int k = 0; k < ncur; ++k) {
    const SystemCurve& c = cs.curves[k];
    const auto& cyls = c.family == 'h' ? hcyl : vcyl;
    bool found = false;
    for (const auto& cyl : cyls) {
      if (cyl.squares.size() != c.points.size()) continue;
      if (std::find(cyl.squares.begin(), cyl.squares.end(), c.points[0]) == cyl.squares.end())
        continue;
      built.cylinder_of[c.name] = cyl;
      found = true;
      break;
    }
    if (!found) throw internal_error("input curve did not become a cylinder");
  }
  return built;
}

}  // namespace rspin
