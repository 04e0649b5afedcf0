#include "rspin/chain_spin.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace rspin {

Origami staircase_origami(int g) {
  if (g < 2) throw dimension_error("staircase needs genus >= 2");
  int n = 2 * g - 1;
  std::vector<int> sh(n), sv(n);
  std::iota(sh.begin(), sh.end(), 0);
  std::iota(sv.begin(), sv.end(), 0);
  for (int k = 0; k + 1 < n; k += 2) std::swap(sh[k], sh[k + 1]);
  for (int k = 1; k + 1 < n; k += 2) std::swap(sv[k], sv[k + 1]);
  return Origami(sh, sv);
}

namespace {

HumphriesReference build_reference(int g) {
  HumphriesReference ref{g, staircase_origami(g), {}, Mat(), {}, {}, {}, Mat(), Mat(), Mat(), {}};
  const Origami& o = ref.origami;

  // c_0: crosses the chain core c_4 = H2 once and nothing else.
  const Side L = Side::Left, R = Side::Right, B = Side::Bottom, T = Side::Top;
  CombCurve c0{{{2, B, T}, {1, B, R}, {0, L, B}, {0, T, L}, {1, R, T}}};
  ref.curves.push_back(c0);

  auto hcyl = cylinders(o, Direction::Horizontal);
  auto vcyl = cylinders(o, Direction::Vertical);
  auto core_through = [&](std::vector<Cylinder>& cyls, int sq) -> const CombCurve& {
    for (auto& c : cyls)
      for (int q : c.squares)
        if (q == sq) return c.core;
    throw internal_error("missing staircase cylinder");
  };
  for (int k = 1; k <= 2 * g; ++k) {
    int sq = std::max(k - 2, 0);
    ref.curves.push_back(k % 2 == 1 ? core_through(vcyl, sq) : core_through(hcyl, sq));
  }

  OrigamiHomology hom(o);
  for (const auto& c : ref.curves) ref.classes.push_back(hom.curve_class(o, c));
  for (const auto& c : ref.curves) ref.windings.push_back(turning_number(o, c));

  int m = 2 * g + 1;
  ref.pairings = Mat(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      ref.pairings(i, j) = intersection_pairing(ref.classes[i], ref.classes[j]);

  // sanity: the realized family has the Humphries intersection pattern
  for (int i = 1; i <= 2 * g; ++i)
    for (int j = i + 1; j <= 2 * g; ++j)
      if (std::abs(ref.pairings(i, j)) != (j == i + 1 ? 1 : 0))
        throw internal_error("staircase chain pairing pattern broken");
  for (int j = 1; j <= 2 * g; ++j)
    if (std::abs(ref.pairings(0, j)) != (j == 4 ? 1 : 0))
      throw internal_error("reference c_0 pairing pattern broken");
  for (int j = 1; j <= 2 * g; ++j)
    if (ref.windings[j] != 0) throw internal_error("chain cores must have winding zero");
  if (ref.windings[0] != -1) throw internal_error("reference c_0 winding changed");

  // [c_0] in the chain basis.
  Mat basis(2 * g, 2 * g);
  for (int j = 0; j < 2 * g; ++j) basis.set_col(j, ref.classes[j + 1]);
  ref.lambda = solve_unimodular(basis, ref.classes[0]);

  ref.chain_gram = Mat(2 * g, 2 * g);
  for (int i = 0; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j) ref.chain_gram(i, j) = ref.pairings(i + 1, j + 1);

  std::vector<Vec> units;
  for (int i = 0; i < 2 * g; ++i) {
    Vec e(2 * g, 0);
    e[i] = 1;
    units.push_back(e);
  }
  SymplecticBasis sb = symplectic_basis_from_gram(ref.chain_gram, units);
  ref.frame_change = sb.change;
  ref.frame_change_inv = inverse_unimodular(sb.change);

  // q-values of the frame vectors for the reference structure: all chain
  // windings are 0, so q(c_j) = 1, extended by polarization.
  std::vector<int> ones(2 * g, 1);
  for (int k = 0; k < 2 * g; ++k)
    ref.frame_ref_q.push_back(quad_value_in_basis(ones, ref.chain_gram, ref.frame_change.col(k)));
  return ref;
}

std::map<int, HumphriesReference>& reference_cache() {
  static std::map<int, HumphriesReference> cache;
  return cache;
}

}  // namespace

const HumphriesReference& humphries_reference(int g) {
  auto& cache = reference_cache();
  auto it = cache.find(g);
  if (it == cache.end()) it = cache.emplace(g, build_reference(g)).first;
  return it->second;
}

ChainSpin make_chain_spin(int r, int g, const std::vector<Int>& free_values) {
  if (g < 2) throw dimension_error("genus >= 2 required");
  if (r < 1 || (2 * g - 2) % r != 0) throw modulus_error("r must divide 2g-2");
  if (static_cast<int>(free_values.size()) != 2 * g)
    throw dimension_error("expected 2g free chain values");
  const HumphriesReference& ref = humphries_reference(g);
  ChainSpin s{r, g, std::vector<Int>(2 * g + 1, 0)};
  for (int j = 1; j <= 2 * g; ++j) s.values[j] = mod_norm(free_values[j - 1], r);
  // v_0 = w_ref(c_0) + sum lambda_j (v_j - w_ref(c_j)); reference chain
  // windings vanish, so the affine part is the turning number of c_0.
  Int v0 = ref.windings[0];
  for (int j = 1; j <= 2 * g; ++j) v0 += ref.lambda[j - 1] * s.values[j];
  s.values[0] = mod_norm(v0, r);
  return s;
}

ChainSpin chain_twist(const ChainSpin& state, int j, Int e) {
  if (j < 0 || j > 2 * state.g) throw dimension_error("chain twist index out of range");
  const HumphriesReference& ref = humphries_reference(state.g);
  ChainSpin out = state;
  for (int i = 0; i <= 2 * state.g; ++i) {
    Int coef = ref.pairings(i, j);
    if (coef != 0)
      out.values[i] = mod_norm(out.values[i] - e * coef * state.values[j], state.r);
  }
  return out;
}

int chain_arf(const ChainSpin& state) {
  if (state.r % 2 != 0) throw parity_error("Arf needs r even");
  const HumphriesReference& ref = humphries_reference(state.g);
  int g = state.g;
  // q on the chain basis, polarized onto the symplectified frame.
  std::vector<int> q_chain(2 * g);
  for (int j = 0; j < 2 * g; ++j) q_chain[j] = static_cast<int>((state.values[j + 1] + 1) & 1);
  int a = 0;
  for (int i = 0; i < g; ++i) {
    int qx = quad_value_in_basis(q_chain, ref.chain_gram, ref.frame_change.col(2 * i));
    int qy = quad_value_in_basis(q_chain, ref.chain_gram, ref.frame_change.col(2 * i + 1));
    a ^= qx & qy;
  }
  return a;
}

namespace {

unsigned long long pow_check(int r, int g, unsigned long long bound) {
  unsigned long long total = 1;
  for (int i = 0; i < 2 * g; ++i) {
    total *= static_cast<unsigned long long>(r);
    if (total > bound) throw resource_error("chain orbit state space exceeds the bound");
  }
  return total;
}

std::uint64_t pack_state(const ChainSpin& s) {
  std::uint64_t key = 0;
  for (int j = 1; j <= 2 * s.g; ++j) key = key * 16 + static_cast<std::uint64_t>(s.values[j]);
  return key;
}

}  // namespace

std::vector<ChainSpin> chain_orbit(const ChainSpin& start, unsigned long long state_bound) {
  pow_check(start.r, start.g, state_bound);
  if (start.r > 15) throw resource_error("modulus too large for packed orbit states");
  std::unordered_set<std::uint64_t> seen{pack_state(start)};
  std::vector<ChainSpin> out{start}, frontier{start};
  while (!frontier.empty()) {
    std::vector<ChainSpin> next;
    for (const ChainSpin& s : frontier)
      for (int j = 0; j <= 2 * start.g; ++j)
        for (Int e : {1, -1}) {
          ChainSpin t = chain_twist(s, j, e);
          if (seen.insert(pack_state(t)).second) {
            next.push_back(t);
            out.push_back(t);
          }
        }
    frontier = std::move(next);
  }
  return out;
}

std::vector<unsigned long long> chain_orbit_sizes(int g, int r, unsigned long long state_bound) {
  unsigned long long total = pow_check(r, g, state_bound);
  std::unordered_set<std::uint64_t> seen;
  std::vector<unsigned long long> sizes;
  std::vector<Int> v(2 * g, 0);
  for (unsigned long long it = 0; it < total; ++it) {
    ChainSpin s = make_chain_spin(r, g, v);
    if (!seen.count(pack_state(s))) {
      auto orbit = chain_orbit(s, state_bound);
      for (const auto& t : orbit) seen.insert(pack_state(t));
      sizes.push_back(orbit.size());
    }
    for (int k = 0; k < 2 * g; ++k) {
      if (++v[k] < r) break;
      v[k] = 0;
    }
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

SpinStructure spin_from_chain(const ChainSpin& state) {
  const HumphriesReference& ref = humphries_reference(state.g);
  int g = state.g, r = state.r;
  std::vector<Int> s(2 * g, 0);
  for (int k = 0; k < 2 * g; ++k) {
    // frame value = reference frame value + psi(frame vector), where psi is
    // the difference homomorphism determined by psi(c_j) = v_j.
    Int val = (r % 2 == 0) ? ((ref.frame_ref_q[k] + 1) & 1) : 0;
    for (int j = 0; j < 2 * g; ++j) val += ref.frame_change(j, k) * state.values[j + 1];
    s[k] = mod_norm(val, r);
  }
  return make_spin(r, g, s);
}

ChainSpin chain_from_spin(const SpinStructure& phi) {
  const HumphriesReference& ref = humphries_reference(phi.g);
  int g = phi.g, r = phi.r;
  // psi on the frame basis, then pushed to the chain vectors.
  Vec psi_frame(2 * g, 0);
  for (int k = 0; k < 2 * g; ++k) {
    Int ref_val = (r % 2 == 0) ? ((ref.frame_ref_q[k] + 1) & 1) : 0;
    psi_frame[k] = phi.values[k] - ref_val;
  }
  // chain vector j expands in the frame with coefficients frame_change_inv
  // column j.
  std::vector<Int> free_vals(2 * g, 0);
  for (int j = 0; j < 2 * g; ++j) {
    Int val = 0;
    for (int k = 0; k < 2 * g; ++k) val += ref.frame_change_inv(k, j) * psi_frame[k];
    free_vals[j] = mod_norm(val, r);
  }
  return make_chain_spin(r, g, free_vals);
}

}  // namespace rspin
