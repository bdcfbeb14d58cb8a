#include "invsem/topology.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "invsem/error.hpp"

namespace invsem {

namespace {

constexpr int kMaxLatticePoints = 20;

uint32_t to_mask(ElemSet const& a) {
  uint32_t m = 0;
  a.for_each([&](int x) { m |= uint32_t(1) << x; });
  return m;
}

ElemSet from_mask(int universe, uint32_t m) {
  ElemSet s(universe);
  while (m) {
    int b = __builtin_ctz(m);
    s.set(b);
    m &= m - 1;
  }
  return s;
}

}  // namespace

bool Topology::is_open(ElemSet const& a) const {
  bool open = true;
  a.for_each([&](int x) {
    if (open && !min_nbhd[x].subset_of(a)) open = false;
  });
  return open;
}

ElemSet Topology::interior(ElemSet const& a) const {
  ElemSet r(points);
  a.for_each([&](int x) {
    if (min_nbhd[x].subset_of(a)) r.set(x);
  });
  return r;
}

ElemSet Topology::closure(ElemSet const& a) const {
  ElemSet r(points);
  for (int x = 0; x < points; ++x)
    if (min_nbhd[x].intersects(a)) r.set(x);
  return r;
}

bool Topology::is_hausdorff() const {
  for (int x = 0; x < points; ++x)
    for (int y = x + 1; y < points; ++y)
      if (min_nbhd[x].intersects(min_nbhd[y])) return false;
  return true;
}

bool Topology::is_t0() const {
  for (int x = 0; x < points; ++x)
    for (int y = x + 1; y < points; ++y)
      if (min_nbhd[x] == min_nbhd[y]) return false;
  return true;
}

bool Topology::is_discrete() const {
  for (int x = 0; x < points; ++x)
    if (min_nbhd[x].count() != 1) return false;
  return true;
}

Topology make_topology(int points, std::vector<ElemSet> basis,
                       std::vector<std::string> names) {
  Topology t;
  t.points = points;
  if (names.empty()) {
    names.resize(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) names[i] = "b" + std::to_string(i);
  }
  check_internal(names.size() == basis.size(), "basis names out of step");

  std::vector<int> order(basis.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (basis[a] != basis[b]) return basis[a] < basis[b];
    return a < b;
  });
  for (int i : order) {
    if (basis[i].empty()) continue;
    check_internal(basis[i].universe() == points, "basis set universe mismatch");
    if (!t.basis.empty() && t.basis.back() == basis[i]) continue;
    t.basis.push_back(basis[i]);
    t.basis_names.push_back(names[i]);
  }

  ElemSet covered(points);
  for (auto const& b : t.basis) covered |= b;
  check_internal(covered == ElemSet::all(points), "basis fails to cover");

  t.min_nbhd.reserve(points);
  for (int x = 0; x < points; ++x) {
    ElemSet n = ElemSet::all(points);
    for (auto const& b : t.basis)
      if (b.test(x)) n &= b;
    t.min_nbhd.push_back(n);
  }

  // Basis property: pairwise intersections are unions of members.
  for (size_t i = 0; i < t.basis.size(); ++i)
    for (size_t j = i + 1; j < t.basis.size(); ++j) {
      ElemSet both = t.basis[i] & t.basis[j];
      ElemSet covered_ij(points);
      for (auto const& b : t.basis)
        if (b.subset_of(both)) covered_ij |= b;
      check_internal(covered_ij == both,
                     "basis intersection is not a union of members");
    }

  if (points <= kMaxLatticePoints) {
    std::vector<uint32_t> nm(points);
    for (int x = 0; x < points; ++x) nm[x] = to_mask(t.min_nbhd[x]);
    uint32_t full = points == 32 ? ~uint32_t(0)
                                 : (uint32_t(1) << points) - 1;
    std::vector<uint32_t> open_masks;
    for (uint32_t m = 0;; ++m) {
      bool open = true;
      uint32_t probe = m;
      while (probe) {
        int x = __builtin_ctz(probe);
        if (nm[x] & ~m) {
          open = false;
          break;
        }
        probe &= probe - 1;
      }
      if (open) open_masks.push_back(m);
      if (m == full) break;
    }
    t.opens.reserve(open_masks.size());
    for (uint32_t m : open_masks) t.opens.push_back(from_mask(points, m));
    std::sort(t.opens.begin(), t.opens.end());
    t.opens_built = true;
    for (auto const& b : t.basis)
      check_internal(t.is_open(b), "basis member fails the open test");
  }
  return t;
}

Topology subspace(Topology const& top, ElemSet const& pts) {
  std::vector<int> keep = pts.to_vector();
  std::vector<int> pos(top.points, -1);
  for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = int(i);
  int k = int(keep.size());
  std::vector<ElemSet> basis;
  std::vector<std::string> names;
  for (size_t i = 0; i < top.basis.size(); ++i) {
    ElemSet cut(k);
    top.basis[i].for_each([&](int x) {
      if (pos[x] >= 0) cut.set(pos[x]);
    });
    if (cut.empty()) continue;
    basis.push_back(cut);
    names.push_back(top.basis_names[i]);
  }
  return make_topology(k, std::move(basis), std::move(names));
}

namespace {

// U0 is join-prime when U0 <= A | B forces U0 <= A or U0 <= B. For any open
// U not above U0, every open covering U0 \ U contains the union of the
// minimal neighbourhoods over U0 \ U, so it suffices to test that union.
bool join_prime(Topology const& t, ElemSet const& u0) {
  if (u0.empty()) return false;
  for (auto const& u : t.opens) {
    if (u0.subset_of(u)) continue;
    ElemSet rest(t.points);
    u0.for_each([&](int x) {
      if (!u.test(x)) rest |= t.min_nbhd[x];
    });
    if (!u0.subset_of(rest)) return false;
  }
  return true;
}

}  // namespace

SoberReport sober_report(Topology const& top) {
  if (!top.opens_built)
    fail(Err::LatticeTooLarge,
         "open lattice not materialized for " + std::to_string(top.points) +
             " points");
  SoberReport rep;
  rep.point_count = top.points;

  std::unordered_set<ElemSet, ElemSetHash> distinct;
  for (auto const& n : top.min_nbhd) distinct.insert(n);
  rep.cp_filter_count = int(distinct.size());

  // Minimal neighbourhoods are exactly the join-prime opens: an open is the
  // union of the minimal neighbourhoods of its points, so a join-prime one
  // collapses onto a single minimal neighbourhood, and each minimal
  // neighbourhood passes the direct test below.
  for (auto const& n : distinct)
    check_internal(join_prime(top, n), "minimal neighbourhood not join-prime");
  if (top.opens.size() <= 2048) {
    for (auto const& u : top.opens)
      check_internal(join_prime(top, u) == (!u.empty() && distinct.count(u)),
                     "join-prime opens differ from minimal neighbourhoods");
  }

  rep.t0 = top.is_t0();
  rep.sober = rep.t0;
  return rep;
}

io::Json SoberReport::to_json() const {
  io::Json j;
  j["points"] = point_count;
  j["cp_filters"] = cp_filter_count;
  j["t0"] = t0;
  j["sober"] = sober;
  return j;
}

io::Json topology_json(Topology const& top) {
  io::Json j;
  j["points"] = top.points;
  io::Json basis = io::Json::array();
  io::Json names = io::Json::array();
  for (size_t i = 0; i < top.basis.size(); ++i) {
    basis.push_back(top.basis[i].to_mask_string());
    names.push_back(top.basis_names[i]);
  }
  j["basis"] = std::move(basis);
  j["names"] = std::move(names);
  j["open_count"] =
      top.opens_built ? io::Json(int(top.opens.size())) : io::Json(nullptr);
  return j;
}

}  // namespace invsem
