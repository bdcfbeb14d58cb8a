#include "invsem/groupoid.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "invsem/completion.hpp"
#include "invsem/coverage.hpp"
#include "invsem/error.hpp"

namespace invsem {

namespace {

constexpr int kMaxPatchExclusions = 16;
constexpr int kMaxBisectionArrows = 22;
constexpr size_t kMaxRawBisections = size_t(1) << 17;
constexpr size_t kMaxOpenBisections = 1024;
constexpr size_t kMaxCoherenceBisections = 600;
constexpr int kMaxIdentitySweep = 16;

char const* open_prefix(FilterClass k) {
  switch (k) {
    case FilterClass::All: return "U";
    case FilterClass::Prime: return "Y";
    case FilterClass::Ultra: return "V";
    default: return "Z";
  }
}

std::vector<ElemSet> element_opens(FilterGroupoid const& G) {
  std::vector<ElemSet> zs;
  zs.reserve(G.S->n);
  for (int s = 0; s < G.S->n; ++s) zs.push_back(basic_open(G, s));
  return zs;
}

// Minimal-neighbourhood pairs suffice: if any pair of opens around a
// composable pair works, the smallest one does.
void check_continuity(FilterGroupoid const& G, Topology const& top) {
  for (auto const& b : top.basis)
    check_internal(top.is_open(inverse_set(G, b)),
                   "inversion discontinuous");
  int m = G.size();
  for (auto const& u : top.basis)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        int p = G.mul(a, b);
        if (p < 0 || !u.test(p)) continue;
        bool ok = true;
        top.min_nbhd[a].for_each([&](int a2) {
          if (!ok) return;
          top.min_nbhd[b].for_each([&](int b2) {
            if (ok) {
              int q = G.mul(a2, b2);
              if (q >= 0 && !u.test(q)) ok = false;
            }
          });
        });
        check_internal(ok, "multiplication discontinuous");
      }
}

bool assert_basis_products(FilterGroupoid const& G) {
  switch (G.klass) {
    case FilterClass::All:
    case FilterClass::Ultra:
    case FilterClass::Tight:
    case FilterClass::Dense:
      return true;
    case FilterClass::Prime:
      return predicates(*G.S).is_distributive;
  }
  return false;
}

PatchIdentityReport patch_identity_sweep(InvSemigroup const& S,
                                         FilterGroupoid const& G,
                                         std::vector<ElemSet> const& zs) {
  int n = S.n;
  int m = G.size();
  int z = *S.zero;
  auto relopen = [&](int a, int b) {
    if (a == z) return ElemSet(m);
    ElemSet r = zs[a];
    if (b != z) r = r.minus(zs[b]);
    return r;
  };

  PatchIdentityReport rep;
  rep.product_ok = rep.inversion_ok = rep.join_ok = true;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (!S.le(t, s)) continue;
      if (inverse_set(G, relopen(s, t)) != relopen(S.inv[s], S.inv[t]))
        rep.inversion_ok = false;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (!S.le(v, u)) continue;
          ++rep.product_tuples;
          ElemSet lhs = product_set(G, relopen(s, t), relopen(u, v));
          ElemSet parts(n);
          for (int w : {S.mul(s, v), S.mul(t, u), S.mul(t, v)})
            if (w != z) parts.set(w);
          auto j = join(S, parts);
          check_internal(j.has_value(), "bounded join missing");
          if (lhs != relopen(S.mul(s, u), *j)) rep.product_ok = false;
        }
    }

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      int jst = S.join_tab[s * n + t];
      if (jst < 0) continue;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          int juv = S.join_tab[u * n + v];
          if (juv < 0 || !S.le(juv, jst)) continue;
          ++rep.join_tuples;
          int ws = S.mul(juv, S.mul(S.inv[s], s));
          int wt = S.mul(juv, S.mul(S.inv[t], t));
          check_internal(S.le(ws, s) && S.le(wt, t),
                         "restricted join escapes its piece");
          ElemSet rhs = relopen(s, ws) | relopen(t, wt);
          if (relopen(jst, juv) != rhs) rep.join_ok = false;
        }
    }
  return rep;
}

}  // namespace

std::vector<int> max_below(InvSemigroup const& S, int x) {
  std::vector<int> below;
  S.down[x].for_each([&](int y) {
    if (y != x && !S.is_zero(y)) below.push_back(y);
  });
  std::vector<int> out;
  for (int y : below) {
    bool maximal = true;
    for (int w : below)
      if (w != y && S.le(y, w)) maximal = false;
    if (maximal) out.push_back(y);
  }
  return out;
}

ElemSet basic_open(FilterGroupoid const& G, int s) {
  ElemSet r(G.size());
  for (int i = 0; i < G.size(); ++i)
    if (G.arrows[i].carrier.test(s)) r.set(i);
  return r;
}

ElemSet patch_open(FilterGroupoid const& G, int x, std::vector<int> const& omit) {
  ElemSet r = basic_open(G, x);
  for (int y : omit) r = r.minus(basic_open(G, y));
  return r;
}

ElemSet product_set(FilterGroupoid const& G, ElemSet const& a, ElemSet const& b) {
  ElemSet r(G.size());
  a.for_each([&](int i) {
    b.for_each([&](int j) {
      int p = G.mul(i, j);
      if (p >= 0) r.set(p);
    });
  });
  return r;
}

ElemSet inverse_set(FilterGroupoid const& G, ElemSet const& a) {
  ElemSet r(G.size());
  a.for_each([&](int i) { r.set(G.inv_arrow[i]); });
  return r;
}

bool is_bisection(FilterGroupoid const& G, ElemSet const& a) {
  std::vector<char> seen_d(G.size(), 0), seen_r(G.size(), 0);
  bool ok = true;
  a.for_each([&](int i) {
    if (!ok) return;
    if (seen_d[G.dmap[i]] || seen_r[G.rmap[i]]) ok = false;
    seen_d[G.dmap[i]] = seen_r[G.rmap[i]] = 1;
  });
  return ok;
}

TopGroupoid basic_topology(FilterGroupoid const& G) {
  InvSemigroup const& S = *G.S;
  int n = S.n;
  std::vector<ElemSet> zs = element_opens(G);
  std::string pre = open_prefix(G.klass);

  std::vector<ElemSet> basis;
  std::vector<std::string> names;
  for (int s = 0; s < n; ++s) {
    if (S.is_zero(s) || zs[s].empty()) continue;
    basis.push_back(zs[s]);
    names.push_back(pre + "[" + S.label(s) + "]");
  }

  bool products = assert_basis_products(G);
  for (int s = 0; s < n; ++s) {
    if (S.is_zero(s)) continue;
    check_internal(inverse_set(G, zs[s]) == zs[S.inv[s]],
                   "inversion identity fails on the basis");
    if (!products) continue;
    for (int t = 0; t < n; ++t)
      check_internal(product_set(G, zs[s], zs[t]) == zs[S.mul(s, t)],
                     "product identity fails on the basis");
  }

  TopGroupoid tg{G, make_topology(G.size(), std::move(basis), std::move(names)),
                 "basic"};
  check_internal(tg.top.is_open(G.objects), "unit space not open");
  check_continuity(G, tg.top);
  return tg;
}

TopGroupoid patch_topology(FilterGroupoid const& G) {
  InvSemigroup const& S = *G.S;
  int n = S.n;
  int m = G.size();
  std::vector<ElemSet> zs = element_opens(G);
  std::string pre = open_prefix(G.klass);

  std::vector<ElemSet> basis;
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    if (S.is_zero(x) || zs[x].empty()) continue;
    std::vector<int> mb = max_below(S, x);
    if (int(mb.size()) > kMaxPatchExclusions)
      fail(Err::TooLarge,
           "too many maximal elements below " + S.label(x) +
               " for the patch basis");
    for (uint32_t pick = 0; pick < (uint32_t(1) << mb.size()); ++pick) {
      std::vector<int> omit;
      std::string suffix;
      for (size_t k = 0; k < mb.size(); ++k)
        if (pick >> k & 1) {
          omit.push_back(mb[k]);
          suffix += (suffix.empty() ? ";" : ",") + S.label(mb[k]);
        }
      ElemSet u = patch_open(G, x, omit);
      if (u.empty()) continue;
      basis.push_back(u);
      names.push_back(pre + "[" + S.label(x) + suffix + "]");
    }
  }

  TopGroupoid tg{G, make_topology(m, std::move(basis), std::move(names)),
                 "patch"};
  for (int s = 0; s < n; ++s)
    if (!S.is_zero(s) && !zs[s].empty())
      check_internal(tg.top.is_open(zs[s]),
                     "patch fails to refine the basic topology");
  for (int i = 0; i < m; ++i)
    check_internal(
        patch_open(G, G.arrows[i].min, max_below(S, G.arrows[i].min)) ==
            ElemSet::single(m, i),
        "principal filter misses its canonical singleton");
  check_internal(tg.top.is_discrete(),
                 "finite patch topology should be discrete");
  check_continuity(G, tg.top);

  if (G.klass == FilterClass::Prime && n <= kMaxIdentitySweep &&
      S.zero.has_value() && predicates(S).is_distributive) {
    PatchIdentityReport rep = patch_identity_sweep(S, G, zs);
    check_internal(rep.product_ok && rep.inversion_ok && rep.join_ok,
                   "relative-complement identities fail");
  }
  return tg;
}

bool is_etale(TopGroupoid const& tg) {
  bool ok = tg.top.is_open(tg.G.objects);
  for (auto const& a : tg.top.basis) {
    if (!tg.top.is_open(inverse_set(tg.G, a))) ok = false;
    for (auto const& b : tg.top.basis)
      if (!tg.top.is_open(product_set(tg.G, a, b))) ok = false;
  }
  if (tg.top.opens_built && tg.top.opens.size() <= 128) {
    bool full = tg.top.is_open(tg.G.objects);
    for (auto const& a : tg.top.opens) {
      if (!tg.top.is_open(inverse_set(tg.G, a))) full = false;
      for (auto const& b : tg.top.opens)
        if (!tg.top.is_open(product_set(tg.G, a, b))) full = false;
    }
    check_internal(full == ok,
                   "basis products disagree with lattice products");
  }
  return ok;
}

bool is_hausdorff(TopGroupoid const& tg) { return tg.top.is_hausdorff(); }

bool is_sober(TopGroupoid const& tg) { return sober_report(tg.top).sober; }

namespace {

std::vector<ElemSet> open_bisections(TopGroupoid const& tg, size_t cap) {
  FilterGroupoid const& G = tg.G;
  int m = G.size();
  if (m > kMaxBisectionArrows)
    fail(Err::TooLarge, "too many arrows for bisection enumeration");
  std::vector<ElemSet> raw;
  ElemSet cur(m);
  std::vector<char> used_d(m, 0), used_r(m, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      if (raw.size() >= kMaxRawBisections)
        fail(Err::TooLarge, "bisection enumeration cap hit");
      raw.push_back(cur);
      return;
    }
    self(self, i + 1);
    int d = G.dmap[i], r = G.rmap[i];
    if (!used_d[d] && !used_r[r]) {
      used_d[d] = used_r[r] = 1;
      cur.set(i);
      self(self, i + 1);
      cur.reset(i);
      used_d[d] = used_r[r] = 0;
    }
  };
  rec(rec, 0);

  std::vector<ElemSet> open;
  for (auto const& b : raw)
    if (tg.top.is_open(b)) open.push_back(b);
  if (open.size() > cap)
    fail(Err::TooLarge, "more open bisections than the construction cap");
  std::sort(open.begin(), open.end());
  return open;
}

}  // namespace

bool is_coherent(TopGroupoid const& tg) {
  bool c1 = true;
  for (int x = 0; x < tg.top.points; ++x)
    if (!is_bisection(tg.G, tg.top.min_nbhd[x])) c1 = false;
  std::vector<ElemSet> bs = open_bisections(tg, kMaxCoherenceBisections);
  bool c2 = true;
  for (auto const& a : bs)
    for (auto const& b : bs) {
      ElemSet p = product_set(tg.G, a, b);
      check_internal(is_bisection(tg.G, p),
                     "product of bisections is not a bisection");
      if (!tg.top.is_open(p)) c2 = false;
    }
  bool c3 = sober_report(tg.top).sober;
  return c1 && c2 && c3;
}

bool is_boolean_groupoid(TopGroupoid const& tg) {
  bool basis_of_bisections = true;
  for (int x = 0; x < tg.top.points; ++x)
    if (!is_bisection(tg.G, tg.top.min_nbhd[x])) basis_of_bisections = false;
  bool verdict = tg.top.is_hausdorff() && is_etale(tg) && basis_of_bisections &&
                 subspace(tg.top, tg.G.objects).is_hausdorff();
  if (verdict && tg.top.opens_built)
    check_internal(sober_report(tg.top).sober,
                   "boolean groupoid fails soberness");
  return verdict;
}

bool is_weakly_boolean_groupoid(TopGroupoid const& tg) {
  return is_coherent(tg) && subspace(tg.top, tg.G.objects).is_hausdorff();
}

int BisectionSemigroup::index_of(ElemSet const& a) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), a);
  if (it == sets.end() || !(*it == a)) return -1;
  return int(it - sets.begin());
}

BisectionSemigroup bisection_semigroup(TopGroupoid const& tg, bool compact_only) {
  FilterGroupoid const& G = tg.G;
  InvSemigroup const& S = *G.S;
  // Every open subset of a finite space is compact-open, so both variants
  // enumerate the same family.
  std::vector<ElemSet> sets = open_bisections(tg, kMaxOpenBisections);
  int n = int(sets.size());

  std::unordered_map<ElemSet, int, ElemSetHash> index;
  for (int i = 0; i < n; ++i) index.emplace(sets[i], i);

  std::vector<int> table(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ElemSet p = product_set(G, sets[i], sets[j]);
      auto it = index.find(p);
      if (it == index.end())
        fail(Err::ClassNotClosed,
             "product of open bisections is not open");
      table[size_t(i) * n + j] = it->second;
    }

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string lab = "{";
    bool first = true;
    sets[i].for_each([&](int a) {
      if (!first) lab += ",";
      lab += S.label(G.arrows[a].min);
      first = false;
    });
    labels[i] = lab + "}";
  }

  check_internal(!sets.empty() && sets.front().empty(),
                 "empty bisection missing");
  BisectionSemigroup out;
  out.sets = std::move(sets);
  out.compact_only = compact_only;
  out.sg = verify(table, n, 0, std::move(labels));

  for (int i = 0; i < n; ++i) {
    check_internal(out.sets[out.sg.inv[i]] == inverse_set(G, out.sets[i]),
                   "semigroup inverse disagrees with arrow inversion");
    check_internal(out.sg.is_idem(i) == out.sets[i].subset_of(G.objects),
                   "idempotents are not the open unit subsets");
    for (int j = 0; j < n; ++j)
      check_internal(out.sg.le(i, j) == out.sets[i].subset_of(out.sets[j]),
                     "natural order is not containment");
  }
  return out;
}

TightClosureReport tight_closure_check(InvSemigroup const& S) {
  if (!S.zero) fail(Err::NoZero, "tight closure needs a zero");
  FilterGroupoid G = filter_groupoid(S, FilterClass::All);
  TopGroupoid tg = patch_topology(G);
  int m = G.size();

  TightClosureReport rep;
  rep.filter_count = m;
  rep.ultra = ElemSet(m);
  rep.tight = ElemSet(m);
  for (int i = 0; i < m; ++i) {
    if (is_ultrafilter(S, G.arrows[i])) rep.ultra.set(i);
    if (is_tight_filter(S, G.arrows[i])) rep.tight.set(i);
  }
  check_internal(rep.ultra.subset_of(rep.tight),
                 "ultrafilter fails to be tight");

  rep.patch_closure_of_ultra = tg.top.closure(rep.ultra);
  rep.closure_equals_tight = rep.patch_closure_of_ultra == rep.tight;

  rep.tight_opens_meet_ultra = true;
  for (auto const& b : tg.top.basis)
    if (b.intersects(rep.tight) && !b.intersects(rep.ultra))
      rep.tight_opens_meet_ultra = false;

  int z = *S.zero;
  for (int i = 0; i < m; ++i) {
    if (rep.tight.test(i)) continue;
    Filter const& F = G.arrows[i];
    TightClosureReport::Separation sep;
    sep.arrow = i;
    for (int x : F.carrier.to_vector()) {
      ElemSet cand = S.down[x].minus(F.carrier);
      cand.reset(z);
      if (!arrow(S, x, cand)) continue;
      sep.element = x;
      sep.cover = cand.to_vector();
      break;
    }
    check_internal(sep.element >= 0,
                   "non-tight filter without a separating cover");
    ElemSet u = patch_open(G, sep.element, sep.cover);
    check_internal(u.test(i), "separating open misses its filter");
    check_internal(!u.intersects(rep.ultra),
                   "separating open still meets an ultrafilter");
    check_internal(tg.top.is_open(u), "separating set is not open");
    rep.separations.push_back(std::move(sep));
  }

  check_internal(rep.closure_equals_tight,
                 "ultrafilter closure differs from the tight filters");
  check_internal(rep.tight_opens_meet_ultra,
                 "patch-basic open around a tight filter avoids ultrafilters");
  return rep;
}

io::Json TightClosureReport::to_json(InvSemigroup const& S) const {
  io::Json j;
  j["filters"] = filter_count;
  j["ultra"] = ultra.to_mask_string();
  j["tight"] = tight.to_mask_string();
  j["closure_of_ultra"] = patch_closure_of_ultra.to_mask_string();
  j["closure_equals_tight"] = closure_equals_tight;
  j["tight_opens_meet_ultra"] = tight_opens_meet_ultra;
  io::Json seps = io::Json::array();
  for (auto const& s : separations) {
    io::Json e;
    e["filter"] = s.arrow;
    e["element"] = S.label(s.element);
    io::Json cov = io::Json::array();
    for (int c : s.cover) cov.push_back(S.label(c));
    e["cover"] = std::move(cov);
    seps.push_back(std::move(e));
  }
  j["separations"] = std::move(seps);
  return j;
}

bool CompactnessReport::all() const {
  return ultrafilters_closed && tight_equals_ultra &&
         idem_tight_equals_idem_ultra && unit_space_ultra_closed &&
         restriction_decomposition && tight_completion_weakly_boolean;
}

io::Json CompactnessReport::to_json() const {
  io::Json j;
  j["ultrafilters_closed"] = ultrafilters_closed;
  j["tight_equals_ultra"] = tight_equals_ultra;
  j["idem_tight_equals_idem_ultra"] = idem_tight_equals_idem_ultra;
  j["unit_space_ultra_closed"] = unit_space_ultra_closed;
  j["restriction_decomposition"] = restriction_decomposition;
  j["tight_completion_weakly_boolean"] = tight_completion_weakly_boolean;
  j["all"] = all();
  return j;
}

CompactnessReport compactness_condition(InvSemigroup const& S) {
  if (!S.zero) fail(Err::NoZero, "compactness condition needs a zero");
  int z = *S.zero;
  FilterGroupoid G = filter_groupoid(S, FilterClass::All);
  TopGroupoid tg = patch_topology(G);
  int m = G.size();

  ElemSet ultra(m), tight(m);
  for (int i = 0; i < m; ++i) {
    if (is_ultrafilter(S, G.arrows[i])) ultra.set(i);
    if (is_tight_filter(S, G.arrows[i])) tight.set(i);
  }

  CompactnessReport r;
  r.ultrafilters_closed = tg.top.closure(ultra) == ultra;
  r.tight_equals_ultra = tight == ultra;
  r.idem_tight_equals_idem_ultra = (tight & G.objects) == (ultra & G.objects);

  Topology sub = subspace(tg.top, G.objects);
  std::vector<int> obj = G.objects.to_vector();
  ElemSet unit_ultra(sub.points);
  for (size_t k = 0; k < obj.size(); ++k)
    if (ultra.test(obj[k])) unit_ultra.set(int(k));
  r.unit_space_ultra_closed = sub.closure(unit_ultra) == unit_ultra;

  int n = S.n;
  std::vector<ElemSet> atoms_below(n, ElemSet(n));
  for (int a = 0; a < n; ++a) {
    if (S.is_zero(a) || S.down[a].count() != 2) continue;
    for (int e = 0; e < n; ++e)
      if (S.le(a, e)) atoms_below[e].set(a);
  }
  r.restriction_decomposition = true;
  for (int e = 0; e < n; ++e) {
    if (!S.is_idem(e) || S.is_zero(e)) continue;
    for (int f = 0; f < n; ++f) {
      if (!S.is_idem(f) || !S.le(f, e)) continue;
      ElemSet target = atoms_below[e].minus(atoms_below[f]);
      bool disjoint_witness = false;
      S.down[e].for_each([&](int i) {
        if (!S.is_zero(i) && S.mul(i, f) == z) disjoint_witness = true;
      });
      check_internal(disjoint_witness == !target.empty(),
                     "0-disjunctive criterion out of step");
      if (target.empty()) continue;
      ElemSet covered(n);
      for (int g = 0; g < n; ++g)
        if (S.is_idem(g) && !S.is_zero(g) && S.le(g, e) &&
            atoms_below[g].subset_of(target))
          covered |= atoms_below[g];
      if (covered != target) r.restriction_decomposition = false;
    }
  }

  r.tight_completion_weakly_boolean =
      predicates(tight_completion(S).comp.sg).is_weakly_boolean;

  bool first = r.ultrafilters_closed;
  check_internal(first == r.tight_equals_ultra &&
                     first == r.idem_tight_equals_idem_ultra &&
                     first == r.unit_space_ultra_closed &&
                     first == r.restriction_decomposition &&
                     first == r.tight_completion_weakly_boolean,
                 "compactness renderings disagree");
  return r;
}

CoarseGrainedReport coarse_grained_check(InvSemigroup const& S) {
  if (!S.zero) fail(Err::NoZero, "coarse-grainedness needs a zero");
  int z = *S.zero;
  std::vector<int> E = S.idempotents.to_vector();

  // Non-strict reading: e counts as a one-step restriction of itself, which
  // is what lets the atom/zero pairs carry the singleton family {e}.
  auto one_step = [&](int f, int e) {
    if (!S.le(f, e)) return false;
    for (int i : E)
      if (i != f && i != e && S.le(f, i) && S.le(i, e)) return false;
    return true;
  };

  CoarseGrainedReport rep;
  std::vector<int> depth(S.n, -1);
  std::vector<int> order = E;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto ca = S.down[a].count(), cb = S.down[b].count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  for (int e : order) {
    int d = 0;
    for (int f : E)
      if (f != e && one_step(f, e)) {
        check_internal(depth[f] >= 0, "cover chain out of order");
        d = std::max(d, depth[f] + 1);
      }
    depth[e] = d;
    rep.depth = std::max(rep.depth, d);
  }

  rep.coarse_grained = true;
  for (int e : E) {
    if (e == z) continue;
    int steps = 0;
    for (int f : E) {
      if (f == e || !one_step(f, e)) continue;
      ++steps;
      CoarseGrainedReport::CoverPair pair;
      pair.lower = f;
      pair.upper = e;
      for (int g : E)
        if (g != z && one_step(g, e) && S.mul(g, f) == z)
          pair.family.push_back(g);
      pair.complemented = true;
      for (int g : E) {
        if (g == z || !S.le(g, e) || S.mul(g, f) != z) continue;
        bool dominated = false;
        for (int c : pair.family)
          if (S.le(g, c)) dominated = true;
        if (!dominated) pair.complemented = false;
      }
      if (!pair.complemented) rep.coarse_grained = false;
      rep.pairs.push_back(std::move(pair));
    }
    rep.max_one_step = std::max(rep.max_one_step, steps);
  }
  return rep;
}

io::Json CoarseGrainedReport::to_json(InvSemigroup const& S) const {
  io::Json j;
  j["locally_finite"] = locally_finite;
  j["finite_depth"] = finite_depth;
  j["depth"] = depth;
  j["max_one_step"] = max_one_step;
  io::Json ps = io::Json::array();
  for (auto const& p : pairs) {
    io::Json e;
    e["lower"] = S.label(p.lower);
    e["upper"] = S.label(p.upper);
    e["complemented"] = p.complemented;
    io::Json fam = io::Json::array();
    for (int c : p.family) fam.push_back(S.label(c));
    e["family"] = std::move(fam);
    ps.push_back(std::move(e));
  }
  j["pairs"] = std::move(ps);
  j["coarse_grained"] = coarse_grained;
  return j;
}

io::Json PatchIdentityReport::to_json() const {
  io::Json j;
  j["product_tuples"] = product_tuples;
  j["product_ok"] = product_ok;
  j["inversion_ok"] = inversion_ok;
  j["join_tuples"] = join_tuples;
  j["join_ok"] = join_ok;
  return j;
}

PatchIdentityReport patch_identity_check(InvSemigroup const& S) {
  if (!S.zero) fail(Err::NoZero, "patch identities need a zero");
  if (!predicates(S).is_distributive)
    fail(Err::NotDistributive, "patch identities need a distributive parent");
  if (S.n > kMaxIdentitySweep)
    fail(Err::TooLarge, "identity sweep capped at " +
                            std::to_string(kMaxIdentitySweep) + " elements");
  FilterGroupoid G = filter_groupoid(S, FilterClass::Prime);
  return patch_identity_sweep(S, G, element_opens(G));
}

io::Json topgroupoid_json(TopGroupoid const& tg) {
  io::Json j;
  j["class"] = filter_class_name(tg.G.klass);
  j["flavor"] = tg.flavor;
  j["groupoid"] = groupoid_json(tg.G);
  j["topology"] = topology_json(tg.top);
  return j;
}

}  // namespace invsem
