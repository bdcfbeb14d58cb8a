#include "invsem/duality.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "invsem/error.hpp"
#include "invsem/filters.hpp"

namespace invsem {

namespace {

int min_of(InvSemigroup const& S, ElemSet const& A) {
  std::vector<int> v = A.to_vector();
  for (int x : v) {
    bool low = true;
    for (int y : v) {
      if (!S.le(x, y)) {
        low = false;
        break;
      }
    }
    if (low) return x;
  }
  return -1;
}

std::optional<int> safe_join(InvSemigroup const& S, ElemSet const& A) {
  std::vector<int> v = A.to_vector();
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (!compatible(S, v[i], v[j])) return std::nullopt;
  return join(S, A);
}

// Zero lands on zero and every existing pairwise join is carried to the
// join of the images; finite joins follow by folding.
bool preserves_joins(InvSemigroup const& S, InvSemigroup const& T,
                     std::vector<int> const& map) {
  if (!is_zero_preserving(S, T, map)) return false;
  for (int s = 0; s < S.n; ++s)
    for (int t = 0; t < S.n; ++t) {
      auto j = join_pair(S, s, t);
      if (!j) continue;
      auto tj = join_pair(T, map[s], map[t]);
      if (!tj || *tj != map[*j]) return false;
    }
  return true;
}

std::vector<int> counit_map(InvSemigroup const& S, FilterGroupoid const& G,
                            BisectionSemigroup const& B) {
  std::vector<int> m(S.n, -1);
  for (int s = 0; s < S.n; ++s) {
    int idx = B.index_of(basic_open(G, s));
    check_internal(idx >= 0, "element opens must be compact-open bisections");
    m[s] = idx;
  }
  return m;
}

bool injective_values(std::vector<int> const& m) {
  std::vector<int> v = m;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

struct FunctorData {
  FilterGroupoid const* src;
  FilterGroupoid const* dst;
  std::vector<int> const* am;
};

bool functor_holds(FunctorData f) {
  int m = f.src->size();
  auto const& am = *f.am;
  for (int g = 0; g < m; ++g) {
    if (f.dst->dmap[am[g]] != am[f.src->dmap[g]]) return false;
    if (f.dst->rmap[am[g]] != am[f.src->rmap[g]]) return false;
    if (f.dst->inv_arrow[am[g]] != am[f.src->inv_arrow[g]]) return false;
    if (f.src->objects.test(g) != f.dst->objects.test(am[g])) return false;
  }
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      int p = f.src->mul(g, h);
      if (p >= 0 && f.dst->mul(am[g], am[h]) != am[p]) return false;
    }
  return true;
}

bool covering_holds(FunctorData f) {
  int m = f.src->size();
  auto const& am = *f.am;
  for (int g = 0; g < m; ++g)
    for (int h = g + 1; h < m; ++h)
      if (f.src->dmap[g] == f.src->dmap[h] && am[g] == am[h]) return false;
  for (int e = 0; e < m; ++e) {
    if (!f.src->objects.test(e)) continue;
    for (int A = 0; A < f.dst->size(); ++A) {
      if (f.dst->dmap[A] != am[e]) continue;
      bool lifted = false;
      for (int g = 0; g < m; ++g)
        if (f.src->dmap[g] == e && am[g] == A) {
          lifted = true;
          break;
        }
      if (!lifted) return false;
    }
  }
  return true;
}

}  // namespace

EpsilonReport epsilon(InvSemigroup const& S) {
  FilterGroupoid G = filter_groupoid(S, FilterClass::Prime);
  TopGroupoid tg = basic_topology(G);
  EpsilonReport rep;
  rep.target = bisection_semigroup(tg, true);
  rep.map = counit_map(S, G, rep.target);
  auto const& B = rep.target;

  rep.injective = injective_values(rep.map);
  ElemSet hit(B.sg.n);
  for (int s = 0; s < S.n; ++s) hit.set(rep.map[s]);
  rep.surjective = hit.count() == B.sg.n;
  rep.multiplicative = is_multiplicative(S, B.sg, rep.map);

  rep.meets_preserved = true;
  for (int s = 0; s < S.n && rep.meets_preserved; ++s)
    for (int t = 0; t < S.n; ++t) {
      auto m = meet(S, s, t);
      if (!m) continue;
      ElemSet inter = B.sets[rep.map[s]] & B.sets[rep.map[t]];
      auto bm = meet(B.sg, rep.map[s], rep.map[t]);
      if (!(B.sets[rep.map[*m]] == inter) || !bm || *bm != rep.map[*m]) {
        rep.meets_preserved = false;
        break;
      }
    }

  rep.joins_preserved = true;
  for (int s = 0; s < S.n && rep.joins_preserved; ++s)
    for (int t = 0; t < S.n; ++t) {
      auto j = join_pair(S, s, t);
      if (!j) continue;
      ElemSet uni = B.sets[rep.map[s]] | B.sets[rep.map[t]];
      auto bj = join_pair(B.sg, rep.map[s], rep.map[t]);
      if (!(B.sets[rep.map[*j]] == uni) || !bj || *bj != rep.map[*j]) {
        rep.joins_preserved = false;
        break;
      }
    }

  if (predicates(S).is_distributive) {
    check_internal(rep.multiplicative,
                   "counit must be a homomorphism on distributive input");
    check_internal(rep.meets_preserved,
                   "counit must preserve meets on distributive input");
    check_internal(rep.joins_preserved,
                   "counit must preserve compatible joins on distributive input");
  }
  return rep;
}

bool is_spatial(InvSemigroup const& S) {
  FilterGroupoid G = filter_groupoid(S, FilterClass::Prime);
  std::vector<ElemSet> zs;
  zs.reserve(S.n);
  for (int s = 0; s < S.n; ++s) zs.push_back(basic_open(G, s));

  bool inj = true;
  for (int s = 0; s < S.n && inj; ++s)
    for (int t = s + 1; t < S.n; ++t)
      if (zs[s] == zs[t]) {
        inj = false;
        break;
      }

  if (predicates(S).is_distributive) {
    for (int a = 0; a < S.n; ++a)
      for (int b = 0; b < S.n; ++b) {
        if (S.le(b, a)) continue;
        bool sep = zs[b].minus(zs[a]).count() > 0;
        check_internal(sep,
                       "prime filters must separate elements of a distributive "
                       "semigroup");
      }
    check_internal(inj, "distributive input must be spatial");
  }
  return inj;
}

EtaReport eta(TopGroupoid const& tg) {
  EtaReport rep;
  rep.b = bisection_semigroup(tg, true);
  auto const& B = rep.b;
  int m = tg.G.size();

  FilterGroupoid GP = filter_groupoid(B.sg, FilterClass::Prime);
  rep.target_arrows = GP.size();
  rep.arrow_map.assign(m, -1);
  for (int g = 0; g < m; ++g) {
    ElemSet carrier(B.sg.n);
    ElemSet inter;
    bool first = true;
    for (int b = 0; b < B.sg.n; ++b) {
      if (!B.sets[b].test(g)) continue;
      carrier.set(b);
      if (first) {
        inter = B.sets[b];
        first = false;
      } else {
        inter &= B.sets[b];
      }
    }
    check_internal(!first, "every arrow must lie in an open bisection");
    int mn = B.index_of(inter);
    check_internal(mn >= 0,
                   "least open bisection around an arrow must exist");
    Filter F{mn, carrier};
    check_internal(is_completely_prime_filter(B.sg, F),
                   "arrow filters must be completely prime");
    int A = GP.arrow_of_min[mn];
    check_internal(A >= 0 && GP.arrows[A].carrier == carrier,
                   "arrow filter must appear in the prime groupoid");
    rep.arrow_map[g] = A;
  }

  check_internal(is_spatial(B.sg), "bisection semigroups must be spatial");

  FunctorData f{&tg.G, &GP, &rep.arrow_map};
  rep.functor_ok = functor_holds(f);
  rep.covering_ok = covering_holds(f);

  rep.continuity_ok = true;
  for (int b = 0; b < B.sg.n && rep.continuity_ok; ++b) {
    ElemSet xb = basic_open(GP, b);
    ElemSet pre(m);
    for (int g = 0; g < m; ++g)
      if (xb.test(rep.arrow_map[g])) pre.set(g);
    if (!(pre == B.sets[b])) rep.continuity_ok = false;
  }
  check_internal(rep.functor_ok && rep.covering_ok && rep.continuity_ok,
                 "unit must be a continuous covering functor");

  rep.bijective = injective_values(rep.arrow_map) && m == GP.size();
  return rep;
}

RoundtripReport boolean_duality_roundtrip(InvSemigroup const& S) {
  if (!predicates(S).is_boolean)
    fail(Err::NotBoolean, "round trip wants boolean input");

  FilterGroupoid GP = filter_groupoid(S, FilterClass::Prime);
  FilterGroupoid GU = filter_groupoid(S, FilterClass::Ultra);
  RoundtripReport rep;
  rep.prime_equals_ultra = GP.size() == GU.size();
  for (int i = 0; rep.prime_equals_ultra && i < GP.size(); ++i)
    if (GP.arrows[i].min != GU.arrows[i].min ||
        !(GP.arrows[i].carrier == GU.arrows[i].carrier))
      rep.prime_equals_ultra = false;
  check_internal(rep.prime_equals_ultra,
                 "prime and ultra filters must agree on boolean input");

  TopGroupoid tg = basic_topology(GP);
  rep.hausdorff = tg.top.is_hausdorff();
  check_internal(rep.hausdorff,
                 "element-open topology must be hausdorff on boolean input");

  rep.eps = epsilon(S);
  check_internal(rep.eps.iso() && rep.eps.multiplicative,
                 "counit must be an isomorphism on boolean input");
  rep.semigroup_iso.fwd = rep.eps.map;
  rep.semigroup_iso.inv.assign(S.n, -1);
  for (int s = 0; s < S.n; ++s) rep.semigroup_iso.inv[rep.eps.map[s]] = s;

  rep.unit = eta(tg);
  check_internal(rep.unit.bijective,
                 "unit must be bijective on the spectral groupoid of boolean "
                 "input");
  return rep;
}

Booleanization first_booleanization(InvSemigroup const& S) {
  FilterGroupoid G = filter_groupoid(S, FilterClass::All);
  TopGroupoid tg = patch_topology(G);
  Booleanization rep;
  rep.b = bisection_semigroup(tg, true);
  rep.beta = counit_map(S, G, rep.b);
  rep.beta_multiplicative = is_multiplicative(S, rep.b.sg, rep.beta);
  check_internal(rep.beta_multiplicative,
                 "booleanization unit must be a homomorphism");
  check_internal(predicates(rep.b.sg).is_boolean,
                 "patch bisections must form a boolean semigroup");

  rep.d = d_completion(S);
  check_internal(predicates(rep.d.sg).is_distributive,
                 "join completion must be distributive");
  FilterGroupoid GD = filter_groupoid(rep.d.sg, FilterClass::Prime);

  int m = G.size();
  rep.point_map.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    ElemSet carrier(rep.d.sg.n);
    for (int k = 0; k < rep.d.sg.n; ++k)
      if (rep.d.carriers[k].intersects(G.arrows[i].carrier)) carrier.set(k);
    int mn = min_of(rep.d.sg, carrier);
    check_internal(mn >= 0, "transported filter must be principal");
    int A = GD.arrow_of_min[mn];
    check_internal(A >= 0 && GD.arrows[A].carrier == carrier,
                   "transported filter must be prime over the completion");
    rep.point_map[i] = A;
  }

  FunctorData f{&G, &GD, &rep.point_map};
  rep.groupoid_iso = injective_values(rep.point_map) && m == GD.size() &&
                     functor_holds(f);
  check_internal(rep.groupoid_iso,
                 "all-filters groupoid must match the prime groupoid of the "
                 "join completion");

  rep.basis_dictionary = true;
  for (int x = 0; x < S.n && rep.basis_dictionary; ++x) {
    ElemSet img(GD.size());
    basic_open(G, x).for_each([&](int i) { img.set(rep.point_map[i]); });
    if (!(img == basic_open(GD, rep.d.iota[x]))) rep.basis_dictionary = false;
  }
  check_internal(rep.basis_dictionary,
                 "element opens must correspond under the point map");

  TopGroupoid tgd = patch_topology(GD);
  rep.homeomorphism = rep.groupoid_iso && rep.basis_dictionary &&
                      tg.top.is_discrete() && tgd.top.is_discrete();
  check_internal(rep.homeomorphism, "point map must be a homeomorphism");
  return rep;
}

FactorizationReport booleanization_factorization(InvSemigroup const& S,
                                                 InvSemigroup const& T,
                                                 std::vector<int> const& theta) {
  if ((int)theta.size() != S.n || !is_multiplicative(S, T, theta))
    fail(Err::FlavorMismatch, "factorization wants a homomorphism");
  if (!predicates(T).is_weakly_boolean)
    fail(Err::NotWeaklyBoolean, "factorization target must be weakly boolean");

  FilterGroupoid GT = filter_groupoid(T, FilterClass::Prime);
  for (int i = 0; i < GT.size(); ++i) {
    ElemSet pre(S.n);
    for (int s = 0; s < S.n; ++s)
      if (GT.arrows[i].carrier.test(theta[s])) pre.set(s);
    if (!is_proper_filter_set(S, pre))
      fail(Err::PreimageNotFilter,
           "prime filter preimages must be proper filters");
  }

  FactorizationReport rep;
  rep.first = first_booleanization(S);
  auto const& B = rep.first.b;
  FilterGroupoid G = filter_groupoid(S, FilterClass::All);
  int m = G.size();

  std::vector<int> piece(m, -1);
  for (int i = 0; i < m; ++i) {
    int q = G.arrows[i].min;
    ElemSet parts(T.n);
    for (int x : max_below(S, q)) parts.set(theta[x]);
    auto j = safe_join(T, parts);
    check_internal(j.has_value(),
                   "images of maximal lower bounds must have a join");
    piece[i] = relative_complement(T, theta[q], *j);
  }

  rep.theta_bar.assign(B.sg.n, -1);
  for (int b = 0; b < B.sg.n; ++b) {
    ElemSet parts(T.n);
    B.sets[b].for_each([&](int i) { parts.set(piece[i]); });
    auto j = safe_join(T, parts);
    check_internal(j.has_value(), "piecewise images must have a join");
    rep.theta_bar[b] = *j;
  }

  rep.factors = true;
  for (int s = 0; s < S.n; ++s)
    if (rep.theta_bar[rep.first.beta[s]] != theta[s]) rep.factors = false;
  check_internal(rep.factors, "induced map must factor the original");

  rep.multiplicative = is_multiplicative(B.sg, T, rep.theta_bar);
  check_internal(rep.multiplicative, "induced map must be a homomorphism");

  auto preserves_joins = [&](std::vector<int> const& phi) {
    for (int b = 0; b < B.sg.n; ++b)
      for (int c = 0; c < B.sg.n; ++c) {
        auto j = join_pair(B.sg, b, c);
        if (!j) continue;
        auto tj = join_pair(T, phi[b], phi[c]);
        if (!tj || phi[*j] != *tj) return false;
      }
    return true;
  };
  rep.joins_preserved = preserves_joins(rep.theta_bar);
  check_internal(rep.joins_preserved,
                 "induced map must preserve compatible joins");

  if (S.n <= 6 && T.n <= 12 && B.sg.n <= 16) {
    rep.uniqueness_checked = true;
    bool found_self = false;
    for (auto const& phi : enumerate_morphisms(B.sg, T, true)) {
      bool fac = true;
      for (int s = 0; s < S.n && fac; ++s)
        if (phi[rep.first.beta[s]] != theta[s]) fac = false;
      if (!fac || !preserves_joins(phi)) continue;
      ++rep.candidates;
      if (phi == rep.theta_bar) found_self = true;
    }
    rep.unique = rep.candidates == 1 && found_self;
    check_internal(rep.unique,
                   "factorization must be unique among join-preserving "
                   "homomorphisms");
  }
  return rep;
}

MorphismPredicates morphism_predicates(InvSemigroup const& S,
                                       InvSemigroup const& T,
                                       std::vector<int> const& map,
                                       Coverage const* cov) {
  if ((int)map.size() != S.n || !is_multiplicative(S, T, map))
    fail(Err::FlavorMismatch, "predicates want a homomorphism");
  Predicates pS = predicates(S);
  Predicates pT = predicates(T);

  MorphismPredicates rep;
  rep.is_idempotent_pure = is_idempotent_pure_map(S, T, map);
  bool jp = preserves_joins(S, T, map);
  rep.is_join_morphism = jp;

  if (pS.is_meet_semigroup && pT.is_meet_semigroup) {
    bool ok = true;
    for (int s = 0; s < S.n && ok; ++s)
      for (int t = 0; t < S.n; ++t) {
        auto ms = meet(S, s, t);
        auto mt = meet(T, map[s], map[t]);
        check_internal(ms && mt, "meets must exist in meet flavors");
        if (map[*ms] != *mt) {
          ok = false;
          break;
        }
      }
    rep.is_meet_morphism = ok;
  }

  std::optional<FilterGroupoid> gt;
  auto prime_t = [&]() -> FilterGroupoid const& {
    if (!gt) gt = filter_groupoid(T, FilterClass::Prime);
    return *gt;
  };
  auto image_meets = [&](ElemSet const& carrier) {
    for (int s = 0; s < S.n; ++s)
      if (carrier.test(map[s])) return true;
    return false;
  };

  if (pS.is_pseudogroup && pT.is_pseudogroup) {
    bool cal = jp && rep.is_meet_morphism.value_or(false);
    for (int i = 0; cal && i < prime_t().size(); ++i)
      if (!image_meets(prime_t().arrows[i].carrier)) cal = false;
    rep.is_callitic = cal;
  }

  if (pS.is_pseudogroup && pT.is_pseudogroup) {
    bool hyper = jp && rep.is_meet_morphism.value_or(false);
    for (int t = 0; t < T.n && hyper; ++t) {
      ElemSet parts(T.n);
      for (int s = 0; s < S.n; ++s) {
        auto mt = meet(T, t, map[s]);
        check_internal(mt.has_value(), "pseudogroup meets must exist");
        parts.set(*mt);
      }
      auto j = safe_join(T, parts);
      check_internal(j.has_value(), "bounded joins must exist in a pseudogroup");
      if (*j != t) hyper = false;
    }
    rep.is_hypercallitic = hyper;
  }

  if (rep.is_callitic && rep.is_hypercallitic.has_value())
    check_internal(!*rep.is_hypercallitic || *rep.is_callitic,
                   "hypercallitic maps must be callitic");
  if (rep.is_callitic && rep.is_hypercallitic.has_value() &&
      *rep.is_callitic && is_spatial(T))
    check_internal(*rep.is_hypercallitic,
                   "callitic maps into spatial targets must be hypercallitic");

  if (S.n <= 24) {
    auto cover_to_join = [&](Coverage const& C) {
      for (int a = 0; a < S.n; ++a)
        for (ElemSet const& cset : C.members(a)) {
          ElemSet img(T.n);
          cset.for_each([&](int x) { img.set(map[x]); });
          auto j = safe_join(T, img);
          if (!j || *j != map[a]) return false;
        }
      return true;
    };
    rep.is_tight_map = cover_to_join(builtin_coverage(S, CoverageKind::Tight));
    rep.is_dense_map = cover_to_join(builtin_coverage(S, CoverageKind::Dense));
    if (cov) rep.is_cover_to_join = cover_to_join(*cov);
  }

  if (pS.is_distributive && pT.is_distributive) {
    bool dc1 = true;
    for (int s1 = 0; s1 < S.n && dc1; ++s1)
      for (int s2 = 0; s2 < S.n && dc1; ++s2)
        for (int t = 0; t < T.n; ++t) {
          if (!T.le(t, map[s1]) || !T.le(t, map[s2])) continue;
          bool refined = false;
          for (int s = 0; s < S.n; ++s)
            if (S.le(s, s1) && S.le(s, s2) && T.le(t, map[s])) {
              refined = true;
              break;
            }
          if (!refined) {
            dc1 = false;
            break;
          }
        }
    rep.satisfies_dc1 = dc1;

    bool dc2 = true;
    for (int i = 0; dc2 && i < prime_t().size(); ++i)
      if (!image_meets(prime_t().arrows[i].carrier)) dc2 = false;
    rep.satisfies_dc2 = dc2;

    if (dc1 && dc2 && is_zero_preserving(S, T, map)) {
      for (int i = 0; i < prime_t().size(); ++i) {
        ElemSet pre(S.n);
        for (int s = 0; s < S.n; ++s)
          if (prime_t().arrows[i].carrier.test(map[s])) pre.set(s);
        check_internal(is_proper_filter_set(S, pre),
                       "prime preimages must be filters under both "
                       "refinement conditions");
        if (jp) {
          Filter F{min_of(S, pre), pre};
          check_internal(F.min >= 0 && is_prime_filter(S, F),
                         "prime preimages must be prime for join-preserving "
                         "maps with both refinement conditions");
        }
      }
    }
    if (rep.is_callitic && *rep.is_callitic)
      check_internal(dc1 && dc2,
                     "callitic maps must satisfy both refinement conditions");
  }

  if (rep.is_hypercallitic.has_value() && pS.is_pseudogroup && S.n <= 12 &&
      T.n <= 12) {
    if (jp && rep.is_meet_morphism.value_or(false)) {
      Quantale QS = enveloping_quantale(S);
      Quantale QT = enveloping_quantale(T);
      std::vector<int> bar(QS.size(), -1);
      for (int q = 0; q < QS.size(); ++q) {
        ElemSet img(T.n);
        QS.elems[q].for_each([&](int s) { img.set(map[s]); });
        int k = QT.index_of(vee_closure(T, down_closure(T, img)));
        check_internal(k >= 0, "induced ideal must be join-closed");
        bar[q] = k;
      }
      bool top_pres = bar[QS.top] == QT.top;
      bool frame = top_pres && bar[QS.bottom] == QT.bottom;
      for (int a = 0; a < QS.size() && frame; ++a)
        for (int b = 0; b < QS.size(); ++b) {
          if (bar[QS.join(a, b)] != QT.join(bar[a], bar[b]) ||
              bar[QS.meet(a, b)] != QT.meet(bar[a], bar[b])) {
            frame = false;
            break;
          }
        }
      check_internal(frame == top_pres,
                     "ideal-map lattice conditions must reduce to top "
                     "preservation");
      check_internal(frame == *rep.is_hypercallitic,
                     "ideal map is a frame map exactly for hypercallitic "
                     "input");
    }
  }
  return rep;
}

PullbackReport pullback_functor(InvSemigroup const& S, InvSemigroup const& T,
                                std::vector<int> const& map) {
  MorphismPredicates mp = morphism_predicates(S, T, map, nullptr);
  bool cal = mp.is_callitic.value_or(false) ||
             (mp.is_join_morphism.value_or(false) &&
              mp.satisfies_dc1.value_or(false) &&
              mp.satisfies_dc2.value_or(false));
  if (!cal)
    fail(Err::NotCallitic,
         "pullback wants a callitic or join-preserving doubly refined map");

  FilterGroupoid GS = filter_groupoid(S, FilterClass::Prime);
  FilterGroupoid GT = filter_groupoid(T, FilterClass::Prime);
  PullbackReport rep;
  rep.arrow_map.assign(GT.size(), -1);
  for (int i = 0; i < GT.size(); ++i) {
    ElemSet pre(S.n);
    for (int s = 0; s < S.n; ++s)
      if (GT.arrows[i].carrier.test(map[s])) pre.set(s);
    check_internal(is_proper_filter_set(S, pre),
                   "preimage of a prime filter must be a filter");
    int mn = min_of(S, pre);
    check_internal(mn >= 0 && is_prime_filter(S, Filter{mn, pre}),
                   "preimage of a prime filter must be prime");
    int A = GS.arrow_of_min[mn];
    check_internal(A >= 0 && GS.arrows[A].carrier == pre,
                   "preimage filter must appear in the prime groupoid");
    rep.arrow_map[i] = A;
  }

  FunctorData f{&GT, &GS, &rep.arrow_map};
  rep.functor_ok = functor_holds(f);
  rep.covering_ok = covering_holds(f);

  rep.continuity_ok = true;
  for (int s = 0; s < S.n && rep.continuity_ok; ++s) {
    ElemSet xs = basic_open(GS, s);
    ElemSet pre(GT.size());
    for (int i = 0; i < GT.size(); ++i)
      if (xs.test(rep.arrow_map[i])) pre.set(i);
    if (!(pre == basic_open(GT, map[s]))) rep.continuity_ok = false;
  }
  check_internal(rep.all_hold(),
                 "pullback must be a continuous covering functor");
  return rep;
}

NucleusReport nucleus_from_morphism(InvSemigroup const& S,
                                    InvSemigroup const& T,
                                    std::vector<int> const& map) {
  if ((int)map.size() != S.n || !is_multiplicative(S, T, map))
    fail(Err::FlavorMismatch, "nucleus construction wants a homomorphism");
  if (!predicates(S).is_pseudogroup || !predicates(T).is_pseudogroup)
    fail(Err::FlavorMismatch, "nucleus construction wants pseudogroup flavors");
  if (!preserves_joins(S, T, map))
    fail(Err::FlavorMismatch,
         "nucleus construction wants a join-preserving homomorphism");
  if (!is_surjective_map(map, T.n))
    fail(Err::NotSurjective, "nucleus construction wants a surjection");
  if (!is_idempotent_pure_map(S, T, map))
    fail(Err::NotIdempotentPure,
         "nucleus construction wants an idempotent-pure map");

  NucleusReport rep;
  rep.theta_star.assign(T.n, -1);
  for (int t = 0; t < T.n; ++t) {
    ElemSet pre(S.n);
    for (int s = 0; s < S.n; ++s)
      if (T.le(map[s], t)) pre.set(s);
    auto j = safe_join(S, pre);
    check_internal(j.has_value(),
                   "preimage sets must be compatible with existing joins");
    rep.theta_star[t] = *j;
  }
  rep.nu.assign(S.n, -1);
  for (int s = 0; s < S.n; ++s) rep.nu[s] = rep.theta_star[map[s]];

  rep.inflationary = true;
  rep.monotone = true;
  rep.idempotent = true;
  rep.submultiplicative = true;
  for (int s = 0; s < S.n; ++s) {
    if (!S.le(s, rep.nu[s])) rep.inflationary = false;
    if (rep.nu[rep.nu[s]] != rep.nu[s]) rep.idempotent = false;
    for (int t = 0; t < S.n; ++t) {
      if (S.le(s, t) && !S.le(rep.nu[s], rep.nu[t])) rep.monotone = false;
      if (!S.le(S.mul(rep.nu[s], rep.nu[t]), rep.nu[S.mul(s, t)]))
        rep.submultiplicative = false;
    }
  }
  check_internal(rep.laws(), "closure laws must hold for the induced operator");

  for (int s = 0; s < S.n; ++s)
    check_internal(map[rep.nu[s]] == map[s],
                   "closure must not move elements across fibers");
  for (int t = 0; t < T.n; ++t)
    check_internal(rep.theta_star[map[rep.theta_star[t]]] == rep.theta_star[t],
                   "section must be closed under the round trip");

  std::vector<int> pos(S.n, -1);
  for (int s = 0; s < S.n; ++s)
    if (rep.nu[s] == s) {
      pos[s] = (int)rep.fixed_elems.size();
      rep.fixed_elems.push_back(s);
    }
  int k = (int)rep.fixed_elems.size();
  std::vector<int> table(k * k, -1);
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    labels[i] = S.label(rep.fixed_elems[i]);
    for (int j = 0; j < k; ++j)
      table[i * k + j] =
          pos[rep.nu[S.mul(rep.fixed_elems[i], rep.fixed_elems[j])]];
  }
  int zero = pos[rep.nu[*S.zero]];
  rep.fixed = verify(table, k, zero, labels);

  rep.iso.assign(k, -1);
  for (int i = 0; i < k; ++i) rep.iso[i] = map[rep.fixed_elems[i]];
  rep.iso_ok = injective_values(rep.iso) && k == T.n &&
               is_multiplicative(rep.fixed, T, rep.iso);
  check_internal(rep.iso_ok, "fixed points must recover the target");
  return rep;
}

namespace {

io::Json map_json(std::vector<int> const& m) {
  io::Json a = io::Json::array();
  for (int v : m) a.push_back(v);
  return a;
}

io::Json opt_json(std::optional<bool> const& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

io::Json EpsilonReport::to_json(InvSemigroup const& S) const {
  io::Json j;
  j["target_size"] = target.sg.n;
  io::Json m = io::Json::object();
  for (int s = 0; s < S.n; ++s) m[S.label(s)] = target.sg.label(map[s]);
  j["map"] = m;
  j["injective"] = injective;
  j["surjective"] = surjective;
  j["isomorphism"] = iso();
  j["multiplicative"] = multiplicative;
  j["meets_preserved"] = meets_preserved;
  j["joins_preserved"] = joins_preserved;
  return j;
}

io::Json EtaReport::to_json() const {
  io::Json j;
  j["bisection_count"] = b.sg.n;
  j["arrow_map"] = map_json(arrow_map);
  j["target_arrows"] = target_arrows;
  j["functor"] = functor_ok;
  j["covering"] = covering_ok;
  j["continuous"] = continuity_ok;
  j["bijective"] = bijective;
  return j;
}

io::Json RoundtripReport::to_json(InvSemigroup const& S) const {
  io::Json j;
  j["counit"] = eps.to_json(S);
  j["unit"] = unit.to_json();
  j["prime_equals_ultra"] = prime_equals_ultra;
  j["hausdorff"] = hausdorff;
  return j;
}

io::Json Booleanization::to_json(InvSemigroup const& S) const {
  io::Json j;
  j["size"] = b.sg.n;
  io::Json m = io::Json::object();
  for (int s = 0; s < S.n; ++s) m[S.label(s)] = b.sg.label(beta[s]);
  j["unit_map"] = m;
  j["unit_multiplicative"] = beta_multiplicative;
  j["completion_size"] = d.sg.n;
  j["point_map"] = map_json(point_map);
  j["groupoid_isomorphism"] = groupoid_iso;
  j["basis_dictionary"] = basis_dictionary;
  j["homeomorphism"] = homeomorphism;
  return j;
}

io::Json FactorizationReport::to_json(InvSemigroup const& S,
                                      InvSemigroup const& T) const {
  io::Json j;
  j["booleanization"] = first.to_json(S);
  io::Json m = io::Json::object();
  for (int b = 0; b < first.b.sg.n; ++b)
    m[first.b.sg.label(b)] = T.label(theta_bar[b]);
  j["induced_map"] = m;
  j["factors"] = factors;
  j["multiplicative"] = multiplicative;
  j["joins_preserved"] = joins_preserved;
  j["uniqueness_checked"] = uniqueness_checked;
  j["unique"] = unique;
  j["candidates"] = candidates;
  return j;
}

io::Json MorphismPredicates::to_json() const {
  io::Json j;
  j["is_join_morphism"] = opt_json(is_join_morphism);
  j["is_meet_morphism"] = opt_json(is_meet_morphism);
  j["is_callitic"] = opt_json(is_callitic);
  j["is_hypercallitic"] = opt_json(is_hypercallitic);
  j["is_idempotent_pure"] = opt_json(is_idempotent_pure);
  j["is_tight_map"] = opt_json(is_tight_map);
  j["is_dense_map"] = opt_json(is_dense_map);
  j["is_cover_to_join"] = opt_json(is_cover_to_join);
  j["satisfies_dc1"] = opt_json(satisfies_dc1);
  j["satisfies_dc2"] = opt_json(satisfies_dc2);
  return j;
}

io::Json PullbackReport::to_json() const {
  io::Json j;
  j["arrow_map"] = map_json(arrow_map);
  j["functor"] = functor_ok;
  j["covering"] = covering_ok;
  j["continuous"] = continuity_ok;
  return j;
}

io::Json NucleusReport::to_json(InvSemigroup const& S) const {
  io::Json j;
  io::Json nuj = io::Json::object();
  for (int s = 0; s < S.n; ++s) nuj[S.label(s)] = S.label(nu[s]);
  j["closure"] = nuj;
  j["inflationary"] = inflationary;
  j["monotone"] = monotone;
  j["idempotent"] = idempotent;
  j["submultiplicative"] = submultiplicative;
  j["fixed_count"] = fixed.n;
  j["fixed_isomorphic_to_target"] = iso_ok;
  return j;
}

}  // namespace invsem
