#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "invsem/completion.hpp"
#include "invsem/coverage.hpp"
#include "invsem/error.hpp"
#include "invsem/morphism.hpp"
#include "oracle.hpp"

using namespace invsem;
using testutil::corpus;
using testutil::mask_of;
using testutil::oracle_of;
using testutil::set_of;
using testutil::small_corpus;

namespace {

std::vector<std::string> completion_corpus() {
  std::vector<std::string> out;
  for (auto const& name : corpus())
    if (name != "sym_inv:3") out.push_back(name);
  return out;
}

std::vector<std::string> tiny_corpus() {
  std::vector<std::string> out;
  for (auto const& name : corpus())
    if (gen::by_name(name).n <= 8) out.push_back(name);
  return out;
}

// All nonempty down-closed subsets containing zero, as bitmasks.
std::vector<uint64_t> ideal_masks(InvSemigroup const& S) {
  std::vector<uint64_t> down(S.n);
  for (int s = 0; s < S.n; ++s) down[s] = mask_of(S.down[s]);
  std::vector<uint64_t> out;
  for (uint64_t m = 1; m < (uint64_t(1) << S.n); ++m) {
    if (!((m >> *S.zero) & 1)) continue;
    bool ok = true;
    for (int s = 0; s < S.n && ok; ++s)
      if ((m >> s) & 1) ok = (down[s] & ~m) == 0;
    if (ok) out.push_back(m);
  }
  return out;
}

uint64_t down_product_mask(InvSemigroup const& S, uint64_t A, uint64_t B) {
  uint64_t out = 0;
  for (int a = 0; a < S.n; ++a)
    if ((A >> a) & 1)
      for (int b = 0; b < S.n; ++b)
        if ((B >> b) & 1) out |= mask_of(S.down[S.mul(a, b)]);
  return out;
}

uint64_t raw_product_mask(InvSemigroup const& S, uint64_t A, uint64_t B) {
  uint64_t out = 0;
  for (int a = 0; a < S.n; ++a)
    if ((A >> a) & 1)
      for (int b = 0; b < S.n; ++b)
        if ((B >> b) & 1) out |= uint64_t(1) << S.mul(a, b);
  return out;
}

uint64_t closure_mask(Coverage const& cov, InvSemigroup const& S, uint64_t A) {
  return mask_of(coverage_closure(cov, set_of(A, S.n)));
}

// Join of all idempotents orthogonal to each idempotent, by a direct least
// upper bound scan; reports whether the double complement returns home.
bool star_laws_reference(oracle::Structure const& O) {
  int n = O.n();
  if (O.tab.zero < 0) return false;
  std::vector<int> star(n, -1);
  auto lub_of = [&](std::vector<int> const& xs) {
    std::vector<int> ubs;
    for (int u = 0; u < n; ++u) {
      bool above = true;
      for (int x : xs)
        if (!O.le(x, u)) {
          above = false;
          break;
        }
      if (above) ubs.push_back(u);
    }
    for (int u : ubs) {
      bool least = true;
      for (int v : ubs)
        if (!O.le(u, v)) {
          least = false;
          break;
        }
      if (least) return u;
    }
    return -1;
  };
  for (int e = 0; e < n; ++e) {
    if (!O.is_idem(e)) continue;
    std::vector<int> orth;
    for (int f = 0; f < n; ++f)
      if (O.is_idem(f) && O.mul(e, f) == O.tab.zero) orth.push_back(f);
    int s = lub_of(orth);
    if (s < 0 || !O.is_idem(s)) return false;
    auto m = oracle::meet(O, e, s);
    if (!m || *m != O.tab.zero) return false;
    star[e] = s;
  }
  for (int e = 0; e < n; ++e)
    if (O.is_idem(e) && star[star[e]] != e) return false;
  return true;
}

}  // namespace

TEST_CASE("the ideal completion has the expected size on each family") {
  std::map<std::string, int> frozen = {
      {"chain:3", 3},   {"brandt:2", 7},  {"brandt:3", 34},
      {"boolean:2", 5}, {"boolean:3", 19}, {"sym_inv:2", 9}};
  for (auto const& name : completion_corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    CompletionSemigroup comp = schein_completion(S);
    CHECK(comp.sg.n == (int)compatible_order_ideals(S).size());
    auto it = frozen.find(name);
    if (it != frozen.end()) CHECK(comp.sg.n == it->second);

    CHECK((int)comp.iota.size() == S.n);
    CHECK(is_multiplicative(S, comp.sg, comp.iota));
    CHECK(is_injective_map(comp.iota));
    CHECK(comp.sg.is_zero(comp.iota[*S.zero]));
    for (int s = 0; s < S.n; ++s)
      CHECK(mask_of(comp.carriers[comp.iota[s]]) == mask_of(S.down[s]));
    for (int k = 0; k < comp.sg.n; ++k)
      CHECK(comp.index_of(comp.carriers[k]) == k);
    for (int k = 0; k + 1 < comp.sg.n; ++k)
      CHECK(mask_of(comp.carriers[k]) < mask_of(comp.carriers[k + 1]));
  }
}

TEST_CASE("generated ideals exhaust the completion and the result is distributive") {
  for (auto const& name : completion_corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    CompletionSemigroup d = d_completion(S);
    CompletionSemigroup sch = schein_completion(S);
    REQUIRE(d.sg.n == sch.sg.n);
    for (int k = 0; k < d.sg.n; ++k)
      CHECK(mask_of(d.carriers[k]) == mask_of(sch.carriers[k]));
    CHECK(predicates(d.sg).is_distributive);
    ElemSet fin = finite_elements(d);
    uint64_t all = (d.sg.n >= 64) ? ~uint64_t(0) : ((uint64_t(1) << d.sg.n) - 1);
    CHECK(mask_of(fin) == all);
  }
}

TEST_CASE("join closed ideals reproduce a distributive parent") {
  for (auto const& name : completion_corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    if (!predicates(S).is_distributive) {
      try {
        (void)idl_completion(S);
        CHECK(false);
      } catch (Error const& e) {
        CHECK(e.code() == Err::NotDistributive);
      }
      continue;
    }
    CompletionSemigroup idl = idl_completion(S);
    CHECK(idl.sg.n == S.n);
    if (name == "boolean:2") CHECK(idl.sg.n == 4);
    CHECK(is_multiplicative(S, idl.sg, idl.iota));
    CHECK(is_injective_map(idl.iota));
    CHECK(is_surjective_map(idl.iota, idl.sg.n));
    ElemSet fin = finite_elements(idl);
    uint64_t all = (uint64_t(1) << idl.sg.n) - 1;
    CHECK(mask_of(fin) == all);
    CHECK(isomorphic(S, idl.sg));
  }
}

TEST_CASE("coverage closure is a product stable closure operator on ideals") {
  for (auto const& name : tiny_corpus()) {
    InvSemigroup S = gen::by_name(name);
    bool dist = predicates(S).is_distributive;
    std::vector<CoverageKind> kinds = {CoverageKind::Trivial, CoverageKind::Dense,
                                       CoverageKind::Tight};
    if (dist) kinds.push_back(CoverageKind::Join);
    std::vector<uint64_t> ideals = ideal_masks(S);
    for (CoverageKind kind : kinds) {
      CAPTURE(name);
      CAPTURE((int)kind);
      Coverage cov = builtin_coverage(S, kind);
      std::vector<uint64_t> cl(ideals.size());
      for (size_t i = 0; i < ideals.size(); ++i) {
        cl[i] = closure_mask(cov, S, ideals[i]);
        CHECK((ideals[i] & ~cl[i]) == 0);
        CHECK(closure_mask(cov, S, cl[i]) == cl[i]);
        uint64_t down = 0;
        for (int s = 0; s < S.n; ++s)
          if ((cl[i] >> s) & 1) down |= mask_of(S.down[s]);
        CHECK(down == cl[i]);
        if (kind == CoverageKind::Trivial) CHECK(cl[i] == ideals[i]);
      }
      for (size_t i = 0; i < ideals.size(); ++i)
        for (size_t j = 0; j < ideals.size(); ++j) {
          if ((ideals[i] & ~ideals[j]) == 0) CHECK((cl[i] & ~cl[j]) == 0);
          uint64_t prod = raw_product_mask(S, cl[i], cl[j]);
          uint64_t target =
              closure_mask(cov, S, down_product_mask(S, ideals[i], ideals[j]));
          CHECK((prod & ~target) == 0);
        }
    }
  }
}

TEST_CASE("tight completions match the frozen sizes and transport filters") {
  std::map<std::string, int> frozen = {
      {"chain:3", 2},   {"chain:4", 2},   {"brandt:2", 7},
      {"brandt:3", 34}, {"boolean:2", 4}, {"boolean:3", 8},
      {"sym_inv:2", 7}, {"group0:cyclic2", 3}};
  for (auto const& name : completion_corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    TightCompletion tc = tight_completion(S);
    auto it = frozen.find(name);
    if (it != frozen.end()) CHECK(tc.comp.sg.n == it->second);

    TransportReport tr = filter_transport(tc.sq);
    CHECK(tr.all_hold());
    CHECK(tr.parent_tight == (int)tight_filters(S).size());
    CHECK(tr.parent_tight == tr.quotient_tight);
    if (S.n <= 16) {
      oracle::Structure O = oracle_of(S);
      CHECK(tr.parent_tight == (int)oracle::tight_filters(O).size());
    }

    CHECK((int)tc.delta.size() == S.n);
    CHECK(is_multiplicative(S, tc.comp.sg, tc.delta));
    CHECK(tc.comp.sg.is_zero(tc.delta[*S.zero]));
  }
}

TEST_CASE("the dense pipeline agrees with the tight one and lands boolean") {
  for (auto const& name : completion_corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    TightCompletion tc = tight_completion(S);
    TightCompletion dp = dense_pseudogroup(S);
    REQUIRE(dp.comp.sg.n == tc.comp.sg.n);
    for (int k = 0; k < dp.comp.sg.n; ++k)
      CHECK(mask_of(dp.comp.carriers[k]) == mask_of(tc.comp.carriers[k]));
    CHECK(dp.delta == tc.delta);
    Predicates pt = predicates(tc.comp.sg);
    Predicates pd = predicates(dp.comp.sg);
    CHECK(pt.is_weakly_boolean);
    CHECK(pd.is_boolean);
    CHECK(star_complement_laws(dp.comp.sg));
  }
}

TEST_CASE("idempotent complement laws agree with a direct computation") {
  for (auto const& name : small_corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    oracle::Structure O = oracle_of(S);
    CHECK(star_complement_laws(S) == star_laws_reference(O));
  }
}

TEST_CASE("the quantale of join closed ideals obeys its laws") {
  std::map<std::string, int> frozen = {{"chain:3", 4}, {"boolean:2", 5}};
  for (auto const& name : tiny_corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    if (!predicates(S).is_distributive) {
      try {
        (void)enveloping_quantale(S);
        CHECK(false);
      } catch (Error const& e) {
        CHECK(e.code() == Err::NotDistributive);
      }
      continue;
    }
    Quantale Q = enveloping_quantale(S);
    auto it = frozen.find(name);
    if (it != frozen.end()) CHECK(Q.size() == it->second);

    int m = Q.size();
    REQUIRE(m > 0);
    CHECK(mask_of(Q.elems[Q.bottom]) == 0);
    CHECK(mask_of(Q.elems[Q.top]) == (uint64_t(1) << S.n) - 1);
    for (int a = 0; a < m; ++a) {
      CHECK(Q.index_of(Q.elems[a]) == a);
      CHECK(Q.mul(Q.bottom, a) == Q.bottom);
      CHECK(Q.mul(a, Q.bottom) == Q.bottom);
      for (int b = 0; b < m; ++b) {
        CHECK(mask_of(Q.elems[Q.meet(a, b)]) ==
              (mask_of(Q.elems[a]) & mask_of(Q.elems[b])));
        int j = Q.join(a, b);
        CHECK(Q.le(a, j));
        CHECK(Q.le(b, j));
        for (int c = 0; c < m; ++c) {
          if (Q.le(a, c) && Q.le(b, c)) CHECK(Q.le(j, c));
          CHECK(Q.mul(Q.mul(a, b), c) == Q.mul(a, Q.mul(b, c)));
          CHECK(Q.mul(a, Q.join(b, c)) == Q.join(Q.mul(a, b), Q.mul(a, c)));
          CHECK(Q.mul(Q.join(b, c), a) == Q.join(Q.mul(b, a), Q.mul(c, a)));
        }
      }
    }
    CHECK(Q.mul(Q.top, Q.top) == Q.top);

    std::vector<int> emb(S.n);
    for (int s = 0; s < S.n; ++s) {
      ElemSet single(S.n);
      single.set(s);
      emb[s] = Q.index_of(vee_closure(S, down_closure(S, single)));
      REQUIRE(emb[s] >= 0);
    }
    CHECK(is_injective_map(emb));
    for (int s = 0; s < S.n; ++s)
      for (int t = 0; t < S.n; ++t) {
        CHECK(Q.mul(emb[s], emb[t]) == emb[S.mul(s, t)]);
        CHECK(S.le(s, t) == Q.le(emb[s], emb[t]));
      }
  }
}

TEST_CASE("closure induces a nucleus on the quantale") {
  for (auto const& name : tiny_corpus()) {
    InvSemigroup S = gen::by_name(name);
    if (!predicates(S).is_distributive) continue;
    Quantale Q = enveloping_quantale(S);
    int m = Q.size();
    for (CoverageKind kind : {CoverageKind::Trivial, CoverageKind::Join,
                              CoverageKind::Dense, CoverageKind::Tight}) {
      CAPTURE(name);
      CAPTURE((int)kind);
      Coverage cov = builtin_coverage(S, kind);
      std::vector<int> nu(m, -1);
      for (int a = 0; a < m; ++a) {
        ElemSet closed = coverage_closure(cov, Q.elems[a]);
        nu[a] = Q.index_of(vee_closure(S, closed));
        REQUIRE(nu[a] >= 0);
        CHECK(Q.le(a, nu[a]));
      }
      for (int a = 0; a < m; ++a) {
        CHECK(nu[nu[a]] == nu[a]);
        for (int b = 0; b < m; ++b) {
          if (Q.le(a, b)) CHECK(Q.le(nu[a], nu[b]));
          CHECK(Q.le(Q.mul(nu[a], nu[b]), nu[Q.mul(a, b)]));
        }
      }
    }
  }
}

TEST_CASE("a trivially closed completion reproduces the plain one") {
  for (std::string name : {"chain:3", "boolean:2", "brandt:2", "group0:cyclic2"}) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    CompletionSemigroup cc = closed_completion(S, builtin_coverage(S, CoverageKind::Trivial));
    CompletionSemigroup sch = schein_completion(S);
    REQUIRE(cc.sg.n == sch.sg.n);
    for (int k = 0; k < cc.sg.n; ++k)
      CHECK(mask_of(cc.carriers[k]) == mask_of(sch.carriers[k]));
    CHECK(cc.sg.table == sch.sg.table);
    CHECK(cc.iota == sch.iota);
  }
}

TEST_CASE("oversized parents are rejected rather than truncated") {
  InvSemigroup big = gen::by_name("sym_inv:3");
  for (int which = 0; which < 2; ++which) {
    try {
      if (which == 0)
        (void)schein_completion(big);
      else
        (void)d_completion(big);
      CHECK(false);
    } catch (Error const& e) {
      CHECK(e.code() == Err::TooLarge);
    }
  }
  CHECK_THROWS_AS((void)tight_completion(big), Error);
}
