#include <random>
#include <string>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "invsem/error.hpp"

using namespace invsem;
using testutil::corpus;
using testutil::oracle_of;

TEST_CASE("generators produce verified inverse semigroups") {
  for (auto const& name : corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    CHECK(S.n > 0);
    CHECK(S.zero.has_value());
    CHECK(oracle::classify(oracle::from_semigroup(S)) == oracle::Verdict::Ok);
    InvSemigroup R = verify(S.table, S.n, S.zero, S.labels);
    CHECK(R.n == S.n);
    CHECK(R.inv == S.inv);
  }
}

TEST_CASE("inverses, idempotents and order match the brute-force reference") {
  for (auto const& name : corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    oracle::Structure O = oracle_of(S);
    for (int s = 0; s < S.n; ++s) {
      CHECK(S.inv[s] == O.inv[s]);
      CHECK(S.is_idem(s) == O.is_idem(s));
      for (int t = 0; t < S.n; ++t) {
        CHECK(S.le(s, t) == O.le(s, t));
        CHECK(compatible(S, s, t) == oracle::compatible(O, s, t));
        auto lm = meet(S, s, t);
        auto om = oracle::meet(O, s, t);
        CHECK(lm.has_value() == om.has_value());
        if (lm && om) CHECK(*lm == *om);
        auto lj = join_pair(S, s, t);
        auto oj = oracle::join(O, s, t);
        CHECK(lj.has_value() == oj.has_value());
        if (lj && oj) CHECK(*lj == *oj);
      }
    }
  }
}

TEST_CASE("single-entry mutations are rejected with the matching error class") {
  std::mt19937 rng(12345);
  int rejected = 0;
  int attempts = 0;
  auto names = corpus();
  while (rejected < 20 && attempts < 4000) {
    ++attempts;
    InvSemigroup S = gen::by_name(names[rng() % names.size()]);
    std::vector<int> tbl = S.table;
    int cell = (int)(rng() % tbl.size());
    int delta = 1 + (int)(rng() % (S.n - 1));
    tbl[cell] = (tbl[cell] + delta) % S.n;

    oracle::Table T;
    T.n = S.n;
    T.t = tbl;
    T.zero = *S.zero;
    oracle::Verdict v = oracle::classify(T);
    if (v == oracle::Verdict::Ok) continue;

    Err want = v == oracle::Verdict::NotAssociative ? Err::NotAssociative
               : v == oracle::Verdict::NotInverse   ? Err::NotInverse
                                                    : Err::BadZero;
    bool threw = false;
    try {
      verify(tbl, S.n, S.zero, S.labels);
    } catch (Error const& e) {
      threw = true;
      CHECK(e.code() == want);
    }
    CHECK(threw);
    ++rejected;
  }
  CHECK(rejected == 20);
}

TEST_CASE("flavor predicates agree with the brute-force reference") {
  for (auto const& name : corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    oracle::Structure O = oracle_of(S);
    Predicates p = predicates(S);
    CHECK(p.is_distributive == oracle::distributive(O));
    bool all_meets = true;
    for (int s = 0; s < S.n && all_meets; ++s)
      for (int t = 0; t < S.n; ++t)
        if (!oracle::meet(O, s, t)) {
          all_meets = false;
          break;
        }
    CHECK(p.is_meet_semigroup == all_meets);
    if (p.is_boolean) CHECK(p.is_weakly_boolean);
    if (p.is_weakly_boolean) CHECK(p.is_distributive);
    CHECK(p.is_pseudogroup == p.is_distributive);
  }
}

TEST_CASE("expected flavors of the named corpus") {
  CHECK(predicates(gen::by_name("boolean:2")).is_boolean);
  CHECK(predicates(gen::by_name("boolean:3")).is_boolean);
  CHECK(predicates(gen::by_name("sym_inv:2")).is_boolean);
  CHECK(predicates(gen::by_name("group0:cyclic3")).is_boolean);
  CHECK_FALSE(predicates(gen::by_name("chain:3")).is_weakly_boolean);
  CHECK(predicates(gen::by_name("chain:3")).is_distributive);
  CHECK_FALSE(predicates(gen::by_name("brandt:2")).is_distributive);
  CHECK_FALSE(predicates(gen::by_name("brandt:3")).is_distributive);
  CHECK(predicates(gen::by_name("sym_inv:3")).is_boolean);
}

TEST_CASE("relative complements exist exactly in the weakly boolean corpus") {
  for (auto const& name : corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    if (!predicates(S).is_weakly_boolean) continue;
    oracle::Structure O = oracle_of(S);
    for (int a = 0; a < S.n; ++a)
      for (int b = 0; b < S.n; ++b) {
        if (!S.le(b, a)) continue;
        int c = relative_complement(S, a, b);
        CHECK(S.le(c, a));
        auto j = oracle::join(O, b, c);
        REQUIRE(j.has_value());
        CHECK(*j == a);
        auto m = oracle::meet(O, b, c);
        REQUIRE(m.has_value());
        CHECK(S.is_zero(*m));
      }
  }
}

TEST_CASE("zero adjunction produces a strictly larger verified semigroup") {
  InvSemigroup S = gen::by_name("chain:3");
  CHECK_THROWS_AS(adjoin_zero(S), Error);
  std::vector<int> cyc = {0, 1, 1, 0};
  InvSemigroup z2 = verify(cyc, 2);
  CHECK_FALSE(z2.zero.has_value());
  InvSemigroup z2z = adjoin_zero(z2);
  CHECK(z2z.n == 3);
  CHECK(z2z.zero.has_value());
  CHECK(oracle::classify(oracle::from_semigroup(z2z)) == oracle::Verdict::Ok);
}

TEST_CASE("name parsing rejects unknown kinds and bad arguments") {
  CHECK_THROWS_AS(gen::by_name("frobnicate:3"), Error);
  CHECK_THROWS_AS(gen::by_name("chain:x"), Error);
  try {
    gen::by_name("frobnicate:3");
  } catch (Error const& e) {
    CHECK(e.code() == Err::UnsupportedKind);
  }
}
