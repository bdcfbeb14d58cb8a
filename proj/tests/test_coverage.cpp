#include <set>
#include <string>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "invsem/coverage.hpp"
#include "invsem/error.hpp"
#include "invsem/filters.hpp"

using namespace invsem;
using testutil::corpus;
using testutil::mask_of;
using testutil::oracle_of;
using testutil::small_corpus;

TEST_CASE("coverage axioms hold for every builtin kind") {
  for (auto const& name : corpus()) {
    for (CoverageKind kind : {CoverageKind::Trivial, CoverageKind::Join,
                              CoverageKind::Dense, CoverageKind::Tight}) {
      CAPTURE(name);
      CAPTURE((int)kind);
      InvSemigroup S = gen::by_name(name);
      if (kind == CoverageKind::Join && !predicates(S).is_distributive) {
        CHECK_THROWS_AS((void)builtin_coverage(S, kind), Error);
        continue;
      }
      Coverage cov = builtin_coverage(S, kind);
      AxiomReport rep = check_axioms(cov, 4);
      CHECK(rep.all_hold());
      CHECK(rep.violation.empty());
    }
  }
}

TEST_CASE("the arrow relation matches the brute-force reference") {
  for (auto const& name : small_corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    oracle::Structure O = oracle_of(S);
    for (int a = 0; a < S.n; ++a) {
      if (S.is_zero(a)) continue;
      uint64_t down = oracle::down_mask(O, a) & ~(uint64_t(1) << *S.zero);
      std::vector<int> elems;
      for (int b = 0; b < S.n; ++b)
        if ((down >> b) & 1) elems.push_back(b);
      for (uint64_t pick = 0; pick < (uint64_t(1) << elems.size()); ++pick) {
        uint64_t mask = 0;
        ElemSet B(S.n);
        for (size_t i = 0; i < elems.size(); ++i)
          if ((pick >> i) & 1) {
            mask |= uint64_t(1) << elems[i];
            B.set(elems[i]);
          }
        CHECK(arrow(S, a, B) == oracle::arrow(O, a, mask));
      }
    }
  }
}

TEST_CASE("dense and tight coverages have identical families") {
  for (auto const& name : corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    if (S.n > 16) continue;
    Coverage dense = builtin_coverage(S, CoverageKind::Dense);
    Coverage tight = builtin_coverage(S, CoverageKind::Tight);
    for (int a = 0; a < S.n; ++a) {
      std::set<uint64_t> dm, tm;
      for (ElemSet const& B : dense.members(a)) dm.insert(mask_of(B));
      for (ElemSet const& B : tight.members(a)) tm.insert(mask_of(B));
      CHECK(dm == tm);
    }
  }
}

TEST_CASE("tight filters are exactly the tight-coverage filters") {
  for (auto const& name : small_corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    Coverage tight = builtin_coverage(S, CoverageKind::Tight);
    for (Filter const& F : all_filters(S))
      CHECK(is_tight_filter(S, F) == is_c_filter(S, F, tight));
  }
}

TEST_CASE("builtin coverages are idempotent pure") {
  for (auto const& name : corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    for (CoverageKind kind : {CoverageKind::Trivial, CoverageKind::Dense,
                              CoverageKind::Tight})
      CHECK(is_idempotent_pure_coverage(builtin_coverage(S, kind)));
  }
}

TEST_CASE("separative quotients collapse chains and fix flat corpora") {
  {
    InvSemigroup S = gen::by_name("chain:3");
    SeparativeQuotient sq =
        separative_quotient(builtin_coverage(S, CoverageKind::Tight));
    CHECK(sq.quotient.n == 2);
    TransportReport tr = filter_transport(sq);
    CHECK(tr.all_hold());
  }
  {
    InvSemigroup S = gen::by_name("chain:5");
    SeparativeQuotient sq =
        separative_quotient(builtin_coverage(S, CoverageKind::Tight));
    CHECK(sq.quotient.n == 2);
    CHECK(filter_transport(sq).all_hold());
  }
  for (std::string name :
       {"brandt:2", "brandt:3", "boolean:2", "sym_inv:2", "group0:cyclic2"}) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    SeparativeQuotient sq =
        separative_quotient(builtin_coverage(S, CoverageKind::Tight));
    if (name == "boolean:2") {
      CHECK(sq.quotient.n == 4);
    } else {
      CHECK(sq.quotient.n == S.n);
    }
    CHECK(filter_transport(sq).all_hold());
  }
}

TEST_CASE("separative quotients require dense or tight coverages") {
  InvSemigroup S = gen::by_name("chain:3");
  CHECK_THROWS_AS(
      separative_quotient(builtin_coverage(S, CoverageKind::Trivial)), Error);
}

TEST_CASE("separatedness matches quotient triviality") {
  for (auto const& name : corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    Coverage cov = builtin_coverage(S, CoverageKind::Tight);
    SeparativeQuotient sq = separative_quotient(cov);
    CHECK(is_separated(cov) == (sq.quotient.n == S.n));
  }
}

TEST_CASE("custom coverages roundtrip through JSON and keep their axioms") {
  InvSemigroup S = gen::by_name("boolean:2");
  Coverage tight = builtin_coverage(S, CoverageKind::Tight);
  io::Json covers = io::Json::object();
  for (int a = 0; a < S.n; ++a) {
    io::Json families = io::Json::array();
    for (ElemSet const& B : tight.members(a)) {
      io::Json fam = io::Json::array();
      B.for_each([&](int x) { fam.push_back(x); });
      families.push_back(fam);
    }
    covers[std::to_string(a)] = families;
  }
  io::Json spec;
  spec["covers"] = covers;
  Coverage parsed = coverage_from_json(S, spec);
  CHECK(check_axioms(parsed, 4).all_hold());
  for (int a = 0; a < S.n; ++a) {
    std::set<uint64_t> want, got;
    for (ElemSet const& B : tight.members(a)) want.insert(mask_of(B));
    for (ElemSet const& B : parsed.members(a)) got.insert(mask_of(B));
    CHECK(want == got);
  }
}
