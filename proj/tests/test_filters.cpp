#include <algorithm>
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

namespace {

std::set<uint64_t> library_filter_masks(InvSemigroup const& S) {
  std::set<uint64_t> out;
  for (Filter const& F : all_filters(S)) out.insert(mask_of(F.carrier));
  return out;
}

}  // namespace

TEST_CASE("filter lists equal the exhaustive subset scan") {
  for (auto const& name : small_corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    oracle::Structure O = oracle_of(S);
    std::vector<uint64_t> scan = oracle::filters(O);
    std::set<uint64_t> brute(scan.begin(), scan.end());
    CHECK(library_filter_masks(S) == brute);
  }
}

TEST_CASE("every filter is principal") {
  for (auto const& name : corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    for (Filter const& F : all_filters(S)) {
      CHECK(F.carrier.test(F.min));
      CHECK(mask_of(F.carrier) == mask_of(principal_filter(S, F.min).carrier));
      CHECK(is_proper_filter_set(S, F.carrier));
    }
  }
}

TEST_CASE("ultrafilters are exactly the atom filters and match the scan") {
  for (auto const& name : small_corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    oracle::Structure O = oracle_of(S);
    std::set<uint64_t> brute;
    for (uint64_t F : oracle::ultra_filters(O)) brute.insert(F);
    std::set<uint64_t> lib;
    for (Filter const& F : all_filters(S)) {
      bool atom = true;
      for (int y = 0; y < S.n; ++y)
        if (!S.is_zero(y) && y != F.min && S.le(y, F.min)) atom = false;
      CHECK(is_ultrafilter(S, F) == atom);
      if (is_ultrafilter(S, F)) lib.insert(mask_of(F.carrier));
    }
    CHECK(lib == brute);
  }
}

TEST_CASE("prime filters match the scan and are completely prime") {
  for (auto const& name : small_corpus()) {
    InvSemigroup S = gen::by_name(name);
    if (!predicates(S).is_distributive) continue;
    CAPTURE(name);
    oracle::Structure O = oracle_of(S);
    for (Filter const& F : all_filters(S)) {
      bool brute = oracle::is_prime(O, mask_of(F.carrier));
      CHECK(is_prime_filter(S, F) == brute);
      CHECK(is_completely_prime_filter(S, F) == brute);
    }
  }
}

TEST_CASE("ultrafilters of semilattices are prime") {
  for (auto const& name : corpus()) {
    InvSemigroup S = gen::by_name(name);
    oracle::Structure O = oracle_of(S);
    if (!oracle::all_idempotent(O)) continue;
    CAPTURE(name);
    for (Filter const& F : all_filters(S))
      if (is_ultrafilter(S, F)) CHECK(is_prime_filter(S, F));
  }
}

TEST_CASE("a chain separates prime from ultra, boolean algebras do not") {
  InvSemigroup ch = gen::by_name("chain:3");
  int prime = 0, ultra = 0;
  for (Filter const& F : all_filters(ch)) {
    if (is_prime_filter(ch, F)) ++prime;
    if (is_ultrafilter(ch, F)) ++ultra;
  }
  CHECK(prime == 2);
  CHECK(ultra == 1);

  for (std::string name : {"boolean:1", "boolean:2", "boolean:3"}) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    for (Filter const& F : all_filters(S))
      CHECK(is_prime_filter(S, F) == is_ultrafilter(S, F));
  }
}

TEST_CASE("tight filters match the scan and sit between ultra and all") {
  for (auto const& name : small_corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    oracle::Structure O = oracle_of(S);
    std::set<uint64_t> brute;
    for (uint64_t F : oracle::tight_filters(O)) brute.insert(F);
    std::set<uint64_t> lib;
    for (Filter const& F : tight_filters(S)) lib.insert(mask_of(F.carrier));
    CHECK(lib == brute);
    for (Filter const& F : all_filters(S))
      if (is_ultrafilter(S, F)) CHECK(is_tight_filter(S, F));
  }
}

TEST_CASE("filter groupoid structure is closed and involutive") {
  for (auto const& name : corpus()) {
    CAPTURE(name);
    InvSemigroup S = gen::by_name(name);
    FilterGroupoid G = filter_groupoid(S, FilterClass::All);
    CHECK(G.size() == (int)all_filters(S).size());
    for (int i = 0; i < G.size(); ++i) {
      Filter const& F = G.arrows[i];
      Filter Fi = filter_inv(S, F);
      int ii = G.inv_arrow[i];
      CHECK(mask_of(G.arrows[ii].carrier) == mask_of(Fi.carrier));
      CHECK(G.inv_arrow[ii] == i);
      Filter Fd = filter_d(S, F);
      CHECK(mask_of(G.arrows[G.dmap[i]].carrier) == mask_of(Fd.carrier));
      Filter Fr = filter_r(S, F);
      CHECK(mask_of(G.arrows[G.rmap[i]].carrier) == mask_of(Fr.carrier));
      CHECK(G.objects.test(G.dmap[i]));
      CHECK(G.objects.test(G.rmap[i]));
    }
    for (int i = 0; i < G.size(); ++i)
      for (int j = 0; j < G.size(); ++j) {
        int p = G.mul(i, j);
        bool composable = G.dmap[i] == G.rmap[j];
        CHECK((p >= 0) == composable);
        if (p < 0) continue;
        auto FM = filter_mul(S, G.arrows[i], G.arrows[j]);
        REQUIRE(FM.has_value());
        CHECK(mask_of(G.arrows[p].carrier) == mask_of(FM->carrier));
      }
  }
}

TEST_CASE("prime filter groupoids require distributive input") {
  CHECK_THROWS_AS(filter_groupoid(gen::by_name("brandt:2"), FilterClass::Prime),
                  Error);
  for (std::string name : {"chain:3", "boolean:2", "sym_inv:2"}) {
    InvSemigroup S = gen::by_name(name);
    FilterGroupoid G = filter_groupoid(S, FilterClass::Prime);
    for (auto const& F : G.arrows) CHECK(is_prime_filter(S, F));
  }
}

TEST_CASE("frozen filter counts of the corpus") {
  auto counts = [](std::string const& name) {
    InvSemigroup S = gen::by_name(name);
    int all = (int)all_filters(S).size();
    int ultra = 0, tight = (int)tight_filters(S).size();
    for (Filter const& F : all_filters(S))
      if (is_ultrafilter(S, F)) ++ultra;
    return std::vector<int>{all, ultra, tight};
  };
  CHECK(counts("chain:3") == std::vector<int>{2, 1, 1});
  CHECK(counts("chain:4") == std::vector<int>{3, 1, 1});
  CHECK(counts("boolean:2") == std::vector<int>{3, 2, 2});
  CHECK(counts("boolean:3") == std::vector<int>{7, 3, 3});
  CHECK(counts("brandt:2") == std::vector<int>{4, 4, 4});
  CHECK(counts("brandt:3") == std::vector<int>{9, 9, 9});
  CHECK(counts("sym_inv:2") == std::vector<int>{6, 4, 4});
  CHECK(counts("group0:cyclic2") == std::vector<int>{2, 2, 2});
}
