#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invsem/elemset.hpp"
#include "invsem/gen.hpp"
#include "invsem/semigroup.hpp"
#include "oracle.hpp"

namespace testutil {

inline std::vector<std::string> corpus() {
  return {"chain:2",        "chain:3",        "chain:4",
          "chain:5",        "boolean:1",      "boolean:2",
          "boolean:3",      "brandt:2",       "brandt:3",
          "sym_inv:2",      "sym_inv:3",      "group0:cyclic2",
          "group0:cyclic3", "group0:cyclic4"};
}

// Corpus members small enough for exhaustive subset scans.
inline std::vector<std::string> small_corpus() {
  std::vector<std::string> out;
  for (auto const& name : corpus())
    if (invsem::gen::by_name(name).n <= 16) out.push_back(name);
  return out;
}

inline uint64_t mask_of(invsem::ElemSet const& e) {
  uint64_t m = 0;
  e.for_each([&](int i) { m |= uint64_t(1) << i; });
  return m;
}

inline invsem::ElemSet set_of(uint64_t mask, int n) {
  invsem::ElemSet e(n);
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1) e.set(i);
  return e;
}

inline oracle::Structure oracle_of(invsem::InvSemigroup const& S) {
  return oracle::analyze(oracle::from_semigroup(S));
}

inline std::vector<int> identity_map(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

}  // namespace testutil
