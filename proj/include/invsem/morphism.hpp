#pragma once

#include <optional>
#include <vector>

#include "invsem/semigroup.hpp"

namespace invsem {

// Maps are total on element ids: map[s] is an element of T.

bool is_multiplicative(InvSemigroup const& S, InvSemigroup const& T,
                       std::vector<int> const& map);
bool is_zero_preserving(InvSemigroup const& S, InvSemigroup const& T,
                        std::vector<int> const& map);
bool is_injective_map(std::vector<int> const& map);
bool is_surjective_map(std::vector<int> const& map, int target_n);
// Only idempotents may land on idempotents.
bool is_idempotent_pure_map(InvSemigroup const& S, InvSemigroup const& T,
                            std::vector<int> const& map);

struct Isomorphism {
  std::vector<int> fwd;  // source id -> target id
  std::vector<int> inv;  // target id -> source id
};

// Backtracking guided by iterated structural profiles. Deterministic: source
// ids are assigned in order and the least available target is tried first.
std::optional<Isomorphism> find_isomorphism(InvSemigroup const& S,
                                            InvSemigroup const& T);
bool isomorphic(InvSemigroup const& S, InvSemigroup const& T);

// Every multiplicative map S -> T, optionally required to preserve zero.
// Intended for small instances; guarded by a result cap.
std::vector<std::vector<int>> enumerate_morphisms(InvSemigroup const& S,
                                                  InvSemigroup const& T,
                                                  bool zero_preserving);

}  // namespace invsem
