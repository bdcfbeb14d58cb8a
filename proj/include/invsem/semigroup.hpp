#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invsem/elemset.hpp"
#include "invsem/error.hpp"

namespace invsem {

// Finite inverse semigroup given by a total multiplication table. Verified
// and immutable after construction; every derived structure (inverses,
// idempotents, natural partial order, compatibility, meet/join tables) is
// computed once by verify().
struct InvSemigroup {
  int n = 0;
  std::vector<int> table;  // row-major, table[s * n + t] = s . t
  std::optional<int> zero;
  std::optional<int> one;
  std::vector<std::string> labels;  // empty or size n

  std::vector<int> inv;
  ElemSet idempotents;
  std::vector<ElemSet> down;    // down[s] = { t : t <= s }
  std::vector<ElemSet> up;      // up[s]   = { t : s <= t }
  std::vector<ElemSet> compat;  // compat[s] = { t : s ~ t }
  std::vector<int> meet_tab;    // -1 when the meet does not exist
  std::vector<int> join_tab;    // -1 when no least upper bound (or incompatible)

  int mul(int s, int t) const { return table[s * n + t]; }
  bool le(int s, int t) const { return down[t].test(s); }
  bool is_idem(int e) const { return idempotents.test(e); }
  int d(int s) const { return mul(inv[s], s); }
  int r(int s) const { return mul(s, inv[s]); }
  bool is_zero(int s) const { return zero && *zero == s; }

  std::string label(int s) const;
  ElemSet nonzero() const;
};

struct Predicates {
  bool is_distributive = false;
  bool is_meet_semigroup = false;
  bool is_weakly_boolean = false;
  bool is_boolean = false;
  bool is_pseudogroup = false;
  bool has_weak_meet = false;
};

// Validates the table as an inverse semigroup and derives all cached
// structure. `declared_zero`, when present, must name the absorbing element
// (BadZero otherwise); an undeclared absorbing element is still detected and
// recorded. Throws NotAssociative / NotInverse / BadZero / ParseError.
InvSemigroup verify(std::vector<int> const& table, int n,
                    std::optional<int> declared_zero = std::nullopt,
                    std::vector<std::string> labels = {});

// Serial reference for the parallel associativity sweep inside verify();
// returns a witness triple (s,t,u) or empty. Kept for tests and benchmarks.
std::vector<int> associativity_witness_serial(std::vector<int> const& table, int n);
std::vector<int> associativity_witness(std::vector<int> const& table, int n);

bool compatible(InvSemigroup const& S, int s, int t);
bool orthogonal(InvSemigroup const& S, int s, int t);

std::optional<int> meet(InvSemigroup const& S, int s, int t);
// Least upper bound of A; requires A pairwise compatible (NotCompatible
// otherwise). None signals nonexistence. The empty join is the zero when S
// has one, None otherwise.
std::optional<int> join(InvSemigroup const& S, ElemSet const& A);
std::optional<int> join_pair(InvSemigroup const& S, int s, int t);

// Requires a zero (NoZero): the boolean-family predicates are meaningless
// without one. has_weak_meet is computed from the definition even though it
// is always true at finite scale.
Predicates predicates(InvSemigroup const& S);

// The unique x <= a with b v x = a and b ^ x = 0. Requires S weakly boolean
// (NotWeaklyBoolean) and b <= a (NotBelow); uniqueness is re-verified on
// every call by exhaustive candidate scan.
int relative_complement(InvSemigroup const& S, int a, int b);

// Appends a fresh absorbing zero with id n; existing ids are unchanged.
InvSemigroup adjoin_zero(InvSemigroup const& S);

bool is_group(InvSemigroup const& S);

}  // namespace invsem
