#pragma once

#include <string>
#include <vector>

#include "invsem/coverage.hpp"
#include "invsem/semigroup.hpp"

namespace invsem {

// A semigroup whose elements are canonical subsets of a parent semigroup
// (compatible order ideals, possibly join- or coverage-closed), with the
// embedding of the parent recorded. The parent is stored by value so the
// structure is self-contained.
struct CompletionSemigroup {
  InvSemigroup parent;
  InvSemigroup sg;
  std::vector<ElemSet> carriers;  // ascending bitmask order, one per element
  std::vector<int> iota;          // parent element -> element here
  std::string flavor;

  int index_of(ElemSet const& carrier) const;  // -1 when absent
};

// All nonempty down-closed pairwise-compatible subsets, ascending by bitmask.
// TooLarge beyond 24 parent elements or 4096 ideals.
std::vector<ElemSet> compatible_order_ideals(InvSemigroup const& S);

ElemSet down_closure(InvSemigroup const& S, ElemSet A);

// Close under existing joins of compatible pairs (finite subsets follow).
ElemSet vee_closure(InvSemigroup const& S, ElemSet A);

// x lands in the closure when some cover of x sits inside A.
ElemSet coverage_closure(Coverage const& cov, ElemSet const& A);

// All compatible order ideals under subset multiplication.
CompletionSemigroup schein_completion(InvSemigroup const& S);

// Join-closed compatible order ideals; wants a distributive parent.
CompletionSemigroup idl_completion(InvSemigroup const& S);

// Finitely generated compatible order ideals. On a finite carrier this is
// the whole of the Schein completion, which the construction asserts, and
// the result is checked distributive.
CompletionSemigroup d_completion(InvSemigroup const& S);

// Elements a such that any directed set joining above a already contains an
// upper bound of a. Checked literally when the element count is small; the
// finite carrier makes every element qualify either way.
ElemSet finite_elements(CompletionSemigroup const& comp, int literal_limit = 12);

// Coverage-closed compatible order ideals with product A.B = closure(AB);
// verifies the closure is a nucleus and that the embedding turns covers into
// joins. The coverage must be idempotent-pure.
CompletionSemigroup closed_completion(InvSemigroup const& S, Coverage const& cov);

struct TightCompletion {
  SeparativeQuotient sq;
  CompletionSemigroup comp;  // completion of the separative quotient
  std::vector<int> delta;    // original element -> comp element
};

// Separative quotient, then the tight-coverage closed completion, then
// finite elements; delta is checked to turn tight covers into joins.
TightCompletion tight_completion(InvSemigroup const& S);

// Same pipeline through the dense coverage; asserted to agree with the
// tight pipeline element-for-element, and the result is checked boolean
// with the orthogonal-complement laws on idempotents.
TightCompletion dense_pseudogroup(InvSemigroup const& S);

// For each idempotent e: e* = join of all idempotents orthogonal to e
// exists, meets e at zero, and e** = e.
bool star_complement_laws(InvSemigroup const& S);

// Down-sets closed under existing compatible joins, ordered by inclusion:
// meets are intersections, joins close the union, multiplication closes the
// set product. Top is the whole carrier, bottom the empty set.
struct Quantale {
  InvSemigroup parent;
  std::vector<ElemSet> elems;  // ascending bitmask order
  int top = -1, bottom = -1;
  std::vector<int> meet_tab, join_tab, mul_tab;

  int size() const { return int(elems.size()); }
  int index_of(ElemSet const& A) const;  // -1 when absent
  int meet(int a, int b) const { return meet_tab[a * elems.size() + b]; }
  int join(int a, int b) const { return join_tab[a * elems.size() + b]; }
  int mul(int a, int b) const { return mul_tab[a * elems.size() + b]; }
  bool le(int a, int b) const { return elems[a].subset_of(elems[b]); }
};

// Wants a distributive parent with zero; quantale laws are re-verified
// exhaustively when the lattice is small.
Quantale enveloping_quantale(InvSemigroup const& S);

}  // namespace invsem
