#pragma once

#include <string>
#include <vector>

#include "invsem/filters.hpp"
#include "invsem/io.hpp"
#include "invsem/topology.hpp"

namespace invsem {

// A filter groupoid together with an explicit open-set basis on its arrow
// set. The parent semigroup of G must outlive this value.
struct TopGroupoid {
  FilterGroupoid G;
  Topology top;        // points are arrow indices of G
  std::string flavor;  // "basic" | "patch"
};

// Maximal elements strictly below x, zero excluded.
std::vector<int> max_below(InvSemigroup const& S, int x);

// Arrow-set algebra over a filter groupoid.
ElemSet basic_open(FilterGroupoid const& G, int s);  // filters containing s
ElemSet patch_open(FilterGroupoid const& G, int x, std::vector<int> const& omit);
ElemSet product_set(FilterGroupoid const& G, ElemSet const& a, ElemSet const& b);
ElemSet inverse_set(FilterGroupoid const& G, ElemSet const& a);
bool is_bisection(FilterGroupoid const& G, ElemSet const& a);

// Topology with basis {basic_open(s) : s nonzero}. Asserts the basis product
// and inversion identities where they are theorems (all-filter, ultrafilter,
// tight, and dense classes over any parent; prime filters over a distributive
// parent) and continuity of multiplication and inversion.
TopGroupoid basic_topology(FilterGroupoid const& G);

// Topology whose basis removes from each basic_open(x) the basic opens of any
// subset of max_below(x). The basis contains every singleton, so on a finite
// carrier the patch topology is discrete; the construction asserts that it
// refines the basic topology and checks the relative-complement product and
// inversion identities on small distributive prime-filter groupoids.
TopGroupoid patch_topology(FilterGroupoid const& G);

bool is_etale(TopGroupoid const& tg);
bool is_hausdorff(TopGroupoid const& tg);
bool is_sober(TopGroupoid const& tg);  // LatticeTooLarge beyond the cap
// Open bisections form a basis, are closed under products, and the space is
// sober. Compactness of basis members is automatic on finite carriers.
bool is_coherent(TopGroupoid const& tg);
bool is_boolean_groupoid(TopGroupoid const& tg);
bool is_weakly_boolean_groupoid(TopGroupoid const& tg);

struct BisectionSemigroup {
  InvSemigroup sg;
  std::vector<ElemSet> sets;  // ascending arrow sets, index = element id
  bool compact_only = false;

  int index_of(ElemSet const& a) const;  // -1 when absent
};

// All open bisections under set multiplication. On a finite space every open
// set is compact-open, so compact_only selects the same family; the flag is
// recorded so callers can tell which variant they asked for. Throws TooLarge
// past the enumeration caps and ClassNotClosed if some product of open
// bisections fails to be open.
BisectionSemigroup bisection_semigroup(TopGroupoid const& tg, bool compact_only);

struct TightClosureReport {
  int filter_count = 0;
  ElemSet ultra;    // arrow ids in the all-filters groupoid
  ElemSet tight;
  ElemSet patch_closure_of_ultra;
  bool closure_equals_tight = false;
  // Every canonical patch-basic open around a tight filter contains an
  // ultrafilter.
  bool tight_opens_meet_ultra = false;

  struct Separation {
    int arrow = -1;          // a non-tight filter
    int element = -1;        // x in the filter
    std::vector<int> cover;  // tight cover of x disjoint from the filter
  };
  std::vector<Separation> separations;  // one per non-tight filter

  io::Json to_json(InvSemigroup const& S) const;
};

// Closure of the ultrafilter set inside the patch topology on all filters,
// compared against the tight filters, with explicit separating opens for the
// non-tight ones.
TightClosureReport tight_closure_check(InvSemigroup const& S);

struct CompactnessReport {
  bool ultrafilters_closed = false;       // in the patch all-filters space
  bool tight_equals_ultra = false;
  bool idem_tight_equals_idem_ultra = false;
  bool unit_space_ultra_closed = false;   // within the identity subspace
  bool restriction_decomposition = false; // V_{e;f} as unions of V_g
  bool tight_completion_weakly_boolean = false;

  bool all() const;
  io::Json to_json() const;
};

// Six independently evaluated renderings of the same condition; the
// implementation asserts they agree, so a disagreement is a bug, and on a
// finite carrier all six are expected true.
CompactnessReport compactness_condition(InvSemigroup const& S);

struct CoarseGrainedReport {
  bool locally_finite = true;  // finite carrier: every down-set is finite
  bool finite_depth = true;    // finite carrier: saturated chains exist
  int depth = 0;               // longest cover chain among the idempotents
  int max_one_step = 0;        // most one-step restrictions at one idempotent

  struct CoverPair {
    int lower = -1, upper = -1;
    bool complemented = false;
    std::vector<int> family;  // one-step restrictions orthogonal to lower
  };
  std::vector<CoverPair> pairs;
  bool coarse_grained = false;

  io::Json to_json(InvSemigroup const& S) const;
};

CoarseGrainedReport coarse_grained_check(InvSemigroup const& S);

struct PatchIdentityReport {
  long product_tuples = 0;
  bool product_ok = false;
  bool inversion_ok = false;
  long join_tuples = 0;
  bool join_ok = false;

  io::Json to_json() const;
};

// Relative-complement identities on the prime-filter groupoid of a
// distributive semigroup: products, inversion, and the two-piece join
// decomposition. NotDistributive / TooLarge.
PatchIdentityReport patch_identity_check(InvSemigroup const& S);

io::Json topgroupoid_json(TopGroupoid const& tg);

}  // namespace invsem
