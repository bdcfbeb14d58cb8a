#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invsem/io.hpp"
#include "invsem/semigroup.hpp"

namespace invsem {

// Proper filter, canonically the up-set of its minimum. Finiteness makes
// every filter principal; the general-subset verifier below backs that up.
struct Filter {
  int min = -1;
  ElemSet carrier;

  bool operator==(Filter const& o) const { return min == o.min; }
};

enum class FilterClass { All, Ultra, Prime, Tight, Dense };

char const* filter_class_name(FilterClass c);
FilterClass filter_class_from(std::string const& name);  // ParseError

Filter principal_filter(InvSemigroup const& S, int a);  // a nonzero
std::vector<Filter> all_filters(InvSemigroup const& S);

// Up-closed, directed, nonempty, zero-free.
bool is_proper_filter_set(InvSemigroup const& S, ElemSet const& A);

Filter filter_inv(InvSemigroup const& S, Filter const& F);
Filter filter_d(InvSemigroup const& S, Filter const& F);
Filter filter_r(InvSemigroup const& S, Filter const& F);

// Defined exactly when d(A) = r(B); the result is (AB) closed upward.
std::optional<Filter> filter_mul(InvSemigroup const& S, Filter const& A,
                                 Filter const& B);

// Maximality among proper filters, cross-checked against the closure
// condition "b meets every member of F below, so b belongs to F".
bool is_ultrafilter(InvSemigroup const& S, Filter const& F);

// Binary existing joins / all existing compatible joins. Both want S
// distributive (NotDistributive); they coincide on finite carriers and the
// implementations assert that.
bool is_prime_filter(InvSemigroup const& S, Filter const& F);
bool is_completely_prime_filter(InvSemigroup const& S, Filter const& F);

// A set is consistent when some single nonzero element sits below all of it.
bool is_consistent(InvSemigroup const& S, ElemSet const& A);
std::vector<ElemSet> maximal_consistent_supersets(InvSemigroup const& S,
                                                  ElemSet const& A);

struct FilterGroupoid {
  InvSemigroup const* S = nullptr;
  FilterClass klass = FilterClass::All;
  std::vector<Filter> arrows;      // sorted by min id
  std::vector<int> arrow_of_min;   // element id -> arrow index or -1
  std::vector<int> dmap, rmap, inv_arrow;
  std::vector<int> prod;           // arrow x arrow -> arrow index or -1
  ElemSet objects;                 // arrow indices of idempotent filters

  int size() const { return int(arrows.size()); }
  int mul(int a, int b) const { return prod[a * arrows.size() + b]; }
};

// Assembles the groupoid on the given arrows; throws ClassNotClosed if the
// class fails to be closed under inverse, d, r, or product, and checks the
// groupoid laws (associativity, units, inverses).
FilterGroupoid build_filter_groupoid(InvSemigroup const& S, FilterClass klass,
                                     std::vector<Filter> arrows);

// All five classes; the tight and dense cases are implemented beside the
// arrow relation in the coverage code.
FilterGroupoid filter_groupoid(InvSemigroup const& S, FilterClass klass);

std::string groupoid_dot(FilterGroupoid const& G);
io::Json groupoid_json(FilterGroupoid const& G);

}  // namespace invsem
