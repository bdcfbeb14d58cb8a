#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invsem/filters.hpp"
#include "invsem/semigroup.hpp"

namespace invsem {

// a -> B: every nonzero x <= a meets some member of B above a common nonzero
// element. Vacuously true for a = 0.
bool arrow(InvSemigroup const& S, int a, ElemSet const& B);

enum class CoverageKind { Trivial, Join, Dense, Tight, Custom };

char const* coverage_kind_name(CoverageKind k);
CoverageKind coverage_kind_from(std::string const& name);  // ParseError

// Per-element families of covering subsets of a's down-set. Trivial, join,
// and custom families are stored outright; dense and tight answer through
// the arrow relation because materializing 2^|a down| members is a test-time
// activity, not a representation.
struct Coverage {
  InvSemigroup const* S = nullptr;
  CoverageKind kind = CoverageKind::Trivial;
  std::vector<std::vector<ElemSet>> stored;  // only for trivial/join/custom

  bool lazy() const {
    return kind == CoverageKind::Dense || kind == CoverageKind::Tight;
  }
  bool contains(int a, ElemSet const& X) const;  // X in C(a)

  // Exact family of a's covers; TooLarge when 2^|a down| exceeds the limit.
  std::vector<ElemSet> members(int a, int64_t limit = 1 << 18) const;

  // All covers of a with at most max_size elements.
  std::vector<ElemSet> members_upto(int a, int max_size) const;
};

Coverage builtin_coverage(InvSemigroup const& S, CoverageKind kind);
Coverage custom_coverage(InvSemigroup const& S,
                         std::vector<std::vector<ElemSet>> covers);
Coverage coverage_from_json(InvSemigroup const& S, io::Json const& j);

struct AxiomReport {
  bool r_ok = true, i_ok = true, ms_ok = true, t_ok = true;
  bool r_exact = true, i_exact = true;  // whether full families were swept
  int cap = 0;
  int64_t checked_i = 0, checked_ms = 0, checked_t = 0;
  bool t_budget_hit = false;
  std::string violation;

  bool all_hold() const { return r_ok && i_ok && ms_ok && t_ok; }
  io::Json to_json() const;
};

// (R) reflexivity, (I) inverses, (MS) products, (T) transitivity of covers.
// (R) is always exact; (I) is exact when families materialize under the
// limit; (MS) and (T) sweep covers of size <= cap, (T) under a combination
// budget, with the caps recorded in the report.
AxiomReport check_axioms(Coverage const& cov, int cap = 4,
                         int64_t t_budget = 200000);

bool is_idempotent_pure_coverage(Coverage const& cov);
bool is_separated(Coverage const& cov);
bool coverage_equiv(Coverage const& cov, int a, int b);  // C(a) meets C(b)

struct SeparativeQuotient {
  InvSemigroup const* parent = nullptr;
  CoverageKind kind = CoverageKind::Tight;
  InvSemigroup quotient;
  std::vector<int> cls;  // parent element -> quotient element
  std::vector<int> rep;  // quotient element -> least parent representative
};

// Dense or tight coverages only (UnsupportedKind otherwise). Checks that the
// collapse relation is a congruence, that the quotient is separative for its
// own tight coverage, and that covers push forward through the projection.
SeparativeQuotient separative_quotient(Coverage const& cov);

struct TransportReport {
  bool bijective = false, order_iso = false, functor = false, opens_match = false;
  int parent_tight = 0, quotient_tight = 0;

  bool all_hold() const { return bijective && order_iso && functor && opens_match; }
  io::Json to_json() const;
};

// The projection's action on tight filters, checked to be an order
// isomorphism and a groupoid isomorphism matching the basic open sets.
TransportReport filter_transport(SeparativeQuotient const& sq);

// F meets some member of every cover of every element of F.
bool is_c_filter(InvSemigroup const& S, Filter const& F, Coverage const& cov);

// Specialized to the tight coverage through the arrow relation; dense and
// tight coincide on finite carriers.
bool is_tight_filter(InvSemigroup const& S, Filter const& F);
std::vector<Filter> tight_filters(InvSemigroup const& S);

}  // namespace invsem
