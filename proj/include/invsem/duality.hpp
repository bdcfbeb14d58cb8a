#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invsem/completion.hpp"
#include "invsem/coverage.hpp"
#include "invsem/groupoid.hpp"
#include "invsem/io.hpp"
#include "invsem/morphism.hpp"
#include "invsem/semigroup.hpp"

namespace invsem {

// Counit side: send each element s to the set of prime filters containing s,
// viewed as an element of the compact-open bisection semigroup of the
// prime-filter groupoid under its basic topology.
struct EpsilonReport {
  BisectionSemigroup target;
  std::vector<int> map;  // source element -> target element
  bool injective = false;
  bool surjective = false;
  bool multiplicative = false;
  bool meets_preserved = false;  // over pairs whose meet exists
  bool joins_preserved = false;  // over compatible pairs whose join exists

  bool iso() const { return injective && surjective; }
  io::Json to_json(InvSemigroup const& S) const;
};

EpsilonReport epsilon(InvSemigroup const& S);

// True when distinct elements are separated by prime filters, i.e. the counit
// map is injective. Cross-checked directionally on distributive input.
bool is_spatial(InvSemigroup const& S);

// Unit side: send each arrow of a topological groupoid to the filter of open
// bisections containing it, an arrow of the prime-filter groupoid of the
// bisection semigroup.
struct EtaReport {
  BisectionSemigroup b;        // open bisections of the input groupoid
  std::vector<int> arrow_map;  // input arrow -> prime-groupoid arrow
  int target_arrows = 0;
  bool functor_ok = false;
  bool covering_ok = false;
  bool continuity_ok = false;
  bool bijective = false;

  io::Json to_json() const;
};

EtaReport eta(TopGroupoid const& tg);

// Round trip for boolean input: the counit is an isomorphism onto the
// compact-open bisections of the prime groupoid, and the unit is a bijective
// continuous covering functor back from that groupoid.
struct RoundtripReport {
  EpsilonReport eps;
  Isomorphism semigroup_iso;
  EtaReport unit;
  bool prime_equals_ultra = false;
  bool hausdorff = false;

  io::Json to_json(InvSemigroup const& S) const;
};

RoundtripReport boolean_duality_roundtrip(InvSemigroup const& S);

// Booleanization via the patch topology on the all-filters groupoid, together
// with the identification of that groupoid with the prime-filter groupoid of
// the universal distributive completion.
struct Booleanization {
  BisectionSemigroup b;        // compact-open patch bisections
  std::vector<int> beta;       // source element -> element of b.sg
  CompletionSemigroup d;       // distributive completion of the source
  std::vector<int> point_map;  // all-filters arrow -> prime arrow over d.sg
  bool beta_multiplicative = false;
  bool groupoid_iso = false;     // point_map is a bijective functor
  bool basis_dictionary = false; // basic opens correspond under point_map
  bool homeomorphism = false;    // both patch topologies discrete + iso

  io::Json to_json(InvSemigroup const& S) const;
};

Booleanization first_booleanization(InvSemigroup const& S);

// Universal property of the booleanization: a homomorphism into a weakly
// boolean semigroup whose prime-filter preimages are filters factors uniquely
// through beta by a homomorphism preserving compatible joins.
struct FactorizationReport {
  Booleanization first;
  std::vector<int> theta_bar;  // b.sg element -> target element
  bool factors = false;
  bool multiplicative = false;
  bool joins_preserved = false;
  bool uniqueness_checked = false;
  bool unique = false;
  int candidates = 0;  // factoring join-preserving homomorphisms found

  io::Json to_json(InvSemigroup const& S, InvSemigroup const& T) const;
};

FactorizationReport booleanization_factorization(InvSemigroup const& S,
                                                 InvSemigroup const& T,
                                                 std::vector<int> const& theta);

// Classification of a homomorphism. Fields are left unset when the flavor
// needed to state the condition is absent.
struct MorphismPredicates {
  std::optional<bool> is_join_morphism;
  std::optional<bool> is_meet_morphism;
  std::optional<bool> is_callitic;
  std::optional<bool> is_hypercallitic;
  std::optional<bool> is_idempotent_pure;
  std::optional<bool> is_tight_map;
  std::optional<bool> is_dense_map;
  std::optional<bool> is_cover_to_join;
  std::optional<bool> satisfies_dc1;
  std::optional<bool> satisfies_dc2;

  io::Json to_json() const;
};

MorphismPredicates morphism_predicates(InvSemigroup const& S,
                                       InvSemigroup const& T,
                                       std::vector<int> const& map,
                                       Coverage const* cov = nullptr);

// Contravariant arrow map induced by a callitic morphism: pull each prime
// filter of the target back to a prime filter of the source.
struct PullbackReport {
  std::vector<int> arrow_map;  // target prime arrow -> source prime arrow
  bool functor_ok = false;
  bool covering_ok = false;
  bool continuity_ok = false;

  bool all_hold() const { return functor_ok && covering_ok && continuity_ok; }
  io::Json to_json() const;
};

PullbackReport pullback_functor(InvSemigroup const& S, InvSemigroup const& T,
                                std::vector<int> const& map);

// A surjective idempotent-pure morphism between pseudogroup-flavored
// semigroups induces a closure operator whose fixed points recover the target.
struct NucleusReport {
  std::vector<int> theta_star;  // target element -> source element
  std::vector<int> nu;          // source element -> source element
  bool inflationary = false;
  bool monotone = false;
  bool idempotent = false;
  bool submultiplicative = false;
  InvSemigroup fixed;           // nu-closed elements, product a.b = nu(ab)
  std::vector<int> fixed_elems; // fixed element -> source element
  std::vector<int> iso;         // fixed element -> target element
  bool iso_ok = false;

  bool laws() const {
    return inflationary && monotone && idempotent && submultiplicative;
  }
  io::Json to_json(InvSemigroup const& S) const;
};

NucleusReport nucleus_from_morphism(InvSemigroup const& S,
                                    InvSemigroup const& T,
                                    std::vector<int> const& map);

}  // namespace invsem
