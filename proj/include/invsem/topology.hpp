#pragma once

#include <string>
#include <vector>

#include "invsem/elemset.hpp"
#include "invsem/io.hpp"

namespace invsem {

// Finite topological space described by a basis. The minimal neighbourhood
// of each point is precomputed and drives closure, interior, and the
// separation predicates. The full open lattice is materialized only when the
// space has at most 20 points; predicates that need it throw LatticeTooLarge
// beyond that.
struct Topology {
  int points = 0;
  std::vector<ElemSet> basis;            // nonempty, deduplicated, ascending
  std::vector<std::string> basis_names;  // parallel to basis
  std::vector<ElemSet> min_nbhd;         // per point: smallest open around it
  std::vector<ElemSet> opens;            // ascending; valid iff opens_built
  bool opens_built = false;

  bool is_open(ElemSet const& a) const;
  ElemSet interior(ElemSet const& a) const;
  ElemSet closure(ElemSet const& a) const;
  bool is_hausdorff() const;
  bool is_t0() const;
  bool is_discrete() const;
};

// Checks that the family is a genuine basis (it covers the points and
// pairwise intersections are unions of members) and precomputes the rest.
// Every subset of a finite space is compact, so no compactness data is kept.
Topology make_topology(int points, std::vector<ElemSet> basis,
                       std::vector<std::string> names = {});

// Subspace on the given points, renumbered ascending.
Topology subspace(Topology const& top, ElemSet const& pts);

struct SoberReport {
  int point_count = 0;
  // Completely prime filters of the open lattice; each is the up-set of a
  // join-prime open, and those are exactly the minimal neighbourhoods.
  int cp_filter_count = 0;
  bool t0 = false;
  // Every completely prime filter of the lattice is the neighbourhood filter
  // of exactly one point.
  bool sober = false;

  io::Json to_json() const;
};

// Needs the materialized open lattice: LatticeTooLarge when unavailable.
SoberReport sober_report(Topology const& top);

io::Json topology_json(Topology const& top);

}  // namespace invsem
