#pragma once

#include <string>
#include <utility>
#include <vector>

#include "invsem/semigroup.hpp"

namespace invsem::gen {

// Meet semilattice 0 < a < b < ... < 1 with n elements, multiplication = min.
InvSemigroup chain(int n);

// Boolean algebra 2^n as a meet semilattice; element ids are atom bitmasks.
InvSemigroup boolean_algebra(int n);

// Combinatorial Brandt semigroup over n: zero plus matrix units e_ij with
// e_ij e_kl = e_il when j = k and 0 otherwise.
InvSemigroup brandt(int n);

// Symmetric inverse monoid I_n: all partial injective maps on n points under
// composition (s.t)(x) = s(t(x)). Ids: idempotents first by domain mask, then
// the rest by (rank, domain mask, image sequence).
InvSemigroup sym_inv(int n);

// Verifies the table is a group (single idempotent) and adjoins a zero.
InvSemigroup group_with_zero(std::vector<int> const& table, int n,
                             std::vector<std::string> labels = {});

InvSemigroup cyclic_group_with_zero(int n);

// Meet semilattice from a cover relation (lower, upper). The reflexive
// transitive closure must be a partial order with all binary meets.
InvSemigroup semilattice_from_covers(int n,
                                     std::vector<std::pair<int, int>> const& covers,
                                     std::vector<std::string> labels = {});

// Dispatcher for names like "chain:3", "boolean:2", "brandt:2", "sym_inv:3",
// "group0:cyclic4", "group0:<file>", "semilattice:<file>".
InvSemigroup by_name(std::string const& name);

}  // namespace invsem::gen
