#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

#include "invsem/semigroup.hpp"

namespace invsem::io {

using Json = nlohmann::ordered_json;

// {"n": int, "zero": int|null, "one": int|null, "table": [[int,...],...],
//  "labels": [string,...]} with labels omitted when none were set.
Json semigroup_json(InvSemigroup const& S);

// Parses and verifies; declared zero/one are cross-checked against the table
// (BadZero / ParseError on mismatch).
InvSemigroup semigroup_from_json(Json const& j);

InvSemigroup load_semigroup(std::string const& path);

// Raw {"n", "table", "labels"?} without semigroup verification.
std::tuple<std::vector<int>, int, std::vector<std::string>> load_raw_table(
    std::string const& path);

// {"n": int, "covers": [[lower, upper],...], "labels"?}
std::tuple<int, std::vector<std::pair<int, int>>, std::vector<std::string>>
load_poset(std::string const& path);

// Deterministic rendering: insertion-ordered keys, two-space indent when
// pretty, always newline-terminated.
std::string dump(Json const& j, bool pretty);

Json parse_file(std::string const& path);
void write_file(std::string const& path, std::string const& content);

}  // namespace invsem::io
