#include "invsem/io.hpp"

#include <fstream>
#include <sstream>

namespace invsem::io {

Json semigroup_json(InvSemigroup const& S) {
  Json j;
  j["n"] = S.n;
  j["zero"] = S.zero ? Json(*S.zero) : Json(nullptr);
  j["one"] = S.one ? Json(*S.one) : Json(nullptr);
  Json rows = Json::array();
  for (int s = 0; s < S.n; ++s) {
    Json row = Json::array();
    for (int t = 0; t < S.n; ++t) row.push_back(S.mul(s, t));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (!S.labels.empty()) j["labels"] = S.labels;
  return j;
}

namespace {

int get_int(Json const& j, char const* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(Err::ParseError, std::string("missing or non-integer field ") + key);
  return j[key].get<int>();
}

}  // namespace

InvSemigroup semigroup_from_json(Json const& j) {
  if (!j.is_object()) fail(Err::ParseError, "semigroup file must be a JSON object");
  int n = get_int(j, "n");
  if (n < 1 || n > 100000) fail(Err::ParseError, "n out of range");
  if (!j.contains("table") || !j["table"].is_array() || int(j["table"].size()) != n)
    fail(Err::ParseError, "table must be an n-row array");
  std::vector<int> table;
  table.reserve(size_t(n) * n);
  for (auto const& row : j["table"]) {
    if (!row.is_array() || int(row.size()) != n)
      fail(Err::ParseError, "table rows must have length n");
    for (auto const& v : row) {
      if (!v.is_number_integer()) fail(Err::ParseError, "table entries must be integers");
      table.push_back(v.get<int>());
    }
  }
  std::optional<int> zero;
  if (j.contains("zero") && !j["zero"].is_null()) zero = get_int(j, "zero");
  if (zero && (*zero < 0 || *zero >= n)) fail(Err::ParseError, "zero out of range");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || int(j["labels"].size()) != n)
      fail(Err::ParseError, "labels must be an n-array of strings");
    for (auto const& l : j["labels"]) {
      if (!l.is_string()) fail(Err::ParseError, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  InvSemigroup S = verify(table, n, zero, std::move(labels));
  if (j.contains("one") && !j["one"].is_null()) {
    int one = get_int(j, "one");
    if (!S.one || *S.one != one)
      fail(Err::ParseError, "declared one " + std::to_string(one) +
                                " is not the identity of the table");
  }
  return S;
}

Json parse_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (nlohmann::json::exception const& e) {
    fail(Err::ParseError, path + ": " + e.what());
  }
}

InvSemigroup load_semigroup(std::string const& path) {
  return semigroup_from_json(parse_file(path));
}

std::tuple<std::vector<int>, int, std::vector<std::string>> load_raw_table(
    std::string const& path) {
  Json j = parse_file(path);
  if (!j.is_object()) fail(Err::ParseError, "table file must be a JSON object");
  int n = get_int(j, "n");
  if (n < 1 || n > 100000) fail(Err::ParseError, "n out of range");
  if (!j.contains("table") || !j["table"].is_array() || int(j["table"].size()) != n)
    fail(Err::ParseError, "table must be an n-row array");
  std::vector<int> table;
  for (auto const& row : j["table"]) {
    if (!row.is_array() || int(row.size()) != n)
      fail(Err::ParseError, "table rows must have length n");
    for (auto const& v : row) {
      if (!v.is_number_integer()) fail(Err::ParseError, "table entries must be integers");
      table.push_back(v.get<int>());
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (auto const& l : j["labels"]) labels.push_back(l.get<std::string>());
  return {std::move(table), n, std::move(labels)};
}

std::tuple<int, std::vector<std::pair<int, int>>, std::vector<std::string>> load_poset(
    std::string const& path) {
  Json j = parse_file(path);
  if (!j.is_object()) fail(Err::ParseError, "poset file must be a JSON object");
  int n = get_int(j, "n");
  if (!j.contains("covers") || !j["covers"].is_array())
    fail(Err::ParseError, "poset file wants a covers array");
  std::vector<std::pair<int, int>> covers;
  for (auto const& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
        !c[1].is_number_integer())
      fail(Err::ParseError, "covers entries must be [lower, upper] pairs");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (auto const& l : j["labels"]) labels.push_back(l.get<std::string>());
  return {n, std::move(covers), std::move(labels)};
}

std::string dump(Json const& j, bool pretty) {
  return j.dump(pretty ? 2 : -1) + "\n";
}

void write_file(std::string const& path, std::string const& content) {
  std::ofstream out(path);
  if (!out) fail(Err::ParseError, "cannot write " + path);
  out << content;
}

}  // namespace invsem::io
