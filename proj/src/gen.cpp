#include "invsem/gen.hpp"

#include <algorithm>
#include <tuple>

#include "invsem/io.hpp"

namespace invsem::gen {

namespace {

int checked_int(std::string const& arg, std::string const& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(arg, &pos);
    if (pos != arg.size()) fail(Err::ParseError, what + " wants an integer, got " + arg);
    return v;
  } catch (std::logic_error const&) {
    fail(Err::ParseError, what + " wants an integer, got " + arg);
  }
}

}  // namespace

InvSemigroup chain(int n) {
  if (n < 1) fail(Err::ParseError, "chain needs n >= 1");
  if (n > 64) fail(Err::TooLarge, "chain capped at 64 elements");
  std::vector<int> table(size_t(n) * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) table[s * n + t] = std::min(s, t);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      labels[i] = "0";
    else if (i == n - 1)
      labels[i] = "1";
    else
      labels[i] = std::string(1, char('a' + i - 1));
  }
  return verify(table, n, 0, std::move(labels));
}

InvSemigroup boolean_algebra(int n) {
  if (n < 0) fail(Err::ParseError, "boolean needs n >= 0");
  if (n > 6) fail(Err::TooLarge, "boolean capped at 6 atoms");
  int m = 1 << n;
  std::vector<int> table(size_t(m) * m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) table[s * m + t] = s & t;
  std::vector<std::string> labels(m);
  for (int mask = 0; mask < m; ++mask) {
    if (mask == 0)
      labels[mask] = "0";
    else if (mask == m - 1)
      labels[mask] = "1";
    else {
      std::string l;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) l += char('p' + i);
      labels[mask] = l;
    }
  }
  return verify(table, m, 0, std::move(labels));
}

InvSemigroup brandt(int n) {
  if (n < 1) fail(Err::ParseError, "brandt needs n >= 1");
  if (n > 8) fail(Err::TooLarge, "brandt capped at 8");
  // id 0 is zero, ids 1..n are e_ii, then off-diagonal e_ij by (i, j).
  std::vector<std::pair<int, int>> units;
  for (int i = 1; i <= n; ++i) units.emplace_back(i, i);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) units.emplace_back(i, j);
  int m = 1 + int(units.size());
  auto id_of = [&](int i, int j) {
    for (size_t k = 0; k < units.size(); ++k)
      if (units[k] == std::make_pair(i, j)) return int(k) + 1;
    bug("unit lookup");
    return -1;
  };
  std::vector<int> table(size_t(m) * m, 0);
  for (size_t a = 0; a < units.size(); ++a)
    for (size_t b = 0; b < units.size(); ++b) {
      auto [i, j] = units[a];
      auto [k, l] = units[b];
      if (j == k) table[(a + 1) * m + (b + 1)] = id_of(i, l);
    }
  std::vector<std::string> labels(m);
  labels[0] = "0";
  for (size_t k = 0; k < units.size(); ++k)
    labels[k + 1] =
        "e" + std::to_string(units[k].first) + std::to_string(units[k].second);
  return verify(table, m, 0, std::move(labels));
}

namespace {

struct PartialMap {
  std::vector<int> img;  // img[x] = image of point x, -1 if undefined

  bool is_idem() const {
    for (size_t x = 0; x < img.size(); ++x)
      if (img[x] >= 0 && img[x] != int(x)) return false;
    return true;
  }
  int dom_mask() const {
    int m = 0;
    for (size_t x = 0; x < img.size(); ++x)
      if (img[x] >= 0) m |= 1 << x;
    return m;
  }
  int rank() const {
    int r = 0;
    for (int v : img) r += v >= 0;
    return r;
  }
};

void enumerate_partial_injections(int n, int x, PartialMap& cur, int used,
                                  std::vector<PartialMap>& out) {
  if (x == n) {
    out.push_back(cur);
    return;
  }
  cur.img[x] = -1;
  enumerate_partial_injections(n, x + 1, cur, used, out);
  for (int y = 0; y < n; ++y) {
    if (used & (1 << y)) continue;
    cur.img[x] = y;
    enumerate_partial_injections(n, x + 1, cur, used | (1 << y), out);
  }
  cur.img[x] = -1;
}

}  // namespace

InvSemigroup sym_inv(int n) {
  if (n < 1) fail(Err::ParseError, "sym_inv needs n >= 1");
  if (n > 4) fail(Err::TooLarge, "sym_inv capped at 4 points (I_4 has 209 elements)");
  std::vector<PartialMap> maps;
  PartialMap seed{std::vector<int>(n, -1)};
  enumerate_partial_injections(n, 0, seed, 0, maps);
  std::sort(maps.begin(), maps.end(), [](PartialMap const& a, PartialMap const& b) {
    auto key = [](PartialMap const& p) {
      bool idem = p.is_idem();
      return std::make_tuple(idem ? 0 : 1, idem ? 0 : p.rank(), p.dom_mask(), p.img);
    };
    return key(a) < key(b);
  });
  int m = int(maps.size());
  auto index_of = [&](PartialMap const& p) {
    for (int k = 0; k < m; ++k)
      if (maps[k].img == p.img) return k;
    bug("partial map lookup");
    return -1;
  };
  std::vector<int> table(size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      PartialMap prod{std::vector<int>(n, -1)};
      for (int x = 0; x < n; ++x) {
        int y = maps[b].img[x];
        if (y >= 0 && maps[a].img[y] >= 0) prod.img[x] = maps[a].img[y];
      }
      table[a * m + b] = index_of(prod);
    }
  std::vector<std::string> labels(m);
  for (int k = 0; k < m; ++k) {
    PartialMap const& p = maps[k];
    if (p.rank() == 0) {
      labels[k] = "0";
    } else if (p.is_idem() && p.rank() == n) {
      labels[k] = "1";
    } else if (p.is_idem()) {
      labels[k] = "e";
      for (int x = 0; x < n; ++x)
        if (p.img[x] >= 0) labels[k] += std::to_string(x + 1);
    } else {
      labels[k] = "[";
      bool first = true;
      for (int x = 0; x < n; ++x) {
        if (p.img[x] < 0) continue;
        if (!first) labels[k] += ",";
        labels[k] += std::to_string(x + 1) + "->" + std::to_string(p.img[x] + 1);
        first = false;
      }
      labels[k] += "]";
    }
  }
  return verify(table, m, 0, std::move(labels));
}

InvSemigroup group_with_zero(std::vector<int> const& table, int n,
                             std::vector<std::string> labels) {
  InvSemigroup g = verify(table, n, std::nullopt, std::move(labels));
  if (!is_group(g)) fail(Err::ParseError, "table is not a group");
  if (g.zero) fail(Err::AlreadyHasZero, "group table already has a zero");
  return adjoin_zero(g);
}

InvSemigroup cyclic_group_with_zero(int n) {
  if (n < 1) fail(Err::ParseError, "cyclic needs n >= 1");
  if (n > 64) fail(Err::TooLarge, "cyclic capped at 64");
  if (n == 1) {
    // The trivial group's only element is absorbing, so adjoin_zero would
    // balk; build {g0 > 0} directly.
    return verify({0, 1, 1, 1}, 2, 1, {"g0", "0"});
  }
  std::vector<int> table(size_t(n) * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) table[s * n + t] = (s + t) % n;
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
  return group_with_zero(table, n, std::move(labels));
}

InvSemigroup semilattice_from_covers(int n,
                                     std::vector<std::pair<int, int>> const& covers,
                                     std::vector<std::string> labels) {
  if (n < 1) fail(Err::ParseError, "semilattice needs n >= 1");
  if (n > 64) fail(Err::TooLarge, "semilattice capped at 64 elements");
  std::vector<ElemSet> below(n, ElemSet(n));  // below[x] = {y : y <= x}
  for (int x = 0; x < n; ++x) below[x].set(x);
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      fail(Err::ParseError, "cover pair out of range");
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [lo, hi] : covers) {
      ElemSet merged = below[hi] | below[lo];
      if (!(merged == below[hi])) {
        below[hi] = merged;
        changed = true;
      }
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && below[x].test(y) && below[y].test(x))
        fail(Err::ParseError, "cover relation has a cycle");
  std::vector<int> table(size_t(n) * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      ElemSet lower = below[s] & below[t];
      int m = -1;
      lower.for_each([&](int c) {
        if (lower.subset_of(below[c])) m = c;
      });
      if (m < 0)
        fail(Err::ParseError, "poset is not a meet semilattice: no meet of " +
                                  std::to_string(s) + " and " + std::to_string(t));
      table[s * n + t] = m;
    }
  return verify(table, n, std::nullopt, std::move(labels));
}

InvSemigroup by_name(std::string const& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos)
    fail(Err::ParseError, "generator name wants the form kind:arg");
  std::string kind = name.substr(0, colon), arg = name.substr(colon + 1);
  if (kind == "chain") return chain(checked_int(arg, "chain"));
  if (kind == "boolean") return boolean_algebra(checked_int(arg, "boolean"));
  if (kind == "brandt") return brandt(checked_int(arg, "brandt"));
  if (kind == "sym_inv") return sym_inv(checked_int(arg, "sym_inv"));
  if (kind == "group0") {
    if (arg.rfind("cyclic", 0) == 0)
      return cyclic_group_with_zero(checked_int(arg.substr(6), "group0:cyclic"));
    auto [table, n, labels] = io::load_raw_table(arg);
    return group_with_zero(table, n, std::move(labels));
  }
  if (kind == "semilattice") {
    auto [n, covers, labels] = io::load_poset(arg);
    return semilattice_from_covers(n, covers, std::move(labels));
  }
  fail(Err::UnsupportedKind, "unknown generator kind " + kind);
}

}  // namespace invsem::gen
