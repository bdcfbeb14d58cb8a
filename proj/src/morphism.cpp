#include "invsem/morphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "invsem/error.hpp"

namespace invsem {

namespace {

constexpr size_t kMaxMorphisms = size_t(1) << 17;

uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  return h ^ (h >> 33);
}

// Iterated refinement of per-element invariants, analogous to colour
// refinement on the multiplication structure.
std::vector<uint64_t> profiles(InvSemigroup const& S) {
  int n = S.n;
  std::vector<uint64_t> p(n);
  for (int x = 0; x < n; ++x) {
    uint64_t h = 0x100;
    h = mix(h, S.is_zero(x));
    h = mix(h, S.is_idem(x));
    h = mix(h, S.inv[x] == x);
    h = mix(h, uint64_t(S.down[x].count()));
    h = mix(h, uint64_t(S.compat[x].count()));
    int up = 0, idem_below = 0;
    for (int y = 0; y < n; ++y) {
      if (S.le(x, y)) ++up;
      if (S.le(y, x) && S.is_idem(y)) ++idem_below;
    }
    h = mix(h, uint64_t(up));
    h = mix(h, uint64_t(idem_below));
    int pow = x, steps = 0;
    while (!S.is_idem(pow) && steps < n + 1) {
      pow = S.mul(pow, x);
      ++steps;
    }
    h = mix(h, uint64_t(steps));
    p[x] = h;
  }
  for (int round = 0; round < 3; ++round) {
    std::vector<uint64_t> q(n);
    for (int x = 0; x < n; ++x) {
      uint64_t h = mix(p[x], 0x200 + round);
      h = mix(h, p[S.inv[x]]);
      h = mix(h, p[S.d(x)]);
      h = mix(h, p[S.r(x)]);
      std::vector<uint64_t> row(n);
      for (int y = 0; y < n; ++y)
        row[y] = mix(mix(p[y], p[S.mul(x, y)]), p[S.mul(y, x)]);
      std::sort(row.begin(), row.end());
      for (uint64_t v : row) h = mix(h, v);
      q[x] = h;
    }
    p.swap(q);
  }
  return p;
}

}  // namespace

bool is_multiplicative(InvSemigroup const& S, InvSemigroup const& T,
                       std::vector<int> const& map) {
  if (int(map.size()) != S.n) return false;
  for (int v : map)
    if (v < 0 || v >= T.n) return false;
  for (int s = 0; s < S.n; ++s)
    for (int t = 0; t < S.n; ++t)
      if (T.mul(map[s], map[t]) != map[S.mul(s, t)]) return false;
  return true;
}

bool is_zero_preserving(InvSemigroup const& S, InvSemigroup const& T,
                        std::vector<int> const& map) {
  if (!S.zero || !T.zero) return false;
  return map[*S.zero] == *T.zero;
}

bool is_injective_map(std::vector<int> const& map) {
  std::vector<int> v = map;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_surjective_map(std::vector<int> const& map, int target_n) {
  std::vector<char> hit(target_n, 0);
  for (int v : map)
    if (v >= 0 && v < target_n) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_idempotent_pure_map(InvSemigroup const& S, InvSemigroup const& T,
                            std::vector<int> const& map) {
  for (int s = 0; s < S.n; ++s)
    if (T.is_idem(map[s]) && !S.is_idem(s)) return false;
  return true;
}

std::optional<Isomorphism> find_isomorphism(InvSemigroup const& S,
                                            InvSemigroup const& T) {
  int n = S.n;
  if (T.n != n) return std::nullopt;
  std::vector<uint64_t> ps = profiles(S), pt = profiles(T);
  {
    std::vector<uint64_t> a = ps, b = pt;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::map<uint64_t, std::vector<int>> classes;
  for (int t = 0; t < n; ++t) classes[pt[t]].push_back(t);

  std::vector<int> fwd(n, -1), inv(n, -1);
  auto rec = [&](auto&& self, int s) -> bool {
    if (s == n) return true;
    for (int t : classes[ps[s]]) {
      if (inv[t] >= 0) continue;
      bool ok = true;
      fwd[s] = t;
      inv[t] = s;
      for (int i = 0; i <= s && ok; ++i) {
        if (fwd[i] < 0) continue;
        for (int j = 0; j <= s && ok; ++j) {
          if (fwd[j] < 0 || (i != s && j != s && S.mul(i, j) != s)) continue;
          int p = S.mul(i, j);
          int q = T.mul(fwd[i], fwd[j]);
          if (fwd[p] >= 0) {
            if (fwd[p] != q) ok = false;
          } else if (inv[q] >= 0) {
            ok = false;  // q already taken by a different source element
          }
        }
      }
      if (ok && self(self, s + 1)) return true;
      fwd[s] = -1;
      inv[t] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;

  check_internal(is_multiplicative(S, T, fwd) && is_injective_map(fwd),
                 "isomorphism search returned a non-isomorphism");
  return Isomorphism{std::move(fwd), std::move(inv)};
}

bool isomorphic(InvSemigroup const& S, InvSemigroup const& T) {
  return find_isomorphism(S, T).has_value();
}

std::vector<std::vector<int>> enumerate_morphisms(InvSemigroup const& S,
                                                  InvSemigroup const& T,
                                                  bool zero_preserving) {
  int n = S.n;
  std::vector<std::vector<int>> out;
  std::vector<int> map(n, -1);
  auto rec = [&](auto&& self, int s) -> void {
    if (s == n) {
      if (out.size() >= kMaxMorphisms)
        fail(Err::TooLarge, "morphism enumeration cap hit");
      out.push_back(map);
      return;
    }
    for (int t = 0; t < T.n; ++t) {
      if (zero_preserving && S.zero && S.is_zero(s) &&
          (!T.zero || t != *T.zero))
        continue;
      map[s] = t;
      bool ok = true;
      for (int i = 0; i <= s && ok; ++i)
        for (int j = 0; j <= s && ok; ++j) {
          if (i != s && j != s && S.mul(i, j) != s) continue;
          int p = S.mul(i, j);
          if (p <= s && T.mul(map[i], map[j]) != map[p]) ok = false;
        }
      if (ok) self(self, s + 1);
      map[s] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace invsem
