#include "invsem/semigroup.hpp"

#include <algorithm>
#include <atomic>

#include "invsem/par.hpp"

namespace invsem {

char const* err_name(Err code) {
  switch (code) {
    case Err::NotAssociative: return "NotAssociative";
    case Err::NotInverse: return "NotInverse";
    case Err::BadZero: return "BadZero";
    case Err::NotCompatible: return "NotCompatible";
    case Err::NoZero: return "NoZero";
    case Err::NotWeaklyBoolean: return "NotWeaklyBoolean";
    case Err::NotBelow: return "NotBelow";
    case Err::AlreadyHasZero: return "AlreadyHasZero";
    case Err::DifferentParents: return "DifferentParents";
    case Err::NotDistributive: return "NotDistributive";
    case Err::ClassNotClosed: return "ClassNotClosed";
    case Err::UnsupportedKind: return "UnsupportedKind";
    case Err::NotIdempotentPure: return "NotIdempotentPure";
    case Err::TooLarge: return "TooLarge";
    case Err::LatticeTooLarge: return "LatticeTooLarge";
    case Err::NotBoolean: return "NotBoolean";
    case Err::PreimageNotFilter: return "PreimageNotFilter";
    case Err::FlavorMismatch: return "FlavorMismatch";
    case Err::NotCallitic: return "NotCallitic";
    case Err::NotSurjective: return "NotSurjective";
    case Err::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Err code, std::string const& msg)
    : std::runtime_error(std::string(err_name(code)) + ": " + msg), _code(code) {}

void fail(Err code, std::string const& msg) { throw Error(code, msg); }

void bug(std::string const& msg) {
  throw std::logic_error("internal invariant violated: " + msg);
}

void check_internal(bool ok, std::string const& msg) {
  if (!ok) bug(msg);
}

std::string InvSemigroup::label(int s) const {
  if (!labels.empty()) return labels[s];
  return std::to_string(s);
}

ElemSet InvSemigroup::nonzero() const {
  ElemSet s = ElemSet::all(n);
  if (zero) s.reset(*zero);
  return s;
}

std::vector<int> associativity_witness_serial(std::vector<int> const& table, int n) {
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      int st = table[s * n + t];
      for (int u = 0; u < n; ++u)
        if (table[st * n + u] != table[s * n + table[t * n + u]])
          return {s, t, u};
    }
  return {};
}

std::vector<int> associativity_witness(std::vector<int> const& table, int n) {
  std::atomic<int64_t> first{int64_t(n) * n * n};
  par::parallel_for(n, [&](int64_t s) {
    for (int t = 0; t < n; ++t) {
      int st = table[s * n + t];
      for (int u = 0; u < n; ++u) {
        if (table[st * n + u] != table[s * n + table[t * n + u]]) {
          int64_t idx = (s * n + t) * n + u;
          int64_t cur = first.load();
          while (idx < cur && !first.compare_exchange_weak(cur, idx)) {
          }
          return;
        }
      }
    }
  });
  int64_t idx = first.load();
  if (idx == int64_t(n) * n * n) return {};
  int u = int(idx % n), t = int((idx / n) % n), s = int(idx / n / n);
  return {s, t, u};
}

namespace {

std::optional<int> find_absorbing(std::vector<int> const& table, int n) {
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int s = 0; s < n && ok; ++s)
      ok = table[z * n + s] == z && table[s * n + z] == z;
    if (ok) return z;
  }
  return std::nullopt;
}

std::optional<int> find_identity(std::vector<int> const& table, int n) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int s = 0; s < n && ok; ++s)
      ok = table[e * n + s] == s && table[s * n + e] == s;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

InvSemigroup verify(std::vector<int> const& table, int n,
                    std::optional<int> declared_zero,
                    std::vector<std::string> labels) {
  if (n <= 0 || int(table.size()) != n * n)
    fail(Err::ParseError, "table must be n*n with n >= 1");
  for (int v : table)
    if (v < 0 || v >= n) fail(Err::ParseError, "table entry out of range");
  if (!labels.empty() && int(labels.size()) != n)
    fail(Err::ParseError, "labels must have length n");

  auto w = associativity_witness(table, n);
  if (!w.empty())
    fail(Err::NotAssociative,
         "(" + std::to_string(w[0]) + "*" + std::to_string(w[1]) + ")*" +
             std::to_string(w[2]) + " != " + std::to_string(w[0]) + "*(" +
             std::to_string(w[1]) + "*" + std::to_string(w[2]) + ")");

  InvSemigroup S;
  S.n = n;
  S.table = table;
  S.labels = std::move(labels);

  // Unique generalized inverse per element.
  S.inv.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    int found = -1, count = 0;
    for (int t = 0; t < n; ++t) {
      if (table[table[s * n + t] * n + s] == s &&
          table[table[t * n + s] * n + t] == t) {
        found = found < 0 ? t : found;
        ++count;
      }
    }
    if (count != 1)
      fail(Err::NotInverse, "element " + std::to_string(s) + " has " +
                                std::to_string(count) + " generalized inverses");
    S.inv[s] = found;
  }

  S.idempotents = ElemSet(n);
  for (int e = 0; e < n; ++e)
    if (table[e * n + e] == e) S.idempotents.set(e);
  {
    auto ids = S.idempotents.to_vector();
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j)
        if (table[ids[i] * n + ids[j]] != table[ids[j] * n + ids[i]])
          fail(Err::NotInverse, "idempotents " + std::to_string(ids[i]) + " and " +
                                    std::to_string(ids[j]) + " do not commute");
  }

  auto detected = find_absorbing(table, n);
  if (declared_zero) {
    if (!detected || *detected != *declared_zero)
      fail(Err::BadZero,
           "declared zero " + std::to_string(*declared_zero) + " is not absorbing");
  }
  S.zero = detected;
  S.one = find_identity(table, n);

  S.down.assign(n, ElemSet(n));
  S.up.assign(n, ElemSet(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (table[table[t * n + S.inv[s]] * n + s] == s) {  // s = t * inv(s) * s
        S.down[t].set(s);
        S.up[s].set(t);
      }

  S.compat.assign(n, ElemSet(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (S.is_idem(table[S.inv[s] * n + t]) && S.is_idem(table[s * n + S.inv[t]]))
        S.compat[s].set(t);

  S.meet_tab.assign(size_t(n) * n, -1);
  S.join_tab.assign(size_t(n) * n, -1);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      ElemSet lower = S.down[s] & S.down[t];
      int m = -1;
      lower.for_each([&](int c) {
        if (lower.subset_of(S.down[c])) m = c;
      });
      S.meet_tab[s * n + t] = m;
      ElemSet upper = S.up[s] & S.up[t];
      int j = -1;
      upper.for_each([&](int c) {
        if (upper.subset_of(S.up[c])) j = c;
      });
      S.join_tab[s * n + t] = j;
    }

  return S;
}

bool compatible(InvSemigroup const& S, int s, int t) { return S.compat[s].test(t); }

bool orthogonal(InvSemigroup const& S, int s, int t) {
  ElemSet common = S.down[s] & S.down[t];
  if (S.zero) common.reset(*S.zero);
  return common.empty();
}

std::optional<int> meet(InvSemigroup const& S, int s, int t) {
  int m = S.meet_tab[s * S.n + t];
  return m < 0 ? std::nullopt : std::optional<int>(m);
}

std::optional<int> join_pair(InvSemigroup const& S, int s, int t) {
  int j = S.join_tab[s * S.n + t];
  return j < 0 ? std::nullopt : std::optional<int>(j);
}

std::optional<int> join(InvSemigroup const& S, ElemSet const& A) {
  if (A.empty()) {
    if (S.zero) return *S.zero;
    return std::nullopt;
  }
  auto elems = A.to_vector();
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (!compatible(S, elems[i], elems[j]))
        fail(Err::NotCompatible, "elements " + std::to_string(elems[i]) + " and " +
                                     std::to_string(elems[j]) +
                                     " are not compatible");
  ElemSet upper = ElemSet::all(S.n);
  for (int a : elems) upper &= S.up[a];
  int j = -1;
  upper.for_each([&](int c) {
    if (upper.subset_of(S.up[c])) j = c;
  });
  return j < 0 ? std::nullopt : std::optional<int>(j);
}

namespace {

// Distributivity over compatible pairs; the n-ary statements follow by
// induction because joins of compatible pairs stay compatible with (and
// distribute against) everything else once the binary laws hold.
bool distributive_pairwise(InvSemigroup const& S) {
  for (int s = 0; s < S.n; ++s)
    for (int t = s; t < S.n; ++t) {
      if (!compatible(S, s, t)) continue;
      int j = S.join_tab[s * S.n + t];
      if (j < 0) return false;
      for (int u = 0; u < S.n; ++u) {
        int us = S.mul(u, s), ut = S.mul(u, t);
        if (!compatible(S, us, ut)) return false;
        int ju = S.join_tab[us * S.n + ut];
        if (ju < 0 || ju != S.mul(u, j)) return false;
        int su = S.mul(s, u), tu = S.mul(t, u);
        if (!compatible(S, su, tu)) return false;
        int uj = S.join_tab[su * S.n + tu];
        if (uj < 0 || uj != S.mul(j, u)) return false;
      }
    }
  return true;
}

// E(S) as a generalized boolean algebra: relative complements below every
// idempotent. Assumes S distributive, so joins of idempotents exist and the
// idempotent lattice is distributive.
bool idempotents_generalized_boolean(InvSemigroup const& S) {
  auto idems = S.idempotents.to_vector();
  for (int f : idems)
    for (int e : idems) {
      if (!S.le(e, f)) continue;
      bool found = false;
      for (int g : idems) {
        if (!S.le(g, f)) continue;
        int m = S.meet_tab[e * S.n + g];
        int j = S.join_tab[e * S.n + g];
        if (m >= 0 && S.is_zero(m) && j == f) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  return true;
}

}  // namespace

Predicates predicates(InvSemigroup const& S) {
  if (!S.zero) fail(Err::NoZero, "predicates require a zero element");
  Predicates p;
  p.is_distributive = distributive_pairwise(S);

  p.is_meet_semigroup = true;
  for (int s = 0; s < S.n && p.is_meet_semigroup; ++s)
    for (int t = 0; t < S.n && p.is_meet_semigroup; ++t)
      if (S.meet_tab[s * S.n + t] < 0) p.is_meet_semigroup = false;

  p.is_weakly_boolean = p.is_distributive && idempotents_generalized_boolean(S);
  p.is_boolean = p.is_weakly_boolean && p.is_meet_semigroup;
  p.is_pseudogroup = p.is_distributive && S.one.has_value();

  // Always true on a finite carrier, but computed from the definition: the
  // set of common lower bounds must be generated by its maximal elements.
  p.has_weak_meet = true;
  for (int s = 0; s < S.n && p.has_weak_meet; ++s)
    for (int t = 0; t < S.n && p.has_weak_meet; ++t) {
      ElemSet common = S.down[s] & S.down[t];
      ElemSet maximal(S.n);
      common.for_each([&](int x) {
        bool is_max = true;
        common.for_each([&](int y) {
          if (y != x && S.le(x, y)) is_max = false;
        });
        if (is_max) maximal.set(x);
      });
      ElemSet generated(S.n);
      maximal.for_each([&](int m) { generated |= S.down[m]; });
      if (!(generated == common)) p.has_weak_meet = false;
    }
  return p;
}

int relative_complement(InvSemigroup const& S, int a, int b) {
  auto p = predicates(S);
  if (!p.is_weakly_boolean)
    fail(Err::NotWeaklyBoolean, "relative complements need a weakly boolean semigroup");
  if (!S.le(b, a))
    fail(Err::NotBelow, std::to_string(b) + " is not below " + std::to_string(a));
  int found = -1, count = 0;
  S.down[a].for_each([&](int x) {
    int m = S.meet_tab[x * S.n + b];
    int j = compatible(S, x, b) ? S.join_tab[x * S.n + b] : -1;
    if (m >= 0 && S.is_zero(m) && j == a) {
      found = found < 0 ? x : found;
      ++count;
    }
  });
  check_internal(count == 1, "relative complement must exist uniquely");
  return found;
}

InvSemigroup adjoin_zero(InvSemigroup const& S) {
  if (S.zero) fail(Err::AlreadyHasZero, "semigroup already has a zero");
  int n = S.n + 1, z = S.n;
  std::vector<int> table(size_t(n) * n, z);
  for (int s = 0; s < S.n; ++s)
    for (int t = 0; t < S.n; ++t) table[s * n + t] = S.mul(s, t);
  std::vector<std::string> labels;
  if (!S.labels.empty()) {
    labels = S.labels;
    labels.push_back("0");
  }
  return verify(table, n, z, std::move(labels));
}

bool is_group(InvSemigroup const& S) { return S.idempotents.count() == 1; }

}  // namespace invsem
