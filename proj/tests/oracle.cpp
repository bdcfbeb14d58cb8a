#include "oracle.hpp"

#include <stdexcept>

#include "invsem/semigroup.hpp"

namespace oracle {

Table from_semigroup(invsem::InvSemigroup const& S) {
  Table T;
  T.n = S.n;
  T.t = S.table;
  T.zero = S.zero ? *S.zero : -1;
  return T;
}

Verdict classify(Table const& T) {
  int n = T.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (T.mul(T.mul(a, b), c) != T.mul(a, T.mul(b, c)))
          return Verdict::NotAssociative;

  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    int count = 0;
    for (int b = 0; b < n; ++b)
      if (T.mul(T.mul(a, b), a) == a && T.mul(T.mul(b, a), b) == b) {
        ++count;
        inv[a] = b;
      }
    if (count != 1) return Verdict::NotInverse;
  }
  for (int e = 0; e < n; ++e) {
    if (T.mul(e, e) != e) continue;
    for (int f = 0; f < n; ++f)
      if (T.mul(f, f) == f && T.mul(e, f) != T.mul(f, e))
        return Verdict::NotInverse;
  }

  if (T.zero >= 0) {
    for (int a = 0; a < n; ++a)
      if (T.mul(T.zero, a) != T.zero || T.mul(a, T.zero) != T.zero)
        return Verdict::BadZero;
  }
  return Verdict::Ok;
}

Structure analyze(Table const& T) {
  if (classify(T) != Verdict::Ok)
    throw std::logic_error("oracle: table is not an inverse semigroup");
  Structure S;
  S.tab = T;
  int n = T.n;
  S.inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (T.mul(T.mul(a, b), a) == a && T.mul(T.mul(b, a), b) == b)
        S.inv[a] = b;
  S.idem.assign(n, 0);
  for (int a = 0; a < n; ++a) S.idem[a] = T.mul(a, a) == a;
  S.leq.assign(n, std::vector<char>(n, 0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      S.leq[s][t] = T.mul(t, T.mul(S.inv[s], s)) == s;
  return S;
}

bool compatible(Structure const& S, int a, int b) {
  return S.is_idem(S.mul(S.inv[a], b)) && S.is_idem(S.mul(a, S.inv[b]));
}

std::optional<int> meet(Structure const& S, int a, int b) {
  int best = -1;
  for (int x = 0; x < S.n(); ++x) {
    if (!S.le(x, a) || !S.le(x, b)) continue;
    if (best < 0 || S.le(best, x)) best = x;
  }
  if (best < 0) return std::nullopt;
  for (int x = 0; x < S.n(); ++x)
    if (S.le(x, a) && S.le(x, b) && !S.le(x, best)) return std::nullopt;
  return best;
}

std::optional<int> join(Structure const& S, int a, int b) {
  if (!compatible(S, a, b)) return std::nullopt;
  int best = -1;
  for (int x = 0; x < S.n(); ++x) {
    if (!S.le(a, x) || !S.le(b, x)) continue;
    if (best < 0 || S.le(x, best)) best = x;
  }
  if (best < 0) return std::nullopt;
  for (int x = 0; x < S.n(); ++x)
    if (S.le(a, x) && S.le(b, x) && !S.le(best, x)) return std::nullopt;
  return best;
}

uint64_t down_mask(Structure const& S, int a) {
  uint64_t m = 0;
  for (int x = 0; x < S.n(); ++x)
    if (S.le(x, a)) m |= uint64_t(1) << x;
  return m;
}

bool is_filter_mask(Structure const& S, uint64_t F) {
  if (F == 0) return false;
  if (S.tab.zero >= 0 && (F >> S.tab.zero) & 1) return false;
  int n = S.n();
  for (int x = 0; x < n; ++x) {
    if (!((F >> x) & 1)) continue;
    for (int y = 0; y < n; ++y)
      if (S.le(x, y) && !((F >> y) & 1)) return false;
  }
  for (int x = 0; x < n; ++x) {
    if (!((F >> x) & 1)) continue;
    for (int y = 0; y < n; ++y) {
      if (!((F >> y) & 1)) continue;
      bool bounded = false;
      for (int z = 0; z < n; ++z)
        if (((F >> z) & 1) && S.le(z, x) && S.le(z, y)) {
          bounded = true;
          break;
        }
      if (!bounded) return false;
    }
  }
  return true;
}

std::vector<uint64_t> filters(Structure const& S) {
  if (S.n() > 16) throw std::logic_error("oracle: filter scan capped at 16");
  std::vector<uint64_t> out;
  for (uint64_t F = 1; F < (uint64_t(1) << S.n()); ++F)
    if (is_filter_mask(S, F)) out.push_back(F);
  return out;
}

bool is_ultra(Structure const& S, uint64_t F) {
  for (uint64_t G : filters(S))
    if (G != F && (G & F) == F) return false;
  return true;
}

bool is_prime(Structure const& S, uint64_t F) {
  for (int a = 0; a < S.n(); ++a)
    for (int b = 0; b < S.n(); ++b) {
      auto j = join(S, a, b);
      if (!j || !((F >> *j) & 1)) continue;
      if (!((F >> a) & 1) && !((F >> b) & 1)) return false;
    }
  return true;
}

bool arrow(Structure const& S, int a, uint64_t B) {
  for (int y = 0; y < S.n(); ++y) {
    if (S.is_zero(y) || !S.le(y, a)) continue;
    bool met = false;
    for (int b = 0; b < S.n() && !met; ++b) {
      if (!((B >> b) & 1)) continue;
      for (int z = 0; z < S.n(); ++z)
        if (!S.is_zero(z) && S.le(z, y) && S.le(z, b)) {
          met = true;
          break;
        }
    }
    if (!met) return false;
  }
  return true;
}

bool is_tight(Structure const& S, uint64_t F) {
  for (int x = 0; x < S.n(); ++x) {
    if (!((F >> x) & 1)) continue;
    uint64_t down = down_mask(S, x);
    if (S.tab.zero >= 0) down &= ~(uint64_t(1) << S.tab.zero);
    std::vector<int> elems;
    for (int b = 0; b < S.n(); ++b)
      if ((down >> b) & 1) elems.push_back(b);
    for (uint64_t pick = 0; pick < (uint64_t(1) << elems.size()); ++pick) {
      uint64_t B = 0;
      for (size_t i = 0; i < elems.size(); ++i)
        if ((pick >> i) & 1) B |= uint64_t(1) << elems[i];
      if (!arrow(S, x, B)) continue;
      if ((B & F) == 0) return false;
    }
  }
  return true;
}

std::vector<uint64_t> tight_filters(Structure const& S) {
  std::vector<uint64_t> out;
  for (uint64_t F : filters(S))
    if (is_tight(S, F)) out.push_back(F);
  return out;
}

std::vector<uint64_t> ultra_filters(Structure const& S) {
  std::vector<uint64_t> out;
  for (uint64_t F : filters(S))
    if (is_ultra(S, F)) out.push_back(F);
  return out;
}

bool all_idempotent(Structure const& S) {
  for (int x = 0; x < S.n(); ++x)
    if (!S.is_idem(x)) return false;
  return true;
}

bool distributive(Structure const& S) {
  for (int a = 0; a < S.n(); ++a)
    for (int b = 0; b < S.n(); ++b) {
      if (!compatible(S, a, b)) continue;
      auto j = join(S, a, b);
      if (!j) return false;
      for (int c = 0; c < S.n(); ++c) {
        auto l = join(S, S.mul(c, a), S.mul(c, b));
        if (!l || *l != S.mul(c, *j)) return false;
        auto r = join(S, S.mul(a, c), S.mul(b, c));
        if (!r || *r != S.mul(*j, c)) return false;
      }
    }
  return true;
}

}  // namespace oracle
