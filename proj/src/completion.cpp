#include "invsem/completion.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "invsem/par.hpp"

namespace invsem {

namespace {

constexpr int kMaxParentBits = 24;
constexpr int kMaxIdeals = 4096;
constexpr int kMaxQuantale = 512;

std::string carrier_label(InvSemigroup const& S, ElemSet const& A) {
  std::string out = "{";
  bool first = true;
  A.for_each([&](int a) {
    if (!first) out += ",";
    out += S.label(a);
    first = false;
  });
  out += "}";
  return out;
}

ElemSet set_product(InvSemigroup const& S, ElemSet const& A, ElemSet const& B) {
  ElemSet P(S.n);
  A.for_each([&](int a) {
    B.for_each([&](int b) { P.set(S.mul(a, b)); });
  });
  return P;
}

using Post = std::function<ElemSet(ElemSet const&)>;

// Builds the completion semigroup on the given carrier family: the product
// of two carriers is post(set product), which must land back in the family.
CompletionSemigroup assemble(InvSemigroup const& S, std::vector<ElemSet> carriers,
                             Post const& post, std::string flavor) {
  int m = int(carriers.size());
  check_internal(m > 0, "completion carrier family is empty");
  check_internal(std::is_sorted(carriers.begin(), carriers.end()) &&
                     std::adjacent_find(carriers.begin(), carriers.end()) ==
                         carriers.end(),
                 "completion carriers not in strict ascending order");

  std::unordered_map<ElemSet, int, ElemSetHash> idx;
  for (int i = 0; i < m; ++i) idx.emplace(carriers[i], i);

  std::vector<int> table(size_t(m) * m, -1);
  std::atomic<bool> escaped{false};
  par::parallel_for(m, [&](int64_t i) {
    for (int j = 0; j < m; ++j) {
      ElemSet P = post(set_product(S, carriers[i], carriers[j]));
      auto it = idx.find(P);
      if (it == idx.end()) {
        escaped.store(true);
        return;
      }
      table[size_t(i) * m + j] = it->second;
    }
  });
  check_internal(!escaped.load(),
                 "carrier family is not closed under the induced product");

  std::optional<int> zid;
  if (S.zero) {
    auto it = idx.find(post(S.down[*S.zero]));
    check_internal(it != idx.end(), "zero ideal missing from carrier family");
    zid = it->second;
  }

  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = carrier_label(S, carriers[i]);

  CompletionSemigroup out;
  out.parent = S;
  out.sg = verify(table, m, zid, labels);
  out.carriers = std::move(carriers);
  out.flavor = std::move(flavor);

  out.iota.resize(S.n, -1);
  for (int s = 0; s < S.n; ++s) {
    auto it = idx.find(post(S.down[s]));
    check_internal(it != idx.end(), "principal ideal missing from carrier family");
    out.iota[s] = it->second;
  }
  for (int s = 0; s < S.n; ++s)
    for (int t = 0; t < S.n; ++t)
      check_internal(out.sg.mul(out.iota[s], out.iota[t]) ==
                         out.iota[S.mul(s, t)],
                     "embedding into the completion is not multiplicative");
  return out;
}

void check_iota_injective(CompletionSemigroup const& c) {
  for (int s = 0; s < c.parent.n; ++s)
    for (int t = s + 1; t < c.parent.n; ++t)
      check_internal(c.iota[s] != c.iota[t],
                     "completion embedding collapsed distinct elements");
}

// Every carrier is the join, inside the completion, of its principal ideals;
// that is the finite-generation statement for this family.
void check_finitely_generated(CompletionSemigroup const& c) {
  for (int i = 0; i < c.sg.n; ++i) {
    ElemSet im(c.sg.n);
    c.carriers[i].for_each([&](int s) { im.set(c.iota[s]); });
    auto j = join(c.sg, im);
    check_internal(j && *j == i,
                   "ideal is not the join of its principal ideals");
  }
}

}  // namespace

int CompletionSemigroup::index_of(ElemSet const& carrier) const {
  auto it = std::lower_bound(carriers.begin(), carriers.end(), carrier);
  if (it == carriers.end() || !(*it == carrier)) return -1;
  return int(it - carriers.begin());
}

std::vector<ElemSet> compatible_order_ideals(InvSemigroup const& S) {
  if (S.n > kMaxParentBits)
    fail(Err::TooLarge, "order ideal sweep needs 2^" + std::to_string(S.n) +
                            " subset candidates; the cap is 2^" +
                            std::to_string(kMaxParentBits));
  std::vector<uint32_t> down_mask(S.n), compat_mask(S.n);
  for (int a = 0; a < S.n; ++a) {
    uint32_t d = 0, c = 0;
    S.down[a].for_each([&](int x) { d |= uint32_t(1) << x; });
    S.compat[a].for_each([&](int x) { c |= uint32_t(1) << x; });
    down_mask[a] = d;
    compat_mask[a] = c;
  }

  int64_t total = int64_t(1) << S.n;
  std::vector<uint8_t> ok(size_t(total), 0);
  par::parallel_for(total, [&](int64_t mi) {
    uint32_t mask = uint32_t(mi);
    if (!mask) return;
    uint32_t rest = mask;
    while (rest) {
      int a = __builtin_ctz(rest);
      rest &= rest - 1;
      if (down_mask[a] & ~mask) return;    // not down-closed
      if (mask & ~compat_mask[a]) return;  // an incompatible pair
    }
    ok[size_t(mi)] = 1;
  });

  std::vector<ElemSet> out;
  for (int64_t mi = 1; mi < total; ++mi) {
    if (!ok[size_t(mi)]) continue;
    ElemSet A(S.n);
    uint32_t rest = uint32_t(mi);
    while (rest) {
      int a = __builtin_ctz(rest);
      rest &= rest - 1;
      A.set(a);
    }
    out.push_back(std::move(A));
    if (int(out.size()) > kMaxIdeals)
      fail(Err::TooLarge, "more than " + std::to_string(kMaxIdeals) +
                              " compatible order ideals");
  }
  return out;
}

ElemSet down_closure(InvSemigroup const& S, ElemSet A) {
  ElemSet out(S.n);
  A.for_each([&](int a) { out |= S.down[a]; });
  return out;
}

ElemSet vee_closure(InvSemigroup const& S, ElemSet A) {
  ElemSet cur = down_closure(S, A);
  for (;;) {
    ElemSet next = cur;
    auto v = cur.to_vector();
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j) {
        int jn = S.join_tab[v[i] * S.n + v[j]];
        if (jn >= 0) next.set(jn);
      }
    if (next == cur) return cur;
    cur = down_closure(S, next);
  }
}

ElemSet coverage_closure(Coverage const& cov, ElemSet const& A) {
  InvSemigroup const& S = *cov.S;
  ElemSet out(S.n);
  for (int x = 0; x < S.n; ++x) {
    bool in = false;
    switch (cov.kind) {
      case CoverageKind::Trivial:
        in = A.test(x);
        break;
      case CoverageKind::Join: {
        auto j = join(S, A & S.down[x]);
        in = j && *j == x;
        break;
      }
      case CoverageKind::Dense:
      case CoverageKind::Tight:
        in = arrow(S, x, A & S.down[x]);
        break;
      case CoverageKind::Custom:
        for (auto const& X : cov.stored[x])
          if (X.subset_of(A)) {
            in = true;
            break;
          }
        break;
    }
    if (in) out.set(x);
  }
  return out;
}

CompletionSemigroup schein_completion(InvSemigroup const& S) {
  auto ideals = compatible_order_ideals(S);
  Post keep = [&S](ElemSet const& P) {
    check_internal(down_closure(S, P) == P, "ideal product is not down-closed");
    return P;
  };
  auto comp = assemble(S, std::move(ideals), keep, "schein");
  check_iota_injective(comp);
  return comp;
}

CompletionSemigroup idl_completion(InvSemigroup const& S) {
  if (!predicates(S).is_distributive)
    fail(Err::NotDistributive, "join-ideal completion wants a distributive parent");
  auto ideals = compatible_order_ideals(S);
  std::vector<ElemSet> closed;
  for (auto& A : ideals)
    if (vee_closure(S, A) == A) closed.push_back(A);
  Post post = [&S](ElemSet const& P) { return vee_closure(S, P); };
  auto comp = assemble(S, std::move(closed), post, "idl");
  check_iota_injective(comp);

  // The embedding keeps the joins the parent already has.
  for (int s = 0; s < S.n; ++s)
    for (int t = 0; t < S.n; ++t) {
      int j = S.join_tab[s * S.n + t];
      if (j < 0) continue;
      auto cj = join_pair(comp.sg, comp.iota[s], comp.iota[t]);
      check_internal(cj && *cj == comp.iota[j],
                     "embedding dropped an existing join");
    }
  auto preds = predicates(comp.sg);
  check_internal(preds.is_pseudogroup,
                 "join-ideal completion is not a pseudogroup");
  return comp;
}

CompletionSemigroup d_completion(InvSemigroup const& S) {
  auto ideals = compatible_order_ideals(S);
  Post keep = [&S](ElemSet const& P) {
    check_internal(down_closure(S, P) == P, "ideal product is not down-closed");
    return P;
  };
  auto comp = assemble(S, std::move(ideals), keep, "dist");
  check_iota_injective(comp);
  check_finitely_generated(comp);
  check_internal(predicates(comp.sg).is_pseudogroup,
                 "ideal completion is not a pseudogroup");
  return comp;
}

ElemSet finite_elements(CompletionSemigroup const& comp, int literal_limit) {
  int m = comp.sg.n;
  ElemSet out = ElemSet::all(m);
  // A finite directed set contains its own join, so every element passes;
  // sweep the definition literally while that stays affordable.
  if (m > literal_limit) return out;
  for (uint32_t mask = 1; mask < (uint32_t(1) << m); ++mask) {
    ElemSet D(m);
    for (int b = 0; b < m; ++b)
      if (mask & (uint32_t(1) << b)) D.set(b);
    auto v = D.to_vector();
    bool directed = true;
    for (size_t i = 0; i < v.size() && directed; ++i)
      for (size_t j = i + 1; j < v.size() && directed; ++j) {
        bool ub = false;
        for (int k : v)
          if (comp.sg.le(v[i], k) && comp.sg.le(v[j], k)) {
            ub = true;
            break;
          }
        directed = ub;
      }
    if (!directed) continue;
    auto jn = join(comp.sg, D);
    if (!jn) continue;
    for (int a = 0; a < m; ++a) {
      if (!comp.sg.le(a, *jn)) continue;
      bool dominated = false;
      for (int k : v)
        if (comp.sg.le(a, k)) {
          dominated = true;
          break;
        }
      if (!dominated) out.reset(a);
    }
  }
  return out;
}

CompletionSemigroup closed_completion(InvSemigroup const& S, Coverage const& cov) {
  if (cov.S->n != S.n || cov.S->table != S.table)
    fail(Err::DifferentParents, "coverage belongs to a different semigroup");
  if (!is_idempotent_pure_coverage(cov))
    fail(Err::NotIdempotentPure, "closed completion wants an idempotent-pure coverage");

  auto ideals = compatible_order_ideals(S);
  int m = int(ideals.size());
  std::unordered_map<ElemSet, int, ElemSetHash> idx;
  for (int i = 0; i < m; ++i) idx.emplace(ideals[i], i);

  std::vector<ElemSet> nu(m);
  par::parallel_for(m, [&](int64_t i) { nu[i] = coverage_closure(cov, ideals[i]); });

  // The closure operator must be a nucleus on the ideal family: inflationary,
  // monotone, idempotent, and lax for the product.
  std::atomic<bool> n1{true}, n2{true}, n3{true}, n4{true};
  par::parallel_for(m, [&](int64_t i) {
    if (!ideals[i].subset_of(nu[i])) n1.store(false);
    if (!(coverage_closure(cov, nu[i]) == nu[i])) n3.store(false);
    for (int j = 0; j < m; ++j) {
      if (ideals[i].subset_of(ideals[j]) && !nu[i].subset_of(nu[j]))
        n2.store(false);
      ElemSet prod = set_product(S, ideals[i], ideals[j]);
      auto it = idx.find(prod);
      if (it == idx.end()) {
        n4.store(false);
        continue;
      }
      if (!set_product(S, nu[i], nu[j]).subset_of(nu[it->second]))
        n4.store(false);
    }
  });
  check_internal(n1.load(), "coverage closure is not inflationary");
  check_internal(n2.load(), "coverage closure is not monotone");
  check_internal(n3.load(), "coverage closure is not idempotent");
  check_internal(n4.load(), "coverage closure is not lax for the product");

  std::vector<ElemSet> closed;
  for (int i = 0; i < m; ++i)
    if (nu[i] == ideals[i]) closed.push_back(ideals[i]);
  Post post = [&cov](ElemSet const& P) { return coverage_closure(cov, P); };
  auto comp = assemble(S, std::move(closed), post, "closed");

  // The embedding sends every stored or arrow-certified cover to a join.
  for (int a = 0; a < S.n; ++a)
    for (auto const& X : cov.members_upto(a, 4)) {
      ElemSet im(comp.sg.n);
      X.for_each([&](int x) { im.set(comp.iota[x]); });
      auto j = join(comp.sg, im);
      check_internal(j && *j == comp.iota[a],
                     "embedding does not send covers to joins");
    }
  return comp;
}

namespace {

TightCompletion completion_via(InvSemigroup const& S, CoverageKind kind,
                               char const* flavor) {
  Coverage cov = builtin_coverage(S, kind);
  TightCompletion tc;
  tc.sq = separative_quotient(cov);
  Coverage qcov = builtin_coverage(tc.sq.quotient, kind);
  tc.comp = closed_completion(tc.sq.quotient, qcov);
  tc.comp.flavor = flavor;

  ElemSet fin = finite_elements(tc.comp);
  check_internal(fin == ElemSet::all(tc.comp.sg.n),
                 "a completion element failed the finiteness sweep");

  tc.delta.resize(S.n);
  for (int s = 0; s < S.n; ++s) tc.delta[s] = tc.comp.iota[tc.sq.cls[s]];

  // delta turns the parent's covers into joins in the completion.
  for (int a = 0; a < S.n; ++a)
    for (auto const& X : cov.members_upto(a, 4)) {
      ElemSet im(tc.comp.sg.n);
      X.for_each([&](int x) { im.set(tc.delta[x]); });
      auto j = join(tc.comp.sg, im);
      check_internal(j && *j == tc.delta[a],
                     "completion map does not send covers to joins");
    }
  return tc;
}

}  // namespace

TightCompletion tight_completion(InvSemigroup const& S) {
  return completion_via(S, CoverageKind::Tight, "tight");
}

TightCompletion dense_pseudogroup(InvSemigroup const& S) {
  TightCompletion dense = completion_via(S, CoverageKind::Dense, "dense");
  TightCompletion tight = completion_via(S, CoverageKind::Tight, "tight");
  check_internal(dense.sq.cls == tight.sq.cls &&
                     dense.comp.carriers == tight.comp.carriers &&
                     dense.comp.sg.table == tight.comp.sg.table &&
                     dense.delta == tight.delta,
                 "dense and tight completion pipelines disagree");
  check_internal(predicates(dense.comp.sg).is_boolean,
                 "dense completion is not boolean");
  check_internal(star_complement_laws(dense.comp.sg),
                 "orthogonal complement laws fail in the dense completion");
  return dense;
}

bool star_complement_laws(InvSemigroup const& S) {
  if (!S.zero) fail(Err::NoZero, "complement laws need a zero");
  auto star = [&](int e) -> std::optional<int> {
    ElemSet orth(S.n);
    S.idempotents.for_each([&](int f) {
      if (S.meet_tab[e * S.n + f] == *S.zero) orth.set(f);
    });
    return join(S, orth);
  };
  bool ok = true;
  S.idempotents.for_each([&](int e) {
    auto es = star(e);
    if (!es) {
      ok = false;
      return;
    }
    if (S.meet_tab[e * S.n + *es] != *S.zero) ok = false;
    auto ess = star(*es);
    if (!ess || *ess != e) ok = false;
  });
  return ok;
}

int Quantale::index_of(ElemSet const& A) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), A);
  if (it == elems.end() || !(*it == A)) return -1;
  return int(it - elems.begin());
}

Quantale enveloping_quantale(InvSemigroup const& S) {
  if (!S.zero) fail(Err::NoZero, "enveloping quantale wants a zero");
  if (!predicates(S).is_distributive)
    fail(Err::NotDistributive, "enveloping quantale wants a distributive parent");
  if (S.n > 20)
    fail(Err::TooLarge, "down-set sweep needs 2^" + std::to_string(S.n) +
                            " candidates; the cap is 2^20");

  std::vector<uint32_t> down_mask(S.n);
  for (int a = 0; a < S.n; ++a) {
    uint32_t d = 0;
    S.down[a].for_each([&](int x) { d |= uint32_t(1) << x; });
    down_mask[a] = d;
  }

  int64_t total = int64_t(1) << S.n;
  std::vector<uint8_t> ok(size_t(total), 0);
  par::parallel_for(total, [&](int64_t mi) {
    uint32_t mask = uint32_t(mi);
    uint32_t rest = mask;
    while (rest) {
      int a = __builtin_ctz(rest);
      rest &= rest - 1;
      if (down_mask[a] & ~mask) return;
    }
    uint32_t ra = mask;
    while (ra) {
      int a = __builtin_ctz(ra);
      ra &= ra - 1;
      uint32_t rb = ra;
      while (rb) {
        int b = __builtin_ctz(rb);
        rb &= rb - 1;
        int j = S.join_tab[a * S.n + b];
        if (j >= 0 && !(mask & (uint32_t(1) << j))) return;
      }
    }
    ok[size_t(mi)] = 1;
  });

  Quantale Q;
  Q.parent = S;
  for (int64_t mi = 0; mi < total; ++mi) {
    if (!ok[size_t(mi)]) continue;
    ElemSet A(S.n);
    uint32_t rest = uint32_t(mi);
    while (rest) {
      int a = __builtin_ctz(rest);
      rest &= rest - 1;
      A.set(a);
    }
    Q.elems.push_back(std::move(A));
    if (int(Q.elems.size()) > kMaxQuantale)
      fail(Err::TooLarge, "more than " + std::to_string(kMaxQuantale) +
                              " join-closed down-sets");
  }

  int m = Q.size();
  Q.bottom = Q.index_of(ElemSet(S.n));
  Q.top = Q.index_of(ElemSet::all(S.n));
  check_internal(Q.bottom == 0 && Q.top == m - 1,
                 "quantale is missing its bounds");

  std::unordered_map<ElemSet, int, ElemSetHash> idx;
  for (int i = 0; i < m; ++i) idx.emplace(Q.elems[i], i);
  auto lookup = [&](ElemSet const& A) {
    auto it = idx.find(A);
    check_internal(it != idx.end(), "quantale operation escaped the lattice");
    return it->second;
  };

  Q.meet_tab.assign(size_t(m) * m, -1);
  Q.join_tab.assign(size_t(m) * m, -1);
  Q.mul_tab.assign(size_t(m) * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Q.meet_tab[size_t(i) * m + j] = lookup(Q.elems[i] & Q.elems[j]);
      Q.join_tab[size_t(i) * m + j] =
          lookup(vee_closure(S, Q.elems[i] | Q.elems[j]));
      Q.mul_tab[size_t(i) * m + j] =
          lookup(vee_closure(S, set_product(S, Q.elems[i], Q.elems[j])));
    }

  if (m <= 128) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        check_internal(Q.meet(a, b) == Q.meet(b, a) && Q.join(a, b) == Q.join(b, a),
                       "quantale lattice operations are not commutative");
        check_internal(Q.meet(a, Q.join(a, b)) == a && Q.join(a, Q.meet(a, b)) == a,
                       "quantale absorption laws fail");
        for (int c = 0; c < m; ++c) {
          check_internal(Q.mul(Q.mul(a, b), c) == Q.mul(a, Q.mul(b, c)),
                         "quantale product is not associative");
          check_internal(Q.mul(a, Q.join(b, c)) == Q.join(Q.mul(a, b), Q.mul(a, c)) &&
                             Q.mul(Q.join(b, c), a) ==
                                 Q.join(Q.mul(b, a), Q.mul(c, a)),
                         "quantale product does not distribute over joins");
        }
      }
  }
  return Q;
}

}  // namespace invsem
