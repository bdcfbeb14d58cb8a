#include "invsem/coverage.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "invsem/par.hpp"

namespace invsem {

namespace {

ElemSet nonzero_down(InvSemigroup const& S, int x) {
  ElemSet d = S.down[x];
  if (S.zero) d.reset(*S.zero);
  return d;
}

}  // namespace

bool arrow(InvSemigroup const& S, int a, ElemSet const& B) {
  bool ok = true;
  nonzero_down(S, a).for_each([&](int x) {
    if (!ok) return;
    bool found = false;
    B.for_each([&](int b) {
      if (found) return;
      if ((nonzero_down(S, x) & S.down[b]).count()) found = true;
    });
    if (!found) ok = false;
  });
  return ok;
}

char const* coverage_kind_name(CoverageKind k) {
  switch (k) {
    case CoverageKind::Trivial: return "trivial";
    case CoverageKind::Join: return "join";
    case CoverageKind::Dense: return "dense";
    case CoverageKind::Tight: return "tight";
    case CoverageKind::Custom: return "custom";
  }
  return "?";
}

CoverageKind coverage_kind_from(std::string const& name) {
  if (name == "trivial") return CoverageKind::Trivial;
  if (name == "join") return CoverageKind::Join;
  if (name == "dense") return CoverageKind::Dense;
  if (name == "tight") return CoverageKind::Tight;
  if (name == "custom") return CoverageKind::Custom;
  fail(Err::ParseError, "unknown coverage kind " + name);
}

bool Coverage::contains(int a, ElemSet const& X) const {
  if (!X.subset_of(S->down[a])) return false;
  switch (kind) {
    case CoverageKind::Trivial:
      return X == ElemSet::single(S->n, a);
    case CoverageKind::Join: {
      auto j = join(*S, X);
      return j && *j == a;
    }
    case CoverageKind::Dense:
    case CoverageKind::Tight:
      return arrow(*S, a, X);
    case CoverageKind::Custom:
      for (ElemSet const& Y : stored[a])
        if (Y == X) return true;
      return false;
  }
  return false;
}

std::vector<ElemSet> Coverage::members(int a, int64_t limit) const {
  if (!lazy()) {
    std::vector<ElemSet> out = stored[a];
    std::sort(out.begin(), out.end());
    return out;
  }
  auto elems = S->down[a].to_vector();
  int k = int(elems.size());
  if (k >= 62 || (int64_t(1) << k) > limit)
    fail(Err::TooLarge, "cover family of element " + std::to_string(a) + " has 2^" +
                            std::to_string(k) + " candidates");
  std::vector<ElemSet> out;
  for (int64_t mask = 0; mask < (int64_t(1) << k); ++mask) {
    ElemSet X(S->n);
    for (int i = 0; i < k; ++i)
      if (mask & (int64_t(1) << i)) X.set(elems[i]);
    if (contains(a, X)) out.push_back(X);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemSet> Coverage::members_upto(int a, int max_size) const {
  if (!lazy()) {
    std::vector<ElemSet> out;
    for (ElemSet const& X : stored[a])
      if (int(X.count()) <= max_size) out.push_back(X);
    std::sort(out.begin(), out.end());
    return out;
  }
  auto elems = S->down[a].to_vector();
  int k = int(elems.size());
  std::vector<ElemSet> out;
  std::vector<int> pick;
  auto emit = [&]() {
    ElemSet X(S->n);
    for (int i : pick) X.set(elems[i]);
    if (contains(a, X)) out.push_back(X);
  };
  // combinations of every size up to max_size
  std::function<void(int, int)> rec = [&](int start, int left) {
    emit();
    if (left == 0) return;
    for (int i = start; i < k; ++i) {
      pick.push_back(i);
      rec(i + 1, left - 1);
      pick.pop_back();
    }
  };
  // emit() fires once per prefix, so deduplicate via sort+unique at the end
  rec(0, std::min(max_size, k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Coverage builtin_coverage(InvSemigroup const& S, CoverageKind kind) {
  if (kind == CoverageKind::Custom)
    fail(Err::ParseError, "custom coverages come from custom_coverage");
  Coverage cov;
  cov.S = &S;
  cov.kind = kind;
  if (kind == CoverageKind::Join && !predicates(S).is_distributive)
    fail(Err::NotDistributive, "the join coverage wants a distributive semigroup");
  if (kind != CoverageKind::Trivial && !S.zero)
    fail(Err::NoZero, "this coverage kind wants a zero");
  if (kind == CoverageKind::Trivial) {
    cov.stored.resize(S.n);
    for (int a = 0; a < S.n; ++a) cov.stored[a] = {ElemSet::single(S.n, a)};
  } else if (kind == CoverageKind::Join) {
    cov.stored.resize(S.n);
    for (int a = 0; a < S.n; ++a) {
      auto elems = S.down[a].to_vector();
      int k = int(elems.size());
      if (k >= 24) fail(Err::TooLarge, "join coverage materialization over 2^24");
      for (int64_t mask = 0; mask < (int64_t(1) << k); ++mask) {
        ElemSet X(S.n);
        for (int i = 0; i < k; ++i)
          if (mask & (int64_t(1) << i)) X.set(elems[i]);
        auto j = join(S, X);
        if (j && *j == a) cov.stored[a].push_back(X);
      }
      std::sort(cov.stored[a].begin(), cov.stored[a].end());
    }
  }
  return cov;
}

Coverage custom_coverage(InvSemigroup const& S,
                         std::vector<std::vector<ElemSet>> covers) {
  if (int(covers.size()) != S.n)
    fail(Err::ParseError, "custom coverage wants one family per element");
  for (int a = 0; a < S.n; ++a)
    for (ElemSet const& X : covers[a])
      if (!X.subset_of(S.down[a]))
        fail(Err::ParseError, "cover of " + std::to_string(a) +
                                  " is not a subset of its down-set");
  Coverage cov;
  cov.S = &S;
  cov.kind = CoverageKind::Custom;
  cov.stored = std::move(covers);
  for (auto& fam : cov.stored) std::sort(fam.begin(), fam.end());
  return cov;
}

Coverage coverage_from_json(InvSemigroup const& S, io::Json const& j) {
  if (!j.is_object() || !j.contains("covers") || !j["covers"].is_object())
    fail(Err::ParseError, "coverage file wants a covers object");
  std::vector<std::vector<ElemSet>> covers(S.n);
  for (auto const& [key, fam] : j["covers"].items()) {
    int a = -1;
    try {
      a = std::stoi(key);
    } catch (std::logic_error const&) {
      fail(Err::ParseError, "cover keys must be element ids");
    }
    if (a < 0 || a >= S.n) fail(Err::ParseError, "cover key out of range");
    if (!fam.is_array()) fail(Err::ParseError, "cover families must be arrays");
    for (auto const& lst : fam) {
      ElemSet X(S.n);
      for (auto const& v : lst) {
        int x = v.get<int>();
        if (x < 0 || x >= S.n) fail(Err::ParseError, "cover member out of range");
        X.set(x);
      }
      covers[a].push_back(X);
    }
  }
  return custom_coverage(S, std::move(covers));
}

io::Json AxiomReport::to_json() const {
  io::Json j;
  j["r_ok"] = r_ok;
  j["i_ok"] = i_ok;
  j["ms_ok"] = ms_ok;
  j["t_ok"] = t_ok;
  j["r_exact"] = r_exact;
  j["i_exact"] = i_exact;
  j["cap"] = cap;
  j["checked_i"] = checked_i;
  j["checked_ms"] = checked_ms;
  j["checked_t"] = checked_t;
  j["t_budget_hit"] = t_budget_hit;
  j["violation"] = violation;
  return j;
}

AxiomReport check_axioms(Coverage const& cov, int cap, int64_t t_budget) {
  InvSemigroup const& S = *cov.S;
  AxiomReport rep;
  rep.cap = cap;

  for (int a = 0; a < S.n && rep.r_ok; ++a)
    if (!cov.contains(a, ElemSet::single(S.n, a))) {
      rep.r_ok = false;
      rep.violation = "(R) fails at " + S.label(a);
    }

  for (int a = 0; a < S.n && rep.i_ok; ++a) {
    std::vector<ElemSet> fam;
    try {
      fam = cov.members(a);
    } catch (Error const& e) {
      if (e.code() != Err::TooLarge) throw;
      fam = cov.members_upto(a, cap);
      rep.i_exact = false;
    }
    for (ElemSet const& X : fam) {
      ElemSet Xi(S.n);
      X.for_each([&](int x) { Xi.set(S.inv[x]); });
      ++rep.checked_i;
      if (!cov.contains(S.inv[a], Xi)) {
        rep.i_ok = false;
        rep.violation = "(I) fails at " + S.label(a);
        break;
      }
    }
  }

  std::vector<std::vector<ElemSet>> memo(S.n);
  for (int a = 0; a < S.n; ++a) memo[a] = cov.members_upto(a, cap);

  // (MS), parallel over the left factor with a deterministic merge
  std::vector<std::string> ms_viol(S.n);
  std::vector<int64_t> ms_count(S.n, 0);
  par::parallel_for(S.n, [&](int64_t a) {
    for (int b = 0; b < S.n; ++b) {
      int ab = S.mul(int(a), b);
      for (ElemSet const& X : memo[a])
        for (ElemSet const& Y : memo[b]) {
          ElemSet XY(S.n);
          X.for_each([&](int x) { Y.for_each([&](int y) { XY.set(S.mul(x, y)); }); });
          ++ms_count[a];
          if (!cov.contains(ab, XY)) {
            if (ms_viol[a].empty())
              ms_viol[a] = "(MS) fails at " + S.label(int(a)) + "," + S.label(b);
            return;
          }
        }
    }
  });
  rep.checked_ms = std::accumulate(ms_count.begin(), ms_count.end(), int64_t(0));
  for (int a = 0; a < S.n; ++a)
    if (!ms_viol[a].empty()) {
      rep.ms_ok = false;
      if (rep.violation.empty()) rep.violation = ms_viol[a];
      break;
    }

  // (T): replace each member of a cover by one of its own covers
  int64_t budget = t_budget;
  for (int a = 0; a < S.n && rep.t_ok && !rep.t_budget_hit; ++a) {
    for (ElemSet const& X : memo[a]) {
      auto xs = X.to_vector();
      std::vector<size_t> idx(xs.size(), 0);
      bool done = xs.empty();
      if (done) {
        // empty cover refines to the empty union
        ++rep.checked_t;
        if (!cov.contains(a, ElemSet(S.n))) {
          rep.t_ok = false;
          rep.violation = "(T) fails at " + S.label(a);
        }
        continue;
      }
      bool refinable = true;
      for (int x : xs)
        if (memo[x].empty()) refinable = false;
      if (!refinable) continue;  // no refinements exist, nothing to require
      while (!done) {
        if (--budget < 0) {
          rep.t_budget_hit = true;
          break;
        }
        ElemSet U(S.n);
        for (size_t i = 0; i < xs.size(); ++i) U |= memo[xs[i]][idx[i]];
        ++rep.checked_t;
        if (!cov.contains(a, U)) {
          rep.t_ok = false;
          rep.violation = "(T) fails at " + S.label(a);
          break;
        }
        // odometer
        size_t i = 0;
        for (; i < xs.size(); ++i) {
          if (++idx[i] < memo[xs[i]].size()) break;
          idx[i] = 0;
        }
        done = i == xs.size();
      }
      if (!rep.t_ok || rep.t_budget_hit) break;
    }
  }
  return rep;
}

bool is_idempotent_pure_coverage(Coverage const& cov) {
  InvSemigroup const& S = *cov.S;
  for (int a = 0; a < S.n; ++a) {
    if (S.is_idem(a)) continue;
    ElemSet idem_below = S.idempotents & S.down[a];
    switch (cov.kind) {
      case CoverageKind::Trivial:
        break;  // {a} inside E(S) forces a idempotent outright
      case CoverageKind::Join: {
        auto j = join(S, idem_below);
        if (j && *j == a) return false;
        break;
      }
      case CoverageKind::Dense:
      case CoverageKind::Tight:
        if (arrow(S, a, idem_below)) return false;
        break;
      case CoverageKind::Custom:
        for (ElemSet const& X : cov.stored[a])
          if (X.subset_of(S.idempotents)) return false;
        break;
    }
  }
  return true;
}

bool coverage_equiv(Coverage const& cov, int a, int b) {
  if (a == b) return true;
  InvSemigroup const& S = *cov.S;
  switch (cov.kind) {
    case CoverageKind::Trivial:
    case CoverageKind::Join:
      // a shared cover pins down its join, which is both a and b
      return false;
    case CoverageKind::Dense:
    case CoverageKind::Tight: {
      ElemSet common = S.down[a] & S.down[b];
      return arrow(S, a, common) && arrow(S, b, common);
    }
    case CoverageKind::Custom:
      for (ElemSet const& X : cov.stored[a])
        for (ElemSet const& Y : cov.stored[b])
          if (X == Y) return true;
      return false;
  }
  return false;
}

bool is_separated(Coverage const& cov) {
  for (int a = 0; a < cov.S->n; ++a)
    for (int b = a + 1; b < cov.S->n; ++b)
      if (coverage_equiv(cov, a, b)) return false;
  return true;
}

SeparativeQuotient separative_quotient(Coverage const& cov) {
  if (cov.kind != CoverageKind::Dense && cov.kind != CoverageKind::Tight)
    fail(Err::UnsupportedKind,
         "the separative quotient is defined for dense and tight coverages");
  InvSemigroup const& S = *cov.S;

  std::vector<std::vector<bool>> eq(S.n, std::vector<bool>(S.n));
  for (int a = 0; a < S.n; ++a)
    for (int b = 0; b < S.n; ++b) eq[a][b] = coverage_equiv(cov, a, b);
  for (int a = 0; a < S.n; ++a)
    for (int b = 0; b < S.n; ++b) {
      check_internal(eq[a][b] == eq[b][a], "collapse relation must be symmetric");
      for (int c = 0; c < S.n; ++c)
        check_internal(!(eq[a][b] && eq[b][c]) || eq[a][c],
                       "collapse relation must be transitive");
    }
  for (int a = 0; a < S.n; ++a)
    for (int b = 0; b < S.n; ++b)
      if (eq[a][b])
        for (int c = 0; c < S.n; ++c) {
          check_internal(eq[S.mul(a, c)][S.mul(b, c)], "collapse must be a right congruence");
          check_internal(eq[S.mul(c, a)][S.mul(c, b)], "collapse must be a left congruence");
        }

  SeparativeQuotient sq;
  sq.parent = &S;
  sq.kind = cov.kind;
  sq.cls.assign(S.n, -1);
  for (int a = 0; a < S.n; ++a) {
    if (sq.cls[a] >= 0) continue;
    int id = int(sq.rep.size());
    sq.rep.push_back(a);
    for (int b = a; b < S.n; ++b)
      if (eq[a][b]) sq.cls[b] = id;
  }
  int m = int(sq.rep.size());
  std::vector<int> table(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i * m + j] = sq.cls[S.mul(sq.rep[i], sq.rep[j])];
  std::vector<std::string> labels;
  if (!S.labels.empty())
    for (int i = 0; i < m; ++i) labels.push_back(S.label(sq.rep[i]));
  std::optional<int> qzero;
  if (S.zero) qzero = sq.cls[*S.zero];
  sq.quotient = verify(table, m, qzero, std::move(labels));

  Coverage qcov = builtin_coverage(sq.quotient, CoverageKind::Tight);
  check_internal(is_separated(qcov), "quotient must be separative for its tight coverage");

  // covers push forward through the projection (checked up to a small cap)
  int64_t push_budget = 20000;
  for (int a = 0; a < S.n && push_budget > 0; ++a)
    for (ElemSet const& X : cov.members_upto(a, 3)) {
      if (--push_budget < 0) break;
      ElemSet img(m);
      X.for_each([&](int x) { img.set(sq.cls[x]); });
      check_internal(qcov.contains(sq.cls[a], img),
                     "covers must push forward to the quotient");
    }
  return sq;
}

io::Json TransportReport::to_json() const {
  io::Json j;
  j["bijective"] = bijective;
  j["order_iso"] = order_iso;
  j["functor"] = functor;
  j["opens_match"] = opens_match;
  j["parent_tight"] = parent_tight;
  j["quotient_tight"] = quotient_tight;
  return j;
}

TransportReport filter_transport(SeparativeQuotient const& sq) {
  InvSemigroup const& S = *sq.parent;
  InvSemigroup const& Q = sq.quotient;
  std::vector<Filter> pt = tight_filters(S);
  std::vector<Filter> qt = tight_filters(Q);
  TransportReport rep;
  rep.parent_tight = int(pt.size());
  rep.quotient_tight = int(qt.size());

  std::vector<int> image(pt.size(), -1);  // index into qt
  auto qt_index = [&](int min_elem) {
    for (size_t i = 0; i < qt.size(); ++i)
      if (qt[i].min == min_elem) return int(i);
    return -1;
  };
  rep.bijective = pt.size() == qt.size();
  for (size_t i = 0; i < pt.size(); ++i) {
    ElemSet img(Q.n);
    pt[i].carrier.for_each([&](int x) { img.set(sq.cls[x]); });
    check_internal(is_proper_filter_set(Q, img), "transported set must be a filter");
    check_internal(img == Q.up[sq.cls[pt[i].min]],
                   "transported filter must be principal at the projected minimum");
    image[i] = qt_index(sq.cls[pt[i].min]);
    if (image[i] < 0) rep.bijective = false;
  }
  for (size_t i = 0; i < pt.size() && rep.bijective; ++i)
    for (size_t j = i + 1; j < pt.size(); ++j)
      if (image[i] == image[j]) rep.bijective = false;

  rep.order_iso = rep.bijective;
  for (size_t i = 0; i < pt.size() && rep.order_iso; ++i)
    for (size_t j = 0; j < pt.size(); ++j) {
      bool sub = pt[i].carrier.subset_of(pt[j].carrier);
      bool qsub = qt[image[i]].carrier.subset_of(qt[image[j]].carrier);
      if (sub != qsub) rep.order_iso = false;
    }

  rep.functor = rep.bijective;
  for (size_t i = 0; i < pt.size() && rep.functor; ++i)
    for (size_t j = 0; j < pt.size(); ++j) {
      auto p = filter_mul(S, pt[i], pt[j]);
      auto q = filter_mul(Q, qt[image[i]], qt[image[j]]);
      if (p.has_value() != q.has_value()) {
        rep.functor = false;
        break;
      }
      if (p && qt_index(sq.cls[p->min]) != qt_index(q->min)) rep.functor = false;
    }

  rep.opens_match = rep.bijective;
  for (int s = 0; s < S.n && rep.opens_match; ++s) {
    if (S.is_zero(s)) continue;
    // Z_s in the parent maps exactly onto Z_{cls(s)} in the quotient
    for (size_t i = 0; i < pt.size(); ++i) {
      bool in_parent = pt[i].carrier.test(s);
      bool in_quotient = qt[image[i]].carrier.test(sq.cls[s]);
      if (in_parent != in_quotient) rep.opens_match = false;
    }
  }
  check_internal(rep.all_hold(), "tight filters must transport along the quotient");
  return rep;
}

bool is_c_filter(InvSemigroup const& S, Filter const& F, Coverage const& cov) {
  bool ok = true;
  F.carrier.for_each([&](int x) {
    if (!ok) return;
    switch (cov.kind) {
      case CoverageKind::Trivial:
        if (!F.carrier.test(x)) ok = false;
        break;
      case CoverageKind::Join: {
        ElemSet avoid = S.down[x].minus(F.carrier);
        auto j = join(S, avoid);
        if (j && *j == x) ok = false;
        break;
      }
      case CoverageKind::Dense:
      case CoverageKind::Tight: {
        ElemSet avoid = S.down[x].minus(F.carrier);
        if (S.zero) avoid.reset(*S.zero);
        if (arrow(S, x, avoid)) ok = false;
        break;
      }
      case CoverageKind::Custom:
        for (ElemSet const& X : cov.stored[x])
          if (!(X & F.carrier).count()) ok = false;
        break;
    }
  });
  return ok;
}

bool is_tight_filter(InvSemigroup const& S, Filter const& F) {
  bool ok = true;
  F.carrier.for_each([&](int x) {
    if (!ok) return;
    ElemSet avoid = S.down[x].minus(F.carrier);
    if (S.zero) avoid.reset(*S.zero);
    if (arrow(S, x, avoid)) ok = false;
  });
  return ok;
}

std::vector<Filter> tight_filters(InvSemigroup const& S) {
  std::vector<Filter> out;
  for (Filter const& F : all_filters(S))
    if (is_tight_filter(S, F)) out.push_back(F);
  return out;
}

}  // namespace invsem
