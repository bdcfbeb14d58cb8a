#include "invsem/filters.hpp"

#include <algorithm>
#include <sstream>

#include "invsem/coverage.hpp"

namespace invsem {

char const* filter_class_name(FilterClass c) {
  switch (c) {
    case FilterClass::All: return "all";
    case FilterClass::Ultra: return "ultra";
    case FilterClass::Prime: return "prime";
    case FilterClass::Tight: return "tight";
    case FilterClass::Dense: return "dense";
  }
  return "?";
}

FilterClass filter_class_from(std::string const& name) {
  if (name == "all") return FilterClass::All;
  if (name == "ultra") return FilterClass::Ultra;
  if (name == "prime") return FilterClass::Prime;
  if (name == "tight") return FilterClass::Tight;
  if (name == "dense") return FilterClass::Dense;
  fail(Err::ParseError, "unknown filter class " + name);
}

Filter principal_filter(InvSemigroup const& S, int a) {
  if (S.is_zero(a)) fail(Err::ParseError, "proper filters exclude the zero");
  return Filter{a, S.up[a]};
}

std::vector<Filter> all_filters(InvSemigroup const& S) {
  std::vector<Filter> out;
  for (int a = 0; a < S.n; ++a)
    if (!S.is_zero(a)) out.push_back(principal_filter(S, a));
  return out;
}

bool is_proper_filter_set(InvSemigroup const& S, ElemSet const& A) {
  if (A.empty()) return false;
  if (S.zero && A.test(*S.zero)) return false;
  bool ok = true;
  A.for_each([&](int a) {
    if (!S.up[a].subset_of(A)) ok = false;  // up-closed
    A.for_each([&](int b) {
      ElemSet lower = S.down[a] & S.down[b] & A;
      if (lower.empty()) ok = false;  // directed within A
    });
  });
  return ok;
}

Filter filter_inv(InvSemigroup const& S, Filter const& F) {
  return principal_filter(S, S.inv[F.min]);
}

Filter filter_d(InvSemigroup const& S, Filter const& F) {
  return principal_filter(S, S.d(F.min));
}

Filter filter_r(InvSemigroup const& S, Filter const& F) {
  return principal_filter(S, S.r(F.min));
}

std::optional<Filter> filter_mul(InvSemigroup const& S, Filter const& A,
                                 Filter const& B) {
  if (S.d(A.min) != S.r(B.min)) return std::nullopt;
  int p = S.mul(A.min, B.min);
  check_internal(!S.is_zero(p), "composable filter product must be nonzero");
  return principal_filter(S, p);
}

bool is_ultrafilter(InvSemigroup const& S, Filter const& F) {
  // maximality: nothing nonzero strictly below the minimum
  ElemSet strictly_below = S.down[F.min];
  strictly_below.reset(F.min);
  if (S.zero) strictly_below.reset(*S.zero);
  bool maximal = strictly_below.empty();

  // closure condition: b meeting every member of F nontrivially lies in F
  bool closure = true;
  for (int b = 0; b < S.n && closure; ++b) {
    if (S.is_zero(b) || F.carrier.test(b)) continue;
    bool meets_all = true;
    F.carrier.for_each([&](int a) {
      ElemSet common = S.down[b] & S.down[a];
      if (S.zero) common.reset(*S.zero);
      if (common.empty()) meets_all = false;
    });
    if (meets_all) closure = false;
  }
  check_internal(maximal == closure,
                 "ultrafilter characterizations disagree at min " +
                     std::to_string(F.min));
  return maximal;
}

namespace {

void require_distributive(InvSemigroup const& S) {
  if (!predicates(S).is_distributive)
    fail(Err::NotDistributive, "prime filters want a distributive semigroup");
}

bool prime_unchecked(InvSemigroup const& S, Filter const& F) {
  for (int s = 0; s < S.n; ++s)
    for (int t = s; t < S.n; ++t) {
      int j = S.join_tab[s * S.n + t];
      if (j < 0 || !compatible(S, s, t)) continue;
      if (F.carrier.test(j) && !F.carrier.test(s) && !F.carrier.test(t))
        return false;
    }
  return true;
}

// Maximal compatible cliques inside `allowed`, visited via Bron-Kerbosch.
// Joins grow along clique extension, so maximal cliques witness every
// possible "join lands in F from outside" failure.
void maximal_cliques(InvSemigroup const& S, ElemSet R, ElemSet P, ElemSet X,
                     int64_t& budget, std::vector<ElemSet>& out) {
  if (--budget < 0) fail(Err::TooLarge, "compatible clique enumeration budget exhausted");
  if (P.empty() && X.empty()) {
    if (!R.empty()) out.push_back(R);
    return;
  }
  ElemSet PX = P | X;
  int pivot = PX.min();
  ElemSet ext = P.minus(S.compat[pivot]);
  ext.set(pivot);
  ext &= P;
  ext.for_each([&](int v) {
    P.reset(v);
    ElemSet R2 = R;
    R2.set(v);
    maximal_cliques(S, R2, P & S.compat[v], X & S.compat[v], budget, out);
    X.set(v);
  });
}

bool completely_prime_unchecked(InvSemigroup const& S, Filter const& F) {
  ElemSet outside = ElemSet::all(S.n).minus(F.carrier);
  if (S.zero) outside.reset(*S.zero);
  // drop elements incompatible with everything useful? keep it simple
  std::vector<ElemSet> cliques;
  int64_t budget = 4'000'000;
  maximal_cliques(S, ElemSet(S.n), outside, ElemSet(S.n), budget, cliques);
  for (ElemSet const& C : cliques) {
    auto j = join(S, C);
    check_internal(j.has_value(), "compatible joins must exist in a distributive semigroup");
    if (F.carrier.test(*j)) return false;
  }
  return true;
}

}  // namespace

bool is_prime_filter(InvSemigroup const& S, Filter const& F) {
  require_distributive(S);
  bool p = prime_unchecked(S, F);
  check_internal(p == completely_prime_unchecked(S, F),
                 "prime and completely prime must coincide finitely");
  return p;
}

bool is_completely_prime_filter(InvSemigroup const& S, Filter const& F) {
  require_distributive(S);
  bool cp = completely_prime_unchecked(S, F);
  check_internal(cp == prime_unchecked(S, F),
                 "prime and completely prime must coincide finitely");
  return cp;
}

bool is_consistent(InvSemigroup const& S, ElemSet const& A) {
  ElemSet lower = ElemSet::all(S.n);
  A.for_each([&](int a) { lower &= S.down[a]; });
  if (S.zero) lower.reset(*S.zero);
  return !lower.empty();
}

std::vector<ElemSet> maximal_consistent_supersets(InvSemigroup const& S,
                                                  ElemSet const& A) {
  ElemSet lower = ElemSet::all(S.n);
  A.for_each([&](int a) { lower &= S.down[a]; });
  if (S.zero) lower.reset(*S.zero);
  std::vector<ElemSet> out;
  lower.for_each([&](int m) {
    ElemSet strictly_below = S.down[m];
    strictly_below.reset(m);
    if (S.zero) strictly_below.reset(*S.zero);
    if (strictly_below.empty()) out.push_back(S.up[m]);
  });
  return out;
}

FilterGroupoid build_filter_groupoid(InvSemigroup const& S, FilterClass klass,
                                     std::vector<Filter> arrows) {
  std::sort(arrows.begin(), arrows.end(),
            [](Filter const& a, Filter const& b) { return a.min < b.min; });
  FilterGroupoid G;
  G.S = &S;
  G.klass = klass;
  G.arrows = std::move(arrows);
  G.arrow_of_min.assign(S.n, -1);
  int m = G.size();
  for (int i = 0; i < m; ++i) G.arrow_of_min[G.arrows[i].min] = i;

  auto lookup = [&](int elem, char const* what) {
    int idx = G.arrow_of_min[elem];
    if (idx < 0)
      fail(Err::ClassNotClosed, std::string(filter_class_name(klass)) +
                                    " filters not closed under " + what + " at " +
                                    std::to_string(elem));
    return idx;
  };

  G.dmap.resize(m);
  G.rmap.resize(m);
  G.inv_arrow.resize(m);
  G.objects = ElemSet(m);
  for (int i = 0; i < m; ++i) {
    int a = G.arrows[i].min;
    G.inv_arrow[i] = lookup(S.inv[a], "inverse");
    G.dmap[i] = lookup(S.d(a), "d");
    G.rmap[i] = lookup(S.r(a), "r");
    if (S.is_idem(a)) G.objects.set(i);
  }

  G.prod.assign(size_t(m) * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (G.dmap[i] == G.rmap[j])
        G.prod[i * size_t(m) + j] =
            lookup(S.mul(G.arrows[i].min, G.arrows[j].min), "product");

  // groupoid laws
  for (int i = 0; i < m; ++i) {
    check_internal(G.mul(i, G.dmap[i]) == i, "right unit law");
    check_internal(G.mul(G.rmap[i], i) == i, "left unit law");
    check_internal(G.mul(i, G.inv_arrow[i]) == G.rmap[i], "inverse gives range");
    check_internal(G.mul(G.inv_arrow[i], i) == G.dmap[i], "inverse gives domain");
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int ij = G.mul(i, j);
      for (int k = 0; k < m; ++k) {
        int jk = G.mul(j, k);
        int left = ij < 0 ? -1 : G.mul(ij, k);
        int right = jk < 0 ? -1 : G.mul(i, jk);
        check_internal(left == right, "associativity of the partial product");
      }
    }
  return G;
}

FilterGroupoid filter_groupoid(InvSemigroup const& S, FilterClass klass) {
  std::vector<Filter> arrows;
  switch (klass) {
    case FilterClass::All:
      arrows = all_filters(S);
      break;
    case FilterClass::Ultra:
      for (Filter const& F : all_filters(S))
        if (is_ultrafilter(S, F)) arrows.push_back(F);
      break;
    case FilterClass::Prime: {
      require_distributive(S);
      for (Filter const& F : all_filters(S))
        if (prime_unchecked(S, F)) arrows.push_back(F);
      break;
    }
    case FilterClass::Tight:
    case FilterClass::Dense:
      arrows = tight_filters(S);
      break;
  }
  return build_filter_groupoid(S, klass, std::move(arrows));
}

std::string groupoid_dot(FilterGroupoid const& G) {
  std::ostringstream os;
  os << "digraph filters {\n";
  G.objects.for_each([&](int i) {
    os << "  n" << G.arrows[i].min << " [label=\"" << G.S->label(G.arrows[i].min)
       << "\"];\n";
  });
  for (int i = 0; i < G.size(); ++i) {
    if (G.objects.test(i)) continue;
    os << "  n" << G.arrows[G.dmap[i]].min << " -> n" << G.arrows[G.rmap[i]].min
       << " [label=\"" << G.S->label(G.arrows[i].min) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

io::Json groupoid_json(FilterGroupoid const& G) {
  io::Json j;
  j["class"] = filter_class_name(G.klass);
  io::Json arrows = io::Json::array();
  for (int i = 0; i < G.size(); ++i) {
    io::Json a;
    a["id"] = i;
    a["min"] = G.arrows[i].min;
    a["label"] = G.S->label(G.arrows[i].min);
    a["d"] = G.dmap[i];
    a["r"] = G.rmap[i];
    a["inv"] = G.inv_arrow[i];
    arrows.push_back(std::move(a));
  }
  j["arrows"] = std::move(arrows);
  j["objects"] = G.objects.to_vector();
  io::Json rows = io::Json::array();
  for (int i = 0; i < G.size(); ++i) {
    io::Json row = io::Json::array();
    for (int k = 0; k < G.size(); ++k) row.push_back(G.mul(i, k));
    rows.push_back(std::move(row));
  }
  j["product"] = std::move(rows);
  return j;
}

}  // namespace invsem
