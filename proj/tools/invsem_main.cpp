#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "invsem/completion.hpp"
#include "invsem/coverage.hpp"
#include "invsem/duality.hpp"
#include "invsem/filters.hpp"
#include "invsem/gen.hpp"
#include "invsem/groupoid.hpp"
#include "invsem/io.hpp"
#include "invsem/semigroup.hpp"
#include "invsem/topology.hpp"

namespace {

using invsem::InvSemigroup;
using invsem::io::Json;

struct Options {
  bool pretty = false;
  int cap = 0;
};

void emit(Json const& j, Options const& opt) {
  std::cout << invsem::io::dump(j, opt.pretty);
}

Json sets_json(std::vector<invsem::ElemSet> const& sets) {
  Json out = Json::array();
  for (auto const& m : sets) out.push_back(m.to_vector());
  return out;
}

Json predicates_json(InvSemigroup const& S) {
  invsem::Predicates p = invsem::predicates(S);
  Json j;
  j["distributive"] = p.is_distributive;
  j["meet_semigroup"] = p.is_meet_semigroup;
  j["weakly_boolean"] = p.is_weakly_boolean;
  j["boolean"] = p.is_boolean;
  j["pseudogroup"] = p.is_pseudogroup;
  j["weak_meet"] = p.has_weak_meet;
  return j;
}

int run_gen(std::string const& name, Options const& opt) {
  emit(invsem::io::semigroup_json(invsem::gen::by_name(name)), opt);
  return 0;
}

int run_verify(std::string const& file, Options const& opt) {
  InvSemigroup S = invsem::io::load_semigroup(file);
  Json j;
  j["op"] = "verify";
  j["ok"] = true;
  j["n"] = S.n;
  j["zero"] = S.zero ? Json(*S.zero) : Json(nullptr);
  j["one"] = S.one ? Json(*S.one) : Json(nullptr);
  j["idempotents"] = S.idempotents.to_vector();
  j["predicates"] = S.zero ? predicates_json(S) : Json(nullptr);
  emit(j, opt);
  return 0;
}

int run_filters(std::string const& file, std::string const& klass,
                Options const& opt) {
  InvSemigroup S = invsem::io::load_semigroup(file);
  invsem::FilterGroupoid G =
      invsem::filter_groupoid(S, invsem::filter_class_from(klass));
  Json j;
  j["op"] = "filters";
  j["class"] = invsem::filter_class_name(G.klass);
  j["count"] = G.size();
  Json carriers = Json::array();
  for (auto const& F : G.arrows) carriers.push_back(F.carrier.to_vector());
  j["carriers"] = std::move(carriers);
  j["groupoid"] = invsem::groupoid_json(G);
  emit(j, opt);
  return 0;
}

int run_groupoid(std::string const& file, std::string const& klass,
                 std::string const& topo, std::string const& emit_kind,
                 Options const& opt) {
  InvSemigroup S = invsem::io::load_semigroup(file);
  invsem::FilterGroupoid G =
      invsem::filter_groupoid(S, invsem::filter_class_from(klass));
  invsem::TopGroupoid tg =
      topo == "patch" ? invsem::patch_topology(G) : invsem::basic_topology(G);
  if (emit_kind == "dot") {
    std::cout << invsem::groupoid_dot(tg.G);
    return 0;
  }
  Json j;
  j["op"] = "groupoid";
  j["report"] = invsem::topgroupoid_json(tg);
  emit(j, opt);
  return 0;
}

int run_complete(std::string const& file, std::string const& kind,
                 Options const& opt) {
  InvSemigroup S = invsem::io::load_semigroup(file);
  if (kind == "schein" || kind == "idl" || kind == "dist") {
    invsem::CompletionSemigroup comp =
        kind == "schein" ? invsem::schein_completion(S)
        : kind == "idl"  ? invsem::idl_completion(S)
                         : invsem::d_completion(S);
    Json j = invsem::io::semigroup_json(comp.sg);
    j["op"] = "complete";
    j["kind"] = kind;
    j["flavor"] = comp.flavor;
    j["source_n"] = S.n;
    j["embedding"] = comp.iota;
    j["carriers"] = sets_json(comp.carriers);
    int lim = opt.cap > 0 ? opt.cap : 12;
    j["finite_elements"] = invsem::finite_elements(comp, lim).to_vector();
    emit(j, opt);
    return 0;
  }
  if (kind == "tight" || kind == "dense-pseudogroup") {
    invsem::TightCompletion tc = kind == "tight"
                                     ? invsem::tight_completion(S)
                                     : invsem::dense_pseudogroup(S);
    Json j = invsem::io::semigroup_json(tc.comp.sg);
    j["op"] = "complete";
    j["kind"] = kind;
    j["flavor"] = tc.comp.flavor;
    j["source_n"] = S.n;
    j["projection"] = tc.sq.cls;
    j["embedding"] = tc.delta;
    j["carriers"] = sets_json(tc.comp.carriers);
    emit(j, opt);
    return 0;
  }
  invsem::Booleanization bz = invsem::first_booleanization(S);
  Json j = invsem::io::semigroup_json(bz.b.sg);
  j["op"] = "complete";
  j["kind"] = kind;
  j["source_n"] = S.n;
  j["embedding"] = bz.beta;
  j["bisections"] = sets_json(bz.b.sets);
  j["beta_multiplicative"] = bz.beta_multiplicative;
  j["groupoid_iso"] = bz.groupoid_iso;
  j["basis_dictionary"] = bz.basis_dictionary;
  j["homeomorphism"] = bz.homeomorphism;
  bool ok = bz.beta_multiplicative && bz.groupoid_iso && bz.basis_dictionary &&
            bz.homeomorphism;
  j["ok"] = ok;
  emit(j, opt);
  return ok ? 0 : 2;
}

int run_quotient(std::string const& file, std::string const& cov_name,
                 Options const& opt) {
  InvSemigroup S = invsem::io::load_semigroup(file);
  invsem::Coverage cov =
      invsem::builtin_coverage(S, invsem::coverage_kind_from(cov_name));
  invsem::SeparativeQuotient sq = invsem::separative_quotient(cov);
  invsem::TransportReport tr = invsem::filter_transport(sq);
  Json j = invsem::io::semigroup_json(sq.quotient);
  j["op"] = "quotient";
  j["coverage"] = invsem::coverage_kind_name(sq.kind);
  j["source_n"] = S.n;
  j["projection"] = sq.cls;
  j["representatives"] = sq.rep;
  j["transport"] = tr.to_json();
  j["ok"] = tr.all_hold();
  emit(j, opt);
  return tr.all_hold() ? 0 : 2;
}

int run_duality(std::string const& file, std::string const& check,
                Options const& opt) {
  InvSemigroup S = invsem::io::load_semigroup(file);
  Json j;
  j["op"] = "duality";
  j["check"] = check;
  bool ok = true;
  if (check == "spatial") {
    invsem::EpsilonReport eps = invsem::epsilon(S);
    bool sp = invsem::is_spatial(S);
    ok = sp;
    j["ok"] = sp;
    j["spatial"] = sp;
    j["counit_injective"] = eps.injective;
    j["counit_surjective"] = eps.surjective;
    Json witness = nullptr;
    if (!sp) {
      for (int s = 0; s < S.n && witness.is_null(); ++s)
        for (int t = s + 1; t < S.n; ++t)
          if (eps.map[s] == eps.map[t]) {
            witness = Json{};
            witness["s"] = s;
            witness["t"] = t;
            break;
          }
    }
    j["witness"] = witness;
  } else if (check == "sober") {
    invsem::FilterGroupoid G =
        invsem::filter_groupoid(S, invsem::FilterClass::All);
    bool basic = invsem::is_sober(invsem::basic_topology(G));
    bool patch = invsem::is_sober(invsem::patch_topology(G));
    ok = basic && patch;
    j["ok"] = ok;
    j["basic"] = basic;
    j["patch"] = patch;
  } else if (check == "roundtrip") {
    invsem::RoundtripReport rep = invsem::boolean_duality_roundtrip(S);
    ok = rep.eps.iso() && rep.unit.bijective && rep.unit.functor_ok &&
         rep.unit.covering_ok && rep.unit.continuity_ok &&
         rep.prime_equals_ultra && rep.hausdorff;
    j["ok"] = ok;
    j["report"] = rep.to_json(S);
  } else if (check == "compactness") {
    invsem::CompactnessReport rep = invsem::compactness_condition(S);
    ok = rep.all();
    j["ok"] = ok;
    j["report"] = rep.to_json();
  } else {
    invsem::CoarseGrainedReport rep = invsem::coarse_grained_check(S);
    ok = rep.coarse_grained;
    j["ok"] = ok;
    j["report"] = rep.to_json(S);
  }
  emit(j, opt);
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on finite inverse semigroups with zero"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--pretty", opt.pretty, "indent the JSON output");
  app.add_option("--cap", opt.cap,
                 "override tunable enumeration limits (0 keeps defaults)");

  std::string gen_name;
  auto* c_gen = app.add_subcommand(
      "gen", "print a canonically generated semigroup as JSON");
  c_gen->add_option("name", gen_name,
                    "chain:N | boolean:N | brandt:N | sym_inv:N | "
                    "group0:cyclicN | group0:FILE | semilattice:FILE")
      ->required();

  std::string v_file;
  auto* c_verify =
      app.add_subcommand("verify", "validate a semigroup file and classify it");
  c_verify->add_option("file", v_file, "semigroup JSON file")->required();

  std::string f_file, f_class = "all";
  auto* c_filters =
      app.add_subcommand("filters", "enumerate a filter class as a groupoid");
  c_filters->add_option("file", f_file, "semigroup JSON file")->required();
  c_filters->add_option("--class", f_class, "filter class (default all)")
      ->check(CLI::IsMember({"all", "ultra", "prime", "tight", "dense"}));

  std::string g_file, g_class = "all", g_topo = "basic", g_emit = "json";
  auto* c_groupoid = app.add_subcommand(
      "groupoid", "build a filter groupoid with a topology and render it");
  c_groupoid->add_option("file", g_file, "semigroup JSON file")->required();
  c_groupoid->add_option("--class", g_class, "filter class (default all)")
      ->check(CLI::IsMember({"all", "ultra", "prime", "tight", "dense"}));
  c_groupoid->add_option("--topology", g_topo, "basic or patch (default basic)")
      ->check(CLI::IsMember({"basic", "patch"}));
  c_groupoid->add_option("--emit", g_emit, "dot or json (default json)")
      ->check(CLI::IsMember({"dot", "json"}));

  std::string k_file, k_kind;
  auto* c_complete =
      app.add_subcommand("complete", "run a completion pipeline");
  c_complete->add_option("file", k_file, "semigroup JSON file")->required();
  c_complete->add_option("--kind", k_kind, "completion kind")
      ->required()
      ->check(CLI::IsMember({"schein", "idl", "dist", "tight",
                             "dense-pseudogroup", "booleanization"}));

  std::string d_file, d_check;
  auto* c_duality =
      app.add_subcommand("duality", "run a duality-side check and report");
  c_duality->add_option("file", d_file, "semigroup JSON file")->required();
  c_duality->add_option("--check", d_check, "which check to run")
      ->required()
      ->check(CLI::IsMember(
          {"spatial", "sober", "roundtrip", "compactness", "coarse"}));

  std::string q_file, q_cov = "tight";
  auto* c_quotient = app.add_subcommand(
      "quotient", "separative quotient by a builtin coverage");
  c_quotient->add_option("file", q_file, "semigroup JSON file")->required();
  c_quotient->add_option("--coverage", q_cov, "coverage kind (default tight)")
      ->check(CLI::IsMember({"trivial", "join", "dense", "tight"}));

  for (auto* sub : {c_gen, c_verify, c_filters, c_groupoid, c_complete,
                    c_duality, c_quotient})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (c_gen->parsed()) return run_gen(gen_name, opt);
    if (c_verify->parsed()) return run_verify(v_file, opt);
    if (c_filters->parsed()) return run_filters(f_file, f_class, opt);
    if (c_groupoid->parsed())
      return run_groupoid(g_file, g_class, g_topo, g_emit, opt);
    if (c_complete->parsed()) return run_complete(k_file, k_kind, opt);
    if (c_duality->parsed()) return run_duality(d_file, d_check, opt);
    if (c_quotient->parsed()) return run_quotient(q_file, q_cov, opt);
  } catch (invsem::Error const& e) {
    Json j;
    j["error"] = invsem::err_name(e.code());
    j["message"] = e.what();
    emit(j, opt);
    return 1;
  } catch (std::logic_error const& e) {
    Json j;
    j["error"] = "InternalCheck";
    j["message"] = e.what();
    emit(j, opt);
    return 2;
  } catch (std::exception const& e) {
    Json j;
    j["error"] = "Unexpected";
    j["message"] = e.what();
    emit(j, opt);
    return 2;
  }
  return 1;
}
