#include "seifert/cli.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "seifert/census.hpp"
#include "seifert/chern_lattice.hpp"
#include "seifert/error.hpp"
#include "seifert/homology.hpp"
#include "seifert/report.hpp"
#include "seifert/serialize.hpp"
#include "seifert/sign_orbits.hpp"
#include "seifert/surgery.hpp"
#include "seifert/verify.hpp"

namespace seifert {

using nlohmann::json;

namespace {

std::string str(const Integer& v) { return v.get_str(); }
std::string str(const Rational& v) { return v.str(); }

json strings(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::string group_name(const IntVector& invariants) {
  if (invariants.empty()) return "0";
  std::string out;
  for (const auto& d : invariants) out += (out.empty() ? "" : " + ") + (d == 0 ? std::string("Z") : "Z/" + d.get_str());
  return out;
}

SeifertData parse_manifold(const std::vector<std::string>& words, json& inputs) {
  const Integer e0 = parse_integer(words.at(0));
  const Rational r1 = Rational::parse(words.at(1));
  const Rational r2 = Rational::parse(words.at(2));
  const Rational r3 = Rational::parse(words.at(3));
  inputs["e0"] = str(e0);
  inputs["r"] = {r1.str(), r2.str(), r3.str()};
  return parse_seifert(e0, r1, r2, r3);
}

json manifold_json(const SeifertData& m) {
  json legs = json::array();
  for (const auto& leg : m.legs) {
    legs.push_back({{"r", leg.r.str()},
                    {"expansion", leg.expansion.str()},
                    {"alpha", str(leg.gluing.alpha)},
                    {"beta", str(leg.gluing.beta)},
                    {"alpha_prime", str(leg.gluing.alpha_prime)},
                    {"beta_prime", str(leg.gluing.beta_prime)}});
  }
  return {{"name", m.str()}, {"reordered", m.reordered}, {"legs", legs}};
}

Report count_command(const std::vector<std::string>& words) {
  Report r;
  const SeifertData m = parse_manifold(words, r.inputs);
  const CensusResult c = count_total(m);
  r.outputs = {{"manifold", manifold_json(m)},
               {"h", str(c.h)},
               {"phi", str(c.phi)},
               {"psi", str(c.psi)},
               {"total", str(c.total)},
               {"branch_phi", to_string(c.branch_phi)},
               {"branch_psi", to_string(c.branch_psi)}};
  r.check("total_is_phi_plus_psi", c.total == c.phi + c.psi);
  return r;
}

Report orbits_command(const std::vector<std::string>& words, unsigned jobs) {
  Report r;
  const SeifertData m = parse_manifold(words, r.inputs);
  const std::uint64_t cap = state_cap_from_environment();
  r.inputs["cap"] = cap;
  r.inputs["jobs"] = jobs;
  const OrbitCounts o = count_orbits(m, {cap, jobs});
  const Integer phi = count_phi(m);
  const Integer psi = count_psi(m);
  r.outputs = {{"manifold", m.str()},
               {"states", o.states},
               {"edges", o.edges},
               {"mixed", std::to_string(o.mixed)},
               {"equal", std::to_string(o.equal)},
               {"phi", str(phi)},
               {"psi", str(psi)}};
  r.check("mixed_orbits_equal_phi", Integer(o.mixed) == phi, std::to_string(o.mixed) + " vs " + str(phi));
  r.check("equal_orbits_equal_psi", Integer(o.equal) == psi, std::to_string(o.equal) + " vs " + str(psi));
  return r;
}

Report dinv_command(long p) {
  Report r;
  r.inputs["p"] = p;
  const IntMatrix q = d_plumbing(p);
  const auto ks = initial_vectors(p);
  json k2 = json::array();
  json initial = json::array();
  for (const auto& k : ks) {
    k2.push_back(str(k_squared(q, k)));
    initial.push_back(is_initial_vector(q, k));
  }
  const auto d = d_invariants_mp(p);
  json dj = json::array();
  for (const auto& v : d) dj.push_back(str(v));
  r.outputs = {{"k_squared", k2}, {"d", dj}, {"initial_vectors", initial}, {"vertices", p + 2}};
  const std::array<Rational, 4> expected{Rational(0), Rational(0), Rational(Integer(p - 2), Integer(4)),
                                         Rational(Integer(p + 2), Integer(4))};
  r.check("d_matches_closed_form", d == expected);
  r.check("all_initial", std::all_of(initial.begin(), initial.end(), [](const json& b) { return b.get<bool>(); }));
  return r;
}

Report homology_command(long p) {
  Report r;
  r.inputs["p"] = p;
  const IntMatrix l = mp_linking_matrix(p);
  const IntMatrix q = d_plumbing(p);
  const IntVector li = cokernel_invariants(l);
  const IntVector qi = cokernel_invariants(q);
  const auto ks = initial_vectors(p);
  json distinct = json::object();
  bool all_distinct = true;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const bool d = spinc_distinct(q, ks[i], ks[j]);
      all_distinct = all_distinct && d;
      distinct["K" + std::to_string(i + 1) + "_K" + std::to_string(j + 1)] = d;
    }
  }
  json chern = json::array();
  for (const auto& k : ks) chern.push_back(chern_class_zero(q, k));
  r.outputs = {{"linking_matrix", to_json(l)},
               {"linking_det", str(determinant(l))},
               {"linking_invariants", strings(li)},
               {"linking_signature", inertia(l).signature()},
               {"plumbing_det", str(determinant(q))},
               {"plumbing_invariants", strings(qi)},
               {"h1", group_name(li)},
               {"spinc_distinct", distinct},
               {"chern_class_zero", chern}};
  const IntVector expected = p % 2 ? IntVector{4} : IntVector{2, 2};
  r.check("det_is_4", abs(determinant(l)) == 4 && abs(determinant(q)) == 4);
  r.check("cokernels_agree", li == qi, group_name(li) + " vs " + group_name(qi));
  r.check("h1_by_parity", li == expected, group_name(li));
  r.check("initial_vectors_pairwise_distinct", all_distinct);
  return r;
}

Report d3_command(long p, bool mirror) {
  Report r;
  r.inputs = {{"p", p}, {"mirror", mirror}};
  const SurgeryDiagram d = xi_diagram(p, mirror);
  const D3Terms t = d3_terms(d);
  IntVector rot;
  for (const auto& c : d.components) rot.push_back(c.rot);
  r.outputs = {{"rot", strings(rot)}, {"c_squared", str(t.c_squared)}, {"sigma", t.sigma},
               {"b2", t.b2},          {"q", t.q},                       {"d3", str(t.d3)}};
  const Rational expected(Integer(2 - p), Integer(4));
  r.check("d3_is_(2-p)/4", t.d3 == expected, str(t.d3) + " vs " + str(expected));
  return r;
}

Report lattice_command(const std::string& family, long p, long k, std::optional<long> l) {
  Report r;
  r.inputs = {{"family", family}, {"p", p}, {"k", k}};
  if (family == "pkl") {
    if (!l) throw ValidationError("lattice pkl needs --l");
    r.inputs["l"] = *l;
    const long formula = stein_classes_pkl_formula(p, k, *l);
    const long count = count_stein_classes_pkl(p, k, *l);
    r.outputs = {{"count", std::to_string(count)}, {"formula", std::to_string(formula)}};
    r.check("enumeration_matches_formula", count == formula);
  } else if (family == "pk") {
    const long formula = stein_classes_pk_formula(p, k);
    const long count = count_stein_classes_pk(p, k);
    r.outputs = {{"count", std::to_string(count)}, {"formula", std::to_string(formula)}};
    r.check("enumeration_matches_formula", count == formula);
  } else {
    throw ValidationError("lattice family must be pkl or pk");
  }
  return r;
}

RotTuple parse_tuple(const std::string& text, const CobordismParams& params) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ValidationError("tuple must look like xi:x,y,z or xi_prime:x,z");
  RotTuple t;
  const std::string source = text.substr(0, colon);
  if (source == "xi") {
    t.source = RotSource::xi;
  } else if (source == "xi_prime") {
    t.source = RotSource::xi_prime;
  } else {
    throw ValidationError("tuple source must be xi or xi_prime");
  }
  std::vector<long> values;
  std::stringstream in(text.substr(colon + 1));
  for (std::string item; std::getline(in, item, ',');) values.push_back(to_long(parse_integer(item)));
  const std::size_t expected = 1 + (has_y(params.variant) ? 1 : 0) + (has_z(params.variant) ? 1 : 0);
  if (values.size() != expected) throw ValidationError("tuple has the wrong number of entries for the variant");
  std::size_t i = 0;
  t.x = values[i++];
  if (has_y(params.variant)) t.y = values[i++];
  if (has_z(params.variant)) t.z = values[i++];
  validate_tuple(params, t);
  return t;
}

json tuple_json(const RotTuple& t) {
  json j = {{"source", to_string(t.source)}, {"x", t.x}};
  if (t.y) j["y"] = *t.y;
  if (t.z) j["z"] = *t.z;
  return j;
}

Report cobordism_command(const std::string& variant_name, long p, long k, std::optional<long> l, std::optional<long> m,
                         const std::vector<std::string>& compare) {
  Report r;
  CobordismParams params;
  params.variant = parse_variant(variant_name);
  params.p = p;
  params.k = k;
  r.inputs = {{"variant", variant_name}, {"p", p}, {"k", k}};
  if (has_y(params.variant)) {
    if (!l) throw ValidationError("variant " + variant_name + " needs --l");
    params.l = *l;
    r.inputs["l"] = *l;
  }
  if (has_z(params.variant)) {
    if (!m) throw ValidationError("variant " + variant_name + " needs --m");
    params.m = *m;
    r.inputs["m"] = *m;
  }
  const long classes = count_cobordism_classes(params);
  const long formula = cobordism_classes_formula(params);
  r.outputs = {{"tuples", all_tuples(params).size()},
               {"classes", std::to_string(classes)},
               {"formula", std::to_string(formula)},
               {"phi_star", to_json(phi_star_rows(p, params.variant))}};
  r.check("classes_match_formula", classes == formula);
  if (!compare.empty()) {
    if (compare.size() != 2) throw ValidationError("--compare takes two tuples");
    const RotTuple a = parse_tuple(compare[0], params);
    const RotTuple b = parse_tuple(compare[1], params);
    r.inputs["compare"] = compare;
    const CobordismLattice lattice(params);
    const auto w = lattice.witness(a, b);
    const bool condition = cobordism_condition(a, b);
    r.outputs["compare"] = {{"first", tuple_json(a)},
                            {"second", tuple_json(b)},
                            {"equal", w.has_value()},
                            {"condition", condition},
                            {"witness", w ? strings(*w) : json(nullptr)}};
    r.check("lattice_agrees_with_condition", w.has_value() == condition);
  }
  return r;
}

Report fillability_command(long p) {
  Report r;
  r.inputs["p"] = p;
  const FillabilitySearch s = fillability_search(p);
  const bool congruence = (p - 2) % 8 != 0;
  r.outputs = {{"obstructed", s.obstructed},
               {"witness", s.witness ? json(*s.witness) : json(nullptr)},
               {"d3", str(Rational(Integer(2 - p), Integer(4)))}};
  r.check("search_matches_congruence", s.obstructed == congruence);
  return r;
}

Report layers_command(const std::string& r_text, int leg_index) {
  Report r;
  const Rational value = Rational::parse(r_text);
  r.inputs = {{"r", value.str()}, {"leg", leg_index}};
  if (value <= Rational(0) || value >= Rational(1)) throw ValidationError("r must lie in (0, 1)");
  if (leg_index < 1 || leg_index > 3) throw ValidationError("--leg must be 1, 2 or 3");
  const Integer beta = leg_index == 1 ? value.num() - value.den() : value.num();
  const GluingData g = gluing_data(value.den(), beta);
  const ContinuedFraction cf = negative_expansion(-value.reciprocal());
  const LayerSlopes slopes = leg_layer_slopes(cf);
  json layers = json::array();
  bool adjacent = true;
  bool det_ok = true;
  for (std::size_t j = 0; j < slopes.layers.size(); ++j) {
    const Layer& layer = slopes.layers[j];
    json path = json::array();
    for (const auto& s : layer.path) path.push_back(s.str());
    for (std::size_t i = 0; i + 1 < layer.path.size(); ++i) adjacent = adjacent && farey_adjacent(layer.path[i], layer.path[i + 1]);
    det_ok = det_ok && farey_determinant(layer.outer, layer.inner) == layer.basic_slices;
    layers.push_back({{"j", j},
                      {"outer", layer.outer.str()},
                      {"inner", layer.inner.str()},
                      {"basic_slices", str(layer.basic_slices)},
                      {"trivial", layer.trivial},
                      {"path", path}});
  }
  const Rational source(Integer(g.beta_prime - g.beta), Integer(g.alpha - g.alpha_prime));
  const Slope z = bypass_successor(Slope(source), Slope::infinity());
  r.outputs = {{"expansion", cf.str()},
               {"alpha", str(g.alpha)},
               {"beta", str(g.beta)},
               {"alpha_prime", str(g.alpha_prime)},
               {"beta_prime", str(g.beta_prime)},
               {"u_slope", slopes.u_slope.str()},
               {"layers", layers},
               {"z_source", source.str()},
               {"z_slope", z.str()}};
  r.check("u_slope_is_minus_alpha_over_alpha_prime", slopes.u_slope == Slope(Rational(-g.alpha, g.alpha_prime)));
  r.check("basic_slices_adjacent", adjacent);
  r.check("layer_determinant_is_slice_count", det_ok);
  r.check("z_slope", z == Slope(Integer(leg_index == 1 ? 0 : -1), Integer(1)), z.str());
  return r;
}

Report verify_command(const VerifyOptions& options) {
  Report r;
  r.inputs = {{"max_denominator", options.max_denominator}, {"jobs", options.jobs},     {"p_max", options.p_max},
              {"fill_max", options.fill_max},               {"lattice_max", options.lattice_max},
              {"stein_max", options.stein_max},             {"cap", options.cap}};
  const VerifyResult result = run_verification(options);
  json checks = json::object();
  for (const auto& t : result.checks) {
    checks[t.name] = {{"cases", t.cases}, {"failures", t.failures}, {"examples", t.examples}};
    r.check(t.name, t.failures == 0,
            std::to_string(t.cases) + " cases, " + std::to_string(t.failures) + " failures" +
                (t.examples.empty() ? "" : "; first: " + t.examples.front()));
  }
  r.outputs = {{"instances", result.instances}, {"checks", checks}};
  return r;
}

void emit(const Report& r, bool table, bool decimal, std::ostream& out) {
  Report shown = r;
  if (decimal) shown.approximations = decimal_approximations(r.outputs);
  if (table) {
    out << render_table(shown);
  } else {
    out << shown.to_json().dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight contact structure census for M(-1; r1, r2, r3)", "seifert-census"};
  app.require_subcommand(1);
  app.fallthrough();
  bool table = false;
  bool decimal = false;
  app.add_flag("--table", table, "Render aligned text instead of JSON");
  app.add_flag("--decimal", decimal, "Add labelled decimal approximations of rational outputs");

  std::function<Report()> action;
  std::vector<std::string> manifold;
  long p = 0;
  long k = 0;
  std::optional<long> l;
  std::optional<long> m;
  bool mirror = false;
  unsigned jobs = 1;
  std::string family;
  std::string text;
  int leg = 2;
  std::vector<std::string> compare;
  std::string format = "json";
  VerifyOptions verify;

  auto add_manifold = [&](CLI::App* sub) {
    sub->add_option("invariants", manifold, "e0 r1 r2 r3, e.g. -1 1/2 1/2 1/3")->expected(4)->required();
  };
  auto add_p = [&](CLI::App* sub) { sub->add_option("--p", p, "Parameter p >= 2")->required(); };

  auto* count = app.add_subcommand("count", "Closed-form census h, phi, psi, total");
  add_manifold(count);
  count->callback([&] { action = [&] { return count_command(manifold); }; });

  auto* orbits = app.add_subcommand("orbits", "Sign-matrix orbit oracle compared with the census");
  add_manifold(orbits);
  orbits->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  orbits->callback([&] { action = [&] { return orbits_command(manifold, jobs); }; });

  auto* dinv = app.add_subcommand("dinv", "K^2 and d-invariants on the D-shaped plumbing");
  add_p(dinv);
  dinv->callback([&] { action = [&] { return dinv_command(p); }; });

  auto* homology = app.add_subcommand("homology", "H1(M_p), Smith forms and spin^c distinctness");
  add_p(homology);
  homology->callback([&] { action = [&] { return homology_command(p); }; });

  auto* d3 = app.add_subcommand("d3", "d3 of the contact structure Xi (or Xi' with --mirror)");
  add_p(d3);
  d3->add_flag("--mirror", mirror, "Use the mirrored diagram");
  d3->callback([&] { action = [&] { return d3_command(p, mirror); }; });

  auto* lattice = app.add_subcommand("lattice", "Chern class value counts |S(p,k,l)| or the pk family");
  lattice->add_option("family", family, "pkl or pk")->required()->check(CLI::IsMember({"pkl", "pk"}));
  add_p(lattice);
  lattice->add_option("--k", k, "Parameter k >= 2")->required();
  lattice->add_option("--l", l, "Parameter l >= 2 (pkl)");
  lattice->callback([&] { action = [&] { return lattice_command(family, p, k, l); }; });

  auto* cobordism = app.add_subcommand("cobordism", "Spin^c classes on the Stein cobordisms");
  cobordism->add_option("variant", family, "pklm, pkm, pkl or pk")->required()->check(CLI::IsMember({"pklm", "pkm", "pkl", "pk"}));
  add_p(cobordism);
  cobordism->add_option("--k", k, "Parameter k >= 2")->required();
  cobordism->add_option("--l", l, "Parameter l >= 2 (variants with K7)");
  cobordism->add_option("--m", m, "Parameter m >= 2 (variants with K8)");
  cobordism->add_option("--compare", compare, "Two tuples source:x[,y][,z] to compare")->expected(2);
  cobordism->callback([&] { action = [&] { return cobordism_command(family, p, k, l, m, compare); }; });

  auto* fill = app.add_subcommand("fillability", "Stein fillability obstruction for Xi on M_p");
  add_p(fill);
  fill->callback([&] { action = [&] { return fillability_command(p); }; });

  auto* layers = app.add_subcommand("layers", "Layer slopes of one singular fiber");
  layers->add_option("r", text, "Seifert coefficient in (0,1)")->required();
  layers->add_option("--leg", leg, "Leg index; leg 1 glues with r - 1")->check(CLI::Range(1, 3));
  layers->callback([&] { action = [&] { return layers_command(text, leg); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Full cross-validation sweep");
  verify_cmd->add_option("--max-denominator", verify.max_denominator, "Largest alpha in the census sweep")->check(CLI::Range(2L, 1000L));
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--p-max", verify.p_max, "Largest p for the M_p checks")->check(CLI::Range(2L, 100000L));
  verify_cmd->add_option("--fill-max", verify.fill_max, "Largest p for the fillability congruence")->check(CLI::Range(2L, 10000000L));
  verify_cmd->add_option("--lattice-max", verify.lattice_max, "Largest parameter in the cobordism sweeps")->check(CLI::Range(2L, 50L));
  verify_cmd->add_option("--stein-max", verify.stein_max, "Largest parameter in the pkl sweep")->check(CLI::Range(2L, 200L));
  verify_cmd->callback([&] {
    verify.cap = state_cap_from_environment();
    action = [&] { return verify_command(verify); };
  });

  auto* serialize = app.add_subcommand("serialize", "Print the D-plumbing or the Xi diagram in text or JSON form");
  serialize->add_option("object", family, "plumbing or diagram")->required()->check(CLI::IsMember({"plumbing", "diagram"}));
  add_p(serialize);
  serialize->add_flag("--mirror", mirror, "Mirrored diagram (Xi')");
  serialize->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  serialize->callback([&] {
    action = [&] {
      Report r;
      r.inputs = {{"object", family}, {"p", p}, {"mirror", mirror}, {"format", format}};
      if (family == "plumbing") {
        const PlumbingGraph g = d_plumbing_graph(p);
        r.outputs = {{"plumbing", to_json(g)}, {"text", to_text(g)}};
        r.check("round_trip", plumbing_from_text(to_text(g)) == g && plumbing_from_json(to_json(g)) == g);
      } else {
        const SurgeryDiagram d = xi_diagram(p, mirror);
        r.outputs = {{"diagram", to_json(d)}, {"text", to_text(d)}};
        r.check("round_trip", diagram_from_text(to_text(d)) == d && diagram_from_json(to_json(d)) == d);
      }
      return r;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    Report report = action();
    report.command = app.get_subcommands().front()->get_name();
    report.argv = args;
    if (report.command == "serialize" && format == "text") {
      out << report.outputs.at("text").get<std::string>();
    } else {
      emit(report, table, decimal, out);
    }
    return report.ok() ? kExitOk : kExitMismatch;
  } catch (const ConsistencyError& e) {
    err << "error: internal consistency check failed: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const UnsupportedCase& e) {
    err << "error: unsupported case: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace seifert
