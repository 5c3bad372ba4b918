#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "galoiskit/expr.hpp"
#include "galoiskit/factor.hpp"
#include "galoiskit/galois.hpp"
#include "galoiskit/qpoly.hpp"
#include "galoiskit/radical.hpp"

#ifndef GALOISKIT_VERSION
#define GALOISKIT_VERSION "0.0.0"
#endif

using namespace galoiskit;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kDomain = 1, kParse = 2, kDegreeCap = 3, kSoundness = 4 };

struct Settings {
  bool json = false;
  bool timing = false;
  std::size_t degree_cap = 64;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::uint64_t> primes;

  NumfieldOptions numfield() const {
    NumfieldOptions o;
    o.degree_cap = degree_cap;
    o.factor.seed = seed;
    return o;
  }
};

/// Unreadable or malformed command input; reported like a parse error.
class InputError : public Error {
 public:
  using Error::Error;
};

/// What a command hands back: the JSON result and a plain-text rendering.
struct Outcome {
  json result;
  std::string text;
  int exit_code = kOk;
};

json perms(const std::vector<Permutation>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json strings(const std::vector<FieldElement>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

std::string join(const json& arr, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

json series_json(const DerivedSeries& d) {
  json groups = json::array();
  for (const auto& g : d.series) groups.push_back({{"order", g.order()}, {"generators", perms(generating_set(g))}});
  return {{"solvable", d.solvable}, {"orders", d.orders()}, {"groups", groups}};
}

json certificate_json(const AbelianChainCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps)
    steps.push_back({{"order", s.order},
                     {"sub_order", s.sub_order},
                     {"normal", s.normal},
                     {"quotient_abelian", s.quotient_abelian},
                     {"coset_representatives", perms(s.coset_reps)},
                     {"witness", perms(s.witness)}});
  return {{"accepted", c.accepted},
          {"failing_step", c.failing_step ? json(*c.failing_step) : json(nullptr)},
          {"steps", steps}};
}

json stages_json(const FieldTower& t) {
  json out = json::array();
  const auto degrees = t.stage_degrees();
  for (std::size_t i = 0; i < t.stage_count(); ++i)
    out.push_back({{"name", t.stage(i).name}, {"defining", to_string(t.stage(i).defining)}, {"degree", degrees[i]}});
  return out;
}

json field_json(const SplittingField& e) {
  return {{"degree", e.degree()},
          {"primitive_min_poly", to_string(e.field()->min_poly(), "t")},
          {"stages", stages_json(e.tower)},
          {"roots", strings(e.roots)}};
}

std::vector<RadicalStageSpec> read_chain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open chain file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("chain file " + path + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("stages") || !doc["stages"].is_array())
    throw InputError("chain file must be an object with a \"stages\" array");
  std::vector<RadicalStageSpec> out;
  for (const auto& s : doc["stages"]) {
    if (!s.is_object() || !s.contains("k") || !s["k"].is_number_integer() || !s.contains("radicand"))
      throw InputError("stage " + std::to_string(out.size() + 1) + " needs an integer \"k\" and a \"radicand\"");
    const long k = s["k"].get<long>();
    if (k < 2) throw DomainError("stage " + std::to_string(out.size() + 1) + ": k must be at least 2");
    RadicalStageSpec spec;
    spec.k = static_cast<unsigned>(k);
    if (s["radicand"].is_string())
      spec.radicand = s["radicand"].get<std::string>();
    else if (s["radicand"].is_number_integer())
      spec.radicand = s["radicand"].dump();
    else
      throw InputError("stage " + std::to_string(out.size() + 1) + ": radicand must be a string or integer");
    out.push_back(spec);
  }
  return out;
}

json chain_input(const std::string& path, const std::vector<RadicalStageSpec>& chain) {
  json stages = json::array();
  for (const auto& s : chain) stages.push_back({{"k", s.k}, {"radicand", s.radicand}});
  return {{"chain_file", path}, {"stages", stages}};
}

// ------------------------------------------------------------ commands ----

Outcome cmd_factor(const QPoly& p, const Settings& s) {
  const auto f = factor_over_Q(p, s.numfield().factor);
  json factors = json::array();
  std::ostringstream text;
  text << "factorization over Q of " << to_string(p) << "\n  unit " << to_string(f.unit) << "\n";
  for (const auto& [g, m] : f.factors) {
    factors.push_back({{"factor", to_string(g)}, {"degree", g.degree()}, {"multiplicity", m}});
    text << "  (" << to_string(g) << ")" << (m > 1 ? "^" + std::to_string(m) : "") << "\n";
  }
  audit::require(f.expand() == p, "factorization expands to the input");
  const bool irreducible = f.factors.size() == 1 && f.factors[0].second == 1;
  return {{{"unit", to_string(f.unit)}, {"factors", factors}, {"irreducible", irreducible}}, text.str()};
}

Outcome cmd_split(const QPoly& p, const Settings& s) {
  const auto e = splitting_field(p, s.numfield());
  json r = field_json(e);
  r["squarefree"] = to_string(e.squarefree);
  std::ostringstream text;
  text << "splitting field of " << to_string(p) << "\n  [E:Q] = " << e.degree()
       << "\n  E = Q(t), t root of " << to_string(e.field()->min_poly(), "t") << "\n";
  for (const auto& st : r["stages"]) text << "  stage " << st["name"].get<std::string>() << ": " << st["defining"].get<std::string>() << "\n";
  for (std::size_t i = 0; i < e.roots.size(); ++i) text << "  r" << i + 1 << " = " << e.roots[i].to_string() << "\n";
  return {r, text.str()};
}

Outcome cmd_group(const QPoly& p, const Settings& s) {
  const auto g = galois_group(splitting_field(p, s.numfield()));
  const auto series = is_solvable(g.group());
  json elements = json::array();
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& perm = g.group().elements()[i];
    elements.push_back({{"index", i}, {"permutation", perm.to_string()}, {"cycle_type", perm.cycle_type()},
                        {"theta_image", g[i].theta_image.to_string()}});
  }
  const auto gens = generating_set(g.group());
  json r = {{"order", g.order()},
            {"splitting_degree", g.splitting().degree()},
            {"order_equals_degree", g.order() == g.splitting().degree()},
            {"roots", strings(g.splitting().roots)},
            {"generators", perms(gens)},
            {"abelian", is_abelian(g.group())},
            {"derived_series", series_json(series)},
            {"elements", elements}};
  std::ostringstream text;
  text << "Galois group of " << to_string(p) << "\n  #G = " << g.order() << ", [E:Q] = " << g.splitting().degree()
       << "\n  generators " << join(r["generators"]) << "\n  abelian " << (r["abelian"].get<bool>() ? "yes" : "no")
       << "\n  derived series orders " << join(r["derived_series"]["orders"], " > ") << " ("
       << (series.solvable ? "solvable" : "not solvable") << ")\n";
  for (const auto& el : elements)
    text << "  [" << el["index"].get<std::size_t>() << "] " << el["permutation"].get<std::string>() << "\n";
  return {r, text.str()};
}

Outcome cmd_minpoly(const QPoly& p, const std::string& element, const Settings& s) {
  const auto g = galois_group(splitting_field(p, s.numfield()));
  const auto& roots = g.splitting().roots;
  const auto expr = Expression::parse(element, radical_symbols(roots.size()));
  const auto a = expr.evaluate<FieldElement>(
      [&](std::size_t j) { return roots.at(j); }, [&](const Rational& c) { return FieldElement(g.field(), c); },
      [](const FieldElement& x, const FieldElement& y, std::size_t column) {
        if (y.is_zero()) throw DomainError("division by zero at column " + std::to_string(column));
        return x / y;
      });
  const QPoly by_orbit = orbit_min_poly(g, a);
  const QPoly by_linalg = minimal_polynomial(a);
  const bool agree = by_orbit == by_linalg;
  audit::require(agree, "orbit product equals linear-algebra minimal polynomial");
  json r = {{"value", a.to_string()},
            {"orbit", strings(orbit(g, a))},
            {"orbit_method", to_string(by_orbit)},
            {"linear_algebra_method", to_string(by_linalg)},
            {"agree", agree},
            {"degree", by_orbit.degree()}};
  std::ostringstream text;
  text << "minimal polynomial of " << element << " (roots of " << to_string(p) << " named r1..r" << roots.size()
       << ")\n  orbit product    " << to_string(by_orbit) << "\n  linear algebra   " << to_string(by_linalg)
       << "\n  agree " << (agree ? "yes" : "no") << ", degree " << by_orbit.degree() << "\n";
  return {r, text.str()};
}

Outcome cmd_fixed(const QPoly& p, const std::vector<std::size_t>& indices, const Settings& s) {
  const auto g = galois_group(splitting_field(p, s.numfield()));
  for (auto i : indices)
    if (i >= g.order())
      throw DomainError("element index " + std::to_string(i) + " out of range, #G = " + std::to_string(g.order()));
  const auto h = subgroup_generated(g, indices);
  const auto b = fixed_field(g, h);
  const bool galois_correspondence = subgroup_fixing(g, b) == h;
  audit::require(galois_correspondence, "subgroup fixing the fixed field is the subgroup");
  json r = {{"subgroup_order", h.order()},
            {"subgroup_elements", perms(h.elements())},
            {"group_order", g.order()},
            {"degree", b.degree()},
            {"primitive", b.primitive.to_string()},
            {"min_poly", to_string(b.min_poly)},
            {"basis", strings(b.basis)},
            {"correspondence_holds", galois_correspondence},
            {"order_times_degree", h.order() * b.degree()}};
  std::ostringstream text;
  text << "fixed field of H = <" << join(perms(h.generators()), ", ") << "> in G(E,Q) for " << to_string(p)
       << "\n  #H = " << h.order() << ", [F:Q] = " << b.degree() << ", #G = " << g.order()
       << "\n  F = Q(u), u = " << b.primitive.to_string() << "\n  min poly of u: " << to_string(b.min_poly)
       << "\n  G(E,F) = H: " << (galois_correspondence ? "yes" : "no") << "\n";
  return {r, text.str()};
}

json tower_json(const NormalRadicalTower& t) {
  json levels = json::array();
  for (std::size_t i = 0; i < t.levels.size(); ++i)
    levels.push_back({{"name", "E" + std::to_string(i)},
                      {"degree", t.levels[i].degree()},
                      {"polynomial", to_string(t.levels[i].squarefree)}});
  json stages = json::array();
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    const auto& st = t.stages[i];
    stages.push_back({{"stage", i + 1},
                      {"k", st.k},
                      {"radicand", st.radicand.to_string()},
                      {"orbit_size", st.orbit.size()},
                      {"orbit_poly", to_string(st.orbit_poly)},
                      {"kummer_poly", to_string(st.kummer_poly)},
                      {"radical_images", strings(st.radical_images)}});
  }
  return {{"N", t.N}, {"degrees", t.degrees}, {"levels", levels}, {"stages", stages}};
}

std::string tower_text(const NormalRadicalTower& t) {
  std::ostringstream text;
  text << "  N = " << t.N << "\n";
  for (std::size_t i = 0; i < t.levels.size(); ++i)
    text << "  E" << i << ": degree " << t.levels[i].degree() << ", splitting field of "
         << to_string(t.levels[i].squarefree) << "\n";
  for (std::size_t i = 0; i < t.stages.size(); ++i)
    text << "  stage " << i + 1 << ": k = " << t.stages[i].k << ", Q_b(x^k) = " << to_string(t.stages[i].kummer_poly)
         << "\n";
  return text.str();
}

json chain_json(const RadicalChain& c) {
  json stages = json::array();
  for (const auto& st : c.stages)
    stages.push_back({{"k", st.k}, {"radicand", st.radicand.text()}, {"factor", to_string(st.factor)}});
  return {{"degree", c.tower.degree()}, {"stages", stages}};
}

Outcome cmd_normalize(const std::vector<RadicalStageSpec>& spec, const Settings& s) {
  const auto chain = realize_chain(spec, s.numfield());
  const auto t = normalize_chain(chain, s.numfield());
  json r = {{"chain", chain_json(chain)}, {"tower", tower_json(t)}};
  return {r, "normalization of a radical chain with [R_n:Q] = " + std::to_string(chain.tower.degree()) + "\n" +
                 tower_text(t)};
}

Outcome cmd_verify(const std::vector<RadicalStageSpec>& spec, const Settings& s) {
  const auto t = normalize_chain(realize_chain(spec, s.numfield()), s.numfield());
  const auto v = verify_nested_normal_radical(t);
  json checks = json::array();
  std::ostringstream text;
  text << "verification of the normalized tower\n";
  for (const auto& c : v.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    text << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
  }
  json r = {{"tower", tower_json(t)}, {"checks", checks}, {"all_passed", v.all_passed()}};
  // The tower was built by the engine, so a failed condition is an engine bug.
  return {r, text.str(), v.all_passed() ? kOk : kSoundness};
}

Outcome cmd_chain_groups(const std::vector<RadicalStageSpec>& spec, const Settings& s) {
  const auto t = normalize_chain(realize_chain(spec, s.numfield()), s.numfield());
  const auto a = associated_group_chain(t);
  const auto cert = solvable_via_abelian_chain(a.chain);
  const auto layers = abelian_layers(t, a);
  json chain = json::array();
  std::ostringstream text;
  text << "associated group chain, #G = " << a.group.order() << "\n";
  for (std::size_t i = 0; i < a.chain.size(); ++i) {
    chain.push_back({{"level", "E" + std::to_string(i)},
                     {"order", a.chain[i].order()},
                     {"generators", perms(generating_set(a.chain[i]))}});
    text << "  G" << i << " = G(E,E" << i << "): order " << a.chain[i].order() << "\n";
  }
  json lj = json::array();
  for (const auto& l : layers) {
    json images = json::array();
    if (l.embedding) {
      for (const auto& im : l.embedding->images) images.push_back(to_string(im));
    }
    lj.push_back({{"layer", l.layer},
                  {"group_order", l.group_order},
                  {"target", l.target.to_string()},
                  {"embedded", l.embedding.has_value()},
                  {"abelian", l.abelian},
                  {"images", images}});
    text << "  " << l.layer << ": order " << l.group_order << " into " << l.target.to_string() << " "
         << (l.embedding ? "embeds" : "does not embed") << (l.abelian ? ", abelian" : "") << "\n";
  }
  text << "  abelian-quotient certificate " << (cert.accepted ? "accepted" : "rejected") << "\n";
  json r = {{"tower", tower_json(t)},
            {"group_order", a.group.order()},
            {"chain", chain},
            {"certificate", certificate_json(cert)},
            {"layers", lj}};
  return {r, text.str()};
}

Outcome cmd_solvable(const QPoly& p, const Settings& s) {
  VerdictOptions o;
  o.numfield = s.numfield();
  if (!s.primes.empty()) o.primes = s.primes;
  const auto v = necessary_condition_verdict(p, o);
  json quintic = nullptr;
  if (v.quintic) {
    json obs = json::array();
    for (const auto& f : v.quintic->observations)
      obs.push_back({{"prime", f.prime}, {"factors", f.factors}, {"cycle_type", f.cycle_type}});
    quintic = {{"observations", obs},
               {"skipped_primes", v.quintic->skipped_primes},
               {"candidates", v.quintic->candidates},
               {"nonsolvable", v.quintic->nonsolvable},
               {"identified", v.quintic->identified ? json(*v.quintic->identified) : json(nullptr)}};
  }
  json r = {{"verdict", to_string(v.verdict)},
            {"method", v.method},
            {"group_order", v.group_order},
            {"splitting_degree", v.splitting_degree ? json(*v.splitting_degree) : json(nullptr)},
            {"generators", perms(v.group_generators)},
            {"derived_series", series_json(v.series)},
            {"certificate", v.certificate ? certificate_json(*v.certificate) : json(nullptr)},
            {"quintic_witness", quintic},
            {"note", v.note}};
  std::ostringstream text;
  text << to_string(v.verdict) << " for " << to_string(p) << " (" << v.method << ")\n";
  if (v.group_order) text << "  #G = " << v.group_order << ", generators " << join(r["generators"]) << "\n";
  text << "  derived series orders " << join(r["derived_series"]["orders"], " > ") << "\n";
  if (v.quintic) {
    for (const auto& f : v.quintic->observations) {
      text << "  mod " << f.prime << ":";
      for (const auto& fac : f.factors) text << " (" << fac << ")";
      text << "\n";
      break;
    }
    text << "  consistent groups " << join(quintic["candidates"], ", ") << "\n";
  }
  if (v.certificate) text << "  abelian-quotient certificate " << (v.certificate->accepted ? "accepted" : "rejected") << "\n";
  if (!v.note.empty()) text << "  " << v.note << "\n";
  return {r, text.str()};
}

json assertions_json(const audit::Recorder& rec) {
  json out = json::array();
  for (const auto& [name, count] : rec.passed()) out.push_back({{"name", name}, {"passed", true}, {"count", count}});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Galois groups, splitting fields and radical towers over Q", "galois-kit"};
  app.require_subcommand(1);
  Settings s;
  app.add_flag("--json", s.json, "Print the report as JSON");
  app.add_flag("--timing", s.timing, "Include wall-clock time in the report");
  app.add_option("--degree-cap", s.degree_cap, "Largest field degree the engine may build")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "Seed for randomized factorization");
  app.add_option("--primes", s.primes, "Primes for the quintic witness, comma separated")->delimiter(',');

  std::string poly_text, element, chain_path;
  std::vector<std::size_t> gens;
  json input;
  std::function<Outcome(const QPoly&)> on_poly;
  std::function<Outcome(const std::vector<RadicalStageSpec>&)> on_chain;

  auto poly_command = [&](const char* name, const char* help, auto run) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("polynomial", poly_text, "Polynomial in x, e.g. \"x^3 - 2\"")->required();
    sub->callback([&, run] { on_poly = [&, run](const QPoly& p) { return run(p); }; });
    return sub;
  };
  auto chain_command = [&](const char* name, const char* help, auto run) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("--chain", chain_path, "Radical chain file {\"stages\": [{\"k\": 2, \"radicand\": \"2\"}]}")
        ->required();
    sub->callback([&, run] { on_chain = [&, run](const std::vector<RadicalStageSpec>& c) { return run(c); }; });
  };

  poly_command("factor", "Factor over Q", [&](const QPoly& p) { return cmd_factor(p, s); });
  poly_command("split", "Splitting field, its degree and the roots", [&](const QPoly& p) { return cmd_split(p, s); });
  poly_command("group", "Galois group of the splitting field", [&](const QPoly& p) { return cmd_group(p, s); });
  poly_command("minpoly", "Minimal polynomial of an expression in the roots r1..rn",
               [&](const QPoly& p) { return cmd_minpoly(p, element, s); })
      ->add_option("element", element, "Expression in r1..rn, e.g. \"r1 + 2 r2\"")
      ->required();
  poly_command("fixed", "Fixed field of the subgroup generated by group elements",
               [&](const QPoly& p) { return cmd_fixed(p, gens, s); })
      ->add_option("--gens", gens, "Element indices as listed by `group`, comma separated")
      ->delimiter(',');
  poly_command("solvable", "Necessary-condition verdict on solvability by radicals",
               [&](const QPoly& p) { return cmd_solvable(p, s); });
  chain_command("chain-groups", "Associated group chain and abelian layers of the normalized tower",
                [&](const auto& c) { return cmd_chain_groups(c, s); });
  chain_command("normalize", "Nested normal radical extensions containing a chain",
                [&](const auto& c) { return cmd_normalize(c, s); });
  chain_command("verify-tower", "Re-check the conditions on the normalized tower",
                [&](const auto& c) { return cmd_verify(c, s); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  audit::Recorder recorder;
  Outcome outcome;
  json error = nullptr;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (on_poly) {
      input = {{"polynomial", poly_text}};
      if (command == "minpoly") input["element"] = element;
      if (command == "fixed") input["generators"] = gens;
      const QPoly p = parse_poly(poly_text);
      input["parsed"] = to_string(p);
      outcome = on_poly(p);
    } else {
      input = {{"chain_file", chain_path}};
      const auto chain = read_chain(chain_path);
      input = chain_input(chain_path, chain);
      outcome = on_chain(chain);
    }
  } catch (const ParseError& e) {
    outcome.exit_code = kParse;
    error = {{"kind", "parse"}, {"message", e.what()}};
  } catch (const InputError& e) {
    outcome.exit_code = kParse;
    error = {{"kind", "input"}, {"message", e.what()}};
  } catch (const DegreeCapExceeded& e) {
    outcome.exit_code = kDegreeCap;
    error = {{"kind", "degree-cap"}, {"message", e.what()}};
  } catch (const SoundnessError& e) {
    outcome.exit_code = kSoundness;
    error = {{"kind", "soundness"}, {"message", e.what()}};
  } catch (const Error& e) {
    outcome.exit_code = kDomain;
    error = {{"kind", "domain"}, {"message", e.what()}};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json assertions = assertions_json(recorder);
  if (outcome.exit_code == kSoundness && !error.is_null())
    assertions.push_back({{"name", error["message"]}, {"passed", false}, {"count", 1}});

  if (s.json) {
    json report = {{"command", command},
                   {"input", input},
                   {"engine_version", GALOISKIT_VERSION},
                   {"settings", {{"degree_cap", s.degree_cap}, {"seed", s.seed}, {"primes", s.primes}}},
                   {"exit_code", outcome.exit_code},
                   {"result", outcome.result.is_null() ? json(nullptr) : outcome.result},
                   {"error", error},
                   {"assertions", assertions}};
    if (s.timing) report["timing_ms"] = ms;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << outcome.text;
    if (!error.is_null()) std::cerr << "galois-kit: " << error["message"].get<std::string>() << "\n";
    std::size_t checks = 0;
    for (const auto& a : assertions) checks += a["count"].get<std::size_t>();
    if (outcome.exit_code == kOk) std::cout << "  " << checks << " runtime checks passed\n";
    if (s.timing) std::cout << "  time " << ms << " ms\n";
  }
  return outcome.exit_code;
}
