#include "blocklie/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "blocklie/config.hpp"
#include "blocklie/element_io.hpp"
#include "blocklie/errors.hpp"
#include "blocklie/isomorphism.hpp"
#include "blocklie/realizations.hpp"
#include "blocklie/sampling.hpp"
#include "blocklie/simplicity.hpp"
#include "blocklie/trace_io.hpp"

namespace blocklie::cli {

using nlohmann::json;

namespace {

/// Signals an input problem that maps to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

struct SpecSource {
  std::string file;
  std::string inline_json;
  std::string preset;

  void attach(CLI::App* app) {
    app->add_option("--spec", file, "Spec config JSON file");
    app->add_option("--spec-json", inline_json, "Inline spec config JSON");
    app->add_option("--preset", preset, "Built-in spec: z4, case1, case2, case3, case4");
  }

  SpecConfig load() const {
    const int given = !file.empty() + !inline_json.empty() + !preset.empty();
    if (given != 1) throw UsageError("give exactly one of --spec, --spec-json, --preset");
    if (!file.empty()) return parse_spec_config(read_file(file));
    if (!inline_json.empty()) return parse_spec_config(inline_json);
    SpecConfig cfg;
    if (preset == "z4") {
      cfg.generators = {GroupVector::unit(1), GroupVector::unit(2), GroupVector::unit(3), GroupVector::unit(4)};
      return cfg;
    }
    if (preset.size() == 5 && preset.rfind("case", 0) == 0 && preset[4] >= '1' && preset[4] <= '4') {
      CaseData d = case_data(preset[4] - '0', 1);
      cfg.indeterminates = d.indeterminates;
      cfg.delta3 = d.delta3;
      cfg.generators = d.generators;
      cfg.j = d.j;
      return cfg;
    }
    throw UsageError("unknown preset " + preset);
  }
};

struct Loaded {
  SpecConfig cfg;
  Algebra alg;
};

Loaded load_valid(const SpecSource& src) {
  SpecConfig cfg = src.load();
  auto v = cfg.validate();
  if (!v.valid()) throw UsageError("spec is invalid: " + v.violations.front());
  Algebra alg(*v.spec);
  return Loaded{std::move(cfg), std::move(alg)};
}

json base(const char* command) { return json{{"schema", kReportSchema}, {"command", command}}; }

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

json vector_json(const GroupVector& v) {
  json row = json::array();
  for (const auto& c : v.coords) row.push_back(c.to_string());
  return row;
}

int cmd_validate(const SpecSource& src, std::ostream& out) {
  const SpecConfig cfg = src.load();
  const auto v = cfg.validate();
  json r = base("validate");
  r["valid"] = v.valid();
  r["violations"] = v.violations;
  if (v.valid()) {
    json basis = json::array();
    for (const auto& b : v.spec->gamma.basis()) basis.push_back(vector_json(b));
    r["rank"] = v.spec->gamma.rank();
    r["basis"] = std::move(basis);
    json sc = json::array(), dc = json::array();
    for (const auto& c : v.spec->gamma.sigma_coords()) sc.push_back(c.get_si());
    for (const auto& c : v.spec->gamma.delta_coords()) dc.push_back(c.get_si());
    r["sigma_coords"] = std::move(sc);
    r["delta_coords"] = std::move(dc);
    r["J"] = v.spec->j.to_string();
  }
  emit(out, r);
  return v.valid() ? kOk : kViolation;
}

int cmd_bracket(const SpecSource& src, const std::string& us, const std::string& vs, std::ostream& out) {
  const Loaded l = load_valid(src);
  const auto u = parse_element(l.alg, us, &l.cfg.indeterminates);
  const auto v = parse_element(l.alg, vs, &l.cfg.indeterminates);
  const auto expanded = bracket(l.alg, u, v, BracketPath::expanded);
  const auto definition = bracket(l.alg, u, v, BracketPath::definition);
  json r = base("bracket");
  r["u"] = print_element(u);
  r["v"] = print_element(v);
  r["result"] = print_element(expanded);
  r["paths_agree"] = expanded == definition;
  if (!(expanded == definition)) r["definition_result"] = print_element(definition);
  emit(out, r);
  return expanded == definition ? kOk : kViolation;
}

int cmd_derived(const SpecSource& src, const std::string& us, std::ostream& out) {
  const Loaded l = load_valid(src);
  const auto u = parse_element(l.alg, us, &l.cfg.indeterminates);
  const auto dec = derived_decomposition(l.alg, u);
  json r = base("derived");
  r["u"] = print_element(u);
  r["member"] = dec.has_value();
  if (dec) {
    r["free"] = print_element(dec->free);
    json cons = json::array();
    for (const auto& c : dec->constrained) {
      cons.push_back({{"base", print_monomial(c.base)}, {"coef", c.coef.to_string()}});
    }
    r["constrained"] = std::move(cons);
  }
  emit(out, r);
  return kOk;
}

int cmd_reduce(const SpecSource& src, const std::string& us, bool saturate, const std::string& trace_out,
               std::size_t max_steps, std::ostream& out) {
  const Loaded l = load_valid(src);
  const auto u = parse_element(l.alg, us, &l.cfg.indeterminates);
  ReductionTrace trace;
  try {
    trace = saturate ? saturate_from_one(l.alg, u) : reduce_to_one(l.alg, u, ReduceOptions{max_steps});
  } catch (const NotInDerived& e) {
    throw UsageError(e.what());
  } catch (const ZeroInput& e) {
    throw UsageError(e.what());
  }
  const std::string text = trace_to_json(trace);
  // replay the parsed form so the serialization is exercised too
  const ReductionTrace parsed = trace_from_json(l.alg, text, &l.cfg.indeterminates);
  const ReplayReport rep = replay(l.alg, parsed);
  if (!trace_out.empty()) {
    std::ofstream f(trace_out);
    if (!f) throw UsageError("cannot write " + trace_out);
    f << trace_to_json(trace, 2) << '\n';
  }
  json r = base(saturate ? "saturate" : "reduce");
  r["u"] = print_element(u);
  r["trace"] = json::parse(text);
  r["steps"] = trace.steps.size();
  r["replay"] = rep.ok ? "ok" : rep.error;
  emit(out, r);
  return rep.ok ? kOk : kViolation;
}

int cmd_replay(const SpecSource& src, const std::string& path, std::ostream& out) {
  const Loaded l = load_valid(src);
  const ReductionTrace t = trace_from_json(l.alg, read_file(path), &l.cfg.indeterminates);
  const ReplayReport rep = replay(l.alg, t);
  json r = base("replay");
  r["steps"] = t.steps.size();
  r["ok"] = rep.ok;
  if (!rep.ok) r["error"] = rep.error;
  emit(out, r);
  return rep.ok ? kOk : kViolation;
}

json counterexample_json(const HomCounterexample& c) {
  return {{"u", print_element(c.u)},
          {"v", print_element(c.v)},
          {"part", c.part},
          {"theta_of_bracket", print_element(c.lhs)},
          {"bracket_of_thetas", print_element(c.rhs)}};
}

int cmd_iso(const std::string& fa, const std::string& fb, const std::string& fp, std::size_t samples,
            std::uint64_t seed, std::ostream& out) {
  const SpecConfig ca = parse_spec_config(read_file(fa));
  const SpecConfig cb = parse_spec_config(read_file(fb));
  const auto va = ca.validate();
  const auto vb = cb.validate();
  if (!va.valid()) throw UsageError("first spec is invalid: " + va.violations.front());
  if (!vb.valid()) throw UsageError("second spec is invalid: " + vb.violations.front());
  std::vector<std::string> names = ca.indeterminates;
  for (const auto& n : cb.indeterminates) {
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
  const IsoConfig ic = parse_iso_config(read_file(fp), &names);
  const IsoVerdict verdict = iso_verify(*va.spec, *vb.spec, ic.params);
  json r = base("iso-check");
  r["params"] = ic.params.to_string();
  r["iso_verify"] = verdict.ok;
  r["diagnostics"] = verdict.diagnostics;
  if (!verdict.ok) {
    emit(out, r);
    return kViolation;
  }
  const Algebra a(*va.spec), b(*vb.spec);
  const Chi chi = ic.chi ? *ic.chi : chi_construct(va.spec->gamma, ic.params);
  json cv = json::array();
  for (const auto& v : chi.values) cv.push_back(v.to_string());
  r["chi"] = std::move(cv);
  const Theta theta(a, b, ic.params, chi);
  const AlgebraElement t1 = theta(a.one());
  r["theta_one"] = print_element(t1);
  const bool one_ok = t1 == b.x(b.zero_alpha(), {}, ic.params.a4.inverse());
  const HomReport hr = hom_verify(a, b, ic.params, chi, samples, seed, names);
  r["samples"] = samples;
  r["seed"] = seed;
  r["hom_ok"] = hr.ok;
  r["checked"] = hr.checked;
  if (hr.counterexample) r["counterexample"] = counterexample_json(*hr.counterexample);
  emit(out, r);
  return hr.ok && one_ok ? kOk : kViolation;
}

int cmd_realize(int case_no, long m, std::size_t samples, std::uint64_t seed, const std::string& reading,
                std::ostream& out) {
  std::vector<Case4Reading> readings;
  if (reading == "symmetric") {
    readings = {Case4Reading::symmetric};
  } else if (reading == "printed") {
    readings = {Case4Reading::printed};
  } else if (reading == "both") {
    readings = {Case4Reading::printed, Case4Reading::symmetric};
  } else {
    throw UsageError("--reading must be symmetric, printed or both");
  }
  if (case_no != 4 && reading != "symmetric") throw UsageError("--reading applies to case 4 only");
  std::size_t passing = 0;
  for (const auto rd : readings) {
    const RealizationMap map = make_realization(case_no, m, rd);
    const CrosscheckReport rep = crosscheck(map, samples, seed);
    json r = base("realize-check");
    r["case"] = case_no;
    r["m"] = m;
    if (case_no == 4) r["reading"] = rd == Case4Reading::printed ? "printed" : "symmetric";
    r["samples"] = samples;
    r["seed"] = seed;
    r["ok"] = rep.ok;
    r["checked"] = rep.checked;
    if (rep.counterexample) {
      r["counterexample"] = {{"u", print_element(rep.counterexample->first)},
                             {"v", print_element(rep.counterexample->second)},
                             {"detail", rep.detail}};
    }
    emit(out, r);
    passing += rep.ok;
  }
  if (readings.size() == 2) {
    json r = base("realize-check");
    r["case"] = case_no;
    r["passing_readings"] = passing;
    r["selected"] = passing == 1 ? json("unique") : json(nullptr);
    emit(out, r);
    return passing == 1 ? kOk : kViolation;
  }
  return passing == readings.size() ? kOk : kViolation;
}

int cmd_fuzz(const SpecSource& src, const std::string& suite, std::size_t samples, std::uint64_t seed,
             const std::string& params_file, std::ostream& out) {
  const Loaded l = load_valid(src);
  const auto& names = l.cfg.indeterminates;
  json r = base("fuzz");
  r["suite"] = suite;
  r["samples"] = samples;
  r["seed"] = seed;
  auto fail = [&](json cx) {
    r["ok"] = false;
    r["counterexample"] = std::move(cx);
    emit(out, r);
    return kViolation;
  };
  if (suite == "hom") {
    IsoParams p{FieldElement(0L), FieldElement(2L), FieldElement(0L), FieldElement(2L)};
    if (!params_file.empty()) p = parse_iso_config(read_file(params_file), &names).params;
    std::vector<GroupVector> image;
    for (const auto& b : l.alg.gamma().basis()) image.push_back(tau_apply(p, b));
    auto vb = validate_spec(image, l.alg.delta3(), l.alg.j());
    if (!vb.valid()) throw UsageError("tau(Gamma) is invalid: " + vb.violations.front());
    const Algebra dst(*vb.spec);
    const HomReport hr = hom_verify(l.alg, dst, p, chi_construct(l.alg.gamma(), p), samples, seed, names);
    if (!hr.ok) return fail(counterexample_json(*hr.counterexample));
    r["ok"] = true;
    r["checked"] = hr.checked;
    emit(out, r);
    return kOk;
  }
  if (suite != "jacobi" && suite != "closure" && suite != "paths") {
    throw UsageError("unknown suite " + suite);
  }
  for (std::size_t s = 0; s < samples; ++s) {
    Sampler sm(l.alg, sub_seed(seed, s), {}, names);
    const auto u = sm.element();
    const auto v = sm.element();
    const auto uv = bracket(l.alg, u, v);
    json cx{{"trial", s}, {"u", print_element(u)}, {"v", print_element(v)}};
    if (suite == "jacobi") {
      const auto w = sm.element();
      cx["w"] = print_element(w);
      if (!(uv == -bracket(l.alg, v, u))) {
        cx["property"] = "anticommutativity";
        return fail(cx);
      }
      const auto jac = bracket(l.alg, uv, w) + bracket(l.alg, bracket(l.alg, v, w), u) +
                       bracket(l.alg, bracket(l.alg, w, u), v);
      if (!jac.is_zero()) {
        cx["property"] = "jacobi";
        cx["sum"] = print_element(jac);
        return fail(cx);
      }
    } else if (suite == "closure") {
      if (!derived_membership(l.alg, uv)) {
        cx["property"] = "closure";
        cx["bracket"] = print_element(uv);
        return fail(cx);
      }
    } else {
      const auto def = bracket(l.alg, u, v, BracketPath::definition);
      const auto split = partial_bracket(l.alg, 1, u, v) + partial_bracket(l.alg, 2, u, v);
      if (!(def == uv) || !(split == uv)) {
        cx["property"] = !(def == uv) ? "path agreement" : "split identity";
        return fail(cx);
      }
    }
  }
  r["ok"] = true;
  r["checked"] = samples;
  emit(out, r);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the simple Lie algebras B(Gamma, J, delta)", "blocklie"};
  app.require_subcommand(1);
  SpecSource spec;

  auto* validate = app.add_subcommand("validate", "Check the conditions on (Gamma, J, delta)");
  spec.attach(validate);

  std::string u, v, path;
  auto* br = app.add_subcommand("bracket", "Bracket two elements by both formulas");
  spec.attach(br);
  br->add_option("U", u)->required();
  br->add_option("V", v)->required();

  auto* der = app.add_subcommand("derived", "Membership in the derived algebra");
  spec.attach(der);
  der->add_option("U", u)->required();

  bool saturate = false;
  std::string trace_out;
  std::size_t max_steps = 0;
  auto* red = app.add_subcommand("reduce", "Certificate that the ideal generated by U contains 1");
  spec.attach(red);
  red->add_option("U", u)->required();
  red->add_flag("--saturate", saturate, "Derive U from 1 instead");
  red->add_option("--trace-out", trace_out, "Also write the trace JSON to this file");
  red->add_option("--max-steps", max_steps, "Planner step limit (0 = default)");

  auto* rep = app.add_subcommand("replay", "Replay a trace JSON file");
  spec.attach(rep);
  rep->add_option("TRACE", path)->required();

  std::string fa, fb, fp;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  auto* iso = app.add_subcommand("iso-check", "Verify the isomorphism given by PARAMS");
  iso->add_option("SPECA", fa)->required();
  iso->add_option("SPECB", fb)->required();
  iso->add_option("PARAMS", fp)->required();
  iso->add_option("--samples", samples);
  iso->add_option("--seed", seed);

  int case_no = 1;
  long m = 1;
  std::string reading = "symmetric";
  auto* real = app.add_subcommand("realize-check", "Cross-check a concrete realization");
  real->add_option("--case", case_no)->required()->check(CLI::Range(1, 4));
  real->add_option("--m", m);
  real->add_option("--samples", samples);
  real->add_option("--seed", seed);
  real->add_option("--reading", reading, "Case 4 reading: symmetric, printed or both");

  std::string suite;
  auto* fuzz = app.add_subcommand("fuzz", "Randomized property suites");
  spec.attach(fuzz);
  fuzz->add_option("--suite", suite)->required()->check(CLI::IsMember({"jacobi", "closure", "paths", "hom"}));
  fuzz->add_option("--samples", samples);
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--params", fp, "Iso params JSON for the hom suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(spec, out);
    if (*br) return cmd_bracket(spec, u, v, out);
    if (*der) return cmd_derived(spec, u, out);
    if (*red) return cmd_reduce(spec, u, saturate, trace_out, max_steps, out);
    if (*rep) return cmd_replay(spec, path, out);
    if (*iso) return cmd_iso(fa, fb, fp, samples, seed, out);
    if (*real) return cmd_realize(case_no, m, samples, seed, reading, out);
    if (*fuzz) return cmd_fuzz(spec, suite, samples, seed, fp, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const SyntaxError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const JViolation& e) {
    err << "J violation: " << e.what() << '\n';
    return kUsage;
  } catch (const ArityError& e) {
    err << "arity error: " << e.what() << '\n';
    return kUsage;
  } catch (const DeltaZero& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace blocklie::cli
