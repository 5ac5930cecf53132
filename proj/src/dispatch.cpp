#include "condind/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "condind/battery.hpp"
#include "condind/checks.hpp"
#include "condind/density.hpp"
#include "condind/error.hpp"
#include "condind/essential.hpp"
#include "condind/expectation.hpp"
#include "condind/report.hpp"
#include "condind/resolve.hpp"
#include "condind/risk.hpp"
#include "condind/stochastic.hpp"

namespace condind {

namespace {

struct Outcome {
  Json result;
  std::string text;
  bool failure = false;
};

struct Settings {
  std::string scenario_path;
  std::uint64_t seed = 0;
  std::size_t samples = 500;
  std::size_t cap = kDefaultEventCap;
  std::string tol;
  std::string format = "json";
  std::string sigma;
  bool timing = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

Outcome from_report(const CheckReport& r) {
  return Outcome{to_json(r), render_text(r), !r.ok()};
}

Json event_json(const ProbabilitySpace& space, const Event& e) {
  Json j = Json::array();
  for (auto a : e.atoms()) j.push_back(space.label(a));
  return j;
}

class Runner {
 public:
  Runner(const Settings& st, Scenario sc) : st_(st), sc_(std::move(sc)) {}

  CheckOptions options() const {
    CheckOptions o;
    o.samples = st_.samples;
    o.seed = st_.seed;
    o.cap = st_.cap;
    return o;
  }
  Partition sigma() const { return st_.sigma.empty() ? default_sigma(sc_) : sc_.partition(st_.sigma); }
  std::string sigma_name() const { return st_.sigma.empty() ? "default" : st_.sigma; }
  Rational tol() const { return st_.tol.empty() ? default_rho_tolerance() : parse_rational(st_.tol); }
  const Scenario& scenario() const { return sc_; }
  IndicatorSpec indicator(const std::string& name) const { return resolve_indicator(sc_, name, sigma()); }

  Outcome apply(const std::string& name, const std::string& var) const {
    IndicatorSpec ind = indicator(name);
    RandomVariable v = ind.apply(sc_.variable(var));
    return Outcome{Json{{"indicator", ind.name}, {"var", var}, {"value", to_json(v)}}, v.to_string() + "\n"};
  }

  Outcome check(const std::string& name, const std::string& property,
                const std::vector<std::string>& sequences) const {
    IndicatorSpec ind = indicator(name);
    CheckOptions o = options();
    using Fn = std::function<CheckReport()>;
    const std::map<std::string, Fn> named{
        {"axioms", [&] { return check_axioms(ind, o); }},
        {"regular", [&] { return check_regular(ind, o); }},
        {"hplus", [&] { return check_hplus_decomposition(ind, o); }},
        {"convex-regular", [&] { return check_convex_implies_regular(ind, o); }},
        {"additive-regular", [&] { return check_additive_implies_regular(ind, o); }},
        {"dual-involution", [&] { return check_dual_involution(ind, o); }},
        {"extension-sandwich", [&] { return check_extension_sandwich(ind, o); }},
        {"extension-duality", [&] { return check_extension_duality(ind, o); }},
        {"linear-from-additive", [&] { return check_linear_from_additive(ind, o); }},
        {"projection-premises", [&] { return check_projection_uniqueness_premises(ind, o); }},
        {"prop-rm", [&] { return check_prop_rm(ind, o); }},
        {"dom-closure", [&] { return check_dom_closure(ind, o); }},
        {"fatou",
         [&] {
           std::vector<std::vector<RandomVariable>> seqs;
           for (const auto& s : sequences) {
             std::vector<RandomVariable> seq;
             for (const auto& v : split(s, ',')) seq.push_back(sc_.variable(v));
             seqs.push_back(std::move(seq));
           }
           return check_fatou(ind, seqs);
         }},
        {"all",
         [&] {
           std::vector<CheckReport> parts{check_axioms(ind, o)};
           for (Flag f : ind.flags.list()) parts.push_back(check_structural(ind, f, o));
           return CheckReport::composite("declared properties " + ind.name, std::move(parts));
         }},
    };
    if (auto it = named.find(property); it != named.end()) return from_report(it->second());
    if (auto flag = parse_flag(property)) return from_report(check_structural(ind, *flag, o));
    throw UnknownName("unknown property '" + property + "'");
  }

  Outcome tower(const std::string& family, const std::string& s, const std::string& t) const {
    StochasticIndicator si = resolve_family(sc_, family);
    if (s.empty() && t.empty()) return from_report(check_tower_all(si, options()));
    const Filtration& f = si.filtration;
    std::size_t si_idx = s.empty() ? 0 : f.index_of(s);
    std::size_t ti_idx = t.empty() ? f.size() - 1 : f.index_of(t);
    return from_report(check_tower(si, si_idx, ti_idx, options()));
  }

  Outcome project(const std::string& i0_name, const std::string& var, const std::string& time,
                  const std::string& z_name, const std::string& grid_text, std::size_t budget) const {
    const Filtration& f = sc_.require_filtration();
    const Partition& ft = time.empty() ? f.at(f.size() - 1) : f.at(f.index_of(time));
    IndicatorSpec i0 = resolve_indicator(sc_, i0_name, f.at(0));
    const RandomVariable& x = sc_.variable(var);
    if (!z_name.empty())
      return from_report(check_projection(i0, sc_.variable(z_name), x, ft, st_.cap, st_.samples, st_.seed));
    ValueGrid grid;
    for (const auto& g : split(grid_text, ',')) grid.push_back(ExtReal::parse(g));
    std::vector<RandomVariable> sols = projection_solve(i0, x, ft, grid, budget, st_.cap);
    Json arr = Json::array();
    std::ostringstream text;
    for (const auto& z : sols) {
      arr.push_back(to_json(z));
      text << z.to_string() << "\n";
    }
    Json j{{"indicator", i0.name}, {"var", var}, {"solutions", arr}, {"count", sols.size()}};
    if (sols.empty()) text << "no solution on the grid\n";
    return Outcome{j, text.str()};
  }

  Outcome envelope(const std::string& family, const std::string& payoff,
                   const std::vector<std::string>& exercise) const {
    StochasticIndicator si = resolve_family(sc_, family);
    const Filtration& f = si.filtration;
    std::optional<AdaptedProcess> ex;
    if (!exercise.empty()) {
      std::vector<RandomVariable> g(f.size(), RandomVariable::constant(sc_.space, ExtReal::minus_inf()));
      for (const auto& item : exercise) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ValidationError("exercise entries look like <date>=<variable>");
        g[f.index_of(item.substr(0, eq))] = sc_.variable(item.substr(eq + 1));
      }
      ex = make_adapted(f, std::move(g));
    }
    AdaptedProcess v = backward_envelope(si, sc_.variable(payoff), ex);
    std::ostringstream text;
    for (std::size_t t = 0; t < f.size(); ++t) text << "V_" << f.time(t) << " = " << v.values[t].to_string() << "\n";
    return Outcome{Json{{"V", to_json(v, f)}}, text.str()};
  }

  Outcome risk(const std::string& name, const std::string& var, bool axioms) const {
    IndicatorSpec ind = indicator(name);
    RandomVariable r = rho(ind, sc_.variable(var), tol());
    Json j{{"indicator", ind.name},
           {"var", var},
           {"path", ind.flags.has(Flag::TranslationInvariant) ? "exact" : "bisection"},
           {"rho", to_json(r)}};
    std::string text = "rho = " + r.to_string() + "\n";
    bool failure = false;
    if (axioms) {
      CheckReport rep = check_prop_rm(ind, options());
      j["axioms"] = to_json(rep);
      text += render_text(rep);
      failure = !rep.ok();
    }
    return Outcome{j, text, failure};
  }

  Outcome condexp_ext(const std::string& var) const {
    const RandomVariable& x = sc_.variable(var);
    Partition h = sigma();
    CellParts parts = cond_exp_parts(x, h);
    RandomVariable v = cond_exp_extended(x, h);
    return Outcome{Json{{"var", var},
                        {"value", to_json(v)},
                        {"plus", to_json(RandomVariable::from_cells(sc_.space, h, parts.plus))},
                        {"minus", to_json(RandomVariable::from_cells(sc_.space, h, parts.minus))}},
                   v.to_string() + "\n"};
  }

  Outcome additivity(const std::string& xv, const std::string& yv) const {
    const RandomVariable& x = sc_.variable(xv);
    const RandomVariable& y = sc_.variable(yv);
    Partition h = sigma();
    AdditivitySet f = additivity_set(x, y, h);
    Json cells = Json::array();
    std::ostringstream text;
    for (std::size_t k = 0; k < h.cell_count(); ++k) {
      Json tags = Json::array();
      std::string tag_text;
      for (auto t : f.cell_tags[k]) {
        tags.push_back(to_string(t));
        tag_text += (tag_text.empty() ? "" : ",") + to_string(t);
      }
      cells.push_back(Json{{"cell", event_json(*sc_.space, h.cell_event(k))}, {"tags", tags}});
      text << "cell " << k << ": " << (tag_text.empty() ? "none" : tag_text) << "\n";
    }
    CheckReport rep = check_additivity_on_F(x, y, h);
    text << render_text(rep);
    return Outcome{Json{{"F", event_json(*sc_.space, f.set)}, {"cells", cells}, {"check", to_json(rep)}}, text.str(),
                   !rep.ok()};
  }

  Outcome recover(const std::string& name) const {
    IndicatorSpec ind = indicator(name);
    ConditionalExpectationVerdict v = is_conditional_expectation(ind, options());
    Json j{{"indicator", ind.name}, {"is_conditional_expectation", v.is_conditional_expectation},
           {"contractive", v.contractive}};
    std::ostringstream text;
    if (!v.failed_hypotheses.empty()) {
      j["hypothesis_failed"] = v.failed_hypotheses;
      text << "hypothesis failed:";
      for (const auto& f : v.failed_hypotheses) text << " " << f;
      text << "\n";
      return Outcome{j, text.str(), true};
    }
    j["report"] = to_json(*v.report);
    text << "density = " << v.report->density.to_string() << "\n"
         << "reconstruction_ok = " << (v.report->reconstruction_ok ? "true" : "false") << "\n"
         << "is_conditional_expectation = " << (v.is_conditional_expectation ? "true" : "false") << "\n";
    return Outcome{j, text.str(), !v.report->reconstruction_ok};
  }

  Outcome verify() const { return from_report(verify_all(sc_, options())); }

 private:
  const Settings& st_;
  Scenario sc_;
};

std::size_t env_cap(std::size_t fallback) {
  const char* env = std::getenv("CONDIND_CAP");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string("CONDIND_CAP is not a nonnegative integer: ") + env);
  }
}

}  // namespace

RunResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Conditional indicators on finite probability spaces", "condind"};
  app.fallthrough();
  app.require_subcommand(1);
  Settings st;
  app.add_option("--scenario", st.scenario_path, "Scenario JSON (default: built-in canonical scenario)");
  app.add_option("--seed", st.seed, "Random seed");
  auto* samples_opt = app.add_option("--samples", st.samples, "Cases per property");
  auto* cap_opt = app.add_option("--cap", st.cap, "Event enumeration cap");
  app.add_option("--tol", st.tol, "Bisection tolerance p/q");
  app.add_option("--format", st.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--sigma", st.sigma, "Target partition name");
  app.add_flag("--timing", st.timing, "Add elapsed time to the JSON report");

  std::string indicator = "esssup";
  std::string var = "X";
  std::string var2 = "Y";
  std::string property = "all";
  std::string s_time, t_time, time, z_name, grid = "0,1/2,1,2,3,4,5,6";
  std::size_t budget = 1000000;
  std::vector<std::string> sequences, exercise;
  bool axioms = false;

  auto* apply = app.add_subcommand("apply", "Evaluate an indicator");
  apply->add_option("--indicator", indicator);
  apply->add_option("--var", var);
  auto* check = app.add_subcommand("check", "Run a property check");
  check->add_option("--indicator", indicator);
  check->add_option("--property", property);
  check->add_option("--sequence", sequences, "Comma-separated variables (fatou)");
  auto* tower = app.add_subcommand("tower", "Tower property of a stochastic indicator");
  tower->add_option("--indicator", indicator, "One name, or one per date separated by ';'");
  tower->add_option("--s", s_time);
  tower->add_option("--t", t_time);
  auto* project = app.add_subcommand("project", "Projection property / solver");
  project->add_option("--indicator", indicator, "I0 at the first date");
  project->add_option("--var", var);
  project->add_option("--time", time);
  project->add_option("--z", z_name, "Check this candidate instead of solving");
  project->add_option("--grid", grid);
  project->add_option("--budget", budget);
  auto* envelope = app.add_subcommand("envelope", "Backward envelope");
  envelope->add_option("--indicator", indicator);
  envelope->add_option("--payoff", var);
  envelope->add_option("--exercise", exercise, "<date>=<variable> (American mode)");
  auto* risk = app.add_subcommand("risk", "Indicator risk measure");
  risk->add_option("--indicator", indicator);
  risk->add_option("--var", var);
  risk->add_flag("--axioms", axioms);
  auto* cee = app.add_subcommand("condexp-ext", "Extended conditional expectation");
  cee->add_option("--var", var);
  auto* addset = app.add_subcommand("additivity-set", "Additivity set of the extended conditional expectation");
  addset->add_option("--var", var);
  addset->add_option("--var2", var2);
  auto* recover = app.add_subcommand("recover-density", "Density recovery");
  recover->add_option("--indicator", indicator);
  auto* verify = app.add_subcommand("verify-all", "Full lemma battery");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    return RunResult{kExitOk, app.help()};
  } catch (const CLI::ParseError& e) {
    if (!app.get_subcommands().empty() || args.empty() || args.front().rfind("--", 0) == 0)
      return RunResult{kExitValidation, std::string("error: ") + e.what() + "\n"};
    return RunResult{kExitValidation, "error: unknown command '" + args.front() + "'\n"};
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  try {
    if (cmd == verify && samples_opt->count() == 0) st.samples = 1000;
    if (cap_opt->count() == 0) st.cap = env_cap(st.cap);
    Scenario sc = st.scenario_path.empty() ? canonical_scenario() : load_scenario(st.scenario_path);
    Runner run(st, std::move(sc));

    auto started = std::chrono::steady_clock::now();
    Outcome out;
    if (cmd == apply) out = run.apply(indicator, var);
    else if (cmd == check) out = run.check(indicator, property, sequences);
    else if (cmd == tower) out = run.tower(indicator, s_time, t_time);
    else if (cmd == project) out = run.project(indicator, var, time, z_name, grid, budget);
    else if (cmd == envelope) out = run.envelope(indicator, var, exercise);
    else if (cmd == risk) out = run.risk(indicator, var, axioms);
    else if (cmd == cee) out = run.condexp_ext(var);
    else if (cmd == addset) out = run.additivity(var, var2);
    else if (cmd == recover) out = run.recover(indicator);
    else if (cmd == verify) out = run.verify();
    else throw UnknownCommand("unknown command '" + name + "'");
    auto elapsed = std::chrono::steady_clock::now() - started;

    const int code = out.failure ? kExitCounterexample : kExitOk;
    if (st.format == "text") return RunResult{code, out.text};
    Json report{{"command", name},
                {"args", args},
                {"scenario", st.scenario_path.empty() ? "canonical" : st.scenario_path},
                {"seed", st.seed},
                {"sigma", run.sigma_name()},
                {"result", out.result},
                {"status", out.failure ? "counterexample" : "ok"}};
    if (st.timing)
      report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    return RunResult{code, report.dump(2) + "\n"};
  } catch (const Error& e) {
    return RunResult{kExitValidation, std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return RunResult{kExitValidation, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return RunResult{kExitInternal, std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace condind
