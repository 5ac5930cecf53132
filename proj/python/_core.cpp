#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "condind/density.hpp"
#include "condind/dispatch.hpp"
#include "condind/error.hpp"
#include "condind/essential.hpp"
#include "condind/expectation.hpp"
#include "condind/resolve.hpp"
#include "condind/risk.hpp"

namespace py = pybind11;
using namespace condind;

namespace {

using Values = std::vector<std::string>;
using Cells = std::vector<std::vector<std::size_t>>;
using Named = std::map<std::string, Values>;

SpacePtr make_space(std::size_t n, const std::optional<Values>& probs) {
  SpacePtr uniform = ProbabilitySpace::uniform(n);
  if (!probs) return uniform;
  if (probs->size() != n) throw ValidationError("probs and values have different lengths");
  std::vector<Rational> p;
  for (const auto& s : *probs) p.push_back(parse_rational(s));
  return ProbabilitySpace::create(uniform->labels(), p);
}

RandomVariable make_rv(const SpacePtr& s, const Values& values) {
  std::vector<ExtReal> v;
  for (const auto& x : values) v.push_back(ExtReal::parse(x));
  return RandomVariable(s, std::move(v));
}

Scenario make_scenario(std::size_t n, const std::optional<Values>& probs, const std::optional<Named>& variables) {
  Scenario s;
  s.space = make_space(n, probs);
  if (variables)
    for (const auto& [name, v] : *variables) s.variables.emplace(name, make_rv(s.space, v));
  return s;
}

Values unary(RandomVariable (*f)(const RandomVariable&, const Partition&), const Values& values, const Cells& cells,
             const std::optional<Values>& probs) {
  SpacePtr s = make_space(values.size(), probs);
  return f(make_rv(s, values), Partition(values.size(), cells)).to_strings();
}

Values apply(const std::string& indicator, const Values& values, const Cells& cells,
             const std::optional<Values>& probs, const std::optional<Named>& variables) {
  Scenario s = make_scenario(values.size(), probs, variables);
  IndicatorSpec ind = resolve_indicator(s, indicator, Partition(values.size(), cells));
  return ind.apply(make_rv(s.space, values)).to_strings();
}

Values risk(const std::string& indicator, const Values& values, const Cells& cells,
            const std::optional<Values>& probs, const std::string& tol) {
  Scenario s = make_scenario(values.size(), probs, std::nullopt);
  IndicatorSpec ind = resolve_indicator(s, indicator, Partition(values.size(), cells));
  Rational t = tol.empty() ? default_rho_tolerance() : parse_rational(tol);
  return rho(ind, make_rv(s.space, values), t).to_strings();
}

py::dict recover(const std::string& indicator, std::size_t atoms, const Cells& cells,
                 const std::optional<Values>& probs, const std::optional<Named>& variables, std::size_t samples,
                 std::uint64_t seed) {
  Scenario s = make_scenario(atoms, probs, variables);
  IndicatorSpec ind = resolve_indicator(s, indicator, Partition(atoms, cells));
  CheckOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  DensityReport d = recover_density(ind, opt);
  py::dict out;
  out["density"] = d.density.to_strings();
  out["conditional_mean_one"] = d.conditional_mean_one;
  out["reconstruction_ok"] = d.reconstruction_ok;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Conditional indicators on finite probability spaces (exact rationals as strings)";

  auto& error = py::register_exception<Error>(m, "CondindError", PyExc_ValueError);
  py::register_exception<HypothesisFailed>(m, "HypothesisFailed", error.ptr());

  m.def("ext_add", [](const std::string& a, const std::string& b) {
    return (ExtReal::parse(a) + ExtReal::parse(b)).to_string();
  });
  m.def("ext_sub", [](const std::string& a, const std::string& b) {
    return (ExtReal::parse(a) - ExtReal::parse(b)).to_string();
  });
  m.def("ext_mul", [](const std::string& a, const std::string& b) {
    return (ExtReal::parse(a) * ExtReal::parse(b)).to_string();
  });

  m.def(
      "esssup_cond",
      [](const Values& v, const Cells& c, const std::optional<Values>& p) { return unary(&esssup_cond, v, c, p); },
      py::arg("values"), py::arg("cells"), py::arg("probs") = py::none());
  m.def(
      "essinf_cond",
      [](const Values& v, const Cells& c, const std::optional<Values>& p) { return unary(&essinf_cond, v, c, p); },
      py::arg("values"), py::arg("cells"), py::arg("probs") = py::none());
  m.def(
      "cond_exp_extended",
      [](const Values& v, const Cells& c, const std::optional<Values>& p) {
        return unary(&cond_exp_extended, v, c, p);
      },
      py::arg("values"), py::arg("cells"), py::arg("probs") = py::none());

  m.def("apply", &apply, "Evaluates a named indicator (CLI naming) on one variable.", py::arg("indicator"),
        py::arg("values"), py::arg("cells"), py::arg("probs") = py::none(), py::arg("variables") = py::none());
  m.def("rho", &risk, py::arg("indicator"), py::arg("values"), py::arg("cells"), py::arg("probs") = py::none(),
        py::arg("tol") = "");
  m.def("recover_density", &recover, py::arg("indicator"), py::arg("atoms"), py::arg("cells"),
        py::arg("probs") = py::none(), py::arg("variables") = py::none(), py::arg("samples") = 200,
        py::arg("seed") = 0);

  m.def(
      "dispatch",
      [](const std::vector<std::string>& args) {
        RunResult r;
        {
          py::gil_scoped_release release;
          r = condind::dispatch(args);
        }
        return py::make_tuple(r.exit_code, r.output);
      },
      "Runs one CLI command line; returns (exit_code, output).", py::arg("args"));
}
