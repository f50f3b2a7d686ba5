#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "macjack/conjecture_lab.hpp"
#include "macjack/jack.hpp"
#include "macjack/macdonald.hpp"
#include "macjack/report.hpp"

namespace py = pybind11;
using namespace macjack;

namespace {

SymFunc build(const std::string& partition, int n_vars, const std::string& basis, const std::string& side) {
  const Partition lam = Partition::parse(partition);
  const int n = n_vars > 0 ? n_vars : std::max(1, lam.length());
  if (lam.length() > n) throw std::invalid_argument("partition has more than n_vars parts");
  if (basis != "J" && basis != "P") throw std::invalid_argument("basis must be 'J' or 'P'");
  if (side == "qt") return basis == "J" ? rodrigues(lam, n) : macdonald_P(lam, n);
  if (side == "alpha") return basis == "J" ? rodrigues_jack(lam, n) : jack_P(lam, n);
  throw std::invalid_argument("side must be 'qt' or 'alpha'");
}

std::string verify_json(const std::string& suite, int n_min, int n_max, int deg_max, int kappa_min, int kappa_max,
                        int trials, std::uint64_t seed, int jobs, const std::vector<int>& alphas) {
  SweepBounds b;
  b.n_min = n_min;
  b.n_max = n_max;
  b.deg_max = deg_max;
  b.kappa_min = kappa_min;
  b.kappa_max = kappa_max;
  b.trials = trials;
  b.seed = seed;
  b.jobs = jobs;
  std::vector<VerificationReport> rs;
  {
    py::gil_scoped_release release;
    const auto jn = jack_sweep_names();
    if (std::find(jn.begin(), jn.end(), suite) != jn.end()) {
      rs = jack_sweep(suite, b, alphas);
    } else if (suite == "worked-example") {
      rs = worked_example_check(b);
    } else {
      rs = conjecture_sweep(suite, b);
    }
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rs) j.push_back(to_json(r, false));
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_macjack, m) {
  m.doc() = "Exact Macdonald and Jack polynomials from column-adding operators.";

  m.def(
      "expand",
      [](const std::string& partition, int n_vars, const std::string& basis, const std::string& side) {
        return build(partition, n_vars, basis, side).to_string();
      },
      py::arg("partition"), py::arg("n_vars") = 0, py::arg("basis") = "J", py::arg("side") = "qt");
  m.def(
      "expand_latex",
      [](const std::string& partition, int n_vars, const std::string& basis, const std::string& side) {
        return build(partition, n_vars, basis, side).to_latex();
      },
      py::arg("partition"), py::arg("n_vars") = 0, py::arg("basis") = "J", py::arg("side") = "qt");
  m.def(
      "expand_json",
      [](const std::string& partition, int n_vars, const std::string& basis, const std::string& side) {
        return to_json(build(partition, n_vars, basis, side)).dump();
      },
      py::arg("partition"), py::arg("n_vars") = 0, py::arg("basis") = "J", py::arg("side") = "qt");

  m.def(
      "norm_ratio",
      [](const std::string& partition, int n_vars) {
        const Partition lam = Partition::parse(partition);
        return std::make_pair(norm_ratio(lam, n_vars).to_string(), norm_closed_form_ratio(lam, n_vars).to_string());
      },
      py::arg("partition"), py::arg("n_vars"), "(recursion, closed form) as text");

  m.def(
      "pieri",
      [](const std::string& partition, int k, int n_vars, const std::string& side) {
        const Partition lam = Partition::parse(partition);
        const PExpansion e = side == "alpha" ? pieri_alpha(lam, k, n_vars) : pieri_expand(lam, k, n_vars);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [mu, c] : e) out.emplace_back(mu.to_string(), c.to_string());
        return out;
      },
      py::arg("partition"), py::arg("k"), py::arg("n_vars"), py::arg("side") = "qt");

  m.def("suite_names", [] {
    auto names = sweep_names();
    names.push_back("worked-example");
    for (const auto& s : jack_sweep_names()) names.push_back(s);
    return names;
  });

  m.def("verify_json", &verify_json, py::arg("suite"), py::arg("n_min") = 1, py::arg("n_max") = 3,
        py::arg("deg_max") = 5, py::arg("kappa_min") = 0, py::arg("kappa_max") = 4, py::arg("trials") = 20,
        py::arg("seed") = SweepBounds{}.seed, py::arg("jobs") = 1, py::arg("alphas") = std::vector<int>{1, 2, 3});

  py::register_exception<NotExact>(m, "NotExact", PyExc_ArithmeticError);
}
