// Python bindings for the main operations: relation verification, matrix
// algebra structure, abstract dimensions via completion, idempotent image
// ranks, mixed-parameter checks, and Alexander polynomials. Parameters are
// passed as strings ("2", "7/5", "-1") and parsed exactly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "loophecke/alexander.hpp"
#include "loophecke/closure.hpp"
#include "loophecke/rewrite.hpp"
#include "loophecke/serialize.hpp"
#include "loophecke/structure.hpp"
#include "loophecke/symgroup.hpp"

namespace py = pybind11;

namespace {

using lh::Rational;

py::dict verify(const std::string& rep_name, int n, const std::string& t_str,
                const std::string& relation_set) {
  Rational t = lh::parse_rational(t_str);
  auto rep = lh::make_rep(rep_name, n, t);
  auto relations = relation_set == "loop-braid" ? lh::loop_braid_relations(n, t)
                                                : lh::lh_relations(n, t);
  auto report = lh::verify_assignment(rep, relations);
  std::vector<std::string> failures;
  for (const auto& [label, pass] : report.results)
    if (!pass) failures.push_back(label);
  py::dict d;
  d["rep"] = rep_name;
  d["n"] = n;
  d["t"] = t.str();
  d["all_pass"] = report.all_pass;
  d["failures"] = failures;
  return d;
}

py::dict sp_structure(int n, const std::string& t_str) {
  auto report = lh::structure(lh::close(lh::fe_rep(n, lh::parse_rational(t_str))));
  py::dict d;
  d["n"] = report.n;
  d["t"] = report.t_str;
  d["dim"] = report.dim;
  d["radical_dim"] = report.radical_dim;
  d["ss_dim"] = report.ss_dim;
  d["block_dims"] = report.block_dims;
  d["irrep_dims"] = report.irrep_dims;
  d["cartan"] = report.cartan;
  py::dict checks;
  for (const auto& [label, ok] : report.checks) checks[label.c_str()] = ok;
  d["checks"] = checks;
  d["all_pass"] = report.all_checks_pass();
  return d;
}

py::dict lh_dim(int n, const std::string& t_str, const std::string& drop,
                int max_degree) {
  Rational t = lh::parse_rational(t_str);
  auto relations = lh::lh_relations(n, t, drop == "r1i", drop == "r1ii");
  auto sys = lh::complete(relations, n, t, max_degree);
  py::dict d;
  d["n"] = n;
  d["t"] = t.str();
  d["drop"] = drop.empty() ? "none" : drop;
  d["status"] = lh::status_str(sys);
  d["rule_count"] = sys.rule_count();
  if (!sys.is_complete()) {
    d["dim"] = py::none();
    d["budget_exceeded"] = true;
    d["levels"] = std::vector<long>{};
    return d;
  }
  auto basis = lh::enumerate_basis(sys);
  d["levels"] = basis.level_sizes;
  if (basis.capped) {
    d["dim"] = py::none();
    d["budget_exceeded"] = true;
  } else {
    d["dim"] = basis.dim();
    d["budget_exceeded"] = false;
  }
  return d;
}

std::vector<py::dict> idem_ranks(int n, const std::string& t_str) {
  auto rep = lh::fe_rep(n, lh::parse_rational(t_str));
  std::vector<py::dict> rows;
  for (int arm = 0; arm < n; ++arm) {
    lh::HookPartition lam(n, arm);
    auto image = lh::psi_apply(lh::hook_idempotent(lam), rep);
    py::dict row;
    row["partition"] = lam.str();
    row["rank"] = lh::rank(image);
    row["nonzero"] = !image.is_zero();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::pair<bool, bool> mixed_parameter_check(const std::string& t_str,
                                            const std::string& s_str) {
  return lh::mixed_parameter_check(lh::parse_rational(t_str),
                                   lh::parse_rational(s_str));
}

std::string alexander(const std::string& braid, int n) {
  return lh::alexander_polynomial(braid, n).str();
}

}  // namespace

PYBIND11_MODULE(_loophecke, m) {
  m.doc() = "exact-arithmetic toolkit for loop braid representations and "
            "their finite dimensional quotient algebras";

  m.def("verify", &verify, py::arg("rep"), py::arg("n"), py::arg("t") = "2",
        py::arg("relations") = "all",
        "Check a representation (fe, burau, naive) against the defining "
        "relations; returns all_pass and the failing relation labels.");

  m.def("sp_structure", &sp_structure, py::arg("n"), py::arg("t") = "2",
        "Close the tensor representation and report dimension, radical, "
        "semisimple rank, charge blocks, Cartan matrix, and named checks.");

  m.def("lh_dim", &lh_dim, py::arg("n"), py::arg("t") = "2",
        py::arg("drop") = "", py::arg("max_degree") = 0,
        "Dimension of the abstract algebra via rewriting completion; dim is "
        "None when the degree budget or basis cap is exceeded.");

  m.def("idem_ranks", &idem_ranks, py::arg("n"), py::arg("t") = "2",
        "Image ranks of the hook partition idempotents in the tensor "
        "representation.");

  m.def("mixed_parameter_check", &mixed_parameter_check, py::arg("t"),
        py::arg("s"),
        "For the two-parameter gate pair, returns (tts holds, tss holds).");

  m.def("alexander", &alexander, py::arg("braid"), py::arg("n"),
        "Alexander polynomial of a braid closure, e.g. ('s1 s1 s1', 2).");
}
