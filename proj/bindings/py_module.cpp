#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "monopot/algebra.hpp"
#include "monopot/distributions.hpp"
#include "monopot/hyperfunctions.hpp"
#include "monopot/potentials.hpp"
#include "monopot/special_functions.hpp"
#include "monopot/term_algebra.hpp"

namespace py = pybind11;
using namespace monopot;

namespace {

py::dict mv_dict(const Multivector& v) {
  py::dict d;
  for (unsigned i = 0; i < v.size(); ++i)
    if (v[i] != 0.0) d[py::str(blade_label(i))] = v[i];
  return d;
}

Side parse_side(const std::string& s) {
  if (s == "plus" || s == "+") return Side::plus;
  if (s == "minus" || s == "-") return Side::minus;
  throw std::invalid_argument("side must be 'plus' or 'minus'");
}

Series parse_series(const std::string& s) {
  if (s == "a") return Series::a;
  if (s == "b") return Series::b;
  if (s == "c") return Series::c;
  throw std::invalid_argument("series must be 'a', 'b' or 'c'");
}

std::vector<PointUpperLower> to_points(int m, const std::vector<std::vector<double>>& rows) {
  std::vector<PointUpperLower> pts;
  pts.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != m + 1)
      throw std::invalid_argument("point " + std::to_string(i) + " must have m+1 = " +
                                  std::to_string(m + 1) + " coordinates (x0, x1, ..., xm)");
    PointUpperLower p;
    p.x0 = rows[i][0];
    p.xs.assign(rows[i].begin() + 1, rows[i].end());
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Monogenic potential chain in half-space: Clifford-algebra potentials, "
      "boundary distributions and hyperfunction jump checks.";
  mod.attr("__version__") = "0.1.0";

  mod.def("sigma", &sigma, py::arg("d"), "Surface area of the unit sphere S^{d-1}.");
  mod.def("digamma", &digamma, py::arg("x"));
  mod.def("fp_gamma", &fp_gamma, py::arg("z"),
          "Gamma(z), continued by its Laurent finite part at the poles.");
  mod.def("f_profile", &F_profile, py::arg("m"), py::arg("v"),
          "int_0^v eta^{m-1} (1+eta^2)^{-(m+1)/2} d eta (odd/even continuation for v<0).");
  mod.def("f_profile_inf", &F_profile_inf, py::arg("m"));
  mod.def("sphere_moment", &sphere_moment, py::arg("m"), py::arg("alpha"),
          "Exact integral of the monomial omega^alpha over the unit sphere.");

  mod.def(
      "evaluable",
      [](int m, const std::string& pot) { return evaluable(m, parse_potential_id(pot)); },
      py::arg("m"), py::arg("potential"));

  mod.def(
      "eval_potential",
      [](int m, const std::string& pot, const std::vector<std::vector<double>>& rows,
         int threads) {
        const PotentialId id = parse_potential_id(pot);
        const auto vals = eval_potential_many(m, id, to_points(m, rows), resolve_threads(threads));
        py::list out;
        for (const auto& v : vals) out.append(mv_dict(v));
        return out;
      },
      py::arg("m"), py::arg("potential"), py::arg("points"), py::arg("threads") = 0,
      "Evaluate a chain potential at rows of (x0, x1, ..., xm); returns one "
      "{blade: coefficient} dict per point.");

  mod.def(
      "pointwise_limit",
      [](int m, const std::string& pot, const std::vector<double>& xs, const std::string& side) {
        return mv_dict(pointwise_limit(m, parse_potential_id(pot), xs, parse_side(side)));
      },
      py::arg("m"), py::arg("potential"), py::arg("x"), py::arg("side") = "plus");

  mod.def(
      "boundary_value_pretty",
      [](int m, const std::string& series, int k, const std::string& side) {
        return pretty(boundary_value(m, parse_series(series), k, parse_side(side)));
      },
      py::arg("m"), py::arg("series"), py::arg("k"), py::arg("side") = "plus",
      "Distributional boundary value a_k / b_k / c_k as a readable string.");

  mod.def(
      "dirac_power_pretty",
      [](int m, double mu) { return pretty(dirac_power_kernel(m, mu)); }, py::arg("m"),
      py::arg("mu"));
  mod.def(
      "hilbert_power_pretty",
      [](int m, double mu) { return pretty(hilbert_power_kernel(m, mu)); }, py::arg("m"),
      py::arg("mu"));

  mod.def(
      "symbolic_cauchy_monogenic",
      [](int m) { return apply_CR(TermSum::cauchy_kernel_unnormalized(m), false).empty(); },
      py::arg("m"),
      "True iff the Cauchy-Riemann operator annihilates the Cauchy kernel exactly "
      "in the symbolic term algebra.");

  mod.def(
      "chain_term_count",
      [](int m, int depth) { return cauchy_chain(m, depth).terms().size(); }, py::arg("m"),
      py::arg("depth"));

  mod.def(
      "fd_dirac_residual",
      [](int m, const std::string& pot, const std::vector<std::vector<double>>& rows, double h) {
        const auto rep = fd_dirac_residual(m, parse_potential_id(pot), to_points(m, rows), h);
        py::dict d;
        d["max_residual"] = rep.max_residual;
        d["mean_residual"] = rep.mean_residual;
        d["points"] = rep.points;
        d["h"] = rep.h;
        return d;
      },
      py::arg("m"), py::arg("potential"), py::arg("points"), py::arg("h") = 1e-4);

  mod.def(
      "lemma_check",
      [](int m, int kmax) {
        py::list out;
        for (const auto& row : lemma_check(m, kmax)) {
          py::dict d;
          d["k"] = row.k;
          d["part"] = row.part;
          d["pass"] = row.pass;
          d["table_level"] = row.table_level;
          d["err"] = row.err;
          d["note"] = row.note;
          out.append(d);
        }
        return out;
      },
      py::arg("m"), py::arg("kmax") = 3);

  mod.def(
      "jump_check_json",
      [](int m, int n, std::vector<double> ladder, int order, double tol, int threads) {
        QuadratureConfig cfg;
        if (!ladder.empty()) cfg.x0_ladder = std::move(ladder);
        if (order > 0) cfg.richardson_order = order;
        cfg.threads = threads;
        const JumpReport rep = jump_check(m, n, cfg, tol);
        return to_json(rep);
      },
      py::arg("m"), py::arg("n"), py::arg("ladder") = std::vector<double>{},
      py::arg("order") = 0, py::arg("tol") = 5e-3, py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>(),
      "Run the hyperfunction jump check; returns the JSON report (schema 1).");
}
