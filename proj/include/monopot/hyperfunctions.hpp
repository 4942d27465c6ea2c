#pragma once

#include <string>
#include <vector>

#include "monopot/algebra.hpp"
#include "monopot/distributions.hpp"
#include "monopot/potentials.hpp"

// Hyperfunction-style representations: each distribution dirac^n delta or
// dirac^n H on R^m is realized as the jump of prefactored boundary values of
// the single potential C_{-n-1},
//
//     T = lim_{x0->0+} pf+ C_{-n-1}(x0, .) - lim_{x0->0-} pf- C_{-n-1}(x0, .),
//
// with prefactors following one parity law: n even: delta ~ (1, 1) and
// H ~ (e0, bar(e0)); n odd: delta ~ (bar(e0), bar(e0)) and H ~ (-1, 1).
// For n <= -1 this needs m odd; for m even those jumps vanish instead
// (the raw two-sided difference of C_{-n-1} is zero), which is checkable.
// The limits are taken numerically: pair the potential against a Gaussian
// test function by quadrature at several interior heights x0 and extrapolate
// the ladder to x0 = 0 (Richardson in x0).

namespace monopot {

struct QuadratureConfig {
  // Extrapolating with a quintic through six heights keeps the ladder error
  // comfortably below the default 5e-3 jump tolerance.
  std::vector<double> x0_ladder{0.4, 0.3, 0.2, 0.15, 0.1, 0.05};
  int richardson_order = 5;  // polynomial order in x0; uses order+1 ladder points
  double r_max = 6.0;
  int gl_nodes = 24;   // Gauss-Legendre points per radial panel
  int n_theta = 8;     // polar nodes (m = 3)
  int n_azimuth = 16;  // equally spaced azimuth nodes (m = 2, 3)
  int threads = 0;     // 0: MONOPOT_THREADS or 1
};

struct RepresentationEntry {
  int m = 0, n = 0;
  PotentialId pot;  // C_{-n-1}
  // prefactors as constant multivectors acting from the left
  Multivector pf_delta_plus, pf_delta_minus, pf_hilbert_plus, pf_hilbert_minus;
  BoundaryDistribution target_delta, target_hilbert;
  bool applicable = true;  // false for m even, n <= -1
  bool checkable = true;   // interior potential evaluable for this m

  RepresentationEntry(int mm, int nn)
      : m(mm), n(nn),
        pf_delta_plus(mm), pf_delta_minus(mm), pf_hilbert_plus(mm), pf_hilbert_minus(mm),
        target_delta(mm), target_hilbert(mm) {}
};

RepresentationEntry representation(int m, int n);

// <C(x0, .), phi> over R^m by deterministic polar quadrature (m = 2 or 3).
Multivector pair_interior(int m, PotentialId id, double x0,
                          const GaussPolyTestFunction& phi, const QuadratureConfig& cfg);

// Lagrange extrapolation of the ladder values to x0 = 0.
Multivector extrapolate_to_zero(const std::vector<double>& x0s,
                                const std::vector<Multivector>& vals);

struct JumpRow {
  std::string phi_label;
  std::string kind;  // "delta", "hilbert", "sum", "raw_zero", "table_zero"
  Multivector jump, target;
  double rel_err = 0.0;
  bool pass = false;

  JumpRow(int m) : jump(m), target(m) {}
};

struct JumpReport {
  int m = 0, n = 0;
  bool applicable = true, checkable = true;
  std::string note;
  std::vector<double> ladder;
  std::vector<JumpRow> rows;
  bool pass = true;
};

// Default test battery used by jump_check / verification suites.
std::vector<GaussPolyTestFunction> test_battery(int m);

JumpReport jump_check(int m, int n, const QuadratureConfig& cfg = {}, double tol = 5e-3);

std::string to_json(const JumpReport& rep);

struct FdResidualReport {
  PotentialId id;
  int m = 0;
  double h = 0.0;
  double max_residual = 0.0;   // max over points of |D f| / local scale
  double mean_residual = 0.0;
  int points = 0;
};

// Central-difference residual of the Cauchy-Riemann operator D on the
// potential, relative to the local field scale.
FdResidualReport fd_dirac_residual(int m, PotentialId id,
                                   const std::vector<PointUpperLower>& pts, double h);

// Finite-difference application of D (conjugated=false) or Dbar (true).
Multivector apply_cr_fd(int m, PotentialId id, const PointUpperLower& p, double h,
                        bool conjugated, double* scale_out = nullptr);

int resolve_threads(int requested);  // 0 -> MONOPOT_THREADS or 1

}  // namespace monopot
