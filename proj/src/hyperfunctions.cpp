#include "monopot/hyperfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "monopot/special_functions.hpp"

namespace monopot {

namespace {

constexpr double kPi = std::numbers::pi;

struct GLRule {
  std::vector<double> x, w;  // on [-1, 1]
};

const GLRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GLRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GLRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.x[i] = -x;  // roots come out descending; store ascending
    rule.w[i] = w;
    rule.x[n - 1 - i] = x;
    rule.w[n - 1 - i] = w;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

struct AngularNode {
  std::vector<double> omega;
  double w = 0.0;
};

std::vector<AngularNode> angular_nodes(int m, const QuadratureConfig& cfg) {
  std::vector<AngularNode> nodes;
  if (m == 2) {
    const int n = cfg.n_azimuth;
    nodes.reserve(n);
    for (int a = 0; a < n; ++a) {
      const double th = 2.0 * kPi * a / n;
      nodes.push_back({{std::cos(th), std::sin(th)}, 2.0 * kPi / n});
    }
    return nodes;
  }
  if (m == 3) {
    const GLRule& gl = gauss_legendre(cfg.n_theta);
    const int n = cfg.n_azimuth;
    nodes.reserve(gl.x.size() * n);
    for (size_t i = 0; i < gl.x.size(); ++i) {
      const double c = gl.x[i];
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      for (int a = 0; a < n; ++a) {
        const double ph = 2.0 * kPi * a / n;
        nodes.push_back({{s * std::cos(ph), s * std::sin(ph), c}, gl.w[i] * 2.0 * kPi / n});
      }
    }
    return nodes;
  }
  throw std::invalid_argument("interior quadrature supports m = 2 or 3 only");
}

struct RadialNode {
  double r = 0.0, w = 0.0;  // w includes the r^{m-1} Jacobian
};

std::vector<RadialNode> radial_nodes(int m, double x0, const QuadratureConfig& cfg) {
  const double h = std::min(x0 != 0.0 ? std::fabs(x0) : 0.5, 0.5);
  std::vector<double> edges{h / 4.0, h / 2.0, h, 2.0 * h, 4.0 * h, 1.0, 2.0, 4.0};
  edges.erase(std::remove_if(edges.begin(), edges.end(),
                             [&](double e) { return e >= cfg.r_max; }),
              edges.end());
  edges.push_back(cfg.r_max);
  edges.push_back(0.0);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
              edges.end());
  const GLRule& gl = gauss_legendre(cfg.gl_nodes);
  std::vector<RadialNode> nodes;
  nodes.reserve((edges.size() - 1) * gl.x.size());
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double hw = 0.5 * (edges[p + 1] - edges[p]);
    for (size_t i = 0; i < gl.x.size(); ++i) {
      const double r = mid + hw * gl.x[i];
      nodes.push_back({r, hw * gl.w[i] * std::pow(r, m - 1)});
    }
  }
  return nodes;
}

std::vector<Multivector> pair_interior_many(int m, PotentialId id, double x0,
                                            const std::vector<GaussPolyTestFunction>& phis,
                                            const QuadratureConfig& cfg) {
  if (m != 2 && m != 3) throw std::invalid_argument("interior quadrature supports m = 2 or 3 only");
  const auto ang = angular_nodes(m, cfg);
  const auto rad = radial_nodes(m, x0, cfg);
  const size_t np = phis.size();
  std::vector<Multivector> total(np, Multivector(m));
  const int nt = std::min<int>(resolve_threads(cfg.threads), static_cast<int>(rad.size()));
  std::mutex merge_mu;
  std::exception_ptr err;

  const auto work = [&](int t, int stride) {
    try {
      std::vector<Multivector> acc(np, Multivector(m));
      std::vector<double> xs(m);
      PointUpperLower pt;
      pt.x0 = x0;
      for (size_t ir = t; ir < rad.size(); ir += stride) {
        const auto& rn = rad[ir];
        for (const auto& an : ang) {
          for (int j = 0; j < m; ++j) xs[j] = rn.r * an.omega[j];
          pt.xs = xs;
          const Multivector kv = eval_potential(m, id, pt);
          const double w = rn.w * an.w;
          for (size_t p = 0; p < np; ++p)
            acc[p] += w * geometric_product(kv, phis[p].eval(xs));
        }
      }
      std::lock_guard<std::mutex> lock(merge_mu);
      for (size_t p = 0; p < np; ++p) total[p] += acc[p];
    } catch (...) {
      std::lock_guard<std::mutex> lock(merge_mu);
      if (!err) err = std::current_exception();
    }
  };

  if (nt <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) pool.emplace_back(work, t, nt);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);
  return total;
}

}  // namespace

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MONOPOT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

RepresentationEntry representation(int m, int n) {
  RepresentationEntry e(m, n);
  e.pot = PotentialId{Component::C, -n - 1};
  const Multivector one = Multivector::scalar(m, 1.0);
  const Multivector e0 = Multivector::basis_vector(m, 0);
  if (n % 2 == 0) {
    e.pf_delta_plus = one;
    e.pf_delta_minus = one;
    e.pf_hilbert_plus = e0;
    e.pf_hilbert_minus = -e0;  // bar(e0)
  } else {
    e.pf_delta_plus = -e0;  // bar(e0)
    e.pf_delta_minus = -e0;
    e.pf_hilbert_plus = -one;
    e.pf_hilbert_minus = one;
  }
  e.applicable = (n >= 0) || (m % 2 == 1);
  e.checkable = evaluable(m, e.pot);
  if (e.applicable) {
    e.target_delta = dirac_power_kernel(m, double(n));
    e.target_hilbert = hilbert_power_kernel(m, double(n));
  }
  return e;
}

Multivector pair_interior(int m, PotentialId id, double x0,
                          const GaussPolyTestFunction& phi, const QuadratureConfig& cfg) {
  return pair_interior_many(m, id, x0, {phi}, cfg)[0];
}

Multivector extrapolate_to_zero(const std::vector<double>& x0s,
                                const std::vector<Multivector>& vals) {
  if (x0s.empty() || x0s.size() != vals.size())
    throw std::invalid_argument("extrapolate_to_zero: need matching nonempty ladders");
  Multivector out(vals[0].m());
  for (size_t i = 0; i < x0s.size(); ++i) {
    double w = 1.0;
    for (size_t j = 0; j < x0s.size(); ++j) {
      if (j == i) continue;
      w *= (0.0 - x0s[j]) / (x0s[i] - x0s[j]);
    }
    out += w * vals[i];
  }
  return out;
}

std::vector<GaussPolyTestFunction> test_battery(int m) {
  std::vector<GaussPolyTestFunction> phis;
  phis.push_back(GaussPolyTestFunction::gaussian(m));

  auto x1g = GaussPolyTestFunction::gaussian(m).mul_coord(0);
  x1g.label = "x1 exp(-r^2)";
  phis.push_back(x1g);

  auto xg = GaussPolyTestFunction::gaussian(m).mul_xvec();
  xg.label = "xvec exp(-r^2)";
  phis.push_back(xg);

  auto quad = GaussPolyTestFunction::gaussian(m) +
              GaussPolyTestFunction::gaussian(m).mul_coord(0).mul_coord(0);
  quad.label = "(1+x1^2) exp(-r^2)";
  phis.push_back(quad);
  return phis;
}

namespace {

std::vector<double> effective_ladder(const QuadratureConfig& cfg) {
  std::vector<double> lad = cfg.x0_ladder;
  if (lad.empty()) throw std::invalid_argument("empty x0 ladder");
  const size_t want = static_cast<size_t>(cfg.richardson_order) + 1;
  if (lad.size() > want) lad.erase(lad.begin(), lad.end() - want);
  return lad;
}

double rel_err_of(const Multivector& got, const Multivector& want) {
  Multivector d = got - want;
  return d.max_abs() / std::max(1.0, want.max_abs());
}

// Why a representation cannot be checked by interior quadrature: either the
// potential has no closed interior form at this m, or the pairing quadrature
// only has angular rules for m = 2, 3.
std::string unchecked_reason(int m, const RepresentationEntry& entry) {
  if (!entry.checkable)
    return to_string(entry.pot) + " has no closed interior form at m=" + std::to_string(m);
  return "interior pairing quadrature is implemented for m=2,3 only (m=" +
         std::to_string(m) + ")";
}

}  // namespace

JumpReport jump_check(int m, int n, const QuadratureConfig& cfg, double tol) {
  JumpReport rep;
  rep.m = m;
  rep.n = n;
  const RepresentationEntry entry = representation(m, n);
  rep.applicable = entry.applicable;
  rep.checkable = entry.checkable && (m == 2 || m == 3);

  if (!rep.applicable) {
    // m even, n <= -1: the two one-sided boundary values agree, so every
    // prefactored jump vanishes; check exactly that.
    if (rep.checkable) {
      rep.ladder = effective_ladder(cfg);
      const auto phis = test_battery(m);
      for (const auto& phi : phis) {
        std::vector<Multivector> up, dn;
        for (double x0 : rep.ladder) {
          up.push_back(pair_interior(m, entry.pot, x0, phi, cfg));
          dn.push_back(pair_interior(m, entry.pot, -x0, phi, cfg));
        }
        const Multivector vp = extrapolate_to_zero(rep.ladder, up);
        std::vector<double> neg = rep.ladder;
        for (double& v : neg) v = -v;
        const Multivector vm = extrapolate_to_zero(neg, dn);
        JumpRow row(m);
        row.phi_label = phi.label;
        row.kind = "raw_zero";
        row.jump = vp - vm;
        row.rel_err = row.jump.max_abs() / std::max(1.0, vp.max_abs());
        row.pass = row.rel_err <= tol;
        rep.rows.push_back(row);
        rep.pass = rep.pass && row.pass;
      }
      rep.note = "m even: the boundary values of " + to_string(entry.pot) +
                 " agree on both sides; raw two-sided differences checked against zero";
    } else {
      const int k = -n - 1;
      const bool ok = approx_equal(boundary_value(m, Series::c, k, Side::plus),
                                   boundary_value(m, Series::c, k, Side::minus), 1e-12);
      JumpRow row(m);
      row.phi_label = "(distribution table)";
      row.kind = "table_zero";
      row.rel_err = ok ? 0.0 : 1.0;
      row.pass = ok;
      rep.rows.push_back(row);
      rep.pass = ok;
      rep.note = "m even: " + unchecked_reason(m, entry) +
                 "; the two-sided boundary-value tables are compared instead";
    }
    return rep;
  }

  if (!rep.checkable) {
    rep.note = unchecked_reason(m, entry) + "; jump not numerically checkable";
    rep.pass = true;  // vacuous: no rows were checked
    return rep;
  }

  rep.ladder = effective_ladder(cfg);
  const auto phis = test_battery(m);

  for (const auto& phi : phis) {
    std::vector<Multivector> up, dn;
    for (double x0 : rep.ladder) {
      up.push_back(pair_interior(m, entry.pot, x0, phi, cfg));
      dn.push_back(pair_interior(m, entry.pot, -x0, phi, cfg));
    }
    const Multivector vp = extrapolate_to_zero(rep.ladder, up);
    std::vector<double> neg = rep.ladder;
    for (double& v : neg) v = -v;
    const Multivector vm = extrapolate_to_zero(neg, dn);

    const auto push_row = [&](const std::string& kind, const Multivector& jump,
                              const Multivector& target) {
      JumpRow row(m);
      row.phi_label = phi.label;
      row.kind = kind;
      row.jump = jump;
      row.target = target;
      row.rel_err = rel_err_of(jump, target);
      row.pass = row.rel_err <= tol;
      rep.rows.push_back(row);
      rep.pass = rep.pass && row.pass;
    };

    const auto target_of = [&](const BoundaryDistribution& dist) {
      const ComplexMultivector t = pair(dist, phi);
      if (t.im.max_abs() > 1e-10 * std::max(1.0, t.re.max_abs()))
        throw std::logic_error("integer-order target should be real");
      return t.re;
    };

    push_row("delta",
             geometric_product(entry.pf_delta_plus, vp) -
                 geometric_product(entry.pf_delta_minus, vm),
             target_of(entry.target_delta));
    push_row("hilbert",
             geometric_product(entry.pf_hilbert_plus, vp) -
                 geometric_product(entry.pf_hilbert_minus, vm),
             target_of(entry.target_hilbert));

    // one-sided sums: vp + vm = bar(e0) <dirac^n H, phi> (n even)
    //                          = -<dirac^n H, phi>        (n odd)
    const Multivector hil = target_of(entry.target_hilbert);
    const Multivector sum_target = (n % 2 == 0) ? -e0_times(hil) : -hil;
    push_row("sum", vp + vm, sum_target);
  }

  rep.note = "jump of " + to_string(entry.pot) + " against dirac^" + std::to_string(n) +
             " targets";
  return rep;
}

std::string to_json(const JumpReport& rep) {
  nlohmann::json j;
  j["schema"] = 1;
  j["m"] = rep.m;
  j["n"] = rep.n;
  j["applicable"] = rep.applicable;
  j["checkable"] = rep.checkable;
  j["note"] = rep.note;
  j["ladder"] = rep.ladder;
  j["pass"] = rep.pass;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rep.rows) {
    nlohmann::json r;
    r["phi_id"] = row.phi_label;
    r["kind"] = row.kind;
    r["rel_err"] = row.rel_err;
    r["pass"] = row.pass;
    nlohmann::json jv = nlohmann::json::object(), tv = nlohmann::json::object();
    for (unsigned i = 0; i < row.jump.size(); ++i) {
      if (row.jump[i] != 0.0) jv[blade_label(i)] = row.jump[i];
      if (row.target[i] != 0.0) tv[blade_label(i)] = row.target[i];
    }
    r["jump_value"] = jv;
    r["target_value"] = tv;
    j["rows"].push_back(r);
  }
  return j.dump(2);
}

Multivector apply_cr_fd(int m, PotentialId id, const PointUpperLower& p, double h,
                        bool conjugated, double* scale_out) {
  const auto at = [&](int dir, double step) {
    PointUpperLower q = p;
    if (dir == 0)
      q.x0 += step;
    else
      q.xs[dir - 1] += step;
    return eval_potential(m, id, q);
  };
  double grad_scale = 0.0;
  Multivector out(m);
  {
    const Multivector d0 = (1.0 / (2.0 * h)) * (at(0, h) - at(0, -h));
    grad_scale = std::max(grad_scale, d0.max_abs());
    out += d0;
  }
  Multivector dv(m);  // dirac part: sum_j e_j d_j f
  for (int j = 1; j <= m; ++j) {
    const Multivector dj = (1.0 / (2.0 * h)) * (at(j, h) - at(j, -h));
    grad_scale = std::max(grad_scale, dj.max_abs());
    dv += geometric_product(Multivector::basis_vector(m, j), dj);
  }
  if (conjugated) {
    out += e0_times(dv);  // Dbar = (d_x0 + e0 dirac)/2
  } else {
    out -= e0_times(dv);  // D = (d_x0 + bar(e0) dirac)/2
  }
  out *= 0.5;
  if (scale_out) *scale_out = std::max(grad_scale, 1e-300);
  return out;
}

FdResidualReport fd_dirac_residual(int m, PotentialId id,
                                   const std::vector<PointUpperLower>& pts, double h) {
  FdResidualReport rep;
  rep.id = id;
  rep.m = m;
  rep.h = h;
  rep.points = static_cast<int>(pts.size());
  double sum = 0.0;
  for (const auto& p : pts) {
    double scale = 1.0;
    const Multivector r = apply_cr_fd(m, id, p, h, false, &scale);
    const double rel = r.max_abs() / scale;
    rep.max_residual = std::max(rep.max_residual, rel);
    sum += rel;
  }
  if (!pts.empty()) rep.mean_residual = sum / pts.size();
  return rep;
}

}  // namespace monopot
