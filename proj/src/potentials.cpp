#include "monopot/potentials.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "monopot/special_functions.hpp"

namespace monopot {

bool evaluable(int m, PotentialId id) {
  if (m < 2 || m > 12) return false;
  if (id.k <= -1) return id.k >= -kMaxChainDepth;
  switch (id.k) {
    case 0:
      return true;
    case 1:
      return id.comp == Component::B ? true : m > 2;
    case 2:
      return m > 3;
    default:
      return false;  // no closed forms held beyond k = 2
  }
}

const TermSum& cauchy_chain(int m, int kk) {
  if (m < 2 || m > 12) throw std::invalid_argument("cauchy_chain: m out of range");
  if (kk < 1 || kk > kMaxChainDepth) throw std::invalid_argument("cauchy_chain: depth out of range");
  static std::mutex mu;
  static std::map<std::pair<int, int>, TermSum> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (int j = 1; j <= kk; ++j) {
    const auto key = std::make_pair(m, j);
    if (cache.find(key) != cache.end()) continue;
    if (j == 1)
      cache.emplace(key, TermSum::cauchy_kernel_unnormalized(m));
    else
      cache.emplace(key, apply_CR(cache.at({m, j - 1}), true));
  }
  return cache.at({m, kk});
}

namespace {

// How the F-terms of the upstream profiles continue into the lower
// half-space depends on the parity of m.  For odd m the parity of F_j in its
// argument (F_j(-v) = (-1)^j F_j(v), and j has the parity of m here) already
// produces the conjugate-harmonic pair below the boundary.  For even m it
// does not; there the lower-half function is the smooth continuation across
// x0 = 0, which by F_j(v) + int_0^{1/v} (1+u^2)^{-(j+1)/2} du = F_j(inf)
// equals 2 F_j(inf) - F_j(r/|x0|).  That continuation reproduces the
// equal-side boundary values of the even-m tables, at the price of a string
// singularity on the negative x0-axis (r = 0, x0 < 0).
double F_branch(int m, int j, double x0, double r) {
  double val = F_profile(j, r / x0);
  if (m % 2 == 0 && x0 < 0.0) val = 2.0 * F_profile_inf(j) - val;
  return val;
}

// On the negative axis the even-m continuation blows up like r^{-j}.
void check_string(int m, double x0, double r) {
  if (m % 2 == 0 && x0 < 0.0 && r == 0.0)
    throw std::domain_error(
        "potential not defined on the negative x0-axis for even m");
}

// A_k(x0, r); the on-axis (r = 0) values are the finite limits of the radial
// profiles, needed because r^{2-m} F_{m-2}(r/x0) is 0/0 there.
double upstream_A(int m, int k, double x0, double r) {
  const double sig = sigma(m + 1);
  switch (k) {
    case 0:
      return -2.0 / ((m - 1.0) * sig) * std::pow(std::hypot(x0, r), 1 - m);
    case 1:
      check_string(m, x0, r);
      if (r == 0.0) return 2.0 / ((m - 1.0) * (m - 2.0) * sig) * std::pow(x0, 2 - m);
      return 2.0 / ((m - 1.0) * sig) * std::pow(r, 2 - m) * F_branch(m, m - 2, x0, r);
    case 2: {
      check_string(m, x0, r);
      const double tail =
          -2.0 / ((m - 1.0) * (m - 3.0) * sig) * std::pow(std::hypot(x0, r), 3 - m);
      if (r == 0.0)
        return 2.0 / ((m - 1.0) * (m - 2.0) * sig) * x0 * std::pow(x0, 2 - m) + tail;
      return 2.0 / ((m - 1.0) * sig) * x0 * std::pow(r, 2 - m) * F_branch(m, m - 2, x0, r) + tail;
    }
    default:
      throw std::invalid_argument("upstream_A: k");
  }
}

// B_k = upstream_B_profile(x0, r) * xvec
double upstream_B_profile(int m, int k, double x0, double r) {
  check_string(m, x0, r);
  if (r == 0.0) return 0.0;  // B_k is odd in xvec
  const double sig = sigma(m + 1);
  switch (k) {
    case 0:
      return 2.0 / sig * std::pow(r, -m) * F_branch(m, m, x0, r);
    case 1:
      // the tail term decays like |x|^{1-m}, not r^{1-m}: that is what the
      // conjugate-harmonic system demands (d/dx0 of it must cancel the
      // x0 |x|^{-m-1} piece coming from the F_m term), and it is also the
      // x0-antiderivative consistent with B_0 and the x0-derivative of B_2.
      return 2.0 / sig * x0 * std::pow(r, -m) * F_branch(m, m, x0, r) -
             2.0 / ((m - 1.0) * sig) * std::pow(std::hypot(x0, r), 1 - m);
    case 2:
      return (x0 * x0 + r * r) / sig * std::pow(r, -m) * F_branch(m, m, x0, r) -
             (m - 3.0) / ((m - 1.0) * sig) * std::pow(r, 2 - m) * F_branch(m, m - 2, x0, r);
    default:
      throw std::invalid_argument("upstream_B_profile: k");
  }
}

Multivector assemble(int m, Component comp, double aval, double bprof,
                     const std::vector<double>& xs) {
  if (comp == Component::A) return Multivector::scalar(m, aval);
  if (comp == Component::B) {
    Multivector b(m);
    for (int j = 0; j < m; ++j) b[1u << (j + 1)] = bprof * xs[j];
    return b;
  }
  Multivector out(m);  // C = A/2 + bar(e0) B/2 = A/2 - e0 B/2
  out[0u] = 0.5 * aval;
  for (int j = 0; j < m; ++j) out[1u | (1u << (j + 1))] = -0.5 * bprof * xs[j];
  return out;
}

}  // namespace

Multivector eval_potential(int m, PotentialId id, const PointUpperLower& p) {
  if (!evaluable(m, id)) throw std::invalid_argument("potential " + to_string(id) + " not evaluable at m=" + std::to_string(m));
  if (static_cast<int>(p.xs.size()) != m) throw std::invalid_argument("eval_potential: point dimension");
  if (id.k <= -1) {
    const TermSum& ts = cauchy_chain(m, -id.k);
    Multivector full = evaluate_terms(ts, p);
    full *= 1.0 / sigma(m + 1);
    if (id.comp == Component::C) return full;
    if (id.comp == Component::A) return Multivector::scalar(m, 2.0 * full[0u]);
    Multivector b(m);
    for (int j = 1; j <= m; ++j) b[1u << j] = -2.0 * full[1u | (1u << j)];
    return b;
  }
  const double r = p.r();
  const double aval =
      (id.comp == Component::B) ? 0.0 : upstream_A(m, id.k, p.x0, r);
  const double bprof =
      (id.comp == Component::A) ? 0.0 : upstream_B_profile(m, id.k, p.x0, r);
  return assemble(m, id.comp, aval, bprof, p.xs);
}

Multivector pointwise_limit(int m, PotentialId id, const std::vector<double>& xs, Side side) {
  if (!evaluable(m, id)) throw std::invalid_argument("potential " + to_string(id) + " not evaluable at m=" + std::to_string(m));
  if (static_cast<int>(xs.size()) != m) throw std::invalid_argument("pointwise_limit: point dimension");
  double r2 = 0.0;
  for (double x : xs) r2 += x * x;
  const double r = std::sqrt(r2);
  if (r == 0.0) throw std::domain_error("pointwise_limit: xvec != 0 required");
  if (id.k <= -1) {
    // the downstream potentials extend continuously across the punctured
    // boundary, so both sides agree with the x0 = 0 evaluation
    PointUpperLower p;
    p.x0 = 0.0;
    p.xs = xs;
    return eval_potential(m, id, p);
  }
  const double msign = (m % 2 == 0) ? 1.0 : -1.0;
  const bool minus = (side == Side::minus);
  const double sig1 = sigma(m + 1);
  const double sigm = sigma(m);
  double aval = 0.0, bprof = 0.0;
  switch (id.k) {
    case 0:
      aval = -2.0 / ((m - 1.0) * sig1) * std::pow(r, 1 - m);
      bprof = std::pow(r, -m) / sigm;
      if (minus) bprof *= msign;
      break;
    case 1:
      aval = std::pow(r, 2 - m) / ((m - 2.0) * sigm);
      if (minus) aval *= msign;
      bprof = -2.0 / ((m - 1.0) * sig1) * std::pow(r, 1 - m);
      break;
    case 2:
      aval = -2.0 / ((m - 1.0) * (m - 3.0) * sig1) * std::pow(r, 3 - m);
      bprof = std::pow(r, 2 - m) / (2.0 * (m - 2.0) * sigm);
      if (minus) bprof *= msign;
      break;
    default:
      throw std::invalid_argument("pointwise_limit: k");
  }
  if (id.comp == Component::A) bprof = 0.0;
  if (id.comp == Component::B) aval = 0.0;
  return assemble(m, id.comp, aval, bprof, xs);
}

std::vector<Multivector> eval_potential_many(int m, PotentialId id,
                                             const std::vector<PointUpperLower>& pts,
                                             int threads) {
  std::vector<Multivector> out(pts.size(), Multivector(m));
  if (pts.empty()) return out;
  if (id.k <= -1) cauchy_chain(m, -id.k);  // build once before going parallel
  const int n = static_cast<int>(pts.size());
  const int nt = std::max(1, std::min(threads, n));
  if (nt == 1) {
    for (int i = 0; i < n; ++i) out[i] = eval_potential(m, id, pts[i]);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  std::exception_ptr err;
  std::mutex err_mu;
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (int i = t; i < n; i += nt) out[i] = eval_potential(m, id, pts[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

PotentialId parse_potential_id(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= s.size())
    throw std::invalid_argument("potential id must look like C:-1, A:0, B:2; got '" + s + "'");
  const std::string comp = s.substr(0, colon);
  PotentialId id;
  if (comp == "A" || comp == "a")
    id.comp = Component::A;
  else if (comp == "B" || comp == "b")
    id.comp = Component::B;
  else if (comp == "C" || comp == "c")
    id.comp = Component::C;
  else
    throw std::invalid_argument("unknown potential family '" + comp + "' (use A, B or C)");
  size_t used = 0;
  const std::string tail = s.substr(colon + 1);
  try {
    id.k = std::stoi(tail, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad chain index in potential id '" + s + "'");
  }
  if (used != tail.size())
    throw std::invalid_argument("bad chain index in potential id '" + s + "'");
  return id;
}

std::string to_string(PotentialId id) {
  const char* c = id.comp == Component::A ? "A" : id.comp == Component::B ? "B" : "C";
  return std::string(c) + ":" + std::to_string(id.k);
}

}  // namespace monopot
