#include "monopot/term_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "monopot/special_functions.hpp"

namespace monopot {

namespace {

constexpr double kMergeEps = 1e-14;

auto key(const CanonicalTerm& t) {
  return std::make_tuple(t.e0, t.eps, t.a, t.s, t.q);
}

}  // namespace

void TermSum::add(CanonicalTerm t) {
  if (t.c == 0.0) return;
  if (t.a >= 2) {
    // x0^2 = |x|^2 - r^2
    CanonicalTerm u = t;
    u.a = t.a - 2;
    u.q = t.q - 2;
    add(u);
    CanonicalTerm w = t;
    w.a = t.a - 2;
    w.s = t.s + 1;
    w.c = -t.c;
    add(w);
    return;
  }
  terms_.push_back(t);
}

void TermSum::merge() {
  std::sort(terms_.begin(), terms_.end(),
            [](const CanonicalTerm& x, const CanonicalTerm& y) { return key(x) < key(y); });
  std::vector<CanonicalTerm> out;
  for (const auto& t : terms_) {
    if (!out.empty() && key(out.back()) == key(t))
      out.back().c += t.c;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const CanonicalTerm& t) { return std::fabs(t.c) <= kMergeEps; });
  terms_ = std::move(out);
}

TermSum& TermSum::operator+=(const TermSum& o) {
  if (o.m_ != m_) throw std::invalid_argument("TermSum: dimension mismatch");
  for (const auto& t : o.terms_) add(t);
  merge();
  return *this;
}

TermSum& TermSum::operator*=(double f) {
  for (auto& t : terms_) t.c *= f;
  return *this;
}

TermSum TermSum::cauchy_kernel_unnormalized(int m) {
  TermSum r(m);
  r.add({1.0, false, 1, 0, m + 1, false});  // x0 |x|^{-m-1}
  r.add({1.0, true, 0, 0, m + 1, true});    // e0 xvec |x|^{-m-1}  (= -bar(e0) xvec ...)
  return r;
}

TermSum TermSum::cauchy_kernel(int m) {
  TermSum r = cauchy_kernel_unnormalized(m);
  r *= 1.0 / sigma(m + 1);
  return r;
}

TermSum d_x0(const TermSum& f) {
  TermSum r(f.m());
  for (const auto& t : f.terms()) {
    if (t.a >= 1) {
      CanonicalTerm u = t;
      u.c = t.c * t.a;
      u.a = t.a - 1;
      r.add(u);
    }
    if (t.q != 0) {
      CanonicalTerm u = t;
      u.c = -double(t.q) * t.c;
      u.a = t.a + 1;
      u.q = t.q + 2;
      r.add(u);
    }
  }
  r.merge();
  return r;
}

TermSum dirac_vec(const TermSum& f) {
  const int m = f.m();
  TermSum r(m);
  for (const auto& t : f.terms()) {
    const double sE = t.e0 ? -1.0 : 1.0;  // e_j e0 = -e0 e_j
    if (!t.eps) {
      if (t.s != 0) r.add({sE * 2.0 * t.s * t.c, t.e0, t.a, t.s - 1, t.q, true});
      if (t.q != 0) r.add({-sE * t.q * t.c, t.e0, t.a, t.s, t.q + 2, true});
    } else {
      r.add({-sE * (m + 2.0 * t.s) * t.c, t.e0, t.a, t.s, t.q, false});
      if (t.q != 0) r.add({sE * t.q * t.c, t.e0, t.a, t.s + 1, t.q + 2, false});
    }
  }
  r.merge();
  return r;
}

TermSum e0_times_left(const TermSum& f) {
  TermSum r(f.m());
  for (auto t : f.terms()) {
    if (t.e0) {
      t.e0 = false;
      t.c = -t.c;  // e0 e0 = -1
    } else {
      t.e0 = true;
    }
    r.add(t);
  }
  r.merge();
  return r;
}

TermSum apply_CR(const TermSum& f, bool conjugated) {
  // D = (d/dx0 - e0 dirac)/2,  Dbar = (d/dx0 + e0 dirac)/2.
  TermSum r(f.m());
  TermSum da = d_x0(f);
  for (auto t : da.terms()) {
    t.c *= 0.5;
    r.add(t);
  }
  TermSum db = e0_times_left(dirac_vec(f));
  const double sb = conjugated ? 0.5 : -0.5;
  for (auto t : db.terms()) {
    t.c *= sb;
    r.add(t);
  }
  r.merge();
  return r;
}

Multivector evaluate_terms(const TermSum& f, const PointUpperLower& p) {
  const int m = f.m();
  if (p.m() != m) throw std::invalid_argument("evaluate_terms: dimension mismatch");
  const double r2 = p.r2(), n2 = p.abs2();
  double w[2][2] = {{0.0, 0.0}, {0.0, 0.0}};  // [E=e0][eps]
  for (const auto& t : f.terms()) {
    double v = t.c;
    if (t.a) v *= p.x0;
    if (t.s) v *= std::pow(r2, t.s);
    if (t.q) v *= std::pow(n2, -0.5 * t.q);
    w[t.e0 ? 1 : 0][t.eps ? 1 : 0] += v;
  }
  Multivector out(m);
  out[0] = w[0][0];
  out[1] = w[1][0];
  for (int j = 0; j < m; ++j) {
    const unsigned ej = 1u << (j + 1);
    out[ej] += w[0][1] * p.xs[j];
    out[1u | ej] += w[1][1] * p.xs[j];  // e0 e_j blade, ascending order
  }
  return out;
}

}  // namespace monopot
