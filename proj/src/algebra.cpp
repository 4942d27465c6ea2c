#include "monopot/algebra.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace monopot {

AlgebraContext::AlgebraContext(int m) : m_(m) {
  if (m < 2 || m > 12) throw std::invalid_argument("AlgebraContext: m must be in [2, 12]");
}

int product_sign(unsigned a, unsigned b) {
  // Count transpositions needed to merge the two ascending factor lists:
  // pairs (i in a, j in b) with j < i.
  int swaps = 0;
  unsigned at = a >> 1;
  while (at) {
    swaps += std::popcount(at & b);
    at >>= 1;
  }
  swaps += std::popcount(a & b);  // each shared generator squares to -1
  return (swaps & 1) ? -1 : 1;
}

int conjugation_sign(int grade) {
  return ((grade * (grade + 1) / 2) & 1) ? -1 : 1;
}

Multivector::Multivector(int m) : m_(m), coef_(std::size_t(1) << (m + 1), 0.0) {
  if (m < 2 || m > 12) throw std::invalid_argument("Multivector: m must be in [2, 12]");
}

Multivector Multivector::scalar(int m, double v) {
  Multivector r(m);
  r.coef_[0] = v;
  return r;
}

Multivector Multivector::blade(int m, unsigned mask, double c) {
  Multivector r(m);
  if (mask >= r.coef_.size()) throw std::out_of_range("Multivector::blade: bad mask");
  r.coef_[mask] = c;
  return r;
}

Multivector Multivector::basis_vector(int m, int j) {
  if (j < 0 || j > m) throw std::out_of_range("Multivector::basis_vector: bad index");
  return blade(m, 1u << j, 1.0);
}

Multivector& Multivector::operator+=(const Multivector& o) {
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= o.coef_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (auto& c : coef_) c *= s;
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector r = *this;
  r *= -1.0;
  return r;
}

double Multivector::max_abs() const {
  double mx = 0.0;
  for (double c : coef_) mx = std::max(mx, std::fabs(c));
  return mx;
}

bool Multivector::approx_equal(const Multivector& o, double tol) const {
  for (std::size_t i = 0; i < coef_.size(); ++i)
    if (std::fabs(coef_[i] - o.coef_[i]) > tol) return false;
  return true;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator*(double s, Multivector a) { return a *= s; }
Multivector operator*(Multivector a, double s) { return a *= s; }

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  Multivector r(a.m());
  const std::size_t n = a.size();
  for (unsigned i = 0; i < n; ++i) {
    const double ca = a[i];
    if (ca == 0.0) continue;
    for (unsigned j = 0; j < n; ++j) {
      const double cb = b[j];
      if (cb == 0.0) continue;
      r[i ^ j] += product_sign(i, j) * ca * cb;
    }
  }
  return r;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

Multivector conjugate(const Multivector& a) {
  Multivector r(a.m());
  for (unsigned i = 0; i < a.size(); ++i)
    r[i] = conjugation_sign(std::popcount(i)) * a[i];
  return r;
}

Multivector e0_times(const Multivector& a) {
  Multivector r(a.m());
  for (unsigned i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    r[1u ^ i] += product_sign(1u, i) * a[i];
  }
  return r;
}

double PointUpperLower::r2() const {
  double s = 0.0;
  for (double x : xs) s += x * x;
  return s;
}

double PointUpperLower::r() const { return std::sqrt(r2()); }
double PointUpperLower::abs() const { return std::sqrt(abs2()); }

Multivector embed_point(const PointUpperLower& p) {
  Multivector r(p.m());
  r[1u] = p.x0;
  for (int j = 0; j < p.m(); ++j) r[1u << (j + 1)] = p.xs[j];
  return r;
}

Multivector embed_vec(int m, const std::vector<double>& xs) {
  Multivector r(m);
  for (int j = 0; j < m; ++j) r[1u << (j + 1)] = xs[j];
  return r;
}

ComplexMultivector& ComplexMultivector::operator+=(const ComplexMultivector& o) {
  re += o.re;
  im += o.im;
  return *this;
}

void ComplexMultivector::add_scaled(double cre, double cim, const Multivector& v) {
  for (unsigned i = 0; i < v.size(); ++i) {
    if (v[i] == 0.0) continue;
    re[i] += cre * v[i];
    im[i] += cim * v[i];
  }
}

double ComplexMultivector::max_abs() const {
  return std::max(re.max_abs(), im.max_abs());
}

bool ComplexMultivector::approx_equal(const ComplexMultivector& o, double tol) const {
  return re.approx_equal(o.re, tol) && im.approx_equal(o.im, tol);
}

std::string blade_label(unsigned mask) {
  if (mask == 0) return "1";
  const bool wide = mask >= (1u << 10);  // double-digit indices need a separator
  std::string s = "e";
  bool first = true;
  for (unsigned j = 0; mask >> j; ++j) {
    if (!(mask & (1u << j))) continue;
    if (!first && wide) s += "_";
    s += std::to_string(j);
    first = false;
  }
  return s;
}

}  // namespace monopot
