#pragma once

#include <vector>

#include "monopot/algebra.hpp"

// Exact symbolic calculus for the kernels that appear in the potential chain.
// Every function handled here is a finite sum of terms
//
//     c * E * x0^a * (r^2)^s * |x|^(-q) * xvec^eps
//
// with E in {1, e0}, eps in {0, 1}, r^2 = x_1^2+...+x_m^2, |x|^2 = x0^2+r^2.
// The rewriting rules are xvec^2 = -r^2, e0 xvec = -xvec e0, e0^2 = -1, and
// x0^2 = |x|^2 - r^2; the last one brings each term to a normal form with
// a <= 1, which is what makes cancellations exact (the monomials x0^a (r^2)^s
// |x|^(-q) with a in {0,1} are linearly independent).
//
// Derivative rules, acting from the left:
//   d/dx0:   x0^a -> a x0^(a-1),   |x|^(-q) -> -q x0 |x|^(-q-2)
//   dirac:   (r^2)^s -> 2s (r^2)^(s-1) xvec,  |x|^(-q) -> -q |x|^(-q-2) xvec,
//            xvec -> -m,  dirac(f xvec) = -(m+2s) f - r^2-shifted part
// so a term sum is closed under both, and coefficients stay dyadic rationals
// times the coefficients one starts from.

namespace monopot {

struct CanonicalTerm {
  double c = 0.0;
  bool e0 = false;  // leading factor E = e0 instead of 1
  int a = 0;        // x0 exponent, kept in {0, 1}
  int s = 0;        // (r^2) exponent, >= 0
  int q = 0;        // |x|^(-q); negative q means positive powers of |x|
  bool eps = false; // trailing xvec factor
};

class TermSum {
public:
  explicit TermSum(int m) : m_(m) {}

  int m() const { return m_; }
  const std::vector<CanonicalTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Adds a term, reducing a >= 2 via x0^2 = |x|^2 - r^2.
  void add(CanonicalTerm t);
  // Combines equal (E,a,s,q,eps) keys and drops |c| <= 1e-14.
  void merge();

  TermSum& operator+=(const TermSum& o);
  TermSum& operator*=(double f);

  static TermSum cauchy_kernel(int m);  // C_{-1} = (x0 - bar(e0) xvec) / (sigma_{m+1} |x|^{m+1})
  // C_{-1} with the 1/sigma_{m+1} prefactor left out, so all coefficients stay
  // dyadic and derivative cancellations are bit-exact.
  static TermSum cauchy_kernel_unnormalized(int m);

private:
  int m_;
  std::vector<CanonicalTerm> terms_;
};

TermSum d_x0(const TermSum& f);
TermSum dirac_vec(const TermSum& f);       // left action of sum_j e_j d/dx_j
TermSum e0_times_left(const TermSum& f);   // left multiplication by e0

// Cauchy–Riemann operator D = (d/dx0 + bar(e0) dirac)/2 (conjugated = false)
// or its conjugate (d/dx0 - bar(e0) dirac)/2 (conjugated = true), bar(e0) = -e0.
TermSum apply_CR(const TermSum& f, bool conjugated);

Multivector evaluate_terms(const TermSum& f, const PointUpperLower& p);

}  // namespace monopot
