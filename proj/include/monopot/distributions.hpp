#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "monopot/algebra.hpp"

// Boundary distributions on R^m built from the two radial families
//
//   T_lambda ~ Fp r^lambda          (scalar),
//   U_lambda ~ Fp omega r^lambda    (omega = xvec/r),
//
// their normalized versions T*_lambda, U*_lambda (entire in lambda, with the
// gamma-factor poles traded for delta derivatives), the log-carrying kernels
// that appear at the exceptional integer slots, and finite-order point parts
// (-Delta)^l delta and dirac^{2l+1} delta.  A distribution is a list of radial
// pieces  coeff * ln^kappa(r) * Fp r^beta [* omega]  plus point pieces, each
// optionally premultiplied by e0; coefficients are complex so the fractional
// power kernels (phases e^{i pi mu}) fit the same container.

namespace monopot {

using cplx = std::complex<double>;

struct RadialPiece {
  cplx coeff{0.0, 0.0};
  int kappa = 0;      // power of ln r (0 or 1 in practice)
  double beta = 0.0;  // Fp r^beta
  bool omega = false;
  bool e0 = false;    // piece is e0 * (...)
};

struct PointSupportPiece {
  cplx coeff{0.0, 0.0};
  bool dirac_kind = false;  // false: (-Delta)^l delta, true: dirac^{2l+1} delta
  int l = 0;
  bool e0 = false;
};

struct BoundaryDistribution {
  int m = 0;
  std::vector<RadialPiece> radial;
  std::vector<PointSupportPiece> point;

  BoundaryDistribution() = default;
  explicit BoundaryDistribution(int mm) : m(mm) {}

  BoundaryDistribution& operator+=(const BoundaryDistribution& o);
  BoundaryDistribution& operator*=(cplx f);
  void normalize();  // merge equal pieces, drop tiny ones, sort canonically
  double max_coeff() const;
  bool is_zero(double tol = 1e-14) const;
};

BoundaryDistribution operator*(cplx f, BoundaryDistribution d);
BoundaryDistribution operator+(BoundaryDistribution a, const BoundaryDistribution& b);
BoundaryDistribution e0_times_left(BoundaryDistribution d);  // e0 * d
bool approx_equal(const BoundaryDistribution& a, const BoundaryDistribution& b, double tol);

enum class Family { T, U };

// T*_lambda = pi^{(lambda+m)/2} T_lambda / Gamma((lambda+m)/2) and its U
// counterpart; at the gamma poles the normalized family continues to
//   T*_{-m-2l}   =  pi^{m/2-l} / (2^{2l}   Gamma(m/2+l))   (-Delta)^l delta,
//   U*_{-m-2l-1} = -pi^{m/2-l} / (2^{2l+1} Gamma(m/2+l+1)) dirac^{2l+1} delta.
BoundaryDistribution make_normalized(int m, Family f, double lambda);

struct PQConstants {
  int n = 0;
  double p = 0.0, q = 0.0;
};

// Recursive constants of the log kernels: p_0 = -1/(2^{m-1} pi^m), q_0 = 0,
//   p_{2j+1} = -p_{2j}/(2 pi),  q_{2j+1} = -(q_{2j} - p_{2j}/(m+2j))/(2 pi),
//   p_{2j+2} = p_{2j+1}/(2j+2), q_{2j+2} = (q_{2j+1} - p_{2j+1}/(2j+2))/(2j+2).
PQConstants pq_constants(int m, int n);

// E_{m+n} = F_{m+n} for n >= 0:
//   n = 2j:   (p_{2j}  ln r + q_{2j})  pi^{(m+2j)/2}  /Gamma((m+2j)/2)   Fp r^{2j}
//   n = 2j+1: (p_{2j+1} ln r + q_{2j+1}) pi^{(m+2j+2)/2}/Gamma((m+2j+2)/2) omega Fp r^{2j+1}
BoundaryDistribution log_kernel(int m, int idx);  // idx = m + n

// dirac^mu delta and dirac^mu H (H the Hilbert kernel).  For non-integer mu
// both the T* and U* pieces contribute with e^{i pi mu} phases; at integer mu
// one of them survives, and at the invalid integer slots (mu <= -m with the
// matching parity of m) the continuation is the log kernel E_{-mu} = F_{-mu}.
BoundaryDistribution dirac_power_kernel(int m, double mu);
BoundaryDistribution hilbert_power_kernel(int m, double mu);

enum class Series { a, b, c };
enum class Side { plus, minus };

// Distributional boundary value of the potentials A_k, B_k, C_k as x0 -> 0
// from the chosen half-space, for any integer k (downstream k <= -1 included).
BoundaryDistribution boundary_value(int m, Series s, int k, Side side);

// Test functions: Clifford-coefficient polynomials times exp(-r^2).  Closed
// under coordinate multiplication, partial derivatives, dirac and Laplacian,
// which is all the pairing engine needs.
class GaussPolyTestFunction {
public:
  explicit GaussPolyTestFunction(int m) : m_(m) {}
  static GaussPolyTestFunction gaussian(int m);  // exp(-r^2)

  int m() const { return m_; }
  const std::map<std::vector<int>, Multivector>& terms() const { return terms_; }

  void add_term(const std::vector<int>& alpha, const Multivector& c);
  GaussPolyTestFunction mul_coord(int j) const;       // x_j phi
  GaussPolyTestFunction mul_xvec() const;             // xvec phi (left)
  GaussPolyTestFunction mul_left(const Multivector& c) const;
  GaussPolyTestFunction d(int j) const;               // d/dx_j (envelope included)
  GaussPolyTestFunction dirac() const;                // sum_j e_j d/dx_j phi
  GaussPolyTestFunction laplacian() const;
  GaussPolyTestFunction operator*(double s) const;
  GaussPolyTestFunction operator+(const GaussPolyTestFunction& o) const;

  Multivector eval(const std::vector<double>& xs) const;
  Multivector at_origin() const;

  std::string label;

private:
  int m_;
  std::map<std::vector<int>, Multivector> terms_;
};

// <T, phi>.  Radial pieces reduce to spherical monomial moments times the
// one-dimensional integrals int_0^infty r^s ln^kappa(r) e^{-r^2} dr, taken in
// the finite-part sense at the poles; point pieces differentiate phi at 0
// (<dirac^n delta, phi> = (-1)^n (dirac^n phi)(0)).  Distribution
// coefficients multiply test values from the left.
ComplexMultivector pair(const BoundaryDistribution& T, const GaussPolyTestFunction& phi);

std::string pretty(const BoundaryDistribution& d);

struct LemmaRow {
  int k = 0;
  std::string part;      // "i:a", "i:b", "ii:a", "ii:b", "iii", "iv"
  bool pass = false;
  bool table_level = false;  // true for iii/iv (consistency, not a new identity)
  double err = 0.0;
  std::string note;
};

// Checks, for k = 1..kmax:
//  (i)/(ii)  -dirac a_k^± = b_{k-1}^±, -dirac b_k^± = a_{k-1}^±   (pairing-exact)
//  (iii)/(iv) the convolution claims H * a_k^± ~ b_k^±, checked at table level
//  against the dirac^{-n} delta / dirac^{-n} H registry and the side factors.
std::vector<LemmaRow> lemma_check(int m, int kmax);

}  // namespace monopot
