#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "monopot/distributions.hpp"
#include "monopot/special_functions.hpp"

using namespace monopot;

namespace {

constexpr double kPi = 3.14159265358979323846;

double simpson(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, 0.5 * eps, depth - 1) +
         simpson(f, m, b, fm, frm, fb, 0.5 * eps, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double eps = 1e-13) {
  const double m = 0.5 * (a + b);
  return simpson(f, a, b, f(a), f(m), f(b), eps, 44);
}

GaussPolyTestFunction phi_even(int m) {
  // (1 + x_1^2) exp(-r^2)
  GaussPolyTestFunction g = GaussPolyTestFunction::gaussian(m);
  return g + g.mul_coord(0).mul_coord(0);
}

GaussPolyTestFunction phi_odd(int m) {
  return GaussPolyTestFunction::gaussian(m).mul_coord(0);  // x_1 exp(-r^2)
}

// dirac^n phi by repeated application.
GaussPolyTestFunction dirac_pow(GaussPolyTestFunction phi, int n) {
  for (int i = 0; i < n; ++i) phi = phi.dirac();
  return phi;
}

}  // namespace

TEST_CASE("GaussPolyTestFunction derivatives match finite differences") {
  const int m = 2;
  GaussPolyTestFunction phi = phi_even(m).mul_coord(1);
  const std::vector<double> x = {0.43, -0.71};
  for (int j = 0; j < m; ++j) {
    const double h = 1e-5;
    std::vector<double> up = x, dn = x;
    up[j] += h;
    dn[j] -= h;
    Multivector fd = phi.eval(up) - phi.eval(dn);
    fd *= 1.0 / (2.0 * h);
    CHECK(phi.d(j).eval(x).approx_equal(fd, 1e-8));
  }
  // laplacian = sum_j d_j d_j, dirac = sum_j e_j d_j
  Multivector lap(m);
  Multivector dir(m);
  for (int j = 0; j < m; ++j) {
    lap += phi.d(j).d(j).eval(x);
    dir += geometric_product(Multivector::basis_vector(m, j + 1), phi.d(j).eval(x));
  }
  CHECK(phi.laplacian().eval(x).approx_equal(lap, 1e-11));
  CHECK(phi.dirac().eval(x).approx_equal(dir, 1e-11));
  CHECK(phi.at_origin().approx_equal(phi.eval({0.0, 0.0}), 1e-14));
}

TEST_CASE("pairing radial pieces against independent 2d quadrature (m=2)") {
  const int m = 2;
  // T = Fp r^beta (+ optional ln r, omega): all regular here, so the pairing
  // is an ordinary integral that a polar-coordinates Simpson rule can check.
  struct Case {
    double beta;
    int kappa;
    bool omega;
  };
  for (const auto& c : {Case{-1.3, 0, false}, Case{0.7, 1, false}, Case{-0.5, 0, true},
                        Case{0.4, 1, true}}) {
    BoundaryDistribution T(m);
    RadialPiece rp;
    rp.coeff = 1.0;
    rp.beta = c.beta;
    rp.kappa = c.kappa;
    rp.omega = c.omega;
    T.radial.push_back(rp);

    const GaussPolyTestFunction phi = c.omega ? phi_odd(m) : phi_even(m);
    const ComplexMultivector got = pair(T, phi);

    // reference: int_0^inf int_0^{2pi} r^beta ln^kappa r [omega] phi r dth dr
    const int nth = 64;
    auto radial = [&](double r) {
      double acc0 = 0.0;  // scalar blade
      double acc1 = 0.0;  // e1 blade coefficient when omega is present
      for (int i = 0; i < nth; ++i) {
        const double th = 2.0 * kPi * i / nth;
        const double w1 = std::cos(th), w2 = std::sin(th);
        const double val = phi.eval({r * w1, r * w2}).scalar_part();
        if (c.omega) {
          acc0 += 0.0;
          acc1 += w1 * val;  // e1 component of omega * phi
        } else {
          acc0 += val;
        }
      }
      const double base = std::pow(r, c.beta) * std::pow(std::log(r), c.kappa) * r;
      return base * (c.omega ? acc1 : acc0) * (2.0 * kPi / nth);
    };
    // The reference itself carries a small lower-cutoff bias, so 5e-6 is as
    // tight as this oracle can honestly claim.
    const double ref = integrate(radial, 1e-9, 9.0, 1e-12);
    if (c.omega) {
      CHECK(got.re[2u] == doctest::Approx(ref).epsilon(5e-6));
      CHECK(got.re[0u] == doctest::Approx(0.0).epsilon(1e-10));
    } else {
      CHECK(got.re[0u] == doctest::Approx(ref).epsilon(5e-6));
    }
    CHECK(got.im.max_abs() == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("finite-part radial integrals at the pole slots") {
  // <Fp r^{-m}, e^{-r^2}> over R^m: radial exponent s = -1, so the finite
  // part is sigma_m * (1/2) FpGamma(0) = -sigma_m gamma_E / 2.
  for (int m : {2, 3}) {
    BoundaryDistribution T(m);
    RadialPiece rp;
    rp.coeff = 1.0;
    rp.beta = -double(m);
    T.radial.push_back(rp);
    const ComplexMultivector got = pair(T, GaussPolyTestFunction::gaussian(m));
    CHECK(got.re[0u] == doctest::Approx(-0.5 * sigma(m) * kEulerGamma).epsilon(1e-12));
  }
}

TEST_CASE("point pieces differentiate the test function at the origin") {
  const int m = 3;
  GaussPolyTestFunction phi = phi_even(m) + phi_odd(m);
  // (-Delta)^1 delta
  BoundaryDistribution lap(m);
  PointSupportPiece pp;
  pp.coeff = 1.0;
  pp.dirac_kind = false;
  pp.l = 1;
  lap.point.push_back(pp);
  const Multivector want_lap = -1.0 * phi.laplacian().at_origin();
  CHECK(pair(lap, phi).re.approx_equal(want_lap, 1e-12));

  // dirac^3 delta pairs as (-1)^3 (dirac^3 phi)(0)
  BoundaryDistribution d3(m);
  pp.dirac_kind = true;
  pp.l = 1;
  d3.point = {pp};
  const Multivector want_d3 = -dirac_pow(phi, 3).at_origin();
  CHECK(pair(d3, phi).re.approx_equal(want_d3, 1e-12));
}

TEST_CASE("pq constants: recurrence unrolled by hand for m=2") {
  const PQConstants c0 = pq_constants(2, 0);
  const double p0 = -1.0 / (2.0 * kPi * kPi);
  CHECK(c0.p == doctest::Approx(p0).epsilon(1e-14));
  CHECK(c0.q == 0.0);
  const PQConstants c1 = pq_constants(2, 1);
  CHECK(c1.p == doctest::Approx(-p0 / (2.0 * kPi)).epsilon(1e-14));
  CHECK(c1.q == doctest::Approx(p0 / (4.0 * kPi)).epsilon(1e-14));
  const PQConstants c2 = pq_constants(2, 2);
  CHECK(c2.p == doctest::Approx(c1.p / 2.0).epsilon(1e-14));
  CHECK(c2.q == doctest::Approx((c1.q - c1.p / 2.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("log kernel at m=2: E_2 = -(1/2pi) ln r") {
  const BoundaryDistribution e2 = log_kernel(2, 2);
  REQUIRE(e2.radial.size() == 1);
  REQUIRE(e2.point.empty());
  const RadialPiece& rp = e2.radial[0];
  CHECK(rp.kappa == 1);
  CHECK(rp.beta == 0.0);
  CHECK(!rp.omega);
  CHECK(rp.coeff.real() == doctest::Approx(-1.0 / (2.0 * kPi)).epsilon(1e-14));
  CHECK(rp.coeff.imag() == 0.0);
}

TEST_CASE("integer dirac powers of delta literally differentiate delta") {
  // dirac^n delta must pair as (-1)^n (dirac^n phi)(0); this checks the whole
  // T*/U* normalization bookkeeping against plain calculus.
  for (int m : {2, 3, 5}) {
    GaussPolyTestFunction phi = phi_even(m) + phi_odd(m);
    for (int n = 0; n <= 3; ++n) {
      const BoundaryDistribution K = dirac_power_kernel(m, double(n));
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      const Multivector want = sign * dirac_pow(phi, n).at_origin();
      const ComplexMultivector got = pair(K, phi);
      CHECK(got.im.max_abs() == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(got.re.approx_equal(want, 1e-10));
    }
  }
}

namespace {

// <dirac^n X, phi> via the left-action adjoint, one derivative at a time:
// <dirac X, phi> = - sum_j e_j <X, d_j phi>.  (The e_j factors do not commute
// past the values of X, so this cannot be collapsed to <X, dirac^n phi>.)
Multivector dirac_power_pair(const BoundaryDistribution& X, const GaussPolyTestFunction& phi,
                             int n) {
  if (n == 0) return pair(X, phi).re;
  Multivector out(X.m);
  for (int j = 0; j < X.m; ++j) {
    const Multivector inner = dirac_power_pair(X, phi.d(j), n - 1);
    out -= geometric_product(Multivector::basis_vector(X.m, j + 1), inner);
  }
  return out;
}

}  // namespace

TEST_CASE("integer dirac powers of H differentiate the Hilbert kernel") {
  for (int m : {2, 3}) {
    BoundaryDistribution H(m);
    RadialPiece rp;
    rp.coeff = -2.0 / sigma(m + 1);
    rp.beta = -double(m);
    rp.omega = true;
    H.radial.push_back(rp);

    GaussPolyTestFunction phi = phi_even(m) + phi_odd(m);
    for (int n = 0; n <= 3; ++n) {
      const BoundaryDistribution K = hilbert_power_kernel(m, double(n));
      const Multivector want = dirac_power_pair(H, phi, n);
      const ComplexMultivector got = pair(K, phi);
      CHECK(got.im.max_abs() == doctest::Approx(0.0).epsilon(1e-10));
      CHECK(got.re.approx_equal(want, 1e-9));
    }
    // hilbert_power_kernel(0) is H itself
    CHECK(approx_equal(hilbert_power_kernel(m, 0.0), H, 1e-13));
  }
}

TEST_CASE("fractional kernels are continuous at integer orders") {
  const int m = 3;
  GaussPolyTestFunction phi = phi_even(m) + phi_odd(m);
  for (double n : {1.0, -1.0, 2.0}) {
    const ComplexMultivector at = pair(dirac_power_kernel(m, n), phi);
    const ComplexMultivector near = pair(dirac_power_kernel(m, n + 1e-7), phi);
    Multivector dr = at.re - near.re;
    Multivector di = at.im - near.im;
    CHECK(dr.max_abs() <= 1e-4);
    CHECK(di.max_abs() <= 1e-4);
  }
}

TEST_CASE("normalized families: pole slots become point distributions") {
  // T*_{-m-2l} = pi^{m/2-l} / (2^{2l} Gamma(m/2+l)) (-Delta)^l delta
  for (int m : {2, 3}) {
    for (int l : {0, 1}) {
      const BoundaryDistribution T = make_normalized(m, Family::T, -double(m) - 2 * l);
      REQUIRE(T.radial.empty());
      REQUIRE(T.point.size() == 1);
      CHECK(!T.point[0].dirac_kind);
      CHECK(T.point[0].l == l);
      const double want =
          std::pow(kPi, 0.5 * m - l) / (std::pow(2.0, 2 * l) * std::tgamma(0.5 * m + l));
      CHECK(T.point[0].coeff.real() == doctest::Approx(want).epsilon(1e-13));
    }
    // U*_{-m-2l-1} = -pi^{m/2-l} / (2^{2l+1} Gamma(m/2+l+1)) dirac^{2l+1} delta
    for (int l : {0, 1}) {
      const BoundaryDistribution U = make_normalized(m, Family::U, -double(m) - 2 * l - 1);
      REQUIRE(U.radial.empty());
      REQUIRE(U.point.size() == 1);
      CHECK(U.point[0].dirac_kind);
      CHECK(U.point[0].l == l);
      const double want = -std::pow(kPi, 0.5 * m - l) /
                          (std::pow(2.0, 2 * l + 1) * std::tgamma(0.5 * m + l + 1));
      CHECK(U.point[0].coeff.real() == doctest::Approx(want).epsilon(1e-13));
    }
  }
}

TEST_CASE("boundary values: base rows and the c composition") {
  for (int m : {2, 3, 4, 5}) {
    // a_{-1}^{+-} = +- delta
    const BoundaryDistribution ap = boundary_value(m, Series::a, -1, Side::plus);
    const BoundaryDistribution am = boundary_value(m, Series::a, -1, Side::minus);
    REQUIRE(ap.point.size() == 1);
    CHECK(ap.point[0].coeff.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(approx_equal(am, -1.0 * ap, 1e-14));

    // b_{-1} = dirac^0 H on both sides
    const BoundaryDistribution bp = boundary_value(m, Series::b, -1, Side::plus);
    const BoundaryDistribution bm = boundary_value(m, Series::b, -1, Side::minus);
    CHECK(approx_equal(bp, hilbert_power_kernel(m, 0.0), 1e-13));
    CHECK(approx_equal(bp, bm, 1e-14));

    // c = a/2 + bar(e0) b/2 for a spread of k on both sides
    for (int k : {-3, -2, -1, 0, 1, 2, 3}) {
      for (Side s : {Side::plus, Side::minus}) {
        const BoundaryDistribution c = boundary_value(m, Series::c, k, s);
        BoundaryDistribution want = 0.5 * boundary_value(m, Series::a, k, s) +
                                    (-0.5) * e0_times_left(boundary_value(m, Series::b, k, s));
        want.normalize();
        CHECK(approx_equal(c, want, 1e-13));
      }
    }

    // side factors: a_k^- = (-1)^m a_k^+ for odd k, equal for even k; b flipped
    const double msign = (m % 2 == 0) ? 1.0 : -1.0;
    for (int k : {0, 1, 2, 3}) {
      const double fa = (k % 2 == 1) ? msign : 1.0;
      const double fb = (k % 2 == 1) ? 1.0 : msign;
      CHECK(approx_equal(boundary_value(m, Series::a, k, Side::minus),
                         fa * boundary_value(m, Series::a, k, Side::plus), 1e-13));
      CHECK(approx_equal(boundary_value(m, Series::b, k, Side::minus),
                         fb * boundary_value(m, Series::b, k, Side::plus), 1e-13));
    }
  }
}

TEST_CASE("downstream boundary values are dirac powers of delta and H") {
  for (int m : {2, 3}) {
    for (int k : {-1, -2, -3, -4}) {
      const int n = -k - 1;  // a_k ~ dirac^n of (delta or H)
      const BoundaryDistribution ap = boundary_value(m, Series::a, k, Side::plus);
      const BoundaryDistribution bp = boundary_value(m, Series::b, k, Side::plus);
      if (n % 2 == 0) {
        CHECK(approx_equal(ap, dirac_power_kernel(m, double(n)), 1e-12));
        CHECK(approx_equal(bp, hilbert_power_kernel(m, double(n)), 1e-12));
      } else {
        CHECK(approx_equal(ap, -1.0 * hilbert_power_kernel(m, double(n)), 1e-12));
        CHECK(approx_equal(bp, -1.0 * dirac_power_kernel(m, double(n)), 1e-12));
      }
    }
  }
}

TEST_CASE("pretty printing") {
  const int m = 3;
  CHECK(pretty(boundary_value(m, Series::a, -1, Side::plus)) == "delta");
  const std::string h = pretty(hilbert_power_kernel(m, 0.0));
  CHECK(h.find("r^-3") != std::string::npos);
  CHECK(h.find("omega") != std::string::npos);
  const std::string e2 = pretty(log_kernel(2, 2));
  CHECK(e2.find("ln(r)") != std::string::npos);
}

TEST_CASE("lemma battery passes for m=3 and m=5") {
  for (int m : {3, 5}) {
    const auto rows = lemma_check(m, 3);
    CHECK(!rows.empty());
    for (const auto& row : rows) {
      INFO("m=", m, " k=", row.k, " part=", row.part, " err=", row.err, " ", row.note);
      CHECK(row.pass);
      if (!row.table_level) CHECK(row.err <= 1e-10);
    }
  }
}
