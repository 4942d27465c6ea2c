#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "monopot/special_functions.hpp"

using namespace monopot;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Adaptive Simpson oracle, independent of any library quadrature.
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
  return simpson(f, a, b, f(a), f(m), f(b), eps, 40);
}

}  // namespace

TEST_CASE("sigma: unit sphere areas") {
  CHECK(sigma(2) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
  CHECK(sigma(3) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK(sigma(4) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
  CHECK(sigma(5) == doctest::Approx(8.0 * kPi * kPi / 3.0).epsilon(1e-14));
  CHECK(sigma(6) == doctest::Approx(kPi * kPi * kPi).epsilon(1e-14));
}

TEST_CASE("digamma: special values and lgamma derivative") {
  CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-13));
  CHECK(digamma(0.5) == doctest::Approx(-kEulerGamma - 2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - kEulerGamma).epsilon(1e-13));
  for (double x : {0.7, 1.9, 3.3, 7.25}) {
    const double h = 1e-5;
    const double fd = (std::lgamma(x + h) - std::lgamma(x - h)) / (2.0 * h);
    CHECK(digamma(x) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("fp_gamma: regular points and finite parts at the poles") {
  for (double z : {0.3, 1.0, 2.5, 6.0})
    CHECK(fp_gamma(z) == doctest::Approx(std::tgamma(z)).epsilon(1e-14));

  // Finite part at -n: the symmetric average Gamma(-n+eps)+Gamma(-n-eps)
  // cancels the simple pole and converges to the Laurent constant.  eps must
  // be a power of two so that -n +/- eps is exact and the 1/eps poles cancel.
  for (int n : {0, 1, 2, 3}) {
    const double eps = 0x1p-20;
    const double avg = 0.5 * (std::tgamma(-n + eps) + std::tgamma(-n - eps));
    CHECK(fp_gamma(-double(n)) == doctest::Approx(avg).epsilon(1e-6));
  }
  CHECK(fp_gamma(0.0) == doctest::Approx(-kEulerGamma).epsilon(1e-13));
  CHECK(fp_gamma(-1.0) == doctest::Approx(kEulerGamma - 1.0).epsilon(1e-13));
}

TEST_CASE("inc_beta matches direct integration") {
  struct Case {
    double x, a, b;
  };
  // Substituting t = u^2 removes the endpoint singularity of t^{a-1} at 0.
  for (const auto& c : {Case{0.3, 1.5, 0.5}, Case{0.8, 2.0, 2.5}, Case{0.5, 0.5, 0.5}}) {
    const double ref = integrate(
        [&](double u) {
          return 2.0 * std::pow(u, 2.0 * c.a - 1.0) * std::pow(1.0 - u * u, c.b - 1.0);
        },
        0.0, std::sqrt(c.x));
    CHECK(inc_beta(c.x, c.a, c.b) == doctest::Approx(ref).epsilon(1e-8));
  }
}

TEST_CASE("F_profile matches direct integration and its stated limits") {
  for (int m : {2, 3, 4, 6}) {
    for (double v : {0.3, 1.0, 2.7}) {
      const double ref = integrate(
          [&](double t) {
            return std::pow(t, m - 1) * std::pow(1.0 + t * t, -0.5 * (m + 1));
          },
          0.0, v);
      CHECK(F_profile(m, v) == doctest::Approx(ref).epsilon(1e-10));
      const double parity = (m % 2 == 0) ? 1.0 : -1.0;
      CHECK(F_profile(m, -v) == doctest::Approx(parity * ref).epsilon(1e-10));
    }
    const double inf = 0.5 * std::sqrt(kPi) * std::tgamma(0.5 * m) / std::tgamma(0.5 * (m + 1));
    CHECK(F_profile_inf(m) == doctest::Approx(inf).epsilon(1e-13));
    CHECK(F_profile(m, 1e300) == doctest::Approx(inf).epsilon(1e-13));
  }
  CHECK(F_profile_inf(2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(F_profile_inf(3) == doctest::Approx(kPi / 4.0).epsilon(1e-14));
  CHECK(F_profile(2, 0.0) == 0.0);
}

TEST_CASE("sphere_moment: hand values and parity") {
  // S^1: int cos^2 = pi, int cos^2 sin^2 = pi/4.
  CHECK(sphere_moment(2, {0, 0}) == doctest::Approx(2.0 * kPi).epsilon(1e-13));
  CHECK(sphere_moment(2, {2, 0}) == doctest::Approx(kPi).epsilon(1e-13));
  CHECK(sphere_moment(2, {2, 2}) == doctest::Approx(kPi / 4.0).epsilon(1e-13));
  // S^2: int 1 = 4 pi, int w1^2 = 4 pi/3, int w1^4 = 4 pi/5, int w1^2 w2^2 = 4 pi/15.
  CHECK(sphere_moment(3, {0, 0, 0}) == doctest::Approx(4.0 * kPi).epsilon(1e-13));
  CHECK(sphere_moment(3, {2, 0, 0}) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-13));
  CHECK(sphere_moment(3, {4, 0, 0}) == doctest::Approx(4.0 * kPi / 5.0).epsilon(1e-13));
  CHECK(sphere_moment(3, {2, 2, 0}) == doctest::Approx(4.0 * kPi / 15.0).epsilon(1e-13));
  // any odd exponent kills the moment
  CHECK(sphere_moment(2, {1, 2}) == 0.0);
  CHECK(sphere_moment(3, {2, 3, 0}) == 0.0);
  CHECK(sphere_moment(5, {1, 0, 0, 0, 0}) == 0.0);
}

TEST_CASE("sphere_moment agrees with explicit angular quadrature on S^1") {
  // Trapezoid rule on the circle is exact for trigonometric polynomials.
  const int n = 64;
  for (const std::vector<int>& alpha : {std::vector<int>{2, 4}, {6, 0}, {4, 4}}) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double th = 2.0 * kPi * i / n;
      acc += std::pow(std::cos(th), alpha[0]) * std::pow(std::sin(th), alpha[1]);
    }
    acc *= 2.0 * kPi / n;
    CHECK(sphere_moment(2, alpha) == doctest::Approx(acc).epsilon(1e-12));
  }
}
