#pragma once

#include <vector>

namespace monopot {

inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

// Surface area of the unit sphere S^{d-1} in R^d: 2 pi^{d/2} / Gamma(d/2).
double sigma(int d);

double digamma(double x);

// Gamma(z) away from the poles; at z = -n the Laurent constant
// (-1)^n psi(n+1) / n!  (the Gelfand–Shilov finite part).
double fp_gamma(double z);

// Non-regularized incomplete beta B(x; a, b), 0 <= x <= 1.
double inc_beta(double x, double a, double b);

// F_m(v) = int_0^v eta^{m-1} (1+eta^2)^{-(m+1)/2} d eta, extended to v < 0 by
// F_m(-v) = (-1)^m F_m(v).  Evaluated through the incomplete beta function:
// F_m(v) = B(v^2/(1+v^2); m/2, 1/2) / 2 for v >= 0.
double F_profile(int m, double v);
double F_profile_inf(int m);  // limit v -> +infinity

// int_{S^{m-1}} omega^alpha dS: zero unless every alpha_j is even, otherwise
// 2 prod_j Gamma((alpha_j+1)/2) / Gamma(sum_j (alpha_j+1)/2).
double sphere_moment(int m, const std::vector<int>& alpha);

}  // namespace monopot
