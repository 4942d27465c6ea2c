#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Dense multivectors over the real Clifford algebra R_{0,m+1} generated by
// e_0, e_1, ..., e_m with e_a e_b + e_b e_a = -2 delta_ab.  A basis blade is
// indexed by a bitmask: bit j set <=> factor e_j present, factors kept in
// ascending index order.  e_0 carries the extra "time" direction, so a point
// x = x0 e_0 + x_1 e_1 + ... + x_m e_m of upper/lower half-space embeds as a
// grade-1 element with x^2 = -|x|^2.

namespace monopot {

class AlgebraContext {
public:
  explicit AlgebraContext(int m);
  int m() const { return m_; }
  int generators() const { return m_ + 1; }
  std::size_t blade_count() const { return std::size_t(1) << (m_ + 1); }

private:
  int m_;
};

// Sign of e_A e_B relative to the blade A^B, including the metric factor
// (-1)^|A&B| from the shared generators squaring to -1.
int product_sign(unsigned a, unsigned b);

// Sign of the Clifford conjugation on a grade-k blade: (-1)^{k(k+1)/2}.
int conjugation_sign(int grade);

class Multivector {
public:
  explicit Multivector(int m);
  static Multivector scalar(int m, double v);
  static Multivector blade(int m, unsigned mask, double c = 1.0);
  static Multivector basis_vector(int m, int j);  // e_j, 0 <= j <= m

  int m() const { return m_; }
  std::size_t size() const { return coef_.size(); }
  double operator[](unsigned mask) const { return coef_[mask]; }
  double& operator[](unsigned mask) { return coef_[mask]; }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);
  Multivector operator-() const;

  double scalar_part() const { return coef_[0]; }
  double max_abs() const;
  bool approx_equal(const Multivector& o, double tol) const;

private:
  int m_;
  std::vector<double> coef_;
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator*(double s, Multivector a);
Multivector operator*(Multivector a, double s);

Multivector geometric_product(const Multivector& a, const Multivector& b);
Multivector operator*(const Multivector& a, const Multivector& b);
Multivector conjugate(const Multivector& a);

// Left multiplication by e_0 (cheap special case used throughout).
Multivector e0_times(const Multivector& a);

// "1" for the scalar blade, otherwise "e" + generator indices in increasing
// order ("e0", "e1", "e01", ...); indices >= 10 are '_'-separated ("e0_10").
std::string blade_label(unsigned mask);

// A point of R^{m+1} split into the e_0 coordinate and the R^m part.
struct PointUpperLower {
  double x0 = 0.0;
  std::vector<double> xs;  // x_1 .. x_m

  int m() const { return static_cast<int>(xs.size()); }
  double r2() const;
  double r() const;
  double abs2() const { return x0 * x0 + r2(); }
  double abs() const;
};

Multivector embed_point(const PointUpperLower& p);
Multivector embed_vec(int m, const std::vector<double>& xs);  // sum x_j e_j

// Complex-coefficient multivector, used where distribution coefficients pick
// up e^{i pi mu} phases.  Kept as a plain re/im pair.
struct ComplexMultivector {
  Multivector re, im;

  explicit ComplexMultivector(int m) : re(m), im(m) {}
  ComplexMultivector(Multivector r, Multivector i) : re(std::move(r)), im(std::move(i)) {}

  ComplexMultivector& operator+=(const ComplexMultivector& o);
  void add_scaled(double cre, double cim, const Multivector& v);
  double max_abs() const;
  bool approx_equal(const ComplexMultivector& o, double tol) const;
};

}  // namespace monopot
