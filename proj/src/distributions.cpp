#include "monopot/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "monopot/special_functions.hpp"

namespace monopot {

namespace {

constexpr double kPi = std::numbers::pi;

bool near_int(double x, double tol = 1e-9) { return std::fabs(x - std::round(x)) < tol; }

long long beta_key(double b) { return std::llround(b * 1e9); }

double pow_pi(double e) { return std::pow(kPi, e); }

// int_0^infty r^s ln^kappa(r) e^{-r^2} dr, finite part at the poles of the
// kappa = 0 case (s = -1, -3, ...); the log integrals only occur off-pole.
double radial_integral(double s, int kappa) {
  const double z = 0.5 * (s + 1.0);
  if (kappa == 0) return 0.5 * fp_gamma(z);
  if (kappa != 1) throw std::invalid_argument("radial_integral: kappa in {0,1}");
  return 0.25 * std::tgamma(z) * digamma(z);
}

}  // namespace

BoundaryDistribution& BoundaryDistribution::operator+=(const BoundaryDistribution& o) {
  if (o.m != m) throw std::invalid_argument("BoundaryDistribution: dimension mismatch");
  radial.insert(radial.end(), o.radial.begin(), o.radial.end());
  point.insert(point.end(), o.point.begin(), o.point.end());
  normalize();
  return *this;
}

BoundaryDistribution& BoundaryDistribution::operator*=(cplx f) {
  for (auto& p : radial) p.coeff *= f;
  for (auto& p : point) p.coeff *= f;
  return *this;
}

void BoundaryDistribution::normalize() {
  std::map<std::tuple<bool, bool, int, long long>, RadialPiece> rm;
  for (const auto& p : radial) {
    auto k = std::make_tuple(p.e0, p.omega, p.kappa, beta_key(p.beta));
    auto it = rm.find(k);
    if (it == rm.end())
      rm.emplace(k, p);
    else
      it->second.coeff += p.coeff;
  }
  std::map<std::tuple<bool, bool, int>, PointSupportPiece> pm;
  for (const auto& p : point) {
    auto k = std::make_tuple(p.e0, p.dirac_kind, p.l);
    auto it = pm.find(k);
    if (it == pm.end())
      pm.emplace(k, p);
    else
      it->second.coeff += p.coeff;
  }
  double mx = 0.0;
  for (const auto& [k, p] : rm) mx = std::max(mx, std::abs(p.coeff));
  for (const auto& [k, p] : pm) mx = std::max(mx, std::abs(p.coeff));
  const double cut = 1e-15 * std::max(1.0, mx);
  radial.clear();
  point.clear();
  for (const auto& [k, p] : rm)
    if (std::abs(p.coeff) > cut) radial.push_back(p);
  for (const auto& [k, p] : pm)
    if (std::abs(p.coeff) > cut) point.push_back(p);
}

double BoundaryDistribution::max_coeff() const {
  double mx = 0.0;
  for (const auto& p : radial) mx = std::max(mx, std::abs(p.coeff));
  for (const auto& p : point) mx = std::max(mx, std::abs(p.coeff));
  return mx;
}

bool BoundaryDistribution::is_zero(double tol) const {
  return max_coeff() <= tol;
}

BoundaryDistribution operator*(cplx f, BoundaryDistribution d) {
  d *= f;
  return d;
}

BoundaryDistribution operator+(BoundaryDistribution a, const BoundaryDistribution& b) {
  a += b;
  return a;
}

BoundaryDistribution e0_times_left(BoundaryDistribution d) {
  for (auto& p : d.radial) {
    if (p.e0) {
      p.e0 = false;
      p.coeff = -p.coeff;  // e0 e0 = -1
    } else {
      p.e0 = true;
    }
  }
  for (auto& p : d.point) {
    if (p.e0) {
      p.e0 = false;
      p.coeff = -p.coeff;
    } else {
      p.e0 = true;
    }
  }
  return d;
}

bool approx_equal(const BoundaryDistribution& a, const BoundaryDistribution& b, double tol) {
  BoundaryDistribution x = a, y = b;
  x.normalize();
  y.normalize();
  const double scale = std::max({1.0, x.max_coeff(), y.max_coeff()});
  std::map<std::tuple<bool, bool, int, long long>, cplx> rm;
  for (const auto& p : x.radial) rm[{p.e0, p.omega, p.kappa, beta_key(p.beta)}] += p.coeff;
  for (const auto& p : y.radial) rm[{p.e0, p.omega, p.kappa, beta_key(p.beta)}] -= p.coeff;
  for (const auto& [k, c] : rm)
    if (std::abs(c) > tol * scale) return false;
  std::map<std::tuple<bool, bool, int>, cplx> pm;
  for (const auto& p : x.point) pm[{p.e0, p.dirac_kind, p.l}] += p.coeff;
  for (const auto& p : y.point) pm[{p.e0, p.dirac_kind, p.l}] -= p.coeff;
  for (const auto& [k, c] : pm)
    if (std::abs(c) > tol * scale) return false;
  return true;
}

BoundaryDistribution make_normalized(int m, Family f, double lambda) {
  BoundaryDistribution d(m);
  if (f == Family::T) {
    const double t = 0.5 * (lambda + m);
    if (near_int(t) && std::round(t) <= 0.0) {
      const int l = static_cast<int>(-std::round(t));
      PointSupportPiece p;
      p.coeff = std::pow(kPi, 0.5 * m - l) / (std::pow(2.0, 2 * l) * std::tgamma(0.5 * m + l));
      p.dirac_kind = false;
      p.l = l;
      d.point.push_back(p);
      return d;
    }
    RadialPiece p;
    p.coeff = pow_pi(t) / std::tgamma(t);
    p.beta = lambda;
    d.radial.push_back(p);
    return d;
  }
  const double u = 0.5 * (lambda + m + 1);
  if (near_int(u) && std::round(u) <= 0.0) {
    const int l = static_cast<int>(-std::round(u));
    PointSupportPiece p;
    p.coeff = -std::pow(kPi, 0.5 * m - l) / (std::pow(2.0, 2 * l + 1) * std::tgamma(0.5 * m + l + 1));
    p.dirac_kind = true;
    p.l = l;
    d.point.push_back(p);
    return d;
  }
  RadialPiece p;
  p.coeff = pow_pi(u) / std::tgamma(u);
  p.beta = lambda;
  p.omega = true;
  d.radial.push_back(p);
  return d;
}

PQConstants pq_constants(int m, int n) {
  if (n < 0) throw std::invalid_argument("pq_constants: n >= 0 required");
  double p = -1.0 / (std::pow(2.0, m - 1) * std::pow(kPi, m));
  double q = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i % 2 == 0) {  // (p_{2j}, q_{2j}) -> (p_{2j+1}, q_{2j+1})
      const int j = i / 2;
      const double pn = -p / (2.0 * kPi);
      const double qn = -(q - p / (m + 2.0 * j)) / (2.0 * kPi);
      p = pn;
      q = qn;
    } else {  // (p_{2j+1}, q_{2j+1}) -> (p_{2j+2}, q_{2j+2})
      const int two_j2 = i + 1;
      const double pn = p / two_j2;
      const double qn = (q - p / two_j2) / two_j2;
      p = pn;
      q = qn;
    }
  }
  return {n, p, q};
}

BoundaryDistribution log_kernel(int m, int idx) {
  const int n = idx - m;
  if (n < 0) throw std::invalid_argument("log_kernel: index below m");
  const PQConstants pq = pq_constants(m, n);
  BoundaryDistribution d(m);
  double base;
  bool omega;
  if (n % 2 == 0) {
    base = pow_pi(0.5 * (m + n)) / std::tgamma(0.5 * (m + n));
    omega = false;
  } else {
    base = pow_pi(0.5 * (m + n + 1)) / std::tgamma(0.5 * (m + n + 1));
    omega = true;
  }
  RadialPiece lnp;
  lnp.coeff = pq.p * base;
  lnp.kappa = 1;
  lnp.beta = n;
  lnp.omega = omega;
  d.radial.push_back(lnp);
  RadialPiece cp;
  cp.coeff = pq.q * base;
  cp.kappa = 0;
  cp.beta = n;
  cp.omega = omega;
  d.radial.push_back(cp);
  d.normalize();
  return d;
}

BoundaryDistribution dirac_power_kernel(int m, double mu) {
  if (near_int(mu)) {
    const long n = std::llround(mu);
    if (m % 2 == 0 && n <= -m) return log_kernel(m, static_cast<int>(-n));
    if (((n % 2) + 2) % 2 == 0) {
      const double c =
          std::pow(2.0, double(n)) * std::tgamma(0.5 * (m + n)) / pow_pi(0.5 * (m - n));
      return cplx(c) * make_normalized(m, Family::T, double(-m - n));
    }
    const double c =
        std::pow(2.0, double(n)) * std::tgamma(0.5 * (m + n + 1)) / pow_pi(0.5 * (m - n + 1));
    return cplx(-c) * make_normalized(m, Family::U, double(-m - n));
  }
  const cplx phase(std::cos(kPi * mu), std::sin(kPi * mu));
  const cplx cT = 0.5 * (1.0 + phase) * std::pow(2.0, mu) * std::tgamma(0.5 * (m + mu)) /
                  pow_pi(0.5 * (m - mu));
  const cplx cU = -0.5 * (1.0 - phase) * std::pow(2.0, mu) * std::tgamma(0.5 * (m + mu + 1)) /
                  pow_pi(0.5 * (m - mu + 1));
  auto d = cT * make_normalized(m, Family::T, -m - mu);
  d += cU * make_normalized(m, Family::U, -m - mu);
  return d;
}

BoundaryDistribution hilbert_power_kernel(int m, double mu) {
  if (near_int(mu)) {
    const long n = std::llround(mu);
    if (m % 2 == 1 && n <= -m) return log_kernel(m, static_cast<int>(-n));
    if (((n % 2) + 2) % 2 == 1) {
      const double c =
          std::pow(2.0, double(n)) * std::tgamma(0.5 * (m + n)) / pow_pi(0.5 * (m - n));
      return cplx(c) * make_normalized(m, Family::T, double(-m - n));
    }
    const double c =
        std::pow(2.0, double(n)) * std::tgamma(0.5 * (m + n + 1)) / pow_pi(0.5 * (m - n + 1));
    return cplx(-c) * make_normalized(m, Family::U, double(-m - n));
  }
  const cplx phase(std::cos(kPi * mu), std::sin(kPi * mu));
  const cplx cT = 0.5 * (1.0 - phase) * std::pow(2.0, mu) * std::tgamma(0.5 * (m + mu)) /
                  pow_pi(0.5 * (m - mu));
  const cplx cU = -0.5 * (1.0 + phase) * std::pow(2.0, mu) * std::tgamma(0.5 * (m + mu + 1)) /
                  pow_pi(0.5 * (m - mu + 1));
  auto d = cT * make_normalized(m, Family::T, -m - mu);
  d += cU * make_normalized(m, Family::U, -m - mu);
  return d;
}

BoundaryDistribution boundary_value(int m, Series s, int k, Side side) {
  const bool minus = (side == Side::minus);
  const double msign = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^m
  if (s == Series::c) {
    auto av = boundary_value(m, Series::a, k, side);
    auto bv = boundary_value(m, Series::b, k, side);
    av *= cplx(0.5);
    auto eb = e0_times_left(std::move(bv));
    eb *= cplx(-0.5);  // bar(e0)/2 = -e0/2
    av += eb;
    return av;
  }
  if (s == Series::a) {
    if (k <= -1) {
      if ((-k) % 2 == 1) {  // a_{-2l-1} = dirac^{2l} delta; lower side negates
        const int l = (-k - 1) / 2;
        auto d = dirac_power_kernel(m, 2.0 * l);
        if (minus) d *= cplx(-1.0);
        return d;
      }
      const int l = -k / 2;  // a_{-2l} = -dirac^{2l-1} H; sides equal
      auto d = hilbert_power_kernel(m, 2.0 * l - 1.0);
      d *= cplx(-1.0);
      return d;
    }
    if (k % 2 == 0) {  // a_{2k'}; sides equal
      const int kp = k / 2;
      if (m % 2 == 1 && k >= m - 1) {
        auto d = log_kernel(m, k + 1);  // -F_{k+1}
        d *= cplx(-1.0);
        return d;
      }
      const double c = -std::pow(2.0, -(2 * kp + 1)) * std::tgamma(0.5 * (m - 2 * kp - 1)) /
                       pow_pi(0.5 * (m + 2 * kp + 1));
      return cplx(c) * make_normalized(m, Family::T, double(-m + 2 * kp + 1));
    }
    const int kp = (k + 1) / 2;  // a_{2k'-1}; lower side carries (-1)^m
    if (m % 2 == 0 && k >= m - 1) {
      return log_kernel(m, k + 1);  // +E_{k+1}, sides equal
    }
    const double c = std::pow(2.0, -2 * kp) * std::tgamma(0.5 * (m - 2 * kp)) /
                     pow_pi(0.5 * (m + 2 * kp));
    auto d = cplx(c) * make_normalized(m, Family::T, double(-m + 2 * kp));
    if (minus) d *= cplx(msign);
    return d;
  }
  // Series::b
  if (k <= -1) {
    if ((-k) % 2 == 1) {  // b_{-2l-1} = dirac^{2l} H; sides equal
      const int l = (-k - 1) / 2;
      return hilbert_power_kernel(m, 2.0 * l);
    }
    const int l = -k / 2;  // b_{-2l} = -dirac^{2l-1} delta; lower side negates
    auto d = dirac_power_kernel(m, 2.0 * l - 1.0);
    d *= cplx(-1.0);
    if (minus) d *= cplx(-1.0);
    return d;
  }
  if (k % 2 == 0) {  // b_{2k'}; lower side carries (-1)^m
    const int kp = k / 2;
    if (m % 2 == 0 && k >= m) {
      auto d = log_kernel(m, k + 1);  // -E_{k+1}, sides equal
      d *= cplx(-1.0);
      return d;
    }
    const double c = std::pow(2.0, -(2 * kp + 1)) * std::tgamma(0.5 * (m - 2 * kp)) /
                     pow_pi(0.5 * (m + 2 * kp + 2));
    auto d = cplx(c) * make_normalized(m, Family::U, double(-m + 2 * kp + 1));
    if (minus) d *= cplx(msign);
    return d;
  }
  const int kp = (k + 1) / 2;  // b_{2k'-1}; sides equal
  if (m % 2 == 1 && k >= m) {
    return log_kernel(m, k + 1);  // +F_{k+1}
  }
  const double c = -std::pow(2.0, -2 * kp) * std::tgamma(0.5 * (m - 2 * kp + 1)) /
                   pow_pi(0.5 * (m + 2 * kp + 1));
  return cplx(c) * make_normalized(m, Family::U, double(-m + 2 * kp));
}

GaussPolyTestFunction GaussPolyTestFunction::gaussian(int m) {
  GaussPolyTestFunction f(m);
  f.add_term(std::vector<int>(m, 0), Multivector::scalar(m, 1.0));
  f.label = "exp(-r^2)";
  return f;
}

void GaussPolyTestFunction::add_term(const std::vector<int>& alpha, const Multivector& c) {
  auto it = terms_.find(alpha);
  if (it == terms_.end())
    terms_.emplace(alpha, c);
  else
    it->second += c;
}

GaussPolyTestFunction GaussPolyTestFunction::mul_coord(int j) const {
  GaussPolyTestFunction r(m_);
  for (const auto& [a, c] : terms_) {
    auto b = a;
    b[j] += 1;
    r.add_term(b, c);
  }
  return r;
}

GaussPolyTestFunction GaussPolyTestFunction::mul_xvec() const {
  GaussPolyTestFunction r(m_);
  for (const auto& [a, c] : terms_) {
    for (int j = 0; j < m_; ++j) {
      auto b = a;
      b[j] += 1;
      r.add_term(b, Multivector::basis_vector(m_, j + 1) * c);
    }
  }
  return r;
}

GaussPolyTestFunction GaussPolyTestFunction::mul_left(const Multivector& c) const {
  GaussPolyTestFunction r(m_);
  for (const auto& [a, v] : terms_) r.add_term(a, c * v);
  return r;
}

GaussPolyTestFunction GaussPolyTestFunction::d(int j) const {
  GaussPolyTestFunction r(m_);
  for (const auto& [a, c] : terms_) {
    if (a[j] > 0) {
      auto b = a;
      b[j] -= 1;
      r.add_term(b, double(a[j]) * c);
    }
    auto b = a;
    b[j] += 1;
    r.add_term(b, -2.0 * c);  // envelope: d/dx_j e^{-r^2} = -2 x_j e^{-r^2}
  }
  return r;
}

GaussPolyTestFunction GaussPolyTestFunction::dirac() const {
  GaussPolyTestFunction r(m_);
  for (int j = 0; j < m_; ++j) {
    auto dj = d(j);
    const Multivector ej = Multivector::basis_vector(m_, j + 1);
    for (const auto& [a, c] : dj.terms_) r.add_term(a, ej * c);
  }
  return r;
}

GaussPolyTestFunction GaussPolyTestFunction::laplacian() const {
  GaussPolyTestFunction r(m_);
  for (int j = 0; j < m_; ++j) {
    auto dj = d(j).d(j);
    for (const auto& [a, c] : dj.terms_) r.add_term(a, c);
  }
  return r;
}

GaussPolyTestFunction GaussPolyTestFunction::operator*(double s) const {
  GaussPolyTestFunction r(m_);
  for (const auto& [a, c] : terms_) r.add_term(a, s * c);
  r.label = label;
  return r;
}

GaussPolyTestFunction GaussPolyTestFunction::operator+(const GaussPolyTestFunction& o) const {
  GaussPolyTestFunction r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term(a, c);
  return r;
}

Multivector GaussPolyTestFunction::eval(const std::vector<double>& xs) const {
  Multivector out(m_);
  double r2 = 0.0;
  for (double x : xs) r2 += x * x;
  const double env = std::exp(-r2);
  for (const auto& [a, c] : terms_) {
    double mono = env;
    for (int j = 0; j < m_; ++j)
      for (int t = 0; t < a[j]; ++t) mono *= xs[j];
    out += mono * c;
  }
  return out;
}

Multivector GaussPolyTestFunction::at_origin() const {
  auto it = terms_.find(std::vector<int>(m_, 0));
  if (it == terms_.end()) return Multivector(m_);
  return it->second;
}

ComplexMultivector pair(const BoundaryDistribution& T, const GaussPolyTestFunction& phi) {
  const int m = T.m;
  if (phi.m() != m) throw std::invalid_argument("pair: dimension mismatch");
  ComplexMultivector acc(m);
  for (const auto& rp : T.radial) {
    Multivector racc(m);
    for (const auto& [a, c] : phi.terms()) {
      int deg = 0;
      for (int aj : a) deg += aj;
      const double s = rp.beta + m - 1 + deg;
      if (!rp.omega) {
        const double mom = sphere_moment(m, a);
        if (mom == 0.0) continue;
        racc += (mom * radial_integral(s, rp.kappa)) * c;
      } else {
        for (int j = 0; j < m; ++j) {
          auto b = a;
          b[j] += 1;
          const double mom = sphere_moment(m, b);
          if (mom == 0.0) continue;
          racc += (mom * radial_integral(s, rp.kappa)) *
                  (Multivector::basis_vector(m, j + 1) * c);
        }
      }
    }
    if (rp.e0) racc = e0_times(racc);
    acc.add_scaled(rp.coeff.real(), rp.coeff.imag(), racc);
  }
  for (const auto& pp : T.point) {
    GaussPolyTestFunction cur = phi;
    Multivector val(m);
    if (!pp.dirac_kind) {
      for (int i = 0; i < pp.l; ++i) cur = cur.laplacian() * -1.0;
      val = cur.at_origin();
    } else {
      const int n = 2 * pp.l + 1;
      for (int i = 0; i < n; ++i) cur = cur.dirac();
      val = -cur.at_origin();  // <dirac^n delta, phi> = (-1)^n (dirac^n phi)(0), n odd
    }
    if (pp.e0) val = e0_times(val);
    acc.add_scaled(pp.coeff.real(), pp.coeff.imag(), val);
  }
  return acc;
}

namespace {

std::string fmt_coeff(cplx c) {
  std::ostringstream os;
  os.precision(10);
  if (std::fabs(c.imag()) < 1e-15 * std::max(1.0, std::abs(c))) {
    os << c.real();
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? " - " : " + ") << std::fabs(c.imag()) << "i)";
  }
  return os.str();
}

void append_piece(std::string& out, const std::string& body, cplx coeff) {
  const bool trivial = std::fabs(coeff.imag()) < 1e-15 && std::fabs(coeff.real() - 1.0) < 1e-12;
  std::string chunk = trivial ? body : fmt_coeff(coeff) + " * " + body;
  if (!out.empty()) out += "  +  ";
  out += chunk;
}

}  // namespace

std::string pretty(const BoundaryDistribution& d) {
  BoundaryDistribution n = d;
  n.normalize();
  std::string out;
  for (const auto& p : n.point) {
    std::string body;
    if (p.e0) body += "e0 * ";
    if (!p.dirac_kind) {
      if (p.l == 0)
        body += "delta";
      else
        body += "(-lap)^" + std::to_string(p.l) + " delta";
    } else {
      body += "dirac^" + std::to_string(2 * p.l + 1) + " delta";
    }
    append_piece(out, body, p.coeff);
  }
  for (const auto& p : n.radial) {
    std::string body;
    if (p.e0) body += "e0 * ";
    if (p.kappa == 1) body += "ln(r) * ";
    std::ostringstream bo;
    bo.precision(10);
    bo << "r^" << p.beta;
    body += bo.str();
    if (p.omega) body += " * omega";
    append_piece(out, body, p.coeff);
  }
  if (out.empty()) out = "0";
  return out;
}

std::vector<LemmaRow> lemma_check(int m, int kmax) {
  std::vector<LemmaRow> rows;
  std::vector<GaussPolyTestFunction> battery;
  battery.push_back(GaussPolyTestFunction::gaussian(m));
  battery.push_back(GaussPolyTestFunction::gaussian(m).mul_xvec());
  battery.push_back(GaussPolyTestFunction::gaussian(m).mul_coord(0));
  battery.push_back(GaussPolyTestFunction::gaussian(m) +
                    GaussPolyTestFunction::gaussian(m).mul_coord(0).mul_coord(0));

  const auto pair_minus_dirac = [&](const BoundaryDistribution& T,
                                    const GaussPolyTestFunction& phi) {
    // <-dirac T, phi> = sum_j e_j <T, d_j phi>
    ComplexMultivector out(m);
    for (int j = 0; j < m; ++j) {
      auto pj = pair(T, phi.d(j));
      const Multivector ej = Multivector::basis_vector(m, j + 1);
      out.re += ej * pj.re;
      out.im += ej * pj.im;
    }
    return out;
  };

  for (int k = 1; k <= kmax; ++k) {
    const struct {
      Series from, to;
      const char* tag;
    } pairs[2] = {{Series::a, Series::b, "a"}, {Series::b, Series::a, "b"}};
    for (const auto& pr : pairs) {
      for (Side side : {Side::plus, Side::minus}) {
        const auto Xk = boundary_value(m, pr.from, k, side);
        const auto Yk1 = boundary_value(m, pr.to, k - 1, side);
        double err = 0.0;
        for (const auto& phi : battery) {
          const auto lhs = pair_minus_dirac(Xk, phi);
          const auto rhs = pair(Yk1, phi);
          const double scale = std::max(1.0, rhs.max_abs());
          auto diff = lhs;
          diff.re -= rhs.re;
          diff.im -= rhs.im;
          err = std::max(err, diff.max_abs() / scale);
        }
        LemmaRow row;
        row.k = k;
        row.part = std::string(side == Side::plus ? "i:" : "ii:") + pr.tag;
        row.err = err;
        row.pass = err <= 1e-10;
        row.note = std::string("-dirac ") + pr.tag + "_k = " +
                   (pr.tag[0] == 'a' ? "b" : "a") + "_{k-1}, " +
                   (side == Side::plus ? "upper" : "lower") + " side";
        rows.push_back(row);
      }
    }

    // (iii)/(iv): convolution claims H*a_k = b_k etc., recorded as consistency
    // with the dirac^{-n} delta / dirac^{-n} H registry plus side factors.
    const int n = k + 1;
    const auto ap = boundary_value(m, Series::a, k, Side::plus);
    const auto bp = boundary_value(m, Series::b, k, Side::plus);
    const auto am = boundary_value(m, Series::a, k, Side::minus);
    const auto bm = boundary_value(m, Series::b, k, Side::minus);
    bool ok3;
    if (k % 2 == 1) {
      ok3 = approx_equal(ap, dirac_power_kernel(m, -double(n)), 1e-12) &&
            approx_equal(bp, hilbert_power_kernel(m, -double(n)), 1e-12);
    } else {
      ok3 = approx_equal(ap, cplx(-1.0) * hilbert_power_kernel(m, -double(n)), 1e-12) &&
            approx_equal(bp, cplx(-1.0) * dirac_power_kernel(m, -double(n)), 1e-12);
    }
    LemmaRow r3;
    r3.k = k;
    r3.part = "iii";
    r3.pass = ok3;
    r3.table_level = true;
    r3.err = 0.0;
    r3.note = "H*a_k^+ = b_k^+ via the negative-power kernel registry (table level)";
    rows.push_back(r3);

    const double msign = (m % 2 == 0) ? 1.0 : -1.0;
    const double ra = (k % 2 == 1) ? msign : 1.0;  // a_k^- / a_k^+
    const double rb = (k % 2 == 1) ? 1.0 : msign;  // b_k^- / b_k^+
    const bool ok4 = approx_equal(am, cplx(ra) * ap, 1e-12) &&
                     approx_equal(bm, cplx(rb) * bp, 1e-12);
    LemmaRow r4;
    r4.k = k;
    r4.part = "iv";
    r4.pass = ok4;
    r4.table_level = true;
    r4.err = 0.0;
    r4.note = "lower-side factors (-1)^m consistent with H*a_k^- = (-1)^m b_k^- (table level)";
    rows.push_back(r4);
  }
  return rows;
}

}  // namespace monopot
