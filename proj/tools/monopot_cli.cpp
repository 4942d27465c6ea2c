// monopot: evaluate the potential chain, print boundary-kernel tables, run
// verification suites, and check hyperfunction jump representations.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or input
// error.  stdout carries the payload, stderr the diagnostics.

#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monopot/algebra.hpp"
#include "monopot/distributions.hpp"
#include "monopot/hyperfunctions.hpp"
#include "monopot/potentials.hpp"
#include "monopot/special_functions.hpp"
#include "monopot/term_algebra.hpp"

namespace {

using json = nlohmann::json;
using namespace monopot;

constexpr const char* kVersion = "0.1.0";

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, ',')) out.push_back(trim(cur));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_double(const std::string& s, const std::string& where) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::runtime_error(where + ": not a number: '" + s + "'");
  }
  if (used != s.size()) throw std::runtime_error(where + ": not a number: '" + s + "'");
  return v;
}

// CSV point file: header "x0,x1,...,xm", one point per row.
std::vector<PointUpperLower> read_points(const std::string& path, int m) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open points file '" + path + "'");
  std::vector<PointUpperLower> pts;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto cells = split_csv(t);
    const std::string where = path + ":" + std::to_string(lineno);
    if (!header_seen) {
      if (static_cast<int>(cells.size()) != m + 1)
        throw std::runtime_error(where + ": header must have " + std::to_string(m + 1) +
                                 " columns x0,...,x" + std::to_string(m) + " for m=" +
                                 std::to_string(m));
      for (int j = 0; j <= m; ++j) {
        const std::string want = "x" + std::to_string(j);
        if (cells[j] != want)
          throw std::runtime_error(where + ": bad header column " + std::to_string(j + 1) +
                                   ": expected '" + want + "', got '" + cells[j] + "'");
      }
      header_seen = true;
      continue;
    }
    if (static_cast<int>(cells.size()) != m + 1)
      throw std::runtime_error(where + ": expected " + std::to_string(m + 1) +
                               " values, got " + std::to_string(cells.size()));
    PointUpperLower p;
    p.x0 = parse_double(cells[0], where);
    p.xs.resize(m);
    for (int j = 0; j < m; ++j) p.xs[j] = parse_double(cells[j + 1], where);
    pts.push_back(std::move(p));
  }
  if (!header_seen) throw std::runtime_error(path + ": missing header row x0,...,x" + std::to_string(m));
  return pts;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json mv_to_json(const Multivector& v, double drop = 0.0) {
  json o = json::object();
  for (unsigned i = 0; i < v.size(); ++i)
    if (std::fabs(v[i]) > drop) o[blade_label(i)] = v[i];
  return o;
}

json pieces_to_json(const BoundaryDistribution& d) {
  json o = json::object();
  o["radial"] = json::array();
  o["point"] = json::array();
  for (const auto& p : d.radial) {
    o["radial"].push_back({{"coeff_re", p.coeff.real()},
                           {"coeff_im", p.coeff.imag()},
                           {"kappa", p.kappa},
                           {"beta", p.beta},
                           {"omega", p.omega},
                           {"e0", p.e0}});
  }
  for (const auto& p : d.point) {
    o["point"].push_back({{"coeff_re", p.coeff.real()},
                          {"coeff_im", p.coeff.imag()},
                          {"kind", p.dirac_kind ? "dirac_odd" : "laplace"},
                          {"l", p.l},
                          {"e0", p.e0}});
  }
  return o;
}

// --- eval ------------------------------------------------------------------

// One inline --point argument: m+1 comma-separated coordinates x0,x1,...,xm.
PointUpperLower parse_inline_point(const std::string& text, int m) {
  const auto parts = split_csv(text);
  if (static_cast<int>(parts.size()) != m + 1)
    throw std::runtime_error("--point " + text + ": expected " + std::to_string(m + 1) +
                             " coordinates x0,x1,...,xm");
  PointUpperLower p;
  p.x0 = parse_double(parts[0], "--point " + text);
  for (int j = 1; j <= m; ++j)
    p.xs.push_back(parse_double(parts[j], "--point " + text));
  return p;
}

int run_eval(int m, const std::string& pot_str, const std::string& points_path,
             const std::vector<std::string>& inline_points, int threads,
             const std::string& format) {
  const PotentialId id = parse_potential_id(pot_str);
  if (!evaluable(m, id))
    throw std::runtime_error("potential " + to_string(id) + " is not evaluable at m=" +
                             std::to_string(m));
  std::vector<PointUpperLower> pts;
  if (!points_path.empty()) pts = read_points(points_path, m);
  for (const auto& text : inline_points) pts.push_back(parse_inline_point(text, m));
  if (pts.empty()) throw std::runtime_error("eval: no points (use --points or --point)");
  const auto vals = eval_potential_many(m, id, pts, resolve_threads(threads));

  if (format == "json") {
    json out;
    out["schema"] = 1;
    out["m"] = m;
    out["potential"] = to_string(id);
    out["points"] = json::array();
    for (size_t i = 0; i < pts.size(); ++i) {
      json row;
      row["x0"] = pts[i].x0;
      row["x"] = pts[i].xs;
      row["value"] = mv_to_json(vals[i]);
      out["points"].push_back(row);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  // csv: coordinate columns, then every blade that is nonzero somewhere
  std::vector<unsigned> blades;
  if (!vals.empty()) {
    for (unsigned b = 0; b < vals[0].size(); ++b) {
      bool used = false;
      for (const auto& v : vals)
        if (v[b] != 0.0) {
          used = true;
          break;
        }
      if (used) blades.push_back(b);
    }
  }
  if (blades.empty()) blades.push_back(0);
  std::ostringstream head;
  for (int j = 0; j <= m; ++j) head << (j ? "," : "") << "x" << j;
  for (unsigned b : blades) head << "," << blade_label(b);
  std::cout << head.str() << "\n";
  for (size_t i = 0; i < pts.size(); ++i) {
    std::ostringstream row;
    row << fmt(pts[i].x0);
    for (double x : pts[i].xs) row << "," << fmt(x);
    for (unsigned b : blades) row << "," << fmt(vals[i][b]);
    std::cout << row.str() << "\n";
  }
  return 0;
}

// --- table -----------------------------------------------------------------

std::pair<int, int> parse_k_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const double v = parse_double(s, "--k");
    const int k = static_cast<int>(std::lround(v));
    if (k != v) throw std::runtime_error("--k: integer required");
    return {k, k};
  }
  const int lo = static_cast<int>(parse_double(s.substr(0, dots), "--k"));
  const int hi = static_cast<int>(parse_double(s.substr(dots + 2), "--k"));
  if (lo > hi) throw std::runtime_error("--k: empty range " + s);
  return {lo, hi};
}

int run_table(int m, const std::string& series_str, const std::string& k_str,
              const std::string& side_str, const std::string& format) {
  std::vector<Series> series;
  if (series_str == "a")
    series = {Series::a};
  else if (series_str == "b")
    series = {Series::b};
  else if (series_str == "c")
    series = {Series::c};
  else if (series_str == "all")
    series = {Series::a, Series::b, Series::c};
  else
    throw std::runtime_error("--series must be a, b, c or all");
  std::vector<Side> sides;
  if (side_str == "plus")
    sides = {Side::plus};
  else if (side_str == "minus")
    sides = {Side::minus};
  else if (side_str == "both")
    sides = {Side::plus, Side::minus};
  else
    throw std::runtime_error("--side must be plus, minus or both");
  const auto [klo, khi] = parse_k_range(k_str);

  const auto name_of = [](Series s) {
    return s == Series::a ? "a" : s == Series::b ? "b" : "c";
  };

  json rows = json::array();
  for (int k = klo; k <= khi; ++k) {
    for (Series s : series) {
      for (Side side : sides) {
        const auto d = boundary_value(m, s, k, side);
        const std::string tag = std::string(name_of(s)) + "_" + std::to_string(k) +
                                (side == Side::plus ? "^+" : "^-");
        if (format == "json") {
          json row;
          row["series"] = name_of(s);
          row["k"] = k;
          row["side"] = side == Side::plus ? "plus" : "minus";
          row["pretty"] = pretty(d);
          row["pieces"] = pieces_to_json(d);
          rows.push_back(row);
        } else {
          std::cout << tag << " = " << pretty(d) << "\n";
        }
      }
    }
  }
  if (format == "json") {
    json out;
    out["schema"] = 1;
    out["m"] = m;
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

// --- verify ----------------------------------------------------------------

struct Check {
  std::string name;
  bool pass = false;
  double err = 0.0;
  std::string note;
};

std::vector<PointUpperLower> sample_points(int m, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<PointUpperLower> pts;
  while (static_cast<int>(pts.size()) < count) {
    PointUpperLower p;
    p.x0 = unit(rng) * 2.0;
    p.xs.resize(m);
    for (int j = 0; j < m; ++j) p.xs[j] = unit(rng) * 2.0;
    const double ax = p.abs();
    if (ax < 0.5 || ax > 2.0 || std::fabs(p.x0) < 0.1) continue;
    pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<Check> suite_monogenic(int m, int points) {
  std::vector<Check> checks;
  {
    Check c;
    c.name = "symbolic D C:-1 == 0";
    const TermSum dk = apply_CR(TermSum::cauchy_kernel_unnormalized(m), false);
    c.pass = dk.terms().empty();
    c.err = 0.0;
    for (const auto& t : dk.terms()) c.err = std::max(c.err, std::fabs(t.c));
    c.note = "exact term-sum cancellation";
    checks.push_back(c);
  }
  const auto pts = sample_points(m, points, 20250815u);
  std::vector<PotentialId> ids;
  for (int k = -1; k >= -5; --k) ids.push_back({Component::C, k});
  for (int k = 0; k <= 2; ++k) {
    const PotentialId id{Component::C, k};
    if (evaluable(m, id)) ids.push_back(id);
  }
  for (const auto& id : ids) {
    const auto rep = fd_dirac_residual(m, id, pts, 1e-4);
    Check c;
    c.name = "fd D " + to_string(id);
    c.err = rep.max_residual;
    c.pass = rep.max_residual <= 1e-5;
    c.note = "central differences, h=1e-4, " + std::to_string(rep.points) + " points";
    checks.push_back(c);
  }
  return checks;
}

std::vector<Check> suite_pairs(int m) {
  std::vector<Check> checks;
  const auto g = GaussPolyTestFunction::gaussian(m);
  const auto xg = g.mul_xvec();
  double terr = 0.0, uerr = 0.0;
  for (double lam = -m - 4.0; lam <= 4.0 + 1e-9; lam += 0.5) {
    const auto tstar = make_normalized(m, Family::T, lam);
    const auto tv = pair(tstar, g);
    const double twant = 0.5 * sigma(m) * std::pow(std::numbers::pi, 0.5 * (lam + m));
    terr = std::max(terr, std::max(std::fabs(tv.re[0u] - twant), tv.im.max_abs()));

    const auto ustar = make_normalized(m, Family::U, lam);
    const auto uv = pair(ustar, xg);
    const double uwant = -0.5 * sigma(m) * std::pow(std::numbers::pi, 0.5 * (lam + m + 1));
    uerr = std::max(uerr, std::max(std::fabs(uv.re[0u] - uwant), uv.im.max_abs()));
  }
  Check ct;
  ct.name = "<T*_lambda, exp(-r^2)> entire in lambda";
  ct.err = terr;
  ct.pass = terr <= 1e-10;
  ct.note = "lambda in {-m-4, ..., 4} step 1/2, incl. pole slots";
  checks.push_back(ct);
  Check cu;
  cu.name = "<U*_lambda, xvec exp(-r^2)> entire in lambda";
  cu.err = uerr;
  cu.pass = uerr <= 1e-10;
  cu.note = "lambda in {-m-4, ..., 4} step 1/2, incl. pole slots";
  checks.push_back(cu);
  return checks;
}

std::vector<Check> suite_lemma(int m, int kmax) {
  std::vector<Check> checks;
  for (const auto& row : lemma_check(m, kmax)) {
    Check c;
    c.name = "lemma " + row.part + " k=" + std::to_string(row.k);
    c.pass = row.pass;
    c.err = row.err;
    c.note = row.note + (row.table_level ? " [table level]" : "");
    checks.push_back(c);
  }
  return checks;
}

int run_verify(int m, const std::string& suite, int kmax, int points, const std::string& format) {
  std::vector<Check> checks;
  if (suite == "monogenic" || suite == "all") {
    auto c = suite_monogenic(m, points);
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (suite == "pairs" || suite == "all") {
    auto c = suite_pairs(m);
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (suite == "lemma" || suite == "all") {
    auto c = suite_lemma(m, kmax);
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (checks.empty()) throw std::runtime_error("--suite must be monogenic, pairs, lemma or all");
  bool pass = true;
  for (const auto& c : checks) pass = pass && c.pass;
  if (format == "json") {
    json out;
    out["schema"] = 1;
    out["m"] = m;
    out["suite"] = suite;
    out["pass"] = pass;
    out["checks"] = json::array();
    for (const auto& c : checks)
      out["checks"].push_back(
          {{"name", c.name}, {"pass", c.pass}, {"err", c.err}, {"note", c.note}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : checks)
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  (err=" << c.err << ")\n";
    std::cout << (pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return pass ? 0 : 1;
}

// --- jump ------------------------------------------------------------------

int run_jump(int m, int n, std::vector<double> ladder, int order, double tol,
             int threads, const std::string& format) {
  QuadratureConfig cfg;
  if (!ladder.empty()) cfg.x0_ladder = std::move(ladder);
  if (order > 0) cfg.richardson_order = order;
  cfg.threads = threads;
  const JumpReport rep = jump_check(m, n, cfg, tol);
  if (format == "json") {
    std::cout << to_json(rep) << "\n";
  } else {
    std::cout << "jump report m=" << rep.m << " n=" << rep.n
              << (rep.applicable ? "" : " (not applicable: even dimension)")
              << (rep.checkable ? "" : " (not numerically checkable)") << "\n";
    if (!rep.note.empty()) std::cout << "  " << rep.note << "\n";
    for (const auto& row : rep.rows)
      std::cout << "  " << (row.pass ? "[PASS] " : "[FAIL] ") << row.kind << "  phi="
                << row.phi_label << "  rel_err=" << row.rel_err << "\n";
    std::cout << (rep.pass ? "jump check passed" : "JUMP CHECK FAILED") << "\n";
  }
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monopot: monogenic potential chain, boundary kernels and jump checks"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  int m = 3;

  auto* eval = app.add_subcommand("eval", "evaluate a potential at points");
  std::string pot = "C:-1", points_path, eval_format = "csv";
  std::vector<std::string> inline_points;
  int eval_threads = 0;
  eval->add_option("--m", m, "boundary dimension (2..12)")->required()->check(CLI::Range(2, 12));
  eval->add_option("--potential", pot, "potential id, e.g. C:-1, A:0, B:2")->required();
  auto* points_opt =
      eval->add_option("--points", points_path, "CSV file with header x0,x1,...,xm");
  eval->add_option("--point", inline_points, "inline point x0,x1,...,xm (repeatable)")
      ->take_all();
  eval->add_option("--threads", eval_threads, "worker threads (0: MONOPOT_THREADS or 1)");
  eval->add_option("--format", eval_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  (void)points_opt;

  auto* table = app.add_subcommand("table", "print distributional boundary values");
  std::string series = "all", krange = "-3..3", side = "plus", table_format = "text";
  table->add_option("--m", m, "boundary dimension (2..12)")->required()->check(CLI::Range(2, 12));
  table->add_option("--series", series, "a, b, c or all");
  table->add_option("--k", krange, "index or range, e.g. 2 or -3..3");
  table->add_option("--side", side, "plus, minus or both");
  table->add_option("--format", table_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all", verify_format = "json";
  int kmax = 3, points = 40;
  verify->add_option("--m", m, "boundary dimension (2..12)")->required()->check(CLI::Range(2, 12));
  verify->add_option("--suite", suite, "monogenic, pairs, lemma or all")
      ->check(CLI::IsMember({"monogenic", "pairs", "lemma", "all"}));
  verify->add_option("--kmax", kmax, "lemma depth")->check(CLI::Range(1, 8));
  verify->add_option("--points", points, "points per finite-difference check")
      ->check(CLI::Range(1, 100000));
  verify->add_option("--format", verify_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* jump = app.add_subcommand("jump", "check a hyperfunction jump representation");
  int n = 0, order = 0, jump_threads = 0;
  double tol = 5e-3;
  std::vector<double> ladder;
  std::string jump_format = "json";
  jump->add_option("--m", m, "boundary dimension (2 or 3 for numerics)")
      ->required()
      ->check(CLI::Range(2, 12));
  jump->add_option("--n", n, "distribution order: dirac^n delta / dirac^n H")->required();
  jump->add_option("--ladder", ladder, "x0 ladder, descending")->delimiter(',');
  jump->add_option("--order", order, "Richardson order (default from config)");
  jump->add_option("--tol", tol, "relative tolerance");
  jump->add_option("--threads", jump_threads, "worker threads (0: MONOPOT_THREADS or 1)");
  jump->add_option("--format", jump_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed())
      return run_eval(m, pot, points_path, inline_points, eval_threads, eval_format);
    if (table->parsed()) return run_table(m, series, krange, side, table_format);
    if (verify->parsed()) return run_verify(m, suite, kmax, points, verify_format);
    if (jump->parsed()) return run_jump(m, n, ladder, order, tol, jump_threads, jump_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
