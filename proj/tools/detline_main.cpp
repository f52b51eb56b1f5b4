// detline: run verification suites and sample the curvature grid.

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "detline/boundary_grassmannian.hpp"
#include "detline/chern_series.hpp"
#include "detline/interval_cp1.hpp"
#include "detline/report.hpp"

namespace {

using namespace detline;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

// "lo:hi"
std::pair<double, double> parse_range(const std::string& s) {
  const auto colon = s.find(':', 1);
  if (colon == std::string::npos) throw CLI::ValidationError("range", "expected LO:HI, got " + s);
  try {
    std::size_t used = 0;
    const double lo = std::stod(s.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(s);
    const std::string rest = s.substr(colon + 1);
    const double hi = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("range", "expected LO:HI, got " + s);
  }
}

// "re,im"
std::complex<double> parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    const std::string re = s.substr(0, comma);
    const double x = std::stod(re, &used);
    if (used != re.size()) throw std::invalid_argument(s);
    if (comma == std::string::npos) return {x, 0.0};
    const std::string im = s.substr(comma + 1);
    const double y = std::stod(im, &used);
    if (used != im.size()) throw std::invalid_argument(s);
    return {x, y};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--z", "expected RE,IM, got " + s);
  }
}

int cmd_verify(const std::string& suite_name, std::uint64_t seed, const std::string& json_path,
               double fd_step) {
  const auto suite = report::parse_suite(suite_name);
  if (!suite) {
    std::cerr << "unknown suite '" << suite_name << "' (cp1, grassmannian, detline, chern, all)\n";
    return kExitUsage;
  }
  const report::ReportDocument doc = report::run_suite(*suite, {seed, fd_step});
  for (const auto& c : doc.cases)
    std::cout << report::to_string(c.status) << "  " << c.name << '\n';
  std::cout << "suite=" << doc.suite << " seed=" << doc.seed
            << " pass=" << doc.count(report::Status::Pass)
            << " fail=" << doc.count(report::Status::Fail)
            << " skip=" << doc.count(report::Status::Skip) << '\n';
  if (!json_path.empty()) report::write_file_atomic(json_path, doc.to_json());
  return doc.all_passed() ? kExitPass : kExitFail;
}

int cmd_grid(const std::string& re, const std::string& im, int n, const std::string& csv_path,
             const std::string& json_path, double fd_step) {
  report::GridSpec spec;
  std::tie(spec.re_min, spec.re_max) = parse_range(re);
  std::tie(spec.im_min, spec.im_max) = parse_range(im);
  spec.n = n;
  spec.validate();
  specfun::FdStencil st;
  st.step = fd_step;
  const report::GridResult r = report::curvature_grid(spec, st);
  if (!json_path.empty()) {
    report::write_file_atomic(json_path, report::grid_to_json(r, spec));
  } else if (!csv_path.empty()) {
    report::write_file_atomic(csv_path, report::grid_to_csv(r));
  } else {
    std::cout << report::grid_to_csv(r);
  }
  std::cerr << "rows=" << r.rows.size() << " skipped=" << r.skipped
            << " max_rel_err_fd=" << num(r.max_rel_err_fd)
            << " max_rel_err_pdpdp=" << num(r.max_rel_err_pdpdp) << '\n';
  for (const auto& row : r.rows)
    if (row.status == report::Status::Fail) return kExitFail;
  return kExitPass;
}

int cmd_zeta_det(const std::string& z_text) {
  const std::complex<double> z = parse_complex(z_text);
  const double alpha = cp1::alpha_of(z).alpha;
  std::cout << "closed=" << num(cp1::zeta_det_closed(z)) << '\n'
            << "spectral=" << num(cp1::zeta_det_spectral(z)) << '\n'
            << "alpha=" << num(alpha) << '\n';
  return kExitPass;
}

int cmd_eta(double a) {
  const double eta = grassmannian::eta_invariant_spectral(a);
  std::cout << "eta=" << num(eta) << '\n' << "expected=" << num(1.0 - 2.0 * a) << '\n';
  return std::abs(eta - (1.0 - 2.0 * a)) <= 1e-10 ? kExitPass : kExitFail;
}

int cmd_grr(long m) {
  const auto integrand = chern::grr_integrand(m);
  const auto c1 = chern::grr_c1_coefficient(m);
  const chern::Rational expected(6 * m * m + 6 * m + 1, 12);
  std::cout << "xi1=" << chern::to_string(integrand[1]) << '\n'
            << "xi2=" << chern::to_string(c1) << '\n'
            << "expected_xi2=" << chern::to_string(expected) << '\n';
  return c1 == expected && integrand[2] == c1 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinant-line and eta-invariant verification lab"};
  app.require_subcommand(1);

  std::string suite, json_path, csv_path, re = "-0.5:0.5", im = "-0.5:0.5", z_text;
  std::uint64_t seed = 7;
  int n = 25;
  double a = 0.5;
  long m = 0;

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", suite, "cp1 | grassmannian | detline | chern | all")->required();
  verify->add_option("--seed", seed, "Seed for the randomized cases");
  verify->add_option("--json", json_path, "Write the JSON report to PATH");

  auto* grid = app.add_subcommand("curvature-grid", "Sample the CP1 curvature on a grid");
  grid->add_option("--re", re, "Real range LO:HI");
  grid->add_option("--im", im, "Imaginary range LO:HI");
  grid->add_option("--n", n, "Points per axis")->check(CLI::Range(2, 10000));
  auto* csv_opt = grid->add_option("--csv", csv_path, "Write CSV to PATH");
  grid->add_option("--json", json_path, "Write JSON to PATH")->excludes(csv_opt);

  auto* zeta = app.add_subcommand("zeta-det", "Zeta determinant at a chart point");
  zeta->add_option("--z", z_text, "Chart point RE,IM")->required();

  auto* eta = app.add_subcommand("eta", "Eta invariant of the spectrum {n + a}");
  eta->add_option("--a", a, "Offset in (0, 1)")->required();

  auto* grr = app.add_subcommand("grr", "Degree-two GRR coefficient");
  grr->add_option("--m", m, "Line bundle degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    const double fd_step = report::fd_step_from_env();
    if (*verify) return cmd_verify(suite, seed, json_path, fd_step);
    if (*grid) return cmd_grid(re, im, n, csv_path, json_path, fd_step);
    if (*zeta) return cmd_zeta_det(z_text);
    if (*eta) return cmd_eta(a);
    if (*grr) return cmd_grr(m);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == "DomainError" ? kExitUsage : kExitFail;
  }
  return kExitUsage;
}
