#pragma once

// Verification runner behind the `detline` CLI: suites of invariant checks,
// curvature grids, and their JSON / CSV renderings.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "detline/specfun.hpp"

namespace detline::report {

inline constexpr std::string_view kSchema = "detline-lab/1";

enum class Status { Pass, Fail, Skip };
std::string_view to_string(Status s);

/// Observed/expected payload: absent, a number, or an exact value rendered
/// as a string (rationals).
using Value = std::variant<std::monostate, double, std::string>;

struct Case {
  std::string name;
  Status status = Status::Skip;
  Value observed;
  Value expected;
  std::optional<double> tolerance;
  std::string paper_anchor;  // label of the identity being checked, or "plumbing"
  std::string detail;
};

/// pass iff |observed - expected| <= tolerance.
Case numeric_case(std::string name, double observed, double expected, double tolerance,
                  std::string anchor);
/// pass iff the exact renderings agree.
Case exact_case(std::string name, std::string observed, std::string expected, std::string anchor);
/// pass iff `ok`; no numeric payload.
Case check_case(std::string name, bool ok, std::string anchor, std::string detail = {});

struct ReportDocument {
  std::string suite;
  std::vector<Case> cases;
  std::string started_at;
  std::string finished_at;
  std::uint64_t seed = 0;

  int count(Status s) const;
  bool all_passed() const { return count(Status::Fail) == 0; }
  std::string to_json() const;
};

enum class SuiteName { Cp1, Grassmannian, DetLine, Chern, All };
std::optional<SuiteName> parse_suite(std::string_view name);
std::string_view to_string(SuiteName s);

struct RunOptions {
  std::uint64_t seed = 7;
  double fd_step = specfun::kDefaultFdStep;
};

/// Every invariant of the named module(s), deterministic under the seed.
ReportDocument run_suite(SuiteName name, const RunOptions& opts);

// Individual suites, appended to `out`.
void run_cp1_suite(std::vector<Case>& out, const RunOptions& opts);
void run_grassmannian_suite(std::vector<Case>& out, const RunOptions& opts);
void run_detline_suite(std::vector<Case>& out, const RunOptions& opts);
void run_chern_suite(std::vector<Case>& out, const RunOptions& opts);

struct Exclusion {
  std::complex<double> center;
  double radius = 0.0;
};

struct GridSpec {
  double re_min = -0.5, re_max = 0.5;
  double im_min = -0.5, im_max = 0.5;
  int n = 5;  // points per axis
  std::vector<Exclusion> exclusion{{{-1.0, 0.0}, 0.2}};

  void validate() const;
};

struct GridRow {
  double re = 0.0, im = 0.0;
  double k_fd = 0.0, k_closed = 0.0, k_pdpdp = 0.0;
  double rel_err_fd = 0.0, rel_err_pdpdp = 0.0;
  Status status = Status::Pass;
};

struct GridResult {
  std::vector<GridRow> rows;
  double max_rel_err_fd = 0.0;
  double max_rel_err_pdpdp = 0.0;
  int skipped = 0;
};

/// Samples the Quillen curvature by finite differences, the closed-form
/// Kahler coefficient 1/(1+|z|^2)^2 and Tr(P dP dP) over the grid, row-major
/// in the imaginary part. Points in an exclusion zone or with a degenerate
/// stencil are marked skip.
GridResult curvature_grid(const GridSpec& g, const specfun::FdStencil& st = {});

inline constexpr std::string_view kCsvHeader =
    "re,im,k_fd,k_closed,k_pdpdp,rel_err_fd,rel_err_pdpdp,status";

std::string grid_to_csv(const GridResult& r);
std::string grid_to_json(const GridResult& r, const GridSpec& g);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Finite-difference step: DETLINE_FD_STEP if set and positive, else the default.
double fd_step_from_env();

std::string utc_timestamp();

}  // namespace detline::report
