#include "detline/report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <unistd.h>

#include "detline/errors.hpp"
#include "detline/interval_cp1.hpp"

namespace detline::report {

using json = nlohmann::ordered_json;

namespace {

json to_json_value(const Value& v) {
  if (std::holds_alternative<double>(v)) return std::get<double>(v);
  if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
  return nullptr;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "skip";
}

Case numeric_case(std::string name, double observed, double expected, double tolerance,
                  std::string anchor) {
  Case c;
  c.name = std::move(name);
  c.observed = observed;
  c.expected = expected;
  c.tolerance = tolerance;
  c.paper_anchor = std::move(anchor);
  // NaN compares false, so a non-finite observation fails
  c.status = std::abs(observed - expected) <= tolerance ? Status::Pass : Status::Fail;
  return c;
}

Case exact_case(std::string name, std::string observed, std::string expected, std::string anchor) {
  Case c;
  c.name = std::move(name);
  c.status = observed == expected ? Status::Pass : Status::Fail;
  c.observed = std::move(observed);
  c.expected = std::move(expected);
  c.paper_anchor = std::move(anchor);
  return c;
}

Case check_case(std::string name, bool ok, std::string anchor, std::string detail) {
  Case c;
  c.name = std::move(name);
  c.status = ok ? Status::Pass : Status::Fail;
  c.paper_anchor = std::move(anchor);
  c.detail = std::move(detail);
  return c;
}

int ReportDocument::count(Status s) const {
  int n = 0;
  for (const auto& c : cases)
    if (c.status == s) ++n;
  return n;
}

std::string ReportDocument::to_json() const {
  json doc;
  doc["schema"] = kSchema;
  doc["suite"] = suite;
  doc["seed"] = seed;
  doc["started_at"] = started_at;
  doc["finished_at"] = finished_at;
  doc["summary"] = {{"total", cases.size()},
                    {"pass", count(Status::Pass)},
                    {"fail", count(Status::Fail)},
                    {"skip", count(Status::Skip)}};
  json arr = json::array();
  for (const auto& c : cases) {
    json j;
    j["name"] = c.name;
    j["status"] = to_string(c.status);
    j["observed"] = to_json_value(c.observed);
    j["expected"] = to_json_value(c.expected);
    j["tolerance"] = c.tolerance ? json(*c.tolerance) : json(nullptr);
    j["paper_anchor"] = c.paper_anchor;
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  doc["cases"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::optional<SuiteName> parse_suite(std::string_view name) {
  if (name == "cp1") return SuiteName::Cp1;
  if (name == "grassmannian") return SuiteName::Grassmannian;
  if (name == "detline") return SuiteName::DetLine;
  if (name == "chern") return SuiteName::Chern;
  if (name == "all") return SuiteName::All;
  return std::nullopt;
}

std::string_view to_string(SuiteName s) {
  switch (s) {
    case SuiteName::Cp1: return "cp1";
    case SuiteName::Grassmannian: return "grassmannian";
    case SuiteName::DetLine: return "detline";
    case SuiteName::Chern: return "chern";
    case SuiteName::All: return "all";
  }
  return "all";
}

ReportDocument run_suite(SuiteName name, const RunOptions& opts) {
  ReportDocument doc;
  doc.suite = std::string(to_string(name));
  doc.seed = opts.seed;
  doc.started_at = utc_timestamp();
  const bool all = name == SuiteName::All;
  if (all || name == SuiteName::Cp1) run_cp1_suite(doc.cases, opts);
  if (all || name == SuiteName::Grassmannian) run_grassmannian_suite(doc.cases, opts);
  if (all || name == SuiteName::DetLine) run_detline_suite(doc.cases, opts);
  if (all || name == SuiteName::Chern) run_chern_suite(doc.cases, opts);
  doc.finished_at = utc_timestamp();
  return doc;
}

void GridSpec::validate() const {
  if (n < 2) throw DomainError("grid needs at least 2 points per axis");
  if (!(re_min <= re_max) || !(im_min <= im_max)) throw DomainError("grid ranges must be ordered");
  for (const auto& e : exclusion)
    if (!(e.radius > 0.0)) throw DomainError("exclusion radii must be positive");
}

GridResult curvature_grid(const GridSpec& g, const specfun::FdStencil& st) {
  g.validate();
  GridResult out;
  const double dre = (g.re_max - g.re_min) / (g.n - 1);
  const double dim = (g.im_max - g.im_min) / (g.n - 1);
  for (int j = 0; j < g.n; ++j) {
    for (int i = 0; i < g.n; ++i) {
      GridRow row;
      row.re = g.re_min + i * dre;
      row.im = g.im_min + j * dim;
      const std::complex<double> z(row.re, row.im);
      row.k_closed = 1.0 / std::pow(1.0 + std::norm(z), 2);
      row.k_pdpdp = cp1::kahler_form_2x2(z);
      row.rel_err_pdpdp = std::abs(row.k_pdpdp - row.k_closed) / row.k_closed;
      bool excluded = false;
      // Open discs; points on the rim, up to rounding of the grid, are sampled.
      for (const auto& e : g.exclusion)
        if (std::abs(z - e.center) < e.radius * (1.0 - 1e-12)) excluded = true;
      if (!excluded) {
        try {
          row.k_fd = cp1::quillen_curvature_fd(z, st);
        } catch (const DegenerateSpectrum&) {
          excluded = true;
        }
      }
      if (excluded) {
        row.status = Status::Skip;
        row.k_fd = std::nan("");
        row.rel_err_fd = std::nan("");
        ++out.skipped;
      } else {
        row.rel_err_fd = std::abs(row.k_fd - row.k_closed) / row.k_closed;
        row.status = row.rel_err_fd < 1e-4 && row.rel_err_pdpdp < 1e-4 ? Status::Pass
                                                                      : Status::Fail;
        out.max_rel_err_fd = std::max(out.max_rel_err_fd, row.rel_err_fd);
      }
      out.max_rel_err_pdpdp = std::max(out.max_rel_err_pdpdp, row.rel_err_pdpdp);
      out.rows.push_back(row);
    }
  }
  return out;
}

std::string grid_to_csv(const GridResult& r) {
  std::string s(kCsvHeader);
  s += '\n';
  for (const auto& row : r.rows) {
    for (double v : {row.re, row.im, row.k_fd, row.k_closed, row.k_pdpdp, row.rel_err_fd,
                     row.rel_err_pdpdp}) {
      s += format_double(v);
      s += ',';
    }
    s += to_string(row.status);
    s += '\n';
  }
  s += "# max_rel_err_fd=" + format_double(r.max_rel_err_fd) +
       " max_rel_err_pdpdp=" + format_double(r.max_rel_err_pdpdp) +
       " rows=" + std::to_string(r.rows.size()) + " skipped=" + std::to_string(r.skipped) + "\n";
  return s;
}

std::string grid_to_json(const GridResult& r, const GridSpec& g) {
  json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "curvature-grid";
  doc["grid"] = {{"re", {g.re_min, g.re_max}}, {"im", {g.im_min, g.im_max}}, {"n", g.n}};
  json rows = json::array();
  for (const auto& row : r.rows) {
    auto num = [](double v) { return std::isnan(v) ? json(nullptr) : json(v); };
    rows.push_back({{"re", row.re},
                    {"im", row.im},
                    {"k_fd", num(row.k_fd)},
                    {"k_closed", row.k_closed},
                    {"k_pdpdp", row.k_pdpdp},
                    {"rel_err_fd", num(row.rel_err_fd)},
                    {"rel_err_pdpdp", row.rel_err_pdpdp},
                    {"status", to_string(row.status)}});
  }
  doc["rows"] = std::move(rows);
  doc["summary"] = {{"max_rel_err_fd", r.max_rel_err_fd},
                    {"max_rel_err_pdpdp", r.max_rel_err_pdpdp},
                    {"rows", r.rows.size()},
                    {"skipped", r.skipped}};
  return doc.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open " + tmp.string() + " for writing");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!os) throw IoError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

double fd_step_from_env() {
  const char* raw = std::getenv("DETLINE_FD_STEP");
  if (raw == nullptr || *raw == '\0') return specfun::kDefaultFdStep;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string("DETLINE_FD_STEP must be a positive number, got '") + raw + "'");
  return v;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace detline::report
