#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "detline/report.hpp"

using namespace detline;
using namespace detline::report;
using nlohmann::json;

namespace {

std::string strip_timestamps(const std::string& text) {
  json j = json::parse(text);
  j.erase("started_at");
  j.erase("finished_at");
  return j.dump();
}

}  // namespace

TEST_CASE("case constructors") {
  CHECK(numeric_case("a", 1.0, 1.0 + 1e-9, 1e-8, "x").status == Status::Pass);
  CHECK(numeric_case("a", 1.0, 1.1, 1e-8, "x").status == Status::Fail);
  CHECK(numeric_case("a", std::nan(""), 0.0, 1.0, "x").status == Status::Fail);
  CHECK(exact_case("b", "1/12", "1/12", "x").status == Status::Pass);
  CHECK(exact_case("b", "1/12", "1/6", "x").status == Status::Fail);
  CHECK(check_case("c", false, "x").status == Status::Fail);
  CHECK(to_string(Status::Skip) == "skip");
}

TEST_CASE("suite names") {
  CHECK(parse_suite("cp1") == SuiteName::Cp1);
  CHECK(parse_suite("grassmannian") == SuiteName::Grassmannian);
  CHECK(parse_suite("detline") == SuiteName::DetLine);
  CHECK(parse_suite("chern") == SuiteName::Chern);
  CHECK(parse_suite("all") == SuiteName::All);
  CHECK_FALSE(parse_suite("CP1").has_value());
}

TEST_CASE("full suite: at least 40 passing cases with unique names and anchors") {
  const ReportDocument doc = run_suite(SuiteName::All, {7});
  CHECK(doc.cases.size() >= 40);
  CHECK(doc.all_passed());
  std::set<std::string> names;
  for (const auto& c : doc.cases) {
    CAPTURE(c.name);
    CHECK(names.insert(c.name).second);
    CHECK_FALSE(c.paper_anchor.empty());
    if (std::holds_alternative<double>(c.observed) && c.tolerance) {
      const double diff = std::abs(std::get<double>(c.observed) - std::get<double>(c.expected));
      CHECK((c.status == Status::Pass) == (diff <= *c.tolerance));
    }
  }
}

TEST_CASE("chern suite renders exact rationals as strings") {
  const ReportDocument doc = run_suite(SuiteName::Chern, {1});
  CHECK(doc.all_passed());
  const json j = json::parse(doc.to_json());
  bool found = false;
  for (const auto& c : j["cases"])
    if (c["name"] == "chern.grr_c1_m2") {
      CHECK(c["observed"] == "37/12");
      CHECK(c["expected"] == "37/12");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("reports are deterministic under a seed apart from timestamps") {
  for (auto suite : {SuiteName::Cp1, SuiteName::All}) {
    const std::string a = run_suite(suite, {7}).to_json();
    const std::string b = run_suite(suite, {7}).to_json();
    CHECK(strip_timestamps(a) == strip_timestamps(b));
  }
  const json j = json::parse(run_suite(SuiteName::DetLine, {9}).to_json());
  CHECK(j["schema"] == "detline-lab/1");
  CHECK(j["seed"] == 9);
  CHECK(j["suite"] == "detline");
  CHECK(j["summary"]["fail"] == 0);
  for (const char* key : {"name", "status", "observed", "expected", "tolerance", "paper_anchor"})
    CHECK(j["cases"][0].contains(key));
}

TEST_CASE("other seeds still pass") {
  for (std::uint64_t seed : {1u, 2u, 12345u}) CHECK(run_suite(SuiteName::All, {seed}).all_passed());
}

TEST_CASE("5x5 curvature grid") {
  const GridResult r = curvature_grid(GridSpec{});
  CHECK(r.rows.size() == 25);
  CHECK(r.skipped == 0);
  CHECK(r.max_rel_err_fd < 1e-4);
  bool origin = false;
  for (const auto& row : r.rows) {
    CHECK(row.status == Status::Pass);
    if (row.re == 0.0 && row.im == 0.0) {
      CHECK(row.k_closed == 1.0);
      origin = true;
    }
  }
  CHECK(origin);
  // im is the outer loop
  CHECK(r.rows[1].im == r.rows[0].im);
  CHECK(r.rows[1].re > r.rows[0].re);
}

TEST_CASE("exclusion zone rows are skipped") {
  GridSpec g;
  g.re_min = -1.5;
  g.re_max = -0.5;
  g.im_min = -0.5;
  g.im_max = 0.5;
  g.n = 3;
  const GridResult r = curvature_grid(g);
  CHECK(r.rows.size() == 9);
  CHECK(r.skipped == 1);
  CHECK(r.rows[4].status == Status::Skip);
  CHECK(std::isnan(r.rows[4].k_fd));
  CHECK(grid_to_csv(r).find("-1,0,nan,") != std::string::npos);
  const json j = json::parse(grid_to_json(r, g));
  CHECK(j["schema"] == "detline-lab/1");
  CHECK(j["rows"][4]["k_fd"].is_null());
  CHECK(j["rows"][4]["status"] == "skip");
}

TEST_CASE("grid validation") {
  GridSpec g;
  g.n = 1;
  CHECK_THROWS_AS(g.validate(), DomainError);
  g.n = 5;
  g.exclusion = {{{0.0, 0.0}, 0.0}};
  CHECK_THROWS_AS(g.validate(), DomainError);
  g.exclusion.clear();
  g.re_min = 1.0;
  g.re_max = 0.0;
  CHECK_THROWS_AS(curvature_grid(g), DomainError);
}

TEST_CASE("csv layout") {
  const std::string csv = grid_to_csv(curvature_grid(GridSpec{}));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "re,im,k_fd,k_closed,k_pdpdp,rel_err_fd,rel_err_pdpdp,status");
  int rows = 0;
  std::string last;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) {
      last = line;
      continue;
    }
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 7);
  }
  CHECK(rows == 25);
  CHECK(last.find("max_rel_err_fd=") != std::string::npos);
}

TEST_CASE("atomic writes") {
  const auto dir = std::filesystem::temp_directory_path() / "detline_report_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.json";
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  std::ifstream in(path);
  std::string content;
  std::getline(in, content);
  CHECK(content == "second");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  CHECK_THROWS_AS(write_file_atomic(dir / "missing" / "x.json", "x"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("finite-difference step from the environment") {
  ::unsetenv("DETLINE_FD_STEP");
  CHECK(fd_step_from_env() == specfun::kDefaultFdStep);
  ::setenv("DETLINE_FD_STEP", "2e-3", 1);
  CHECK(fd_step_from_env() == 2e-3);
  for (const char* bad : {"-1", "0", "abc", "1e-3x"}) {
    ::setenv("DETLINE_FD_STEP", bad, 1);
    CHECK_THROWS_AS(fd_step_from_env(), DomainError);
  }
  ::unsetenv("DETLINE_FD_STEP");
}
