#include "doctest.h"

#include "app.hpp"
#include "jobspec.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = hulthen::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> cells_of(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream stream(line);
  std::string cell;
  while (std::getline(stream, cell, ',')) cells.push_back(cell);
  return cells;
}

bool numeric_cell(const std::string& cell) {
  if (cell.empty()) return false;
  size_t used = 0;
  try {
    (void)std::stod(cell, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == cell.size();
}

double cell_num(const std::string& cell) { return std::stod(cell); }

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("hulthen_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const std::string kEnergyHeader =
    "e_plus,e_minus,kappa,xi,delta,epsilon_plus,epsilon_minus,residual_plus,"
    "residual_minus";
const std::string kTableHeader = "V0,S0,m0,m1,n,l,E_plus,E_minus";
const std::string kVerifyHeader =
    "V0,S0,m0,m1,n,l,branch,branch_sign,e_closed,e_oracle,abs_diff,pass";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("energy reports the closed-form pair") {
  const auto r = run_cli({"energy", "--V0", "1", "--S0", "1"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == kEnergyHeader);
  CHECK(lines[1].rfind("1.000000,-0.600000,", 0) == 0);
  const auto cells = cells_of(lines[1]);
  REQUIRE(cells.size() == 9);
  for (const auto& cell : cells) CHECK(numeric_cell(cell));

  const auto j = run_cli(
      {"energy", "--V0", "2", "--S0", "2", "--format", "json"});
  CHECK(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc.at("status") == "BothReal");
  CHECK(doc.at("e_plus").get<double>() ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(doc.at("e_minus").get<double>() ==
        doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(doc.at("rhs_plus").get<double>() > 0.0);
  CHECK(doc.at("rhs_minus").get<double>() < 0.0);
}

TEST_CASE("energy exit codes cover all outcome classes") {
  // no real pair at these quantum numbers: dash row, exit 1
  const auto dash = run_cli({"energy", "--V0", "1", "--S0", "1", "--l", "1"});
  CHECK(dash.code == 1);
  const auto dash_lines = lines_of(dash.out);
  REQUIRE(dash_lines.size() == 2);
  CHECK(dash_lines[1].rfind("-,-,", 0) == 0);
  CHECK(dash.err.find("no real bound state") != std::string::npos);

  // strong pure vector coupling: constraint violation, exit 1
  const auto cv = run_cli({"energy", "--V0", "3", "--S0", "0"});
  CHECK(cv.code == 1);
  CHECK(lines_of(cv.out).size() == 2);

  // invalid physics, scheme, flags and missing arguments: exit 2
  CHECK(run_cli({"energy", "--V0", "1", "--S0", "1", "--alpha", "0"}).code ==
        2);
  CHECK(run_cli({"energy", "--V0", "1", "--S0", "1", "--scheme", "bogus"})
            .code == 2);
  CHECK(run_cli({"energy", "--V0", "1", "--S0", "1", "--scheme", "custom",
                 "--c0", "-1"})
            .code == 2);
  CHECK(run_cli({"energy", "--V0", "1"}).code == 2);
  CHECK(run_cli({"energy", "--V0", "1", "--S0", "1", "--bogus", "3"}).code ==
        2);
}

TEST_CASE("table reproduces the reference layout") {
  const auto r = run_cli({"table", "--preset", "table1"});
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 29);
  CHECK(lines[0] == kTableHeader);
  int dash_rows = 0, real_rows = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto cells = cells_of(lines[i]);
    REQUIRE(cells.size() == 8);
    for (int k = 0; k < 6; ++k) CHECK(numeric_cell(cells[k]));
    const bool dash = cells[6] == "-";
    CHECK(dash == (cells[7] == "-"));
    if (dash)
      ++dash_rows;
    else
      ++real_rows;
  }
  CHECK(real_rows == 20);
  CHECK(dash_rows == 8);
  CHECK(r.out.find("2,2,1,0,1,0,0.707107,-0.707107\n") != std::string::npos);
  CHECK(r.out.find("1,1,1,0,1,1,-,-\n") != std::string::npos);

  CHECK(run_cli({"table", "--preset", "table9"}).code == 2);
  CHECK(run_cli({"table"}).code == 2);
}

TEST_CASE("output is byte-identical across runs") {
  const auto a = run_cli({"table", "--preset", "table2"});
  const auto b = run_cli({"table", "--preset", "table2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find('\r') == std::string::npos);
  CHECK(!a.out.empty());
  CHECK(a.out.back() == '\n');

  const auto ja = run_cli({"energy", "--V0", "6", "--S0", "6", "--n", "2",
                           "--l", "1", "--format", "json"});
  const auto jb = run_cli({"energy", "--V0", "6", "--S0", "6", "--n", "2",
                           "--l", "1", "--format", "json"});
  CHECK(ja.code == 0);
  CHECK(ja.out == jb.out);
}

TEST_CASE("output routes to a file when asked") {
  const fs::path dir = fresh_dir("route");
  const fs::path target = dir / "energy.csv";

  const auto to_stdout = run_cli({"energy", "--V0", "2", "--S0", "2"});
  const auto to_file = run_cli(
      {"energy", "--V0", "2", "--S0", "2", "--output", target.string()});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream file(target, std::ios::binary);
  REQUIRE(file.good());
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == to_stdout.out);

  const auto bad = run_cli({"energy", "--V0", "2", "--S0", "2", "--output",
                            (dir / "missing" / "x.csv").string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("cannot open output file") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("centrifugal emits one header per stream") {
  const auto r =
      run_cli({"centrifugal", "--alpha", "0.05,0.1", "--samples", "5"});
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 11);
  const std::string header = "r,alpha_r,exact,approx,relative_error";
  CHECK(lines[0] == header);
  for (size_t i = 1; i < lines.size(); ++i) CHECK(lines[i] != header);

  // two 5-row blocks; r strictly increasing inside each, alpha_r = alpha*r
  for (int block = 0; block < 2; ++block) {
    const double alpha = block == 0 ? 0.05 : 0.1;
    double prev = 0.0;
    for (int k = 0; k < 5; ++k) {
      const auto cells = cells_of(lines[1 + 5 * block + k]);
      REQUIRE(cells.size() == 5);
      const double rr = cell_num(cells[0]);
      CHECK(rr > prev);
      prev = rr;
      CHECK(cell_num(cells[1]) == doctest::Approx(alpha * rr).epsilon(1e-12));
    }
    // default window is alpha*r in [0.4, 1.2]
    CHECK(cell_num(cells_of(lines[1 + 5 * block])[1]) ==
          doctest::Approx(0.4).epsilon(1e-12));
    CHECK(cell_num(cells_of(lines[5 + 5 * block])[1]) ==
          doctest::Approx(1.2).epsilon(1e-12));
  }

  CHECK(run_cli({"centrifugal", "--alpha", "1,,2"}).code == 2);
  CHECK(run_cli({"centrifugal", "--alpha", "0"}).code == 2);
  CHECK(run_cli({"centrifugal", "--samples", "1"}).code == 2);
}

TEST_CASE("centrifugal splits multi-alpha file output") {
  const fs::path dir = fresh_dir("split");
  const fs::path base = dir / "prof.csv";
  const auto r = run_cli({"centrifugal", "--alpha", "0.05,0.1", "--samples",
                          "4", "--output", base.string()});
  CHECK(r.code == 0);
  for (const std::string tag : {"_a0.050", "_a0.100"}) {
    const fs::path part = dir / ("prof" + tag + ".csv");
    std::ifstream file(part, std::ios::binary);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    const auto lines = lines_of(content.str());
    CHECK(lines.size() == 5);
    CHECK(lines[0] == "r,alpha_r,exact,approx,relative_error");
  }
  fs::remove_all(dir);
}

TEST_CASE("enumerate lists every real state") {
  const auto one = run_cli({"enumerate", "--V0", "1", "--S0", "1"});
  CHECK(one.code == 0);
  CHECK(lines_of(one.out).size() == 2); // header + 1 state
  CHECK(lines_of(one.out)[0] == "n,l,E_plus,E_minus");

  const auto three = run_cli({"enumerate", "--V0", "2", "--S0", "2"});
  CHECK(lines_of(three.out).size() == 4);

  const auto j = run_cli(
      {"enumerate", "--V0", "2", "--S0", "2", "--format", "json"});
  const json doc = json::parse(j.out);
  CHECK(doc.at("count").get<int>() == 3);
  CHECK(doc.at("states").size() == 3);

  CHECK(run_cli({"enumerate", "--V0", "2", "--S0", "2", "--n-start", "2"})
            .code == 2);
}

TEST_CASE("wavefunction table is flat, increasing and normalised") {
  const auto r = run_cli({"wavefunction", "--V0", "2", "--S0", "2", "--n",
                          "1", "--samples", "2000"});
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2001);
  CHECK(lines[0] ==
        "r,R,energy,epsilon,delta,jacobi_a,jacobi_b,jacobi_degree,norm");

  double prev_r = 0.0;
  double trapz = 0.0;
  double last_r = 0.0, last_f = 0.0;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto cells = cells_of(lines[i]);
    REQUIRE(cells.size() == 9);
    for (const auto& cell : cells) CHECK(numeric_cell(cell));
    CHECK(cells[2] == "0.707107"); // constant metadata column
    const double rr = cell_num(cells[0]);
    const double rv = cell_num(cells[1]);
    CHECK(rr > prev_r);
    prev_r = rr;
    const double f = rv * rv * rr * rr; // D = 3 radial measure
    if (i > 1) trapz += 0.5 * (f + last_f) * (rr - last_r);
    last_r = rr;
    last_f = f;
  }
  CHECK(std::abs(trapz - 1.0) < 1e-3);

  // threshold state is not normalisable: exit 1
  const auto nb = run_cli({"wavefunction", "--V0", "1", "--S0", "1"});
  CHECK(nb.code == 1);
  CHECK(nb.err.find("error:") != std::string::npos);

  CHECK(run_cli({"wavefunction", "--V0", "2", "--S0", "2", "--branch", "x"})
            .code == 2);
  CHECK(run_cli({"wavefunction", "--V0", "2", "--S0", "2", "--samples", "1"})
            .code == 2);
}

TEST_CASE("shift-params pins the matching constants") {
  const auto r = run_cli({"shift-params"});
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "gamma_match,c0,slope_residual,value_residual");
  const auto cells = cells_of(lines[1]);
  REQUIRE(cells.size() == 4);
  // cells carry 9 significant digits
  CHECK(cell_num(cells[0]) == doctest::Approx(0.4990429999).epsilon(1e-8));
  CHECK(cell_num(cells[1]) ==
        doctest::Approx(0.082305816783797781).epsilon(1e-8));
  CHECK(cell_num(cells[2]) ==
        doctest::Approx(-5.0677352533479159e-4).epsilon(1e-9));
  CHECK(std::abs(cell_num(cells[3])) < 1e-12);

  CHECK(run_cli({"shift-params", "--tolerance", "0"}).code == 2);
}

TEST_CASE("jobspec round trip drives the same command") {
  hulthen::cli::JobSpec job;
  job.command = "energy";
  job.parameters = {{"V0", "2"}, {"S0", "2"}};
  job.format = "csv";
  job.path = "-";

  const std::string text = hulthen::cli::serialize_jobspec(job);
  const hulthen::cli::JobSpec parsed = hulthen::cli::parse_jobspec(text);
  CHECK(parsed.command == job.command);
  CHECK(parsed.parameters == job.parameters);
  CHECK(parsed.format == job.format);
  CHECK(parsed.path == job.path);

  const auto direct = run_cli({"energy", "--V0", "2", "--S0", "2",
                               "--format", "csv"});
  const auto via_job = run_cli(hulthen::cli::jobspec_to_argv(parsed));
  CHECK(via_job.code == 0);
  CHECK(via_job.out == direct.out);
}

TEST_CASE("--job runs a command from a file") {
  const fs::path dir = fresh_dir("job");
  const fs::path path = dir / "job.json";
  {
    std::ofstream file(path, std::ios::binary);
    file << R"({"command":"energy","parameters":{"V0":2,"S0":2},)"
         << R"("output":{"format":"csv","path":"-"}})";
  }
  const auto r = run_cli({"--job", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.707107,-0.707107") != std::string::npos);

  CHECK(run_cli({"--job", path.string(), "table", "--preset", "table1"})
            .code == 2);
  CHECK(run_cli({"--job", (dir / "nope.json").string()}).code == 2);

  const fs::path bad = dir / "bad.json";
  {
    std::ofstream file(bad, std::ios::binary);
    file << R"({"parameters":{}})";
  }
  CHECK(run_cli({"--job", bad.string()}).code == 2);
  {
    std::ofstream file(bad, std::ios::binary);
    file << R"({"command":"energy","parameters":{"output":"x"}})";
  }
  CHECK(run_cli({"--job", bad.string()}).code == 2);
  {
    std::ofstream file(bad, std::ios::binary);
    file << "not json";
  }
  CHECK(run_cli({"--job", bad.string()}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("verify checks a state subset against the oracle") {
  const auto r =
      run_cli({"verify", "--preset", "table1", "--max-states", "2"});
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5); // two states, two branches each
  CHECK(lines[0] == kVerifyHeader);
  int passed = 0, skipped = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto cells = cells_of(lines[i]);
    REQUIRE(cells.size() == 12);
    const std::string& verdict = cells.back();
    CHECK((verdict == "1" || verdict == "-"));
    if (verdict == "1")
      ++passed;
    else
      ++skipped;
    if (verdict == "-") CHECK(cells[9] == "-"); // no oracle energy either
  }
  // first two table entries hold one shootable state (positive branch sign)
  CHECK(passed == 1);
  CHECK(skipped == 3);

  CHECK(run_cli({"verify"}).code == 2);
  CHECK(run_cli({"verify", "--preset", "table1", "--benchmark", "nonrel-l1"})
            .code == 2);
  CHECK(run_cli({"verify", "--preset", "table1", "--max-states", "0"}).code ==
        2);
  CHECK(run_cli({"verify", "--benchmark", "bogus"}).code == 2);
}

TEST_CASE("verify benchmark shows the shifted scheme winning") {
  const auto r = run_cli(
      {"verify", "--benchmark", "nonrel-l1", "--grid-points", "5001"});
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] ==
        "alpha,e_exact,e_shifted,e_unshifted,err_shifted,err_unshifted,"
        "improved");
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto cells = cells_of(lines[i]);
    REQUIRE(cells.size() == 7);
    CHECK(cells.back() == "1");
    CHECK(cell_num(cells[4]) < cell_num(cells[5]));
  }
}

TEST_CASE("bare invocation prints help") {
  const auto nothing = run_cli({});
  CHECK(nothing.code == 2);
  CHECK(nothing.out.find("Usage") != std::string::npos);
  const auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("wavefunction") != std::string::npos);
}

} // TEST_SUITE