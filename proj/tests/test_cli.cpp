#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <doctest.h>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "xlab/driver.hpp"

using namespace xlab::driver;

namespace {

const std::string out_file = "test_cli_out.txt";

int run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + XLAB_BIN + " " + args + " > " + out_file + " 2> test_cli_err.txt";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::vector<std::string> output_lines() {
  std::ifstream in(out_file);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

// rows after the two comment lines and the header
std::vector<std::vector<std::string>> csv_rows() {
  const auto lines = output_lines();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    std::vector<std::string> cells;
    std::stringstream ss(lines[i]);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string without_first_line() {
  auto lines = output_lines();
  std::string out;
  for (std::size_t i = 1; i < lines.size(); ++i) out += lines[i] + "\n";
  return out;
}

}  // namespace

TEST_CASE("registry lists every experiment with its references") {
  const auto& reg = list_experiments();
  CHECK(reg.size() >= 14);
  auto refs = [&](const std::string& id) {
    for (const auto& e : reg)
      if (e.id == id) return e.paper_refs;
    return std::string("<missing>");
  };
  CHECK(refs("kolmogorov-fit").find("4.1") != std::string::npos);
  CHECK(refs("euler-maclaurin-check").find("1.3") != std::string::npos);
  for (const char* id : {"lebesgue-table", "kolmogorov-fit", "hyperbolic-fit", "duality-fuzz", "moduli",
                         "two-sided-report", "posdef-report", "aspline", "schoenberg", "walsh-regularity",
                         "walsh-moduli", "euler-maclaurin-check", "indicator-zeros", "comparison-ratio"})
    CHECK_MESSAGE(refs(id) != "<missing>", id);

  REQUIRE(run_cli("--list") == 0);
  bool kolmogorov = false, euler = false;
  for (const auto& line : output_lines()) {
    kolmogorov = kolmogorov || (line.rfind("kolmogorov-fit", 0) == 0 && line.find("4.1") != std::string::npos);
    euler = euler || (line.rfind("euler-maclaurin-check", 0) == 0 && line.find("1.3") != std::string::npos);
  }
  CHECK(kolmogorov);
  CHECK(euler);
}

TEST_CASE("config hashing and text helpers") {
  CHECK(git_blob_hash("") == "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
  CHECK(git_blob_hash("hello\n") == "ce013625030ba8dba906f756967f9e9ca394464a");
  CHECK(canonical_config("x", {{"b", "2"}, {"a", "1"}}, 7) == "experiment=x\nseed=7\na=1\nb=2\n");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-1.0 / 3.0) == "-0.33333333333333331");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(format_double(2.5e-7) == "2.4999999999999999e-07");
  CHECK(format_double(INFINITY) == "inf");

  const auto cfg = parse_config_text("# header\n\nmaxlen = 3   # trailing\n  tol=1e-8\n");
  CHECK(cfg.size() == 2);
  CHECK(cfg.at("maxlen") == "3");
  CHECK(cfg.at("tol") == "1e-8");
  CHECK_THROWS_AS(parse_config_text("maxlen 3\n"), usage_error);
  CHECK_THROWS_AS(parse_config_text(" = 3\n"), usage_error);
  CHECK_THROWS_AS(read_config_file("/nonexistent/xlab.cfg"), usage_error);
}

TEST_CASE("run validates experiments and parameters") {
  CHECK_THROWS_AS(run({"no-such-experiment", {}, 0, "", Format::csv, 1}), usage_error);
  CHECK_THROWS_AS(run({"lebesgue-table", {{"bogus", "1"}}, 0, "", Format::csv, 1}), usage_error);
  CHECK_THROWS_AS(run({"lebesgue-table", {{"nmax", "abc"}}, 0, "", Format::csv, 1}), usage_error);
  CHECK_THROWS_AS(run({"lebesgue-table", {{"nmin", "10"}, {"nmax", "5"}}, 0, "", Format::csv, 1}), usage_error);
  CHECK_THROWS_AS(run({"lebesgue-table", {{"method", "nonsense"}}, 0, "", Format::csv, 1}), usage_error);
  const auto r = run({"lebesgue-table", {{"nmax", "8"}}, 0, "", Format::csv, 1});
  CHECK(r.table.rows.size() == 8);
  CHECK(r.params.at("method") == "dirichlet");
  CHECK(r.failures.empty());
}

TEST_CASE("exit codes") {
  CHECK(run_cli("lebesgue-table method=dirichlet nmin=1 nmax=64") == 0);
  CHECK(csv_rows().size() == 64);
  CHECK(output_lines()[2] == "method,n,value,quad_error,log_excess,status");
  CHECK(run_cli("") == 2);
  CHECK(run_cli("no-such-experiment") == 2);
  CHECK(run_cli("lebesgue-table colour=blue") == 2);
  CHECK(run_cli("lebesgue-table nmax=x") == 2);
  CHECK(run_cli("lebesgue-table 64") == 2);
  CHECK(run_cli("lebesgue-table --format xml") == 2);
  CHECK(run_cli("lebesgue-table --bogus-flag") == 2);
  CHECK(run_cli("lebesgue-table nmax=4", "XLAB_THREADS=0") == 2);
  CHECK(run_cli("lebesgue-table nmax=4", "XLAB_THREADS=3") == 0);
  // dyadic polynomials: both moduli vanish while the mean still moves f
  CHECK(run_cli("walsh-moduli bits=8") == 1);
}

TEST_CASE("output is deterministic apart from the timestamp line") {
  REQUIRE(run_cli("duality-fuzz maxlen=4 --seed 3") == 0);
  const auto first = without_first_line();
  REQUIRE(run_cli("duality-fuzz maxlen=4 --seed 3") == 0);
  CHECK(without_first_line() == first);
  CHECK(output_lines()[0].rfind("# xlab generated ", 0) == 0);

  // the worker count never changes the rows
  for (const char* exp : {"posdef-report", "indicator-zeros", "euler-maclaurin-check"}) {
    std::map<std::string, std::string> params;
    if (std::string(exp) == "posdef-report") params = {{"gram_trials", "20"}, {"rmax", "20"}};
    std::ostringstream one, four;
    auto a = run({exp, params, 5, "", Format::csv, 1});
    auto b = run({exp, params, 5, "", Format::csv, 4});
    write_csv(a, one);
    write_csv(b, four);
    const auto strip = [](const std::string& s) { return s.substr(s.find('\n') + 1); };
    CHECK_MESSAGE(strip(one.str()) == strip(four.str()), exp);
  }
}

TEST_CASE("duality sweep passes exhaustively") {
  REQUIRE(run_cli("duality-fuzz maxlen=6") == 0);
  const auto rows = csv_rows();
  REQUIRE(rows.size() == 6);
  CHECK(rows.back()[1] == "15625");
  for (const auto& r : rows) CHECK(r.back() == "ok");
}

TEST_CASE("indicator zeros of the disc") {
  REQUIRE(run_cli("indicator-zeros body=disc p=3") == 0);
  const auto rows = csv_rows();
  REQUIRE(rows.size() == 64);
  for (const auto& r : rows) {
    const double product = std::stod(r[3]);
    CHECK(product > 6 * std::numbers::pi);
    CHECK(product < 8 * std::numbers::pi);
  }
  CHECK(run_cli("indicator-zeros body=triangle") == 2);
}

TEST_CASE("config files and command-line precedence") {
  {
    std::ofstream cfg("test_cli.cfg");
    cfg << "# sweep settings\nmaxlen = 3\n\nentries = 1  # small alphabet\n";
  }
  REQUIRE(run_cli("duality-fuzz --config test_cli.cfg") == 0);
  auto rows = csv_rows();
  REQUIRE(rows.size() == 3);
  CHECK(rows[2][1] == "27");
  REQUIRE(run_cli("duality-fuzz maxlen=2 --config test_cli.cfg") == 0);
  CHECK(csv_rows().size() == 2);
  CHECK(run_cli("duality-fuzz --config missing.cfg") == 2);
}

TEST_CASE("json output and the out flag") {
  REQUIRE(run_cli("euler-maclaurin-check cases=6 --format json --out test_cli.json") == 0);
  std::ifstream in("test_cli.json");
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["experiment"] == "euler-maclaurin-check");
  CHECK(doc["rows"].size() == 6);
  CHECK(doc["rows"][0]["status"] == "ok");
  CHECK(doc["config_hash"].get<std::string>().size() == 40);
  CHECK(doc["failures"].empty());
}
