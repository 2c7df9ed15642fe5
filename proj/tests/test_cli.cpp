#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(QDA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

fs::path fresh_dir(const std::string& tag) {
  fs::path d = fs::temp_directory_path() / ("qda_cli_" + tag);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("catalog lists every family and supports filtering") {
  RunResult all = run("catalog");
  CHECK(all.code == 0);
  for (const char* id : {"harmonic-canonical", "pt-canonical", "A-harmonic",
                         "B-radial-osc", "C-pt2", "D-pt1", "E-radial-coulomb",
                         "F-radial-l"})
    CHECK(all.out.find(id) != std::string::npos);

  RunResult pt = run("catalog --family pt");
  CHECK(pt.code == 0);
  CHECK(pt.out.find("pt-canonical") != std::string::npos);
  CHECK(pt.out.find("C-pt2") != std::string::npos);
  CHECK(pt.out.find("D-pt1") != std::string::npos);
  CHECK(pt.out.find("harmonic-canonical") == std::string::npos);

  CHECK(run("catalog --family no-such-family").code == 64);
}

TEST_CASE("consistency: pass, report file, determinism") {
  fs::path d1 = fresh_dir("con1"), d2 = fresh_dir("con2");
  RunResult r1 = run("consistency --family all --out " + d1.string());
  CHECK(r1.code == 0);
  std::string body = slurp(d1 / "consistency.json");
  auto doc = nlohmann::ordered_json::parse(body);
  CHECK(doc.at("pass").get<bool>());
  CHECK(doc.at("families").size() == 8);
  for (const auto& f : doc.at("families"))
    for (const auto& rel : f.at("relations"))
      CHECK(rel.at("residual").get<std::string>() == "0");

  RunResult r2 = run("consistency --family all --out " + d2.string());
  CHECK(r2.code == 0);
  CHECK(body == slurp(d2 / "consistency.json"));  // byte-identical
}

TEST_CASE("exit codes: constraint 2, usage 64") {
  fs::path d = fresh_dir("codes");
  std::string out = " --out " + d.string();
  CHECK(run("consistency --family D-pt1 --param c1=1 --param alpha=0 --param c2=0" + out)
            .code == 2);
  CHECK(run("consistency --param c1" + out).code == 64);       // malformed override
  CHECK(run("consistency --param bogus=1" + out).code == 64);  // unknown name
  CHECK(run("verify --grid 1,2" + out).code == 64);            // malformed grid
  CHECK(run("verify --family no-such" + out).code == 64);
  CHECK(run("nonsense").code == 64);
  CHECK(run("").code == 64);  // subcommand required
}

TEST_CASE("verify: report schema is stable and harmonic passes") {
  fs::path d = fresh_dir("verify");
  RunResult r = run("verify --family harmonic-canonical --out " + d.string());
  CHECK(r.code == 0);
  auto doc = nlohmann::ordered_json::parse(slurp(d / "verify_harmonic-canonical.json"));
  const char* want[] = {"family", "grid", "K", "case", "sign", "residuals",
                        "closure_constrained", "eta_spread", "comm_spread",
                        "condition_number", "tolerance", "pass", "notes", "spectrum"};
  std::size_t i = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it, ++i) {
    REQUIRE(i < std::size(want));
    CHECK(it.key() == want[i]);
  }
  CHECK(i == std::size(want));
  CHECK(doc.at("pass").get<bool>());
  CHECK(doc.at("sign").get<std::string>() == "su11");
  for (const char* k : {"bS-lower", "bS-raise", "HSS-lower", "HSS-raise",
                        "JJ-lower", "JJ-raise", "closure", "hermiticity"})
    CHECK(doc.at("residuals").contains(k));
  // 17-significant-digit float rendering
  std::string body = slurp(d / "verify_harmonic-canonical.json");
  CHECK(body.find("\"tolerance\": 1.0000000000000001e-05") != std::string::npos);
}

TEST_CASE("verify: unrealizable branch exits 3") {
  fs::path d = fresh_dir("branch");
  CHECK(run("verify --family C-pt2 --param a=-0.5 --out " + d.string()).code == 3);
}

TEST_CASE("spectrum: CSV table with frozen column order") {
  fs::path d = fresh_dir("spectrum");
  RunResult r = run("spectrum --family harmonic-canonical --out " + d.string());
  CHECK(r.code == 0);
  std::istringstream is(slurp(d / "spectrum_harmonic-canonical.csv"));
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == "n,E_direct,E_ladder,J0_eig,overlap,annihilation_residual");
  int rows = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (rows > 0) {
      // annihilation residual only on row 0
      CHECK(line.substr(line.rfind(',') + 1).empty());
    }
    ++rows;
  }
  CHECK(rows == 8);
  // first data row: E close to 1/2
  std::istringstream again(slurp(d / "spectrum_harmonic-canonical.csv"));
  std::getline(again, line);
  std::getline(again, line);
  auto c1 = line.find(',');
  auto c2 = line.find(',', c1 + 1);
  CHECK(std::abs(std::stod(line.substr(c1 + 1, c2 - c1 - 1)) - 0.5) < 1e-4);
}
