// qda: construct and verify ladder-operator realizations of the cataloged
// exactly solvable potentials.
//
// Subcommands:
//   catalog      list catalog entries (optionally filtered)
//   consistency  symbolic defining-equation check, JSON report
//   verify       numeric algebra verification, one JSON report per family
//   spectrum     direct-vs-ladder spectrum tables, one CSV per family
//
// Exit codes: 0 pass, 2 constraint violation, 3 algebra/branch failure,
// 64 usage error.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qda/report.hpp"

namespace fs = std::filesystem;
using namespace qda;

namespace {

struct RunConfig {
  std::string family = "all";
  std::vector<std::string> param_flags;
  std::string grid_flag;
  int K = 8;
  std::string out = "reports";
  std::vector<std::string> formats;
  std::uint64_t seed = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<ParamOverride> parse_overrides(const std::vector<std::string>& flags) {
  std::vector<ParamOverride> out;
  for (const auto& f : flags) {
    auto eq = f.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("--param expects name=value, got '" + f + "'");
    std::string name = f.substr(0, eq);
    if (!param_from_name(name)) throw UsageError("unknown parameter '" + name + "'");
    try {
      out.push_back({name, parse_complex(f.substr(eq + 1))});
    } catch (const std::invalid_argument& e) {
      throw UsageError("bad value in '" + f + "': " + e.what());
    }
  }
  return out;
}

std::optional<Grid> parse_grid(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double lo, hi;
  int n;
  char c1, c2, tail;
  std::istringstream is(s);
  if (!(is >> lo >> c1 >> hi >> c2 >> n) || c1 != ',' || c2 != ',' || (is >> tail))
    throw UsageError("--grid expects lo,hi,n, got '" + s + "'");
  try {
    return Grid(lo, hi, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad grid: ") + e.what());
  }
}

std::vector<const FamilySpec*> select_families(const std::string& id) {
  std::vector<const FamilySpec*> out;
  for (const auto& f : catalog())
    if (id == "all" || f.id == id) out.push_back(&f);
  if (out.empty()) throw UsageError("unknown family '" + id + "'");
  return out;
}

bool wants(const RunConfig& cfg, const std::string& fmt, bool dflt) {
  if (cfg.formats.empty()) return dflt;
  for (const auto& f : cfg.formats)
    if (f == fmt) return true;
  return false;
}

void write_file(const fs::path& p, const std::string& content) {
  fs::create_directories(p.parent_path());
  std::ofstream os(p, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + p.string());
  os << content;
}

int cmd_catalog(const std::string& filter) {
  int shown = 0;
  for (const auto& f : catalog()) {
    if (!filter.empty() && f.id.find(filter) == std::string::npos) continue;
    ++shown;
    std::cout << f.id << "  [" << f.expected_algebra
              << (f.expected_case ? ", case " + std::to_string(f.expected_case) : "")
              << "]\n"
              << "  domain   (" << f.lo << ", " << f.hi << ")\n"
              << "  X = " << f.Xs << "\n  Y = " << f.Ys << "\n  Z = " << f.Zs
              << "\n  Q = " << f.Qs << "\n  V = " << f.Vregs;
    if (!f.Vsings.empty() && f.Vsings != "0")
      std::cout << " + (" << f.Vsings << ")/Y^2";
    std::cout << "\n";
    for (const auto& c : f.constraints) std::cout << "  constraint " << c.src << "\n";
    std::cout << "\n";
  }
  if (shown == 0) {
    std::cerr << "no catalog entry matches '" << filter << "'\n";
    return 64;
  }
  return 0;
}

int cmd_consistency(const RunConfig& cfg) {
  auto fams = select_families(cfg.family);
  auto ov = parse_overrides(cfg.param_flags);
  ojson entries = ojson::array();
  bool all_pass = true;
  for (const auto* f : fams) {
    ParamSet ps = resolve_params(*f, ov);
    check_constraints(*f, ps);
    auto rels = check_consistency(consistency_input(*f, ps));
    ojson rep = consistency_report(f->id, rels);
    all_pass = all_pass && rep["pass"].get<bool>();
    entries.push_back(std::move(rep));
  }
  ojson doc = {{"command", "consistency"},
               {"seed", cfg.seed},
               {"families", entries},
               {"pass", all_pass}};
  write_file(fs::path(cfg.out) / "consistency.json", dump_deterministic(doc));
  for (const auto& e : doc["families"])
    std::cout << e["family"].get<std::string>() << ": "
              << (e["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  return all_pass ? 0 : 3;
}

int cmd_verify(const RunConfig& cfg) {
  auto fams = select_families(cfg.family);
  auto ov = parse_overrides(cfg.param_flags);
  auto grid = parse_grid(cfg.grid_flag);
  std::vector<AlgebraReport> reps;
  bool all_pass = true;
  for (const auto* f : fams) {
    Realization r = instantiate(f->id, ov, grid, cfg.K);
    AlgebraReport rep = verify_algebra(r, cfg.K);
    SpectrumComparison cmp = compare(r, cfg.K);
    if (wants(cfg, "json", true))
      write_file(fs::path(cfg.out) / ("verify_" + f->id + ".json"),
                 dump_deterministic(algebra_report_json(rep, cmp)));
    std::cout << f->id << ": " << (rep.pass ? "pass" : "FAIL") << " (case "
              << rep.classification.case_label << ", " << rep.sign << ")\n";
    all_pass = all_pass && rep.pass;
    reps.push_back(std::move(rep));
  }
  if (wants(cfg, "csv", false))
    write_file(fs::path(cfg.out) / "verify_summary.csv", residual_summary_csv(reps));
  return all_pass ? 0 : 3;
}

int cmd_spectrum(const RunConfig& cfg) {
  auto fams = select_families(cfg.family);
  auto ov = parse_overrides(cfg.param_flags);
  auto grid = parse_grid(cfg.grid_flag);
  for (const auto* f : fams) {
    Realization r = instantiate(f->id, ov, grid, cfg.K);
    SpectrumComparison cmp = compare(r, cfg.K);
    if (wants(cfg, "csv", true))
      write_file(fs::path(cfg.out) / ("spectrum_" + f->id + ".csv"),
                 spectrum_csv(cmp));
    if (wants(cfg, "json", false))
      write_file(fs::path(cfg.out) / ("spectrum_" + f->id + ".json"),
                 dump_deterministic(spectrum_json(cmp)));
    std::cout << f->id << ": " << cmp.direct.size() << " levels, annihilation "
              << cmp.annihilation_residual << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ladder-operator algebra verification toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string filter;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "family id or 'all'");
    sub->add_option("--param", cfg.param_flags, "override, name=value (repeatable)");
    sub->add_option("--grid", cfg.grid_flag, "grid override: lo,hi,n");
    sub->add_option("--k", cfg.K, "verification subspace size");
    sub->add_option("--out", cfg.out, "output directory");
    sub->add_option("--format", cfg.formats, "output formats: json|csv (repeatable)")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", cfg.seed, "sampling seed (recorded in reports)");
  };

  auto* c_cat = app.add_subcommand("catalog", "list catalog entries");
  c_cat->add_option("--family", filter, "substring filter");
  auto* c_con = app.add_subcommand("consistency", "symbolic defining-equation check");
  add_common(c_con);
  auto* c_ver = app.add_subcommand("verify", "numeric algebra verification");
  add_common(c_ver);
  auto* c_spe = app.add_subcommand("spectrum", "direct-vs-ladder spectrum tables");
  add_common(c_spe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }

  try {
    if (c_cat->parsed()) return cmd_catalog(filter);
    if (c_con->parsed()) return cmd_consistency(cfg);
    if (c_ver->parsed()) return cmd_verify(cfg);
    return cmd_spectrum(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const ConstraintError& e) {
    std::cerr << "constraint violated: " << e.predicate << ": " << e.what() << "\n";
    return 2;
  } catch (const BranchViolation& e) {
    std::cerr << "branch violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
