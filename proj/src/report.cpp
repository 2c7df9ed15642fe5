#include "qda/report.hpp"
#include <cstdio>
#include <set>
#include <sstream>

namespace qda {

std::string format_sig17(double v) {
  if (!std::isfinite(v)) return v > 0 ? "1e9999" : (v < 0 ? "-1e9999" : "null");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void dump_rec(const ojson& j, std::string& out, int depth) {
  const std::string pad(2 * depth, ' ');
  const std::string pad1(2 * (depth + 1), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad1 + "\"" + it.key() + "\": ";
        dump_rec(it.value(), out, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad1;
        dump_rec(j[i], out, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += format_sig17(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_deterministic(const ojson& j) {
  std::string out;
  dump_rec(j, out, 0);
  out += "\n";
  return out;
}

ojson consistency_report(const std::string& family,
                         const std::vector<RelationResult>& relations) {
  ojson rels = ojson::array();
  bool all = true;
  for (const auto& r : relations) {
    rels.push_back({{"id", r.id},
                    {"residual", r.residual.is_zero() ? "0" : r.residual.str()},
                    {"pass", r.pass}});
    all = all && r.pass;
  }
  return {{"family", family}, {"relations", rels}, {"pass", all}};
}

ojson spectrum_json(const SpectrumComparison& cmp) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < cmp.direct.size(); ++i) {
    ojson row = {{"n", (int)i}, {"E_direct", cmp.direct[i]}};
    if (i < cmp.ladder.size()) row["E_ladder"] = cmp.ladder[i];
    if (i < cmp.j0.size()) row["J0_eig"] = cmp.j0[i];
    if (i < cmp.overlaps.size()) row["overlap"] = cmp.overlaps[i];
    rows.push_back(row);
  }
  return {{"family", cmp.family},
          {"annihilation_residual", cmp.annihilation_residual},
          {"j0_step_dev", cmp.j0_step_dev},
          {"steps_taken", cmp.steps_taken},
          {"early_stop", cmp.early_stop_reason},
          {"rows", rows}};
}

ojson algebra_report_json(const AlgebraReport& rep, const SpectrumComparison& cmp) {
  ojson res = ojson::object();
  for (const auto& [k, v] : rep.residuals) res[k] = v;
  ojson notes = ojson::array();
  for (const auto& n : rep.notes) notes.push_back(n);
  bool closure_constrained = true;
  for (const auto& n : rep.notes)
    if (n.find("closure unconstrained") != std::string::npos) closure_constrained = false;
  return {{"family", rep.family},
          {"grid", {{"lo", rep.grid.lo}, {"hi", rep.grid.hi}, {"n", rep.grid.n}}},
          {"K", rep.K},
          {"case", rep.classification.case_label},
          {"sign", rep.sign},
          {"residuals", res},
          {"closure_constrained", closure_constrained},
          {"eta_spread", rep.classification.eta_spread},
          {"comm_spread", rep.classification.comm_spread},
          {"condition_number", rep.condition_number},
          {"tolerance", rep.tolerance},
          {"pass", rep.pass},
          {"notes", notes},
          {"spectrum", spectrum_json(cmp)}};
}

std::string spectrum_csv(const SpectrumComparison& cmp) {
  std::ostringstream os;
  os << "n,E_direct,E_ladder,J0_eig,overlap,annihilation_residual\n";
  for (std::size_t i = 0; i < cmp.direct.size(); ++i) {
    os << i << "," << format_sig17(cmp.direct[i]) << ",";
    if (i < cmp.ladder.size()) os << format_sig17(cmp.ladder[i]);
    os << ",";
    if (i < cmp.j0.size()) os << format_sig17(cmp.j0[i]);
    os << ",";
    if (i < cmp.overlaps.size()) os << format_sig17(cmp.overlaps[i]);
    os << ",";
    if (i == 0) os << format_sig17(cmp.annihilation_residual);
    os << "\n";
  }
  if (!cmp.early_stop_reason.empty())
    os << "trailer,,,,," << cmp.early_stop_reason << "\n";
  return os.str();
}

std::string residual_summary_csv(const std::vector<AlgebraReport>& reps) {
  std::set<std::string> keys;
  for (const auto& r : reps)
    for (const auto& [k, v] : r.residuals) keys.insert(k);
  std::ostringstream os;
  os << "family,case,sign,pass";
  for (const auto& k : keys) os << "," << k;
  os << "\n";
  for (const auto& r : reps) {
    os << r.family << "," << r.classification.case_label << "," << r.sign << ","
       << (r.pass ? "true" : "false");
    for (const auto& k : keys) {
      os << ",";
      auto it = r.residuals.find(k);
      if (it != r.residuals.end()) os << format_sig17(it->second);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace qda
