#pragma once
#include "json.hpp"
#include "qda/algebra.hpp"
#include "qda/spectra.hpp"

namespace qda {

using ojson = nlohmann::ordered_json;

// Fixed 17-significant-digit rendering shared by every serializer so that
// identical inputs produce byte-identical report files.
std::string format_sig17(double v);

// Deterministic dump: key order as inserted (ordered_json), floats through
// format_sig17, two-space indentation, trailing newline.
std::string dump_deterministic(const ojson& j);

// Consistency report for one family: the per-relation residual expressions
// and verdicts under the resolved parameter set.
ojson consistency_report(const std::string& family,
                         const std::vector<RelationResult>& relations);

// Full verification report: residual map, classification, sign, spectrum
// table.  The key set is stable across families (golden-schema tested).
ojson algebra_report_json(const AlgebraReport& rep, const SpectrumComparison& cmp);

ojson spectrum_json(const SpectrumComparison& cmp);

// CSV table: header n,E_direct,E_ladder,J0_eig,overlap,annihilation_residual;
// the annihilation residual appears on row 0 only; an early ladder stop (or a
// clipped level count) adds a trailer row with the reason in the last column.
std::string spectrum_csv(const SpectrumComparison& cmp);

// One row per family: family,case,sign,pass plus the union of residual keys.
std::string residual_summary_csv(const std::vector<AlgebraReport>& reps);

}  // namespace qda
