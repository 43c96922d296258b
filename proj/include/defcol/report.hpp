#pragma once

#include <json.hpp>

#include "defcol/discharging.hpp"
#include "defcol/family.hpp"
#include "defcol/lemmas.hpp"

namespace defcol {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "defcol-report/1";

Json lemma_report_json(const LemmaReport& report);
Json family_verdict_json(const FamilyVerdict& verdict);

// {schema, initial, final, elements, transfers, diagnostics}; rationals are
// exact "p/q" strings.
Json discharge_report_json(const EmbeddedGraph& eg, const DischargeResult& result,
                           const std::vector<CaseVerdict>& cases);

}  // namespace defcol
