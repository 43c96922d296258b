#include "defcol/report.hpp"

namespace defcol {

namespace {

const char* witness_kind_name(LemmaWitness::Kind kind) {
  return kind == LemmaWitness::Kind::Vertex ? "vertex" : "face";
}

Json element_json(const ElementRef& e) {
  return Json{{"kind", e.kind == ElementRef::Kind::Vertex ? "vertex" : "face"}, {"id", e.id}};
}

}  // namespace

Json lemma_report_json(const LemmaReport& report) {
  Json witnesses = Json::array();
  for (const LemmaWitness& w : report.witnesses) {
    witnesses.push_back(Json{
        {"element", w.element}, {"kind", witness_kind_name(w.kind)}, {"reason", w.reason}});
  }
  return Json{{"lemma", report.lemma},
              {"verdict", report.holds ? "holds" : "violated"},
              {"witnesses", std::move(witnesses)}};
}

Json family_verdict_json(const FamilyVerdict& verdict) {
  Json j{{"in_family", verdict.in_family}, {"reason", family_reason_name(verdict.reason)}};
  if (verdict.reason == FamilyVerdict::Reason::ForbiddenCycle) j["cycle"] = verdict.cycle;
  return j;
}

Json discharge_report_json(const EmbeddedGraph& eg, const DischargeResult& result,
                           const std::vector<CaseVerdict>& cases) {
  Json elements = Json::array();
  for (const CaseVerdict& cv : cases) {
    Json e{{"id", cv.element.id},
           {"kind", cv.element.kind == ElementRef::Kind::Vertex ? "vertex" : "face"},
           {"mu", result.initial.at(cv.element).str()},
           {"mu_star", cv.mu_star.str()},
           {"case", cv.case_id},
           {"applicable", cv.applicable}};
    if (!cv.applicable) e["violated_hypothesis"] = cv.violated_hypothesis;
    elements.push_back(std::move(e));
  }

  Json transfers = Json::array();
  for (const Transfer& t : result.log) {
    transfers.push_back(Json{{"rule", t.rule},
                             {"from", element_json(t.from)},
                             {"to", element_json(t.to)},
                             {"amount", t.amount.str()}});
  }

  Json diagnostics = Json::array();
  for (const Diagnostic& d : result.diagnostics) {
    diagnostics.push_back(Json{{"rule", d.rule}, {"message", d.message}});
  }

  return Json{{"schema", kReportSchema},
              {"vertices", eg.vertex_count()},
              {"edges", eg.edge_count()},
              {"faces", eg.face_count()},
              {"initial", result.initial.total().str()},
              {"final", result.mu_star.total().str()},
              {"elements", std::move(elements)},
              {"transfers", std::move(transfers)},
              {"diagnostics", std::move(diagnostics)}};
}

}  // namespace defcol
