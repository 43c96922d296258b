#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "defcol/coloring.hpp"
#include "defcol/corpus.hpp"
#include "defcol/discharging.hpp"
#include "defcol/embedding.hpp"
#include "defcol/errors.hpp"
#include "defcol/family.hpp"
#include "defcol/lemmas.hpp"
#include "defcol/report.hpp"
#include "defcol/rules.hpp"

namespace {

using namespace defcol;

constexpr int kExitSolved = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitError = 2;

CorpusEntry load_single_graph(const std::string& path) {
  auto entries = load_corpus_file(path);
  if (entries.size() != 1) {
    throw Error(Errc::BadHeader,
                path + " holds " + std::to_string(entries.size()) +
                    " graphs; this command expects exactly one (use corpus-run)");
  }
  return std::move(entries.front());
}

EmbeddedGraph embed_entry(const CorpusEntry& entry) {
  if (entry.embedded) return *entry.embedded;
  auto eg = find_embedding(entry.graph);
  if (!eg) throw Error(Errc::NotPlanarEmbedding, entry.source + ": graph is not planar");
  return std::move(*eg);
}

std::string coloring_text(const ColorAssignment& a) {
  std::ostringstream out;
  for (std::size_t v = 0; v < a.color.size(); ++v) out << v << ' ' << a.color[v] << '\n';
  return out.str();
}

ColorAssignment parse_coloring(const std::string& text, int n) {
  ColorAssignment a;
  a.color.assign(n, kUnassigned);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int v = 0;
    int c = 0;
    if (!(ls >> v >> c) || v < 0 || v >= n) {
      throw Error(Errc::BadHeader, "bad coloring line: " + line);
    }
    a.color[v] = c;
  }
  return a;
}

RuleSet load_rules_or_builtin_equivalent(const std::string& spec, bool& use_builtin) {
  use_builtin = spec == "builtin";
  if (use_builtin) return {};
  std::ifstream in(spec);
  if (!in) throw Error(Errc::BadHeader, "cannot open rules file " + spec);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_rules(buffer.str());
}

struct CorpusAnalysis {
  Json record = Json::object();
  bool family = false;
  bool satisfiable = false;
  bool theorem_violation = false;
  bool parse_failed = false;
};

CorpusAnalysis analyze_entry(const CorpusEntry& entry, const DefectVector& defects) {
  CorpusAnalysis out;
  Json& rec = out.record;
  rec["source"] = entry.source;
  rec["index"] = entry.index;
  rec["n"] = entry.graph.n;
  rec["m"] = entry.graph.edge_count();

  FamilyVerdict family = is_in_family(entry.graph);
  out.family = family.in_family;
  rec["family"] = family_verdict_json(family);

  if (family) {
    auto solved = solve(entry.graph, defects);
    out.satisfiable = solved.has_value();
    rec["satisfiable"] = out.satisfiable;
    if (solved) {
      rec["coloring_valid"] = verify_coloring(entry.graph, *solved, defects).empty();
    }
    out.theorem_violation = !out.satisfiable;
    rec["theorem_violation"] = out.theorem_violation;
  }

  std::optional<EmbeddedGraph> eg;
  if (entry.embedded) {
    eg = entry.embedded;
  } else if (entry.graph.connected()) {
    eg = find_embedding(entry.graph);
  }

  if (eg) {
    if (family) {
      Json lemmas = Json::array();
      bool all_hold = true;
      for (const LemmaReport& report : scan_all(*eg)) {
        all_hold = all_hold && report.holds;
        lemmas.push_back(Json{{"lemma", report.lemma},
                              {"verdict", report.holds ? "holds" : "violated"},
                              {"witnesses", report.witnesses.size()}});
      }
      rec["lemmas"] = std::move(lemmas);
      rec["minimal_counterexample_candidate"] = all_hold;
    }

    DischargeResult discharge = apply_builtin_rules(*eg);
    auto cases = case_analysis_check(*eg, discharge.mu_star);
    bool sound = true;
    for (const CaseVerdict& cv : cases) {
      if (cv.applicable && !cv.nonnegative) sound = false;
      if (!cv.nonnegative && cv.violated_hypothesis.empty()) sound = false;
    }
    rec["discharge"] = Json{{"initial", discharge.initial.total().str()},
                            {"final", discharge.mu_star.total().str()},
                            {"conserved", discharge.initial.total() == discharge.mu_star.total()},
                            {"negative_elements", negative_elements(discharge.mu_star).size()},
                            {"case_analysis_sound", sound}};
  }
  return out;
}

int cmd_solve(const std::string& input, const std::string& defects_text,
              const std::string& output) {
  DefectVector defects = parse_defects(defects_text);
  CorpusEntry entry = load_single_graph(input);
  auto result = solve(entry.graph, defects);
  if (!result) return kExitUnsat;
  std::string text = coloring_text(*result);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    out << text;
  }
  return kExitSolved;
}

int cmd_verify(const std::string& input, const std::string& coloring_path,
               const std::string& defects_text) {
  DefectVector defects = parse_defects(defects_text);
  CorpusEntry entry = load_single_graph(input);
  std::ifstream in(coloring_path);
  if (!in) throw Error(Errc::BadHeader, "cannot open coloring " + coloring_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  ColorAssignment a = parse_coloring(buffer.str(), entry.graph.n);
  auto violations = verify_coloring(entry.graph, a, defects);
  if (violations.empty()) {
    std::cout << "valid\n";
    return kExitSolved;
  }
  for (const auto& v : violations) {
    std::cerr << "vertex " << v.v << ": " << v.same_color_neighbors
              << " same-color neighbors, budget " << v.budget << '\n';
  }
  return kExitUnsat;
}

int cmd_family(const std::string& input) {
  CorpusEntry entry = load_single_graph(input);
  FamilyVerdict verdict = is_in_family(entry.graph);
  std::cout << family_verdict_json(verdict).dump(2) << '\n';
  return verdict ? kExitSolved : kExitUnsat;
}

int cmd_scan_lemmas(const std::string& input) {
  CorpusEntry entry = load_single_graph(input);
  FamilyVerdict verdict = is_in_family(entry.graph);
  if (!verdict) {
    std::cerr << "not in family: " << family_verdict_json(verdict).dump() << '\n';
    return kExitUnsat;
  }
  EmbeddedGraph eg = embed_entry(entry);
  Json reports = Json::array();
  for (const LemmaReport& report : scan_all(eg)) {
    reports.push_back(lemma_report_json(report));
  }
  std::cout << reports.dump(2) << '\n';
  return kExitSolved;
}

int cmd_discharge(const std::string& input, const std::string& rules_spec) {
  bool use_builtin = false;
  RuleSet rules = load_rules_or_builtin_equivalent(rules_spec, use_builtin);
  CorpusEntry entry = load_single_graph(input);
  EmbeddedGraph eg = embed_entry(entry);
  DischargeResult result = use_builtin ? apply_builtin_rules(eg) : evaluate(eg, rules);
  auto cases = case_analysis_check(eg, result.mu_star);
  std::cout << discharge_report_json(eg, result, cases).dump(2) << '\n';
  return kExitSolved;
}

int cmd_corpus_run(const std::vector<std::string>& paths, const std::string& defects_text,
                   const std::string& format, int jobs) {
  DefectVector defects = parse_defects(defects_text);
  std::vector<std::string> load_errors;
  std::vector<std::filesystem::path> fs_paths(paths.begin(), paths.end());
  auto entries = load_corpus(fs_paths, load_errors);
  for (const auto& err : load_errors) std::cerr << "corpus: " << err << '\n';

  std::vector<CorpusAnalysis> results(entries.size());
  parallel_for(static_cast<int>(entries.size()), jobs,
               [&](int i) { results[i] = analyze_entry(entries[i], defects); });

  int family_count = 0;
  int sat_count = 0;
  int violations = 0;
  for (const auto& r : results) {
    family_count += r.family;
    sat_count += r.family && r.satisfiable;
    violations += r.theorem_violation;
  }

  if (format == "csv") {
    std::cout << "source,index,n,m,in_family,satisfiable,theorem_violation\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const Json& rec = results[i].record;
      std::cout << rec["source"].get<std::string>() << ',' << rec["index"] << ','
                << rec["n"] << ',' << rec["m"] << ',' << (results[i].family ? 1 : 0) << ','
                << (results[i].family ? (results[i].satisfiable ? "1" : "0") : "") << ','
                << (results[i].theorem_violation ? 1 : 0) << '\n';
    }
  } else {
    Json records = Json::array();
    for (auto& r : results) records.push_back(std::move(r.record));
    Json out{{"schema", kReportSchema},
             {"defects", defects.d},
             {"graphs", entries.size()},
             {"family_members", family_count},
             {"satisfiable", sat_count},
             {"theorem_violations", violations},
             {"load_errors", load_errors},
             {"records", std::move(records)}};
    std::cout << out.dump(2) << '\n';
  }
  return violations == 0 ? kExitSolved : kExitUnsat;
}

int cmd_conjecture_sweep(const std::vector<std::string>& paths, const std::string& format,
                         int jobs) {
  const std::vector<std::vector<int>> sweep{{0, 6}, {1, 5}, {2, 4}, {3, 3}};
  std::vector<std::string> load_errors;
  std::vector<std::filesystem::path> fs_paths(paths.begin(), paths.end());
  auto entries = load_corpus(fs_paths, load_errors);
  for (const auto& err : load_errors) std::cerr << "corpus: " << err << '\n';

  std::vector<char> in_family(entries.size(), 0);
  std::vector<std::array<char, 4>> sat(entries.size());
  parallel_for(static_cast<int>(entries.size()), jobs, [&](int i) {
    in_family[i] = is_in_family(entries[i].graph).in_family ? 1 : 0;
    if (!in_family[i]) return;
    for (std::size_t d = 0; d < sweep.size(); ++d) {
      DefectVector dv{sweep[d]};
      sat[i][d] = solve(entries[i].graph, dv).has_value() ? 1 : 0;
    }
  });

  int members = 0;
  std::array<int, 4> satisfiable{};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!in_family[i]) continue;
    ++members;
    for (std::size_t d = 0; d < sweep.size(); ++d) satisfiable[d] += sat[i][d];
  }

  if (format == "csv") {
    std::cout << "d1,d2,family_members,satisfiable,unsatisfiable\n";
    for (std::size_t d = 0; d < sweep.size(); ++d) {
      std::cout << sweep[d][0] << ',' << sweep[d][1] << ',' << members << ','
                << satisfiable[d] << ',' << members - satisfiable[d] << '\n';
    }
  } else {
    Json rows = Json::array();
    for (std::size_t d = 0; d < sweep.size(); ++d) {
      rows.push_back(Json{{"defects", sweep[d]},
                          {"family_members", members},
                          {"satisfiable", satisfiable[d]},
                          {"unsatisfiable", members - satisfiable[d]}});
    }
    Json out{{"schema", kReportSchema},
             {"graphs", entries.size()},
             {"load_errors", load_errors},
             {"rows", std::move(rows)}};
    std::cout << out.dump(2) << '\n';
  }
  return kExitSolved;
}

int cmd_gen_small(int max_n, const std::string& output) {
  if (max_n < 1 || max_n > 8) {
    throw Error(Errc::InstanceTooLarge, "gen-small supports 1 <= max-n <= 8");
  }
  std::vector<EmbeddedGraph> graphs;
  for (int n = 1; n <= max_n; ++n) {
    for (std::uint32_t code : generate_small_family_codes(n)) {
      Graph g = graph_from_code(n, code);
      auto eg = find_embedding(g);
      if (eg) graphs.push_back(std::move(*eg));
    }
  }
  auto bytes = serialize_planar_code(graphs);
  if (output.empty() || output == "-") {
    std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                    static_cast<std::streamsize>(bytes.size()));
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw Error(Errc::BadHeader, "cannot open " + output);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
  std::cerr << "wrote " << graphs.size() << " graphs\n";
  return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"defective-coloring toolkit for planar graphs without 3-, 4- and 6-cycles"};
  app.require_subcommand(1);

  std::string input;
  std::string coloring_path;
  std::string defects_text = "2,4";
  std::string output;
  std::string rules_spec = "builtin";
  std::string format = "json";
  std::vector<std::string> paths;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  int max_n = 8;

  auto* solve_cmd = app.add_subcommand("solve", "find a (d1,...,dk)-coloring");
  solve_cmd->add_option("input", input)->required();
  solve_cmd->add_option("--defects", defects_text, "defect budgets, e.g. 2,4");
  solve_cmd->add_option("-o,--output", output, "coloring file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "check a coloring file");
  verify_cmd->add_option("input", input)->required();
  verify_cmd->add_option("coloring", coloring_path)->required();
  verify_cmd->add_option("--defects", defects_text);

  auto* family_cmd = app.add_subcommand("family", "family membership verdict");
  family_cmd->add_option("input", input)->required();

  auto* scan_cmd = app.add_subcommand("scan-lemmas", "minimal-counterexample lemma scan");
  scan_cmd->add_option("input", input)->required();

  auto* discharge_cmd = app.add_subcommand("discharge", "run the discharging engine");
  discharge_cmd->add_option("input", input)->required();
  discharge_cmd->add_option("--rules", rules_spec, "'builtin' or a .drules file");

  auto* corpus_cmd = app.add_subcommand("corpus-run", "batch pipeline over corpus files");
  corpus_cmd->add_option("paths", paths)->required();
  corpus_cmd->add_option("--defects", defects_text);
  corpus_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  corpus_cmd->add_option("--jobs", jobs);

  auto* sweep_cmd = app.add_subcommand("conjecture-sweep",
                                       "solve family members for (0,6),(1,5),(2,4),(3,3)");
  sweep_cmd->add_option("paths", paths)->required();
  sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_option("--jobs", jobs);

  auto* gen_cmd = app.add_subcommand("gen-small", "exhaustive family corpus, planar_code output");
  gen_cmd->add_option("--max-n", max_n, "largest vertex count (<= 8)");
  gen_cmd->add_option("-o,--output", output, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return cmd_solve(input, defects_text, output);
    if (verify_cmd->parsed()) return cmd_verify(input, coloring_path, defects_text);
    if (family_cmd->parsed()) return cmd_family(input);
    if (scan_cmd->parsed()) return cmd_scan_lemmas(input);
    if (discharge_cmd->parsed()) return cmd_discharge(input, rules_spec);
    if (corpus_cmd->parsed()) return cmd_corpus_run(paths, defects_text, format, jobs);
    if (sweep_cmd->parsed()) return cmd_conjecture_sweep(paths, format, jobs);
    if (gen_cmd->parsed()) return cmd_gen_small(max_n, output);
  } catch (const ParseError& e) {
    std::cerr << "defcol: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "defcol: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
