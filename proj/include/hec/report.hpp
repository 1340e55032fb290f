#ifndef HEC_REPORT_HPP
#define HEC_REPORT_HPP

#include "hec/json_io.hpp"
#include "hec/search.hpp"

namespace hec {

struct VerifyOptions {
  uint64_t seed = 42;
  int pmax = 7;
  int sign_samples = 200;
  int sweep_metric_samples = 8;
  int search_starts = 12;
  int identity_points = 50;
  int grid_nodes_per_axis = 22;
  bool run_searches = true;
};

struct StepResult {
  std::string step;
  bool pass = true;
  std::string detail;
};

struct CaseVerdictReport {
  std::string name;
  std::vector<long> params;
  Verdict verdict = Verdict::MetadataOnly;
  bool ok = true;
  std::vector<StepResult> steps;
  double best_search_residual = -1.0;
  std::string note;
};

CaseVerdictReport verify_case(const std::string& name, const std::vector<long>& params, const VerifyOptions& opt);

struct PaperReport {
  std::vector<CaseVerdictReport> cases;
  bool ok = true;
  VerifyOptions options;
};

/// Runs every catalog recipe (families sampled per pmax) in table order.
PaperReport verify_paper(const VerifyOptions& opt);

Json case_report_json(const CaseVerdictReport& r);
Json paper_report_json(const PaperReport& r);
std::string paper_report_markdown(const PaperReport& r);
std::string case_report_text(const CaseVerdictReport& r);

}  // namespace hec

#endif
