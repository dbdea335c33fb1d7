#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "msc/geometry.hpp"
#include "msc/schubert.hpp"
#include "msc/solvecount.hpp"

namespace msc::harness {

enum class Selection { All, MonotoneOnly, Explicit };
enum class ReportFormat { Markdown, Csv };

struct ExperimentConfig {
  schubert::SchubertProblem problem;
  std::string problem_id;
  geometry::Mode mode = geometry::Mode::Secant;
  Selection selection = Selection::All;
  std::vector<schubert::Necklace> necklaces;  // used when selection == Explicit
  long target = 1;                            // accepted instances per necklace
  std::uint64_t master_seed = 0;
  int workers = 1;
  std::string out_path;
  geometry::SamplingParams sampling;
  long attempt_cap = -1;  // < 0: default 4x target; 0: dry run
};

struct NecklaceTally {
  schubert::Necklace necklace;
  bool monotone = false;
  std::map<long, long> real_hist;  // real count -> accepted instances
  long discard_degree = 0;
  long discard_squarefree = 0;
  long discard_chart = 0;
  long attempts = 0;
  bool cap_hit = false;
  long accepted() const;
};

struct Tally {
  std::string problem_id;
  long degree = 0;
  std::vector<NecklaceTally> rows;  // monotone first
  bool any_cap_hit() const;
};

// runs (or resumes) the experiment, appending one CSV row per attempt
Tally run(const ExperimentConfig& cfg);

// rows = necklaces monotone first, columns = parity-correct real counts
// ascending plus a Total column, final Total row
std::string report(const Tally& t, ReportFormat f);

struct AuditIssue {
  std::size_t line = 0;  // 1-based line number in the results file
  std::string what;
};

struct AuditReport {
  long rows_total = 0;
  long rows_ok = 0;
  long rows_discarded = 0;
  long recomputed = 0;
  long mismatches = 0;
  std::vector<AuditIssue> issues;
  bool passed = false;
  std::string text;
};

// parity/bound check on every row, deterministic recomputation of a sample,
// and a discard-rate summary
AuditReport audit(const std::string& results_path, const schubert::SchubertProblem& problem,
                  double recompute_fraction);

// results file codec
extern const char* kCsvHeader;

struct ResultRow {
  std::string problem_id;
  std::string necklace;
  std::string mode;
  long instance_index = 0;
  std::uint64_t seed = 0;
  std::string status;
  long num_real = -1;  // -1 encodes the empty field
  long elapsed_ms = 0;
};

ResultRow to_row(const solvecount::InstanceResult& r);
std::string encode_row(const ResultRow& r);
bool parse_row(const std::string& line, ResultRow& out, std::string& err);

const char* mode_string(geometry::Mode m);
geometry::Mode parse_mode(const std::string& s);

}  // namespace msc::harness
