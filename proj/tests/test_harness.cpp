#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "msc/harness.hpp"
#include "msc/schubert.hpp"

using namespace msc::harness;
using msc::geometry::Mode;
using msc::schubert::FlagType;
using msc::schubert::Necklace;
using msc::schubert::necklace_to_string;
using msc::schubert::SchubertProblem;

namespace {

const SchubertProblem kFourLines{FlagType{{2}, 4}, {{{1, 3, 2, 4}, 4}}};

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = std::string("/tmp/msc_test_") + name + "_" + std::to_string(::getpid()) + ".csv";
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// strips the elapsed_ms column, the only timing-dependent field
std::string drop_elapsed(const std::string& line) {
  auto pos = line.rfind(',');
  return line.substr(0, pos);
}

std::vector<std::string> rows_no_elapsed(const std::string& path) {
  std::vector<std::string> out;
  for (const std::string& l : read_lines(path)) out.push_back(drop_elapsed(l));
  return out;
}

ExperimentConfig base_config(const std::string& out) {
  ExperimentConfig cfg;
  cfg.problem = kFourLines;
  cfg.problem_id = "four_lines";
  cfg.mode = Mode::Secant;
  cfg.selection = Selection::All;
  cfg.target = 5;
  cfg.master_seed = 7;
  cfg.workers = 1;
  cfg.out_path = out;
  return cfg;
}

}  // namespace

TEST_CASE("row codec round trip") {
  ResultRow r;
  r.problem_id = "four_lines";
  r.necklace = "2222";
  r.mode = "secant";
  r.instance_index = 3;
  r.seed = 12345678901234567ULL;
  r.status = "ok";
  r.num_real = 2;
  r.elapsed_ms = 17;
  std::string enc = encode_row(r);
  CHECK(enc == "four_lines,2222,secant,3,12345678901234567,ok,2,17");

  ResultRow back;
  std::string err;
  REQUIRE(parse_row(enc, back, err));
  CHECK(back.problem_id == r.problem_id);
  CHECK(back.necklace == r.necklace);
  CHECK(back.seed == r.seed);
  CHECK(back.num_real == 2);

  // discards carry an empty num_real field
  r.status = "discard_degree";
  r.num_real = -1;
  enc = encode_row(r);
  CHECK(enc == "four_lines,2222,secant,3,12345678901234567,discard_degree,,17");
  REQUIRE(parse_row(enc, back, err));
  CHECK(back.num_real == -1);

  CHECK_FALSE(parse_row("too,few,fields", back, err));
  CHECK_FALSE(parse_row("a,b,c,x,1,ok,2,3", back, err));  // bad index
  CHECK_FALSE(parse_row("a,b,c,1,1,ok,2,3,9", back, err));
  CHECK(parse_mode("secant") == Mode::Secant);
  CHECK(parse_mode("osculating") == Mode::Osculating);
  CHECK_THROWS_AS(parse_mode("other"), std::invalid_argument);
}

TEST_CASE("run reaches the target and persists rows") {
  TempFile tmp("run_basic");
  ExperimentConfig cfg = base_config(tmp.path);
  Tally t = run(cfg);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.degree == 2);
  CHECK(t.rows[0].accepted() == 5);
  CHECK(t.rows[0].monotone);
  CHECK_FALSE(t.any_cap_hit());

  auto lines = read_lines(tmp.path);
  REQUIRE(lines.size() >= 6);
  CHECK(lines[0] == kCsvHeader);
  ResultRow row;
  std::string err;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    REQUIRE(parse_row(lines[i], row, err));
    CHECK(row.problem_id == "four_lines");
    CHECK(row.instance_index == static_cast<long>(i - 1));
  }
}

TEST_CASE("worker count does not change the output") {
  TempFile one("w1"), three("w3");
  ExperimentConfig c1 = base_config(one.path);
  c1.target = 8;
  ExperimentConfig c3 = base_config(three.path);
  c3.target = 8;
  c3.workers = 3;
  Tally t1 = run(c1);
  Tally t3 = run(c3);
  CHECK(t1.rows[0].real_hist == t3.rows[0].real_hist);
  CHECK(rows_no_elapsed(one.path) == rows_no_elapsed(three.path));
}

TEST_CASE("resume completes an interrupted run identically") {
  TempFile full("full"), split("split");
  ExperimentConfig whole = base_config(full.path);
  whole.target = 7;
  Tally tw = run(whole);

  ExperimentConfig part = base_config(split.path);
  part.target = 3;
  run(part);
  ExperimentConfig rest = base_config(split.path);
  rest.target = 7;
  Tally tr = run(rest);

  CHECK(tw.rows[0].real_hist == tr.rows[0].real_hist);
  CHECK(rows_no_elapsed(full.path) == rows_no_elapsed(split.path));

  // resuming a finished run adds nothing
  auto before = read_lines(split.path);
  run(rest);
  CHECK(read_lines(split.path) == before);
}

TEST_CASE("dry run writes only the header") {
  TempFile tmp("dry");
  ExperimentConfig cfg = base_config(tmp.path);
  cfg.attempt_cap = 0;
  Tally t = run(cfg);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].attempts == 0);
  CHECK(t.rows[0].accepted() == 0);
  auto lines = read_lines(tmp.path);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == kCsvHeader);
}

TEST_CASE("attempt cap marks the tally") {
  TempFile tmp("cap");
  ExperimentConfig cfg = base_config(tmp.path);
  cfg.target = 10;
  cfg.attempt_cap = 2;
  Tally t = run(cfg);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].attempts == 2);
  CHECK(t.rows[0].cap_hit);
  CHECK(t.any_cap_hit());
}

TEST_CASE("all-necklace run produces one tally row per class, monotone first") {
  const SchubertProblem flagship{FlagType{{2, 3}, 5},
                                 {{{1, 3, 2, 4, 5}, 4}, {{1, 2, 4, 3, 5}, 4}}};
  TempFile tmp("allneck");
  ExperimentConfig cfg;
  cfg.problem = flagship;
  cfg.problem_id = "fl235";
  cfg.target = 1;
  cfg.master_seed = 11;
  cfg.out_path = tmp.path;
  Tally t = run(cfg);
  REQUIRE(t.rows.size() == 8);
  CHECK(t.degree == 12);
  CHECK(t.rows[0].monotone);
  CHECK(necklace_to_string(t.rows[0].necklace) == "22223333");
  for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK_FALSE(t.rows[i].monotone);
  for (const NecklaceTally& row : t.rows) {
    CHECK(row.accepted() == 1);
    for (const auto& [count, times] : row.real_hist) {
      CHECK(count >= 0);
      CHECK(count <= 12);
      CHECK(count % 2 == 0);
      CHECK(times == 1);
    }
  }
}

TEST_CASE("run validates its configuration") {
  ExperimentConfig cfg = base_config("/tmp/msc_cfg_check.csv");
  cfg.target = 0;
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
  cfg = base_config("");
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
  cfg = base_config("/tmp/msc_cfg_check.csv");
  cfg.selection = Selection::Explicit;
  cfg.necklaces = {Necklace{{2, 2, 2}}};
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
  std::remove("/tmp/msc_cfg_check.csv");
}

TEST_CASE("report layouts") {
  Tally t;
  t.problem_id = "demo";
  t.degree = 12;
  NecklaceTally mono;
  mono.necklace = Necklace{{2, 2, 2, 2, 3, 3, 3, 3}};
  mono.monotone = true;
  mono.real_hist = {{12, 50}};
  mono.attempts = 50;
  NecklaceTally alt;
  alt.necklace = Necklace{{2, 3, 2, 3, 2, 3, 2, 3}};
  alt.real_hist = {{0, 9}, {4, 11}, {12, 30}};
  alt.attempts = 50;
  t.rows = {mono, alt};

  std::string md = report(t, ReportFormat::Markdown);
  std::istringstream ms(md);
  std::string l1, l2, l3, l4, l5;
  std::getline(ms, l1);
  std::getline(ms, l2);
  std::getline(ms, l3);
  std::getline(ms, l4);
  std::getline(ms, l5);
  CHECK(l1 == "| Necklace | 0 | 2 | 4 | 6 | 8 | 10 | 12 | Total |");
  CHECK(l3.find("| 22223333 |") == 0);
  CHECK(l3.find("| 50 | 50 |") != std::string::npos);
  CHECK(l4.find("| 23232323 |") == 0);
  CHECK(l5.find("| Total |") == 0);
  CHECK(l5.find("| 100 |") != std::string::npos);

  std::string csv = report(t, ReportFormat::Csv);
  std::istringstream cs(csv);
  std::getline(cs, l1);
  CHECK(l1 == "necklace,0,2,4,6,8,10,12,total");
  std::getline(cs, l2);
  CHECK(l2 == "22223333,0,0,0,0,0,0,50,50");
  std::getline(cs, l3);
  CHECK(l3 == "23232323,9,0,11,0,0,0,30,50");
  std::getline(cs, l4);
  CHECK(l4 == "total,9,0,11,0,0,0,80,100");

  // empty tally renders just the header
  Tally empty;
  empty.degree = 2;
  std::string md2 = report(empty, ReportFormat::Markdown);
  std::istringstream es(md2);
  int data_lines = 0;
  std::string line;
  std::getline(es, line);
  CHECK(line == "| Necklace | 0 | 2 | Total |");
  while (std::getline(es, line))
    if (!line.empty() && line.find("|---") != 0) ++data_lines;
  CHECK(data_lines == 0);
}

TEST_CASE("audit passes on a clean file and catches tampering") {
  TempFile tmp("audit");
  ExperimentConfig cfg = base_config(tmp.path);
  cfg.target = 6;
  run(cfg);

  AuditReport rep = audit(tmp.path, kFourLines, 0.5);
  CHECK(rep.passed);
  CHECK(rep.mismatches == 0);
  CHECK(rep.rows_total == rep.rows_ok + rep.rows_discarded);
  CHECK(rep.recomputed >= 1);
  CHECK(rep.text.find("audit: PASS") != std::string::npos);

  // break parity on the first data row: num_real 2 -> 1
  auto lines = read_lines(tmp.path);
  std::size_t broken = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto pos = lines[i].find(",ok,2,");
    if (pos != std::string::npos) {
      lines[i].replace(pos, 6, ",ok,1,");
      broken = i + 1;
      break;
    }
  }
  REQUIRE(broken > 0);
  std::ofstream out(tmp.path, std::ios::trunc);
  for (const auto& l : lines) out << l << "\n";
  out.close();

  AuditReport bad = audit(tmp.path, kFourLines, 0.0);
  CHECK_FALSE(bad.passed);
  bool found = false;
  for (const AuditIssue& is : bad.issues)
    found |= (is.line == broken && is.what.find("parity") != std::string::npos);
  CHECK(found);
}

TEST_CASE("audit recomputation catches a forged count") {
  TempFile tmp("forge");
  ExperimentConfig cfg = base_config(tmp.path);
  cfg.target = 4;
  run(cfg);

  // flip one accepted count 2 -> 0: parity still fine, value wrong
  auto lines = read_lines(tmp.path);
  bool flipped = false;
  for (std::size_t i = 1; i < lines.size() && !flipped; ++i) {
    auto pos = lines[i].find(",ok,2,");
    if (pos != std::string::npos) {
      lines[i].replace(pos, 6, ",ok,0,");
      flipped = true;
    }
  }
  REQUIRE(flipped);
  std::ofstream out(tmp.path, std::ios::trunc);
  for (const auto& l : lines) out << l << "\n";
  out.close();

  AuditReport rep = audit(tmp.path, kFourLines, 1.0);
  CHECK_FALSE(rep.passed);
  CHECK(rep.mismatches >= 1);
}

TEST_CASE("audit reports corrupt lines") {
  TempFile tmp("corrupt");
  {
    std::ofstream out(tmp.path);
    out << kCsvHeader << "\n";
    out << "four_lines,2222,secant,0,123,ok,2,5\n";
    out << "not,a,valid,row\n";
  }
  AuditReport rep = audit(tmp.path, kFourLines, 0.0);
  CHECK_FALSE(rep.passed);
  bool found = false;
  for (const AuditIssue& is : rep.issues) found |= is.line == 3;
  CHECK(found);
}
