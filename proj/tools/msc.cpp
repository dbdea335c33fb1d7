#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msc/errors.hpp"
#include "msc/harness.hpp"
#include "msc/problem_io.hpp"
#include "msc/rng.hpp"
#include "msc/schubert.hpp"
#include "msc/solvecount.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitRuntime = 4;

struct Invalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

msc::LoadedProblem load_valid(const std::string& path) {
  msc::LoadedProblem lp = msc::load_problem_file(path);
  msc::schubert::Validity v = msc::schubert::validate_problem(lp.problem);
  if (!v.valid) throw Invalid("invalid problem: " + v.reason);
  return lp;
}

int default_jobs() {
  const char* env = std::getenv("MSC_JOBS");
  if (!env) return 1;
  char* end = nullptr;
  long n = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || n < 1) return 1;
  return static_cast<int>(n);
}

msc::schubert::Necklace find_necklace(const msc::schubert::SchubertProblem& p,
                                      const std::string& s) {
  msc::schubert::Necklace want =
      msc::schubert::canonical_necklace(msc::schubert::parse_necklace(s).beads);
  for (const auto& nk : msc::schubert::enumerate_necklaces(p))
    if (nk == want) return nk;
  throw Invalid("necklace " + s + " is not in the problem's enumeration");
}

void cmd_degree(const std::string& problem_path) {
  msc::LoadedProblem lp = load_valid(problem_path);
  std::cout << msc::schubert::schubert_degree(lp.problem) << "\n";
}

void cmd_necklaces(const std::string& problem_path) {
  msc::LoadedProblem lp = load_valid(problem_path);
  for (const auto& nk : msc::schubert::enumerate_necklaces(lp.problem)) {
    std::cout << msc::schubert::necklace_to_string(nk);
    if (msc::schubert::is_monotone(nk)) std::cout << " (monotone)";
    std::cout << "\n";
  }
}

void cmd_solve_one(const std::string& problem_path, const std::string& necklace,
                   const std::string& mode, std::uint64_t seed, long index) {
  msc::LoadedProblem lp = load_valid(problem_path);
  msc::schubert::Necklace nk = find_necklace(lp.problem, necklace);
  msc::geometry::Mode m = msc::harness::parse_mode(mode);
  std::uint64_t iseed = msc::instance_seed(seed, nk.beads, static_cast<std::uint64_t>(index));
  msc::solvecount::InstanceResult r =
      msc::solvecount::solve_instance(lp.problem, lp.name, nk, m, iseed, index);
  std::cout << msc::solvecount::status_string(r);
  if (r.cert.accepted) std::cout << ", real=" << r.num_real;
  std::cout << ", eliminant_degree=" << r.cert.eliminant.degree()
            << ", elapsed_ms=" << r.elapsed_ms << "\n";
}

void cmd_run(const std::string& problem_path, long instances, const std::string& necklaces,
             const std::string& mode, std::uint64_t seed, int jobs, const std::string& out,
             long cap) {
  msc::LoadedProblem lp = load_valid(problem_path);
  msc::harness::ExperimentConfig cfg;
  cfg.problem = lp.problem;
  cfg.problem_id = lp.name;
  cfg.mode = msc::harness::parse_mode(mode);
  cfg.target = instances;
  cfg.master_seed = seed;
  cfg.workers = jobs;
  cfg.out_path = out;
  cfg.attempt_cap = cap;
  if (necklaces == "all") {
    cfg.selection = msc::harness::Selection::All;
  } else if (necklaces == "monotone") {
    cfg.selection = msc::harness::Selection::MonotoneOnly;
  } else {
    cfg.selection = msc::harness::Selection::Explicit;
    std::string cur;
    for (char c : necklaces + ",") {
      if (c == ',') {
        if (!cur.empty()) cfg.necklaces.push_back(find_necklace(lp.problem, cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (cfg.necklaces.empty()) throw Invalid("no necklaces selected");
  }
  msc::harness::Tally tally = msc::harness::run(cfg);
  std::cout << msc::harness::report(tally, msc::harness::ReportFormat::Markdown);
  if (cfg.attempt_cap != 0 && tally.any_cap_hit()) {
    for (const auto& row : tally.rows)
      if (row.cap_hit)
        std::cerr << "attempt cap hit for necklace "
                  << msc::schubert::necklace_to_string(row.necklace) << " ("
                  << row.accepted() << "/" << cfg.target << " accepted)\n";
    throw std::runtime_error("attempt cap exceeded");
  }
}

void cmd_report(const std::string& in_path, const std::string& format,
                const std::string& problem_path) {
  msc::LoadedProblem lp = load_valid(problem_path);
  long degree = msc::schubert::schubert_degree(lp.problem);
  std::vector<msc::schubert::Necklace> order = msc::schubert::enumerate_necklaces(lp.problem);

  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot read results file: " + in_path);
  std::map<std::string, msc::harness::NecklaceTally> by_necklace;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 || line.empty()) continue;
    msc::harness::ResultRow row;
    std::string err;
    if (!msc::harness::parse_row(line, row, err))
      throw std::runtime_error("corrupt results row at line " + std::to_string(lineno) + ": " +
                               err);
    if (row.problem_id != lp.name) continue;
    auto& nt = by_necklace[row.necklace];
    if (row.status == "ok") ++nt.real_hist[row.num_real];
    else if (row.status == "discard_degree") ++nt.discard_degree;
    else if (row.status == "discard_squarefree") ++nt.discard_squarefree;
    else if (row.status == "discard_chart") ++nt.discard_chart;
    ++nt.attempts;
  }

  msc::harness::Tally tally;
  tally.problem_id = lp.name;
  tally.degree = degree;
  for (const auto& nk : order) {
    auto it = by_necklace.find(msc::schubert::necklace_to_string(nk));
    if (it == by_necklace.end()) continue;
    it->second.necklace = nk;
    it->second.monotone = msc::schubert::is_monotone(nk);
    tally.rows.push_back(it->second);
    by_necklace.erase(it);
  }
  for (const auto& [name, nt] : by_necklace)
    std::cerr << "ignoring rows for unknown necklace " << name << "\n";
  msc::harness::ReportFormat f = format == "csv" ? msc::harness::ReportFormat::Csv
                                                 : msc::harness::ReportFormat::Markdown;
  std::cout << msc::harness::report(tally, f);
}

void cmd_audit(const std::string& in_path, const std::string& problem_path, double fraction) {
  msc::LoadedProblem lp = load_valid(problem_path);
  msc::harness::AuditReport rep = msc::harness::audit(in_path, lp.problem, fraction);
  std::cout << rep.text;
  if (!rep.passed) throw std::runtime_error("audit failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert problem formulation and real-solution counting"};
  app.require_subcommand(1);

  std::string problem_path, necklace, mode = "secant", necklaces = "all";
  std::string in_path, format = "markdown", out_path;
  std::uint64_t seed = 0;
  long index = 0, instances = 1, cap = -1;
  int jobs = default_jobs();
  double fraction = 0.1;

  CLI::App* degree = app.add_subcommand("degree", "print the problem degree");
  degree->add_option("--problem", problem_path, "problem file")->required();

  CLI::App* neck = app.add_subcommand("necklaces", "list necklace classes");
  neck->add_option("--problem", problem_path, "problem file")->required();

  CLI::App* one = app.add_subcommand("solve-one", "solve a single instance");
  one->add_option("--problem", problem_path, "problem file")->required();
  one->add_option("--necklace", necklace, "necklace, e.g. 22223333")->required();
  one->add_option("--mode", mode, "secant|osculating");
  one->add_option("--seed", seed, "master seed");
  one->add_option("--index", index, "instance index");

  CLI::App* run = app.add_subcommand("run", "run a batch experiment");
  run->add_option("--problem", problem_path, "problem file")->required();
  run->add_option("--instances", instances, "accepted instances per necklace")->required();
  run->add_option("--necklaces", necklaces, "all|monotone|comma-separated list");
  run->add_option("--mode", mode, "secant|osculating");
  run->add_option("--seed", seed, "master seed");
  run->add_option("--jobs", jobs, "worker count (default MSC_JOBS or 1)");
  run->add_option("--out", out_path, "results CSV path")->required();
  run->add_option("--cap", cap, "attempt cap per necklace (default 4x instances, 0 = dry run)");

  CLI::App* rep = app.add_subcommand("report", "render a results file as a table");
  rep->add_option("--in", in_path, "results CSV path")->required();
  rep->add_option("--format", format, "markdown|csv");
  rep->add_option("--problem", problem_path, "problem file")->required();

  CLI::App* aud = app.add_subcommand("audit", "check a results file");
  aud->add_option("--in", in_path, "results CSV path")->required();
  aud->add_option("--problem", problem_path, "problem file")->required();
  aud->add_option("--fraction", fraction, "recompute fraction (default 0.1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (*degree) cmd_degree(problem_path);
    else if (*neck) cmd_necklaces(problem_path);
    else if (*one) cmd_solve_one(problem_path, necklace, mode, seed, index);
    else if (*run) cmd_run(problem_path, instances, necklaces, mode, seed, jobs, out_path, cap);
    else if (*rep) cmd_report(in_path, format, problem_path);
    else if (*aud) cmd_audit(in_path, problem_path, fraction);
  } catch (const msc::ProblemFileError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const Invalid& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const msc::UnsupportedProblem& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
