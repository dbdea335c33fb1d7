#include "msc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "msc/rng.hpp"

namespace msc::harness {

const char* kCsvHeader = "problem_id,necklace,mode,instance_index,seed,status,num_real,elapsed_ms";

const char* mode_string(geometry::Mode m) {
  return m == geometry::Mode::Secant ? "secant" : "osculating";
}

geometry::Mode parse_mode(const std::string& s) {
  if (s == "secant") return geometry::Mode::Secant;
  if (s == "osculating") return geometry::Mode::Osculating;
  throw std::invalid_argument("unknown mode: " + s);
}

ResultRow to_row(const solvecount::InstanceResult& r) {
  ResultRow row;
  row.problem_id = r.problem_id;
  row.necklace = schubert::necklace_to_string(r.necklace);
  row.mode = mode_string(r.mode);
  row.instance_index = r.instance_index;
  row.seed = r.seed;
  row.status = solvecount::status_string(r);
  row.num_real = r.cert.accepted ? r.num_real : -1;
  row.elapsed_ms = r.elapsed_ms;
  return row;
}

std::string encode_row(const ResultRow& r) {
  std::ostringstream os;
  os << r.problem_id << "," << r.necklace << "," << r.mode << "," << r.instance_index << ","
     << r.seed << "," << r.status << ",";
  if (r.num_real >= 0) os << r.num_real;
  os << "," << r.elapsed_ms;
  return os.str();
}

namespace {

bool parse_long(const std::string& s, long& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stol(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoull(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

}  // namespace

bool parse_row(const std::string& line, ResultRow& out, std::string& err) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  if (fields.size() != 8) {
    err = "expected 8 fields, got " + std::to_string(fields.size());
    return false;
  }
  out.problem_id = fields[0];
  out.necklace = fields[1];
  out.mode = fields[2];
  if (!parse_long(fields[3], out.instance_index) || out.instance_index < 0) {
    err = "bad instance_index";
    return false;
  }
  if (!parse_u64(fields[4], out.seed)) {
    err = "bad seed";
    return false;
  }
  out.status = fields[5];
  if (fields[6].empty()) {
    out.num_real = -1;
  } else if (!parse_long(fields[6], out.num_real) || out.num_real < 0) {
    err = "bad num_real";
    return false;
  }
  if (!parse_long(fields[7], out.elapsed_ms)) {
    err = "bad elapsed_ms";
    return false;
  }
  return true;
}

long NecklaceTally::accepted() const {
  long a = 0;
  for (const auto& [k, v] : real_hist) a += v;
  return a;
}

bool Tally::any_cap_hit() const {
  return std::any_of(rows.begin(), rows.end(), [](const NecklaceTally& r) { return r.cap_hit; });
}

namespace {

void tally_one(NecklaceTally& t, const ResultRow& r) {
  ++t.attempts;
  if (r.status == "ok") ++t.real_hist[r.num_real];
  else if (r.status == "discard_degree") ++t.discard_degree;
  else if (r.status == "discard_squarefree") ++t.discard_squarefree;
  else if (r.status == "discard_chart") ++t.discard_chart;
  else throw std::runtime_error("results file has unknown status: " + r.status);
}

// workers claim indices in order; the coordinator consumes completed rows in
// index order so the results file is identical for any worker count
void run_fresh(const ExperimentConfig& cfg, const schubert::Necklace& nk, long start, long cap,
               long target, NecklaceTally& tally, std::ofstream& out) {
  int workers = std::max(1, cfg.workers);
  std::mutex mu;
  std::condition_variable cv;
  long next = start;
  bool stop = false;
  std::map<long, ResultRow> done;
  std::exception_ptr err;

  auto work = [&]() {
    for (;;) {
      long i;
      {
        std::lock_guard<std::mutex> lk(mu);
        if (stop || err || next >= cap) return;
        i = next++;
      }
      try {
        std::uint64_t seed = instance_seed(cfg.master_seed, nk.beads, static_cast<std::uint64_t>(i));
        solvecount::InstanceResult res = solvecount::solve_instance(
            cfg.problem, cfg.problem_id, nk, cfg.mode, seed, i, cfg.sampling);
        std::lock_guard<std::mutex> lk(mu);
        done[i] = to_row(res);
        cv.notify_all();
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        err = std::current_exception();
        cv.notify_all();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  {
    std::unique_lock<std::mutex> lk(mu);
    long expected = start;
    while (tally.accepted() < target && expected < cap && !err) {
      cv.wait(lk, [&] { return err != nullptr || done.count(expected) > 0; });
      if (err) break;
      ResultRow row = done[expected];
      done.erase(expected);
      out << encode_row(row) << "\n";
      out.flush();
      tally_one(tally, row);
      ++expected;
    }
    stop = true;
  }
  for (auto& t : pool) t.join();
  out.flush();
  if (err) std::rethrow_exception(err);
}

}  // namespace

Tally run(const ExperimentConfig& cfg) {
  schubert::Validity v = schubert::validate_problem(cfg.problem);
  if (!v.valid) throw std::invalid_argument("harness: invalid problem: " + v.reason);
  if (cfg.target < 1) throw std::invalid_argument("harness: target must be >= 1");
  if (cfg.out_path.empty()) throw std::invalid_argument("harness: output path required");

  long degree = schubert::schubert_degree(cfg.problem);
  std::vector<schubert::Necklace> all = schubert::enumerate_necklaces(cfg.problem);
  std::vector<schubert::Necklace> selected;
  switch (cfg.selection) {
    case Selection::All: selected = all; break;
    case Selection::MonotoneOnly:
      for (const auto& nk : all)
        if (schubert::is_monotone(nk)) selected.push_back(nk);
      break;
    case Selection::Explicit:
      for (const auto& nk : all) {
        bool wanted = false;
        for (const auto& want : cfg.necklaces)
          if (schubert::canonical_necklace(want.beads) == nk) wanted = true;
        if (wanted) selected.push_back(nk);
      }
      if (selected.size() != cfg.necklaces.size())
        throw std::invalid_argument("harness: necklace not in the problem's enumeration");
      break;
  }

  // resume: load rows already on disk for this problem and mode
  std::map<std::string, std::map<long, ResultRow>> stored;
  bool existed = std::filesystem::exists(cfg.out_path) &&
                 std::filesystem::file_size(cfg.out_path) > 0;
  if (existed) {
    std::ifstream in(cfg.out_path);
    if (!in) throw std::runtime_error("harness: cannot read results file: " + cfg.out_path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (lineno == 1) {
        if (line != kCsvHeader)
          throw std::runtime_error("harness: results file has an unexpected header");
        continue;
      }
      if (line.empty()) continue;
      ResultRow row;
      std::string err;
      if (!parse_row(line, row, err))
        throw std::runtime_error("harness: corrupt results row at line " + std::to_string(lineno) +
                                 ": " + err);
      if (row.problem_id == cfg.problem_id && row.mode == mode_string(cfg.mode))
        stored[row.necklace][row.instance_index] = row;
    }
  }

  std::ofstream out(cfg.out_path, std::ios::app);
  if (!out) throw std::runtime_error("harness: cannot open results file: " + cfg.out_path);
  if (!existed) out << kCsvHeader << "\n";

  long cap = cfg.attempt_cap < 0 ? 4 * cfg.target : cfg.attempt_cap;

  Tally tally;
  tally.problem_id = cfg.problem_id;
  tally.degree = degree;
  for (const schubert::Necklace& nk : selected) {
    NecklaceTally nt;
    nt.necklace = nk;
    nt.monotone = schubert::is_monotone(nk);
    const auto& have = stored[schubert::necklace_to_string(nk)];
    long idx = 0;
    while (nt.accepted() < cfg.target && idx < cap) {
      auto it = have.find(idx);
      if (it == have.end()) break;
      tally_one(nt, it->second);
      ++idx;
    }
    if (nt.accepted() < cfg.target && idx < cap)
      run_fresh(cfg, nk, idx, cap, cfg.target, nt, out);
    nt.cap_hit = nt.accepted() < cfg.target;
    tally.rows.push_back(std::move(nt));
  }
  return tally;
}

std::string report(const Tally& t, ReportFormat f) {
  std::vector<long> cols;
  for (long c = t.degree % 2; c <= t.degree; c += 2) cols.push_back(c);
  std::ostringstream os;
  if (f == ReportFormat::Markdown) {
    os << "| Necklace |";
    for (long c : cols) os << " " << c << " |";
    os << " Total |\n|---|";
    for (std::size_t i = 0; i <= cols.size(); ++i) os << "---:|";
    os << "\n";
  } else {
    os << "necklace";
    for (long c : cols) os << "," << c;
    os << ",total\n";
  }
  if (t.rows.empty()) return os.str();

  std::vector<long> col_total(cols.size(), 0);
  long grand = 0;
  for (const NecklaceTally& row : t.rows) {
    std::string name = schubert::necklace_to_string(row.necklace);
    if (f == ReportFormat::Markdown) os << "| " << name << " |";
    else os << name;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      long n = 0;
      auto it = row.real_hist.find(cols[i]);
      if (it != row.real_hist.end()) n = it->second;
      col_total[i] += n;
      if (f == ReportFormat::Markdown) os << " " << n << " |";
      else os << "," << n;
    }
    grand += row.accepted();
    if (f == ReportFormat::Markdown) os << " " << row.accepted() << " |\n";
    else os << "," << row.accepted() << "\n";
  }
  if (f == ReportFormat::Markdown) {
    os << "| Total |";
    for (long n : col_total) os << " " << n << " |";
    os << " " << grand << " |\n";
  } else {
    os << "total";
    for (long n : col_total) os << "," << n;
    os << "," << grand << "\n";
  }
  return os.str();
}

AuditReport audit(const std::string& results_path, const schubert::SchubertProblem& problem,
                  double recompute_fraction) {
  AuditReport rep;
  long degree = schubert::schubert_degree(problem);
  std::ifstream in(results_path);
  if (!in) throw std::runtime_error("audit: cannot read results file: " + results_path);

  std::vector<std::pair<std::size_t, ResultRow>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) {
      if (line != kCsvHeader) rep.issues.push_back({lineno, "unexpected header"});
      continue;
    }
    if (line.empty()) continue;
    ResultRow row;
    std::string err;
    if (!parse_row(line, row, err)) {
      rep.issues.push_back({lineno, "corrupt row: " + err});
      continue;
    }
    rows.emplace_back(lineno, row);
  }

  for (const auto& [ln, row] : rows) {
    ++rep.rows_total;
    if (row.status == "ok") {
      ++rep.rows_ok;
      if (row.num_real < 0) {
        rep.issues.push_back({ln, "accepted row missing num_real"});
      } else {
        if ((degree - row.num_real) % 2 != 0)
          rep.issues.push_back({ln, "parity violation: real=" + std::to_string(row.num_real) +
                                        " degree=" + std::to_string(degree)});
        if (row.num_real > degree)
          rep.issues.push_back({ln, "bound violation: real=" + std::to_string(row.num_real) +
                                        " degree=" + std::to_string(degree)});
      }
    } else if (row.status == "discard_degree" || row.status == "discard_squarefree" ||
               row.status == "discard_chart") {
      ++rep.rows_discarded;
      if (row.num_real >= 0) rep.issues.push_back({ln, "discarded row carries num_real"});
    } else {
      rep.issues.push_back({ln, "unknown status: " + row.status});
    }
  }

  long stride = 0;
  if (recompute_fraction > 0)
    stride = recompute_fraction >= 1 ? 1
                                     : static_cast<long>(std::ceil(1.0 / recompute_fraction));
  if (stride > 0) {
    for (std::size_t k = 0; k < rows.size(); k += static_cast<std::size_t>(stride)) {
      const auto& [ln, row] = rows[k];
      schubert::Necklace nk;
      geometry::Mode mode = geometry::Mode::Secant;
      try {
        nk = schubert::parse_necklace(row.necklace);
        mode = parse_mode(row.mode);
      } catch (const std::exception& e) {
        rep.issues.push_back({ln, std::string("cannot recompute: ") + e.what()});
        continue;
      }
      ++rep.recomputed;
      solvecount::InstanceResult res = solvecount::solve_instance(
          problem, row.problem_id, nk, mode, row.seed, row.instance_index);
      ResultRow fresh = to_row(res);
      if (fresh.status != row.status || fresh.num_real != row.num_real) {
        ++rep.mismatches;
        rep.issues.push_back({ln, "recomputation mismatch: stored " + row.status + "/" +
                                      std::to_string(row.num_real) + " fresh " + fresh.status +
                                      "/" + std::to_string(fresh.num_real)});
      }
    }
  }

  rep.passed = rep.issues.empty() && rep.mismatches == 0;
  std::ostringstream os;
  os << "rows=" << rep.rows_total << " ok=" << rep.rows_ok << " discarded=" << rep.rows_discarded
     << " recomputed=" << rep.recomputed << " mismatches=" << rep.mismatches
     << " issues=" << rep.issues.size() << "\n";
  if (rep.rows_total > 0)
    os << "discard_rate=" << static_cast<double>(rep.rows_discarded) / rep.rows_total << "\n";
  for (const auto& is : rep.issues) os << "line " << is.line << ": " << is.what << "\n";
  os << (rep.passed ? "audit: PASS" : "audit: FAIL") << "\n";
  rep.text = os.str();
  return rep;
}

}  // namespace msc::harness
