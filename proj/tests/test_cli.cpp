#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <unistd.h>
#include <vector>

namespace {

struct CmdResult {
  int code = -1;
  std::string out;  // stdout and stderr interleaved
};

CmdResult run_cmd(const std::string& args) {
  std::string cmd = std::string(MSC_BIN) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = ::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string problem(const char* name) {
  return std::string(PROBLEMS_DIR) + "/" + name;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

TEST_CASE("degree command") {
  CmdResult lines = run_cmd("degree --problem " + problem("four_lines.json"));
  CHECK(lines.code == 0);
  CHECK(lines.out == "2\n");

  CmdResult flagship = run_cmd("degree --problem " + problem("fl235_d2x4_d3x4.json"));
  CHECK(flagship.code == 0);
  CHECK(flagship.out == "12\n");
}

TEST_CASE("invalid problem file fails validation with the reason") {
  CmdResult r = run_cmd("degree --problem " + problem("fl236_d2x3_d3x5.json"));
  CHECK(r.code == 3);
  CHECK(r.out.find("total length 8 != dimension 11") != std::string::npos);
}

TEST_CASE("missing and malformed files exit with the parse code") {
  CmdResult missing = run_cmd("degree --problem /tmp/no_such_problem_file.json");
  CHECK(missing.code == 2);

  std::string bad = "/tmp/msc_cli_bad_" + std::to_string(::getpid()) + ".json";
  FILE* f = ::fopen(bad.c_str(), "w");
  ::fputs("{ not json", f);
  ::fclose(f);
  CmdResult mal = run_cmd("degree --problem " + bad);
  CHECK(mal.code == 2);
  std::remove(bad.c_str());

  CmdResult noargs = run_cmd("degree");
  CHECK(noargs.code == 2);
  CmdResult badsub = run_cmd("frobnicate");
  CHECK(badsub.code == 2);
  CmdResult help = run_cmd("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("degree") != std::string::npos);
  CHECK(help.out.find("solve-one") != std::string::npos);
}

TEST_CASE("necklaces command") {
  CmdResult r = run_cmd("necklaces --problem " + problem("fl235_d2x4_d3x4.json"));
  CHECK(r.code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "22223333 (monotone)");
  for (std::size_t i = 1; i < lines.size(); ++i)
    CHECK(lines[i].find("monotone") == std::string::npos);

  CmdResult four = run_cmd("necklaces --problem " + problem("four_lines.json"));
  CHECK(four.code == 0);
  auto fl = split_lines(four.out);
  REQUIRE(fl.size() == 1);
  CHECK(fl[0] == "2222 (monotone)");
}

TEST_CASE("solve-one prints a result line") {
  CmdResult r = run_cmd("solve-one --problem " + problem("four_lines.json") +
                        " --necklace 2222 --mode secant --seed 11 --index 0");
  CHECK(r.code == 0);
  CHECK(r.out.find("ok, real=2") != std::string::npos);
  CHECK(r.out.find("eliminant_degree=2") != std::string::npos);

  // necklace input is canonicalized before matching
  CmdResult rot = run_cmd("solve-one --problem " + problem("fl235_d2x4_d3x4.json") +
                          " --necklace 32323232 --mode secant --seed 4 --index 1");
  CHECK(rot.code == 0);

  CmdResult unknown = run_cmd("solve-one --problem " + problem("four_lines.json") +
                              " --necklace 2233 --mode secant --seed 1 --index 0");
  CHECK(unknown.code == 3);

  CmdResult badmode = run_cmd("solve-one --problem " + problem("four_lines.json") +
                              " --necklace 2222 --mode sideways --seed 1 --index 0");
  CHECK(badmode.code != 0);
}

TEST_CASE("run then report round trip") {
  std::string out = "/tmp/msc_cli_run_" + std::to_string(::getpid()) + ".csv";
  std::remove(out.c_str());

  CmdResult r = run_cmd("run --problem " + problem("four_lines.json") +
                        " --instances 5 --necklaces all --mode secant --seed 3 --jobs 2 --out " + out);
  CHECK(r.code == 0);
  CHECK(r.out.find("| Necklace | 0 | 2 | Total |") != std::string::npos);
  CHECK(r.out.find("| 2222 |") != std::string::npos);

  CmdResult md = run_cmd("report --in " + out + " --format markdown --problem " +
                         problem("four_lines.json"));
  CHECK(md.code == 0);
  CHECK(md.out.find("| Necklace | 0 | 2 | Total |") != std::string::npos);
  CHECK(md.out.find("| Total |") != std::string::npos);

  CmdResult csv = run_cmd("report --in " + out + " --format csv --problem " +
                          problem("four_lines.json"));
  CHECK(csv.code == 0);
  CHECK(csv.out.find("necklace,0,2,total") != std::string::npos);

  CmdResult aud = run_cmd("audit --in " + out + " --problem " + problem("four_lines.json") +
                          " --fraction 1.0");
  CHECK(aud.code == 0);
  CHECK(aud.out.find("audit: PASS") != std::string::npos);

  std::remove(out.c_str());
}

TEST_CASE("report on a missing results file fails") {
  CmdResult r = run_cmd("report --in /tmp/msc_no_results.csv --format markdown --problem " +
                        problem("four_lines.json"));
  CHECK(r.code != 0);
}

TEST_CASE("exceeding the attempt cap is a runtime failure") {
  std::string out = "/tmp/msc_cli_cap_" + std::to_string(::getpid()) + ".csv";
  std::remove(out.c_str());
  CmdResult r = run_cmd("run --problem " + problem("four_lines.json") +
                        " --instances 50 --necklaces all --mode secant --seed 3 --cap 2 --out " +
                        out);
  CHECK(r.code == 4);
  CHECK(r.out.find("cap") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("worker count defaults from the environment") {
  std::string a = "/tmp/msc_cli_env_a_" + std::to_string(::getpid()) + ".csv";
  std::string b = "/tmp/msc_cli_env_b_" + std::to_string(::getpid()) + ".csv";
  std::remove(a.c_str());
  std::remove(b.c_str());
  CmdResult r1 = run_cmd("run --problem " + problem("four_lines.json") +
                         " --instances 5 --necklaces all --mode secant --seed 8 --jobs 1 --out " + a);
  CHECK(r1.code == 0);

  std::string cmd = "MSC_JOBS=3 " + std::string(MSC_BIN) + " run --problem " +
                    problem("four_lines.json") +
                    " --instances 5 --necklaces all --mode secant --seed 8 --out " + b + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (::fread(buf.data(), 1, buf.size(), pipe) > 0) {}
  CHECK(WEXITSTATUS(::pclose(pipe)) == 0);

  // same rows regardless of worker source, elapsed column aside
  auto strip = [](const std::string& path) {
    std::vector<std::string> rows;
    FILE* f = ::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char line[512];
    while (::fgets(line, sizeof line, f)) {
      std::string s(line);
      while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
      rows.push_back(s.substr(0, s.rfind(',')));
    }
    ::fclose(f);
    return rows;
  };
  CHECK(strip(a) == strip(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}
