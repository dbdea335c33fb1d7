#include "msc/problem_io.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace msc {

LoadedProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemFileError("cannot open problem file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ProblemFileError("bad JSON in " + path + ": " + e.what());
  }
  try {
    LoadedProblem lp;
    lp.name = doc.value("name", std::filesystem::path(path).stem().string());
    lp.problem.type.n = doc.at("n").get<int>();
    lp.problem.type.alpha = doc.at("alpha").get<std::vector<int>>();
    for (const auto& c : doc.at("conditions")) {
      schubert::Condition cond;
      cond.perm = c.at("perm").get<std::vector<int>>();
      cond.count = c.value("count", 1L);
      lp.problem.conditions.push_back(std::move(cond));
    }
    return lp;
  } catch (const nlohmann::json::exception& e) {
    throw ProblemFileError("bad problem document " + path + ": " + e.what());
  }
}

}  // namespace msc
