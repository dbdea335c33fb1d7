#pragma once

#include <stdexcept>
#include <string>

#include "msc/schubert.hpp"

namespace msc {

struct ProblemFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedProblem {
  std::string name;
  schubert::SchubertProblem problem;
};

// JSON document: {"name": str?, "n": int, "alpha": [int...],
//                 "conditions": [{"perm": [int...], "count": int?}...]}
// count defaults to 1, name to the file stem; combinatorial validity is the
// caller's business
LoadedProblem load_problem_file(const std::string& path);

}  // namespace msc
