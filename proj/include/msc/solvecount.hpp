#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msc/geometry.hpp"
#include "msc/mpoly.hpp"
#include "msc/schubert.hpp"
#include "msc/upoly.hpp"

namespace msc::solvecount {

using exactalg::MPoly;
using exactalg::UPoly;

struct PolynomialSystem {
  std::vector<MPoly> equations;
  std::size_t nvars = 0;
};

// one condition polynomial per point group, in necklace order
PolynomialSystem build_system(const schubert::SchubertProblem& p,
                              const geometry::FlagInstance& inst);

// univariate member of the reduced lex basis with the kept variable last;
// zero polynomial when no such member exists
UPoly eliminate_to_univariate(const PolynomialSystem& sys, std::size_t keep);

// same, also exposing the basis used (for ideal-membership checks)
UPoly eliminate_to_univariate(const PolynomialSystem& sys, std::size_t keep,
                              std::vector<MPoly>& basis_out);

enum class DiscardReason { DegreeDrop, NotSquareFree, ChartMiss };

struct Certification {
  bool accepted = false;
  DiscardReason reason = DiscardReason::ChartMiss;  // meaningful when discarded
  UPoly eliminant;
  long expected_degree = 0;
};

Certification certify(const UPoly& e, long expected);

struct InstanceResult {
  std::string problem_id;
  schubert::Necklace necklace;
  geometry::Mode mode = geometry::Mode::Secant;
  long instance_index = 0;
  std::uint64_t seed = 0;
  Certification cert;
  long num_real = -1;  // -1 when discarded
  long elapsed_ms = 0;
};

// sample, build, eliminate, certify, count; deterministic for fixed inputs
InstanceResult solve_instance(const schubert::SchubertProblem& p, const std::string& problem_id,
                              const schubert::Necklace& nk, geometry::Mode mode,
                              std::uint64_t seed, long instance_index,
                              const geometry::SamplingParams& sampling = {});

const char* status_string(const InstanceResult& r);

}  // namespace msc::solvecount
