#include "msc/solvecount.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

#include "msc/errors.hpp"
#include "msc/groebner.hpp"
#include "msc/sturm.hpp"

namespace msc::solvecount {

PolynomialSystem build_system(const schubert::SchubertProblem& p,
                              const geometry::FlagInstance& inst) {
  for (const schubert::Condition& c : p.conditions)
    if (schubert::length(c.perm) != 1)
      throw UnsupportedProblem("build_system: condition is not simple");
  geometry::Chart chart = geometry::build_chart(p.type);
  PolynomialSystem sys;
  sys.nvars = chart.nvars;
  for (const geometry::PointGroup& g : inst.groups) {
    int a = g.descent;
    std::vector<std::vector<geometry::Rational>> rows;
    if (inst.mode == geometry::Mode::Secant) {
      if (g.params.size() != static_cast<std::size_t>(p.type.n - a))
        throw std::invalid_argument("build_system: wrong secant group size");
      for (const auto& t : g.params) rows.push_back(geometry::moment_row(t, p.type.n));
    } else {
      if (g.params.size() != 1)
        throw std::invalid_argument("build_system: osculating group needs one parameter");
      rows = geometry::osculating_rows(g.params.front(), p.type.n - a, p.type.n);
    }
    sys.equations.push_back(geometry::condition_polynomial(chart, a, rows));
  }
  return sys;
}

UPoly eliminate_to_univariate(const PolynomialSystem& sys, std::size_t keep,
                              std::vector<MPoly>& basis_out) {
  if (keep >= sys.nvars) throw std::invalid_argument("eliminate_to_univariate: bad variable");
  std::vector<std::size_t> priority;
  priority.reserve(sys.nvars);
  for (std::size_t v = 0; v < sys.nvars; ++v)
    if (v != keep) priority.push_back(v);
  priority.push_back(keep);
  basis_out = exactalg::groebner_lex(sys.equations, priority);

  for (const MPoly& g : basis_out)
    if (!g.is_zero() && g.univariate_in(keep)) return g.to_upoly(keep);
  return UPoly();
}

UPoly eliminate_to_univariate(const PolynomialSystem& sys, std::size_t keep) {
  std::vector<MPoly> basis;
  return eliminate_to_univariate(sys, keep, basis);
}

Certification certify(const UPoly& e, long expected) {
  Certification c;
  c.eliminant = e;
  c.expected_degree = expected;
  if (e.degree() < 0) {
    c.reason = DiscardReason::ChartMiss;
    return c;
  }
  if (e.degree() != expected) {
    c.reason = DiscardReason::DegreeDrop;
    return c;
  }
  if (!exactalg::is_squarefree(e)) {
    c.reason = DiscardReason::NotSquareFree;
    return c;
  }
  c.accepted = true;
  return c;
}

InstanceResult solve_instance(const schubert::SchubertProblem& p, const std::string& problem_id,
                              const schubert::Necklace& nk, geometry::Mode mode,
                              std::uint64_t seed, long instance_index,
                              const geometry::SamplingParams& sampling) {
  auto start = std::chrono::steady_clock::now();
  InstanceResult r;
  r.problem_id = problem_id;
  r.necklace = nk;
  r.mode = mode;
  r.instance_index = instance_index;
  r.seed = seed;

  long degree = schubert::schubert_degree(p);
  SplitMix64 rng(seed);
  geometry::FlagInstance inst = geometry::sample_instance(p, nk, mode, rng, sampling);
  PolynomialSystem sys = build_system(p, inst);
  UPoly e = eliminate_to_univariate(sys, sys.nvars - 1);
  r.cert = certify(e, degree);
  if (r.cert.accepted) {
    r.num_real = exactalg::sturm_count(e);
    if (r.num_real > degree)
      throw ContractViolation("solve_instance: real count exceeds degree");
    if ((degree - r.num_real) % 2 != 0)
      throw ContractViolation("solve_instance: real count has wrong parity");
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

const char* status_string(const InstanceResult& r) {
  if (r.cert.accepted) return "ok";
  switch (r.cert.reason) {
    case DiscardReason::DegreeDrop: return "discard_degree";
    case DiscardReason::NotSquareFree: return "discard_squarefree";
    default: return "discard_chart";
  }
}

}  // namespace msc::solvecount
