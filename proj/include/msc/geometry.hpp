#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "msc/mpoly.hpp"
#include "msc/rational.hpp"
#include "msc/rng.hpp"
#include "msc/schubert.hpp"

namespace msc::geometry {

using exactalg::MPoly;
using exactalg::Rational;

// powers (1, t, ..., t^(n-1))
std::vector<Rational> moment_row(const Rational& t, int n);

// rows 0..j-1: successive formal derivatives of the moment row at t
std::vector<std::vector<Rational>> osculating_rows(const Rational& t, int j, int n);

enum class EntryKind { Zero, One, Variable };

struct ChartEntry {
  EntryKind kind = EntryKind::Zero;
  std::size_t var = 0;  // meaningful for Variable entries
};

// big-cell coordinates: a_k rows of n entries, dim(alpha) variables row-major
struct Chart {
  schubert::FlagType type;
  std::vector<std::vector<ChartEntry>> entries;
  std::size_t nvars = 0;
};

Chart build_chart(const schubert::FlagType& ft);

// determinant of the first a chart rows stacked over the given (n-a) x n rows;
// its vanishing says the a-plane meets the span of the rows
MPoly condition_polynomial(const Chart& chart, int a, const std::vector<std::vector<Rational>>& rows);

enum class Mode { Secant, Osculating };

// one point group per condition, in necklace order; secant groups carry n-a
// parameters, osculating groups one
struct PointGroup {
  int descent = 0;
  std::vector<Rational> params;
};

struct FlagInstance {
  Mode mode = Mode::Secant;
  schubert::Necklace necklace;
  std::vector<PointGroup> groups;
};

struct SamplingParams {
  long num_lo = 1, num_hi = 100;
  long den_lo = 1, den_hi = 10;
};

// strictly increasing positive rationals drawn as cumulative sums, partitioned
// into consecutive groups following the necklace's linear representative
FlagInstance sample_instance(const schubert::SchubertProblem& p, const schubert::Necklace& nk,
                             Mode mode, SplitMix64& rng, const SamplingParams& cfg = {});

// symbolic check that the secant condition polynomial at points s, s+h, ...,
// s+(n-a-1)h degenerates, after removing its content in h, to the osculating
// condition polynomial at s up to a nonzero rational factor
bool secant_to_osculating_limit_check(int a, const schubert::FlagType& ft, const Rational& s);

}  // namespace msc::geometry
