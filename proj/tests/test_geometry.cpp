#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "msc/errors.hpp"
#include "msc/geometry.hpp"
#include "msc/mat_det.hpp"
#include "msc/rng.hpp"
#include "msc/schubert.hpp"
#include "oracles.hpp"

using namespace msc::geometry;
using msc::SplitMix64;
using msc::UnsupportedProblem;
using msc::exactalg::make_rational;
using msc::exactalg::MPoly;
using msc::exactalg::Rational;
using msc::exactalg::RationalMatrix;
using msc::schubert::FlagType;
using msc::schubert::Necklace;
using msc::schubert::SchubertProblem;

namespace {

const SchubertProblem kFourLines{FlagType{{2}, 4}, {{{1, 3, 2, 4}, 4}}};
const SchubertProblem kFlagship{FlagType{{2, 3}, 5},
                                {{{1, 3, 2, 4, 5}, 4}, {{1, 2, 4, 3, 5}, 4}}};

RationalMatrix secant_rows(const std::vector<Rational>& pts, int n) {
  RationalMatrix rows;
  for (const Rational& t : pts) rows.push_back(moment_row(t, n));
  return rows;
}

std::vector<Rational> chart_point(const Chart& chart, const std::vector<Rational>& x) {
  REQUIRE(x.size() == chart.nvars);
  return x;
}

// chart rows with variables replaced by the given values
RationalMatrix chart_rows_at(const Chart& chart, const std::vector<Rational>& x) {
  RationalMatrix rows;
  for (const auto& row : chart.entries) {
    std::vector<Rational> r;
    for (const ChartEntry& e : row) {
      switch (e.kind) {
        case EntryKind::Zero: r.emplace_back(0); break;
        case EntryKind::One: r.emplace_back(1); break;
        case EntryKind::Variable: r.push_back(x.at(e.var)); break;
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

TEST_CASE("moment_row") {
  CHECK(moment_row(Rational(2), 5) ==
        std::vector<Rational>{Rational(1), Rational(2), Rational(4), Rational(8), Rational(16)});
  CHECK(moment_row(Rational(0), 4) ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0)});
  CHECK(moment_row(Rational(-1), 5) ==
        std::vector<Rational>{Rational(1), Rational(-1), Rational(1), Rational(-1), Rational(1)});
  CHECK(moment_row(make_rational(1, 2), 3) ==
        std::vector<Rational>{Rational(1), make_rational(1, 2), make_rational(1, 4)});
}

TEST_CASE("osculating_rows") {
  auto at0 = osculating_rows(Rational(0), 2, 5);
  REQUIRE(at0.size() == 2);
  CHECK(at0[0] == std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)});
  CHECK(at0[1] == std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(0), Rational(0)});

  Rational t = make_rational(3, 2);
  auto gen = osculating_rows(t, 2, 5);
  CHECK(gen[0] == moment_row(t, 5));
  CHECK(gen[1] == std::vector<Rational>{Rational(0), Rational(1), 2 * t, 3 * t * t, 4 * t * t * t});

  auto j1 = osculating_rows(t, 1, 5);
  REQUIRE(j1.size() == 1);
  CHECK(j1[0] == moment_row(t, 5));

  // third derivative rows pick up falling factorials
  auto j3 = osculating_rows(Rational(1), 3, 4);
  CHECK(j3[2] == std::vector<Rational>{Rational(0), Rational(0), Rational(2), Rational(6)});

  CHECK_THROWS_AS(osculating_rows(t, 0, 5), std::out_of_range);
  CHECK_THROWS_AS(osculating_rows(t, 5, 5), std::out_of_range);
}

TEST_CASE("build_chart patterns") {
  Chart fl = build_chart(FlagType{{2, 3}, 5});
  REQUIRE(fl.entries.size() == 3);
  REQUIRE(fl.nvars == 8);
  auto kinds = [&](std::size_t r) {
    std::vector<EntryKind> ks;
    for (const ChartEntry& e : fl.entries[r]) ks.push_back(e.kind);
    return ks;
  };
  using K = EntryKind;
  CHECK(kinds(0) == std::vector<K>{K::One, K::Zero, K::Variable, K::Variable, K::Variable});
  CHECK(kinds(1) == std::vector<K>{K::Zero, K::One, K::Variable, K::Variable, K::Variable});
  CHECK(kinds(2) == std::vector<K>{K::Zero, K::Zero, K::One, K::Variable, K::Variable});
  // variables run row-major x1..x8 (0-indexed)
  CHECK(fl.entries[0][2].var == 0);
  CHECK(fl.entries[0][4].var == 2);
  CHECK(fl.entries[1][2].var == 3);
  CHECK(fl.entries[2][3].var == 6);
  CHECK(fl.entries[2][4].var == 7);

  Chart gr = build_chart(FlagType{{2}, 4});
  REQUIRE(gr.entries.size() == 2);
  CHECK(gr.nvars == 4);
  auto gk = [&](std::size_t r) {
    std::vector<EntryKind> ks;
    for (const ChartEntry& e : gr.entries[r]) ks.push_back(e.kind);
    return ks;
  };
  CHECK(gk(0) == std::vector<K>{K::One, K::Zero, K::Variable, K::Variable});
  CHECK(gk(1) == std::vector<K>{K::Zero, K::One, K::Variable, K::Variable});

  Chart line = build_chart(FlagType{{1}, 2});
  REQUIRE(line.entries.size() == 1);
  CHECK(line.nvars == 1);
  CHECK(line.entries[0][0].kind == K::One);
  CHECK(line.entries[0][1].kind == K::Variable);

  CHECK_THROWS_AS(build_chart(FlagType{{3, 2}, 5}), std::invalid_argument);
}

TEST_CASE("condition_polynomial pinned values") {
  Chart fl = build_chart(FlagType{{2, 3}, 5});
  RationalMatrix rows = secant_rows({Rational(1), Rational(2), Rational(3)}, 5);
  MPoly f = condition_polynomial(fl, 2, rows);
  CHECK(f.nvars() == 8);
  std::vector<Rational> zero(8, Rational(0));
  CHECK(f.eval(zero) == Rational(72));

  RationalMatrix with0 = secant_rows({Rational(0), Rational(2), Rational(3)}, 5);
  CHECK(condition_polynomial(fl, 2, with0).eval(zero) == Rational(0));

  CHECK_THROWS_AS(condition_polynomial(fl, 4, rows), std::invalid_argument);
  RationalMatrix short_rows = secant_rows({Rational(1), Rational(2)}, 5);
  CHECK_THROWS_AS(condition_polynomial(fl, 2, short_rows), std::invalid_argument);
}

TEST_CASE("condition_polynomial matches determinant oracle at random points") {
  SplitMix64 rng(404);
  for (const FlagType& ft : {FlagType{{2, 3}, 5}, FlagType{{2}, 4}}) {
    Chart chart = build_chart(ft);
    for (int a : ft.alpha) {
      std::vector<Rational> pts;
      Rational cur(0);
      for (int i = 0; i < ft.n - a; ++i) {
        cur += make_rational(rng.uniform(1, 9), rng.uniform(1, 4));
        pts.push_back(cur);
      }
      MPoly f = condition_polynomial(chart, a, secant_rows(pts, ft.n));
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<Rational> x;
        for (std::size_t i = 0; i < chart.nvars; ++i)
          x.push_back(make_rational(rng.uniform(-9, 9), rng.uniform(1, 5)));
        RationalMatrix full = chart_rows_at(chart, chart_point(chart, x));
        full.resize(static_cast<std::size_t>(a));
        for (const auto& row : secant_rows(pts, ft.n)) full.push_back(row);
        CHECK(f.eval(x) == oracles::det_cofactor(full));
      }
    }
  }
}

TEST_CASE("condition_polynomial multilinearity and antisymmetry") {
  SplitMix64 rng(505);
  Chart chart = build_chart(FlagType{{2, 3}, 5});
  std::vector<Rational> pts = {Rational(1), Rational(2), Rational(4)};
  RationalMatrix rows = secant_rows(pts, 5);
  MPoly f = condition_polynomial(chart, 2, rows);

  Rational c = make_rational(7, 3);
  RationalMatrix scaled = rows;
  for (Rational& v : scaled[1]) v *= c;
  CHECK(condition_polynomial(chart, 2, scaled) == f * c);

  RationalMatrix swapped = rows;
  std::swap(swapped[0], swapped[2]);
  CHECK(condition_polynomial(chart, 2, swapped) == -f);

  // degree bound: at most the number of variable-bearing chart rows used
  CHECK(f.total_degree() <= 2);
  RationalMatrix two = secant_rows({Rational(1), Rational(3)}, 5);
  CHECK(condition_polynomial(chart, 3, two).total_degree() <= 3);
}

TEST_CASE("sample_instance group shapes") {
  SplitMix64 rng(1);
  Necklace mono{{2, 2, 2, 2, 3, 3, 3, 3}};
  FlagInstance inst = sample_instance(kFlagship, mono, Mode::Secant, rng);
  REQUIRE(inst.groups.size() == 8);
  for (int i = 0; i < 4; ++i) {
    CHECK(inst.groups[i].descent == 2);
    CHECK(inst.groups[i].params.size() == 3);
  }
  for (int i = 4; i < 8; ++i) {
    CHECK(inst.groups[i].descent == 3);
    CHECK(inst.groups[i].params.size() == 2);
  }
  // strict global increase across the concatenation
  Rational prev(-1);
  for (const PointGroup& g : inst.groups)
    for (const Rational& t : g.params) {
      CHECK(t > prev);
      prev = t;
    }

  SplitMix64 rng2(2);
  FlagInstance lines = sample_instance(kFourLines, Necklace{{2, 2, 2, 2}}, Mode::Secant, rng2);
  REQUIRE(lines.groups.size() == 4);
  for (const PointGroup& g : lines.groups) CHECK(g.params.size() == 2);

  SplitMix64 rng3(3);
  FlagInstance osc = sample_instance(kFlagship, mono, Mode::Osculating, rng3);
  REQUIRE(osc.groups.size() == 8);
  for (const PointGroup& g : osc.groups) CHECK(g.params.size() == 1);
  CHECK(osc.mode == Mode::Osculating);
}

TEST_CASE("sample_instance is deterministic in the seed") {
  Necklace mono{{2, 2, 2, 2, 3, 3, 3, 3}};
  SplitMix64 a(42), b(42), c(43);
  FlagInstance ia = sample_instance(kFlagship, mono, Mode::Secant, a);
  FlagInstance ib = sample_instance(kFlagship, mono, Mode::Secant, b);
  FlagInstance ic = sample_instance(kFlagship, mono, Mode::Secant, c);
  REQUIRE(ia.groups.size() == ib.groups.size());
  bool same = true, diff = false;
  for (std::size_t i = 0; i < ia.groups.size(); ++i) {
    same &= ia.groups[i].params == ib.groups[i].params;
    diff |= ia.groups[i].params != ic.groups[i].params;
  }
  CHECK(same);
  CHECK(diff);
}

TEST_CASE("sample_instance follows non-monotone necklace order") {
  SplitMix64 rng(9);
  Necklace alt{{2, 3, 2, 3, 2, 3, 2, 3}};
  FlagInstance inst = sample_instance(kFlagship, alt, Mode::Secant, rng);
  REQUIRE(inst.groups.size() == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(inst.groups[i].descent == alt.beads[i]);
    CHECK(inst.groups[i].params.size() == (alt.beads[i] == 2 ? 3 : 2));
  }
}

TEST_CASE("sample_instance rejects mismatched input") {
  SplitMix64 rng(5);
  Necklace wrong{{2, 2, 3, 3}};
  CHECK_THROWS_AS(sample_instance(kFlagship, wrong, Mode::Secant, rng), std::invalid_argument);
  // single-descent conditions of any length sample fine
  SchubertProblem heavy{FlagType{{2}, 4}, {{{2, 3, 1, 4}, 2}}};
  CHECK_NOTHROW(sample_instance(heavy, Necklace{{2, 2}}, Mode::Secant, rng));
  // a two-descent condition has no single bead value
  SchubertProblem twodesc{FlagType{{1, 2}, 3}, {{{3, 2, 1}, 1}}};
  CHECK_THROWS_AS(sample_instance(twodesc, Necklace{{1}}, Mode::Secant, rng), UnsupportedProblem);
}

TEST_CASE("secant flags degenerate to osculating flags") {
  CHECK(secant_to_osculating_limit_check(2, FlagType{{2}, 4}, Rational(0)));
  CHECK(secant_to_osculating_limit_check(2, FlagType{{2, 3}, 5}, Rational(0)));
  CHECK(secant_to_osculating_limit_check(3, FlagType{{2, 3}, 5}, Rational(1)));
}
