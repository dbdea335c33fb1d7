#include "msc/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "msc/errors.hpp"
#include "msc/mat_det.hpp"

namespace msc::geometry {

std::vector<Rational> moment_row(const Rational& t, int n) {
  std::vector<Rational> row(static_cast<std::size_t>(n));
  Rational p(1);
  for (int c = 0; c < n; ++c) {
    row[static_cast<std::size_t>(c)] = p;
    p *= t;
  }
  return row;
}

std::vector<std::vector<Rational>> osculating_rows(const Rational& t, int j, int n) {
  if (j < 1 || j >= n) throw std::out_of_range("osculating_rows: j out of range");
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(j));
  for (int p = 0; p < j; ++p) {
    std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
    // d^p/dt^p t^c = c!/(c-p)! t^(c-p)
    Rational tp(1);
    for (int c = p; c < n; ++c) {
      long fall = 1;
      for (int q = 0; q < p; ++q) fall *= c - q;
      row[static_cast<std::size_t>(c)] = Rational(fall) * tp;
      tp *= t;
    }
    rows[static_cast<std::size_t>(p)] = std::move(row);
  }
  return rows;
}

Chart build_chart(const schubert::FlagType& ft) {
  if (!schubert::valid_flag_type(ft)) throw std::invalid_argument("build_chart: invalid flag type");
  int n = ft.n;
  int rows = ft.alpha.back();
  Chart ch;
  ch.type = ft;
  ch.entries.assign(static_cast<std::size_t>(rows),
                    std::vector<ChartEntry>(static_cast<std::size_t>(n)));
  std::size_t next_var = 0;
  for (int i = 1; i <= rows; ++i) {
    int al = 0;
    for (int a : ft.alpha)
      if (a >= i) {
        al = a;
        break;
      }
    for (int c = 1; c <= n; ++c) {
      ChartEntry& e = ch.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c - 1)];
      if (c == i) e = {EntryKind::One, 0};
      else if (c <= al) e = {EntryKind::Zero, 0};
      else e = {EntryKind::Variable, next_var++};
    }
  }
  ch.nvars = next_var;
  return ch;
}

namespace {

MPoly entry_poly(const ChartEntry& e, std::size_t arity) {
  switch (e.kind) {
    case EntryKind::Zero: return MPoly(arity);
    case EntryKind::One: return MPoly::constant(arity, Rational(1));
    default: return MPoly::variable(arity, e.var);
  }
}

// shared core: chart rows stacked over arbitrary polynomial rows
MPoly stacked_determinant(const Chart& chart, int a,
                          const std::vector<std::vector<MPoly>>& rows, std::size_t arity) {
  int n = chart.type.n;
  exactalg::MPolyMatrix M;
  M.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < a; ++i) {
    std::vector<MPoly> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
      row.push_back(entry_poly(chart.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)], arity));
    M.push_back(std::move(row));
  }
  for (const auto& r : rows) M.push_back(r);
  return exactalg::mat_det(M);
}

}  // namespace

MPoly condition_polynomial(const Chart& chart, int a,
                           const std::vector<std::vector<Rational>>& rows) {
  const auto& alpha = chart.type.alpha;
  if (std::find(alpha.begin(), alpha.end(), a) == alpha.end())
    throw std::invalid_argument("condition_polynomial: descent not in alpha");
  int n = chart.type.n;
  if (rows.size() != static_cast<std::size_t>(n - a))
    throw std::invalid_argument("condition_polynomial: need n-a rows");
  std::vector<std::vector<MPoly>> prows;
  prows.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("condition_polynomial: row length != n");
    std::vector<MPoly> pr;
    pr.reserve(r.size());
    for (const Rational& x : r) pr.push_back(MPoly::constant(chart.nvars, x));
    prows.push_back(std::move(pr));
  }
  return stacked_determinant(chart, a, prows, chart.nvars);
}

FlagInstance sample_instance(const schubert::SchubertProblem& p, const schubert::Necklace& nk,
                             Mode mode, SplitMix64& rng, const SamplingParams& cfg) {
  schubert::Validity v = schubert::validate_problem(p);
  if (!v.valid) throw std::invalid_argument("sample_instance: invalid problem: " + v.reason);
  std::vector<int> expect;
  for (const auto& c : p.conditions) {
    auto d = schubert::descent_set(c.perm);
    if (d.size() != 1)
      throw UnsupportedProblem("sample_instance: non-Grassmannian condition");
    for (long rep = 0; rep < c.count; ++rep) expect.push_back(d.front());
  }
  std::vector<int> got = nk.beads;
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  if (expect != got)
    throw std::invalid_argument("sample_instance: necklace does not match the problem");
  if (cfg.num_lo < 1 || cfg.num_hi < cfg.num_lo || cfg.den_lo < 1 || cfg.den_hi < cfg.den_lo)
    throw std::invalid_argument("sample_instance: bad sampling parameters");

  FlagInstance inst;
  inst.mode = mode;
  inst.necklace = nk;
  Rational cur(0);
  for (int b : nk.beads) {
    PointGroup g;
    g.descent = b;
    int count = mode == Mode::Secant ? p.type.n - b : 1;
    for (int i = 0; i < count; ++i) {
      long num = rng.uniform(cfg.num_lo, cfg.num_hi);
      long den = rng.uniform(cfg.den_lo, cfg.den_hi);
      cur += exactalg::make_rational(num, den);
      g.params.push_back(cur);
    }
    inst.groups.push_back(std::move(g));
  }
  return inst;
}

bool secant_to_osculating_limit_check(int a, const schubert::FlagType& ft, const Rational& s) {
  Chart chart = build_chart(ft);
  int n = ft.n;
  int j = n - a;
  std::size_t arity = chart.nvars + 1;  // auxiliary variable h appended last
  MPoly h = MPoly::variable(arity, chart.nvars);

  std::vector<std::vector<MPoly>> rows;
  rows.reserve(static_cast<std::size_t>(j));
  for (int l = 0; l < j; ++l) {
    MPoly t = MPoly::constant(arity, s) + MPoly::constant(arity, Rational(l)) * h;
    std::vector<MPoly> row;
    row.reserve(static_cast<std::size_t>(n));
    MPoly p = MPoly::constant(arity, Rational(1));
    for (int c = 0; c < n; ++c) {
      row.push_back(p);
      p = p * t;
    }
    rows.push_back(std::move(row));
  }
  MPoly f = stacked_determinant(chart, a, rows, arity);

  MPoly osc = condition_polynomial(chart, a, osculating_rows(s, j, n)).with_nvars(arity);

  if (f.is_zero()) return osc.is_zero();
  std::vector<MPoly> by_h = f.coeffs_in(chart.nvars);
  std::size_t low = 0;
  while (low < by_h.size() && by_h[low].is_zero()) ++low;
  const MPoly& lead = by_h[low];
  if (osc.is_zero()) return false;

  // equal up to a nonzero rational factor: cross-multiply leading coefficients
  Rational cl = lead.leading_term().second;
  Rational co = osc.leading_term().second;
  return lead * co == osc * cl;
}

}  // namespace msc::geometry
