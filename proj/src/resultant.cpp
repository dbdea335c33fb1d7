#include "msc/resultant.hpp"

#include <stdexcept>

namespace msc::exactalg {

MPoly mpoly_divexact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("mpoly_divexact: division by zero");
  MPoly rem = a;
  MPoly quo(a.nvars());
  const auto& [eb, cb] = b.leading_term();
  while (!rem.is_zero()) {
    const auto& [er, cr] = rem.leading_term();
    Exponents q(er.size());
    for (std::size_t i = 0; i < er.size(); ++i) {
      if (er[i] < eb[i]) throw std::logic_error("mpoly_divexact: inexact division");
      q[i] = er[i] - eb[i];
    }
    MPoly t(a.nvars());
    t.add_term(q, cr / cb);
    quo = quo + t;
    rem = rem - t * b;
  }
  return quo;
}

namespace {

// univariate view: index = power of the eliminated variable, coefficients are
// MPoly in the remaining variables (same arity, that variable unused)
using UV = std::vector<MPoly>;

int deg(const UV& a) { return static_cast<int>(a.size()) - 1; }

void trim(UV& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// R = lc(B)^(deg A - deg B + 1) * A mod B, the classical pseudo-remainder
UV prem(UV a, const UV& b) {
  const int db = deg(b);
  const MPoly& lb = b.back();
  int delta = deg(a) - db;
  int steps = 0;
  while (deg(a) >= db && !a.empty()) {
    int da = deg(a);
    MPoly la = a.back();
    for (auto& v : a) v = v * lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] = a[da - db + i] - la * b[i];
    trim(a);
    ++steps;
  }
  // pad to the full lc(B)^(delta+1) multiplier the subresultant bookkeeping expects
  for (; steps < delta + 1; ++steps)
    for (auto& v : a) v = v * lb;
  return a;
}

MPoly mpow(const MPoly& base, int k) {
  return base.pow(static_cast<unsigned>(k));
}

// resultant via the subresultant PRS; A, B nonzero
MPoly subresultant_res(UV a, UV b, std::size_t nvars) {
  int s = 1;
  if (deg(a) < deg(b)) {
    if ((deg(a) & 1) && (deg(b) & 1)) s = -s;
    std::swap(a, b);
  }
  if (deg(b) == 0) {
    MPoly r = mpow(b[0], deg(a));
    return s < 0 ? -r : r;
  }
  MPoly g = MPoly::constant(nvars, Rational(1));
  MPoly h = g;
  while (true) {
    int da = deg(a), db = deg(b);
    int delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    UV r = prem(a, b);
    a = std::move(b);
    if (r.empty()) return MPoly(nvars);  // positive-degree common factor
    MPoly divisor = g * mpow(h, delta);
    b = r;
    for (auto& v : b) v = mpoly_divexact(v, divisor);
    g = a.back();
    h = delta == 0 ? h : mpoly_divexact(mpow(g, delta), mpow(h, delta - 1));
    if (deg(b) == 0) {
      int dfin = deg(a);
      MPoly res = mpoly_divexact(mpow(b[0], dfin), mpow(h, dfin - 1));
      return s < 0 ? -res : res;
    }
  }
}

}  // namespace

MPoly resultant(const MPoly& p, const MPoly& q, std::size_t var) {
  if (p.nvars() != q.nvars()) throw std::invalid_argument("resultant: mixed variable counts");
  if (var >= p.nvars()) throw std::invalid_argument("resultant: variable out of range");
  if (p.is_zero() || q.is_zero() || p.degree_in(var) < 1 || q.degree_in(var) < 1)
    throw std::invalid_argument("resultant: both arguments need positive degree in var");
  UV a = q.coeffs_in(var);
  UV b = p.coeffs_in(var);
  trim(a);
  trim(b);
  return subresultant_res(std::move(a), std::move(b), p.nvars());
}

}  // namespace msc::exactalg
