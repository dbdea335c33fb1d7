#include "msc/groebner.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace msc::exactalg {

namespace {

constexpr int kMaxVars = 16;

// Packed monomial for the engine. Public MPoly stays vector-based; systems
// reaching the engine are small (chart dimensions), so a fixed array with a
// cached total degree keeps comparisons cheap.
struct PM {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;
};

int pm_cmp(const PM& a, const PM& b, MonomialOrder o, int n) {
  if (o != MonomialOrder::Lex && a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  if (o == MonomialOrder::GrevLex) {
    for (int i = n - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
  }
  for (int i = 0; i < n; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  return 0;
}

bool pm_eq(const PM& a, const PM& b, int n) {
  for (int i = 0; i < n; ++i)
    if (a.e[i] != b.e[i]) return false;
  return true;
}

bool pm_divides(const PM& a, const PM& b, int n) {  // a | b
  for (int i = 0; i < n; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

PM pm_mul(const PM& a, const PM& b, int n) {
  PM r;
  for (int i = 0; i < n; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

PM pm_div(const PM& a, const PM& b, int n) {  // a / b, caller checks divisibility
  PM r;
  for (int i = 0; i < n; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

PM pm_lcm(const PM& a, const PM& b, int n) {
  PM r;
  std::uint32_t d = 0;
  for (int i = 0; i < n; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

bool pm_coprime(const PM& a, const PM& b, int n) {
  for (int i = 0; i < n; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

struct ETerm {
  PM m;
  Integer c;
};

// Integer polynomial, terms sorted by decreasing monomial in the active
// order, coefficients coprime overall, leading coefficient positive.
struct EPoly {
  std::vector<ETerm> t;
  long sugar = 0;
  bool zero() const { return t.empty(); }
  const PM& lm() const { return t.front().m; }
  const Integer& lc() const { return t.front().c; }
};

void strip_content(std::vector<ETerm>& t) {
  Integer g(0);
  for (const auto& term : t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(g) != 0 && g != 1)
    for (auto& term : t) mpz_divexact(term.c.get_mpz_t(), term.c.get_mpz_t(), g.get_mpz_t());
}

void normalize(EPoly& p, MonomialOrder o, int n) {
  std::sort(p.t.begin(), p.t.end(),
            [&](const ETerm& a, const ETerm& b) { return pm_cmp(a.m, b.m, o, n) > 0; });
  // combine duplicates, drop zeros
  std::vector<ETerm> out;
  out.reserve(p.t.size());
  for (auto& term : p.t) {
    if (!out.empty() && pm_eq(out.back().m, term.m, n)) out.back().c += term.c;
    else out.push_back(std::move(term));
    if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
  }
  p.t = std::move(out);
  strip_content(p.t);
  if (!p.t.empty() && sgn(p.t.front().c) < 0)
    for (auto& term : p.t) term.c = -term.c;
}

struct PMDescLess {
  MonomialOrder o;
  int n;
  bool operator()(const PM& a, const PM& b) const { return pm_cmp(a, b, o, n) > 0; }
};

// Full normal form over the integers. Reductions scale the running
// polynomial by the (positive) reducer leading coefficient, so previously
// settled terms are rescaled alongside.
EPoly reduce(const EPoly& f, const std::vector<EPoly>& G, MonomialOrder o, int n) {
  std::map<PM, Integer, PMDescLess> w{PMDescLess{o, n}};
  for (const auto& term : f.t) w.emplace(term.m, term.c);
  std::vector<ETerm> out;
  long sugar = f.sugar;
  while (!w.empty()) {
    auto lead = w.begin();
    const EPoly* red = nullptr;
    for (const auto& g : G) {
      if (!g.zero() && pm_divides(g.lm(), lead->first, n)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      out.push_back({lead->first, lead->second});
      w.erase(lead);
      continue;
    }
    PM q = pm_div(lead->first, red->lm(), n);
    Integer d;
    mpz_gcd(d.get_mpz_t(), lead->second.get_mpz_t(), red->lc().get_mpz_t());
    Integer a = red->lc() / d;  // positive, reducers are sign-normalized
    Integer b = lead->second / d;
    if (a != 1) {
      for (auto& [m, c] : w) c *= a;
      for (auto& term : out) term.c *= a;
    }
    for (const auto& term : red->t) {
      PM m = pm_mul(term.m, q, n);
      auto [it, fresh] = w.emplace(m, Integer(0));
      it->second -= b * term.c;
      if (sgn(it->second) == 0) w.erase(it);
    }
    sugar = std::max(sugar, red->sugar + static_cast<long>(q.deg));
  }
  EPoly r;
  r.t = std::move(out);
  r.sugar = sugar;
  strip_content(r.t);
  if (!r.t.empty() && sgn(r.t.front().c) < 0)
    for (auto& term : r.t) term.c = -term.c;
  return r;
}

EPoly spoly(const EPoly& f, const EPoly& g, MonomialOrder o, int n) {
  PM l = pm_lcm(f.lm(), g.lm(), n);
  PM qf = pm_div(l, f.lm(), n);
  PM qg = pm_div(l, g.lm(), n);
  Integer d;
  mpz_gcd(d.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
  Integer cf = g.lc() / d;
  Integer cg = f.lc() / d;
  EPoly s;
  s.t.reserve(f.t.size() + g.t.size());
  for (const auto& term : f.t) s.t.push_back({pm_mul(term.m, qf, n), term.c * cf});
  for (const auto& term : g.t) s.t.push_back({pm_mul(term.m, qg, n), -(term.c * cg)});
  normalize(s, o, n);
  s.sugar = std::max(f.sugar + static_cast<long>(qf.deg), g.sugar + static_cast<long>(qg.deg));
  return s;
}

struct Pair {
  int i, j;
  PM lcm;
  long sugar;
};

struct PairLess {
  MonomialOrder o;
  int n;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = pm_cmp(a.lcm, b.lcm, o, n);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

long pair_sugar(const std::vector<EPoly>& G, int i, int j, const PM& l, int n) {
  long si = G[i].sugar + static_cast<long>(l.deg - G[i].lm().deg);
  long sj = G[j].sugar + static_cast<long>(l.deg - G[j].lm().deg);
  return std::max(si, sj);
}

// Gebauer-Moller pair update: prunes the queue with the chain (B), multiple
// (M), equal-lcm (F) and coprime (T) criteria when criteria are enabled.
void update_pairs(std::set<Pair, PairLess>& pending, const std::vector<EPoly>& G, int t,
                  bool criteria, MonomialOrder o, int n) {
  const PM& lt = G[t].lm();
  if (criteria) {
    for (auto it = pending.begin(); it != pending.end();) {
      if (pm_divides(lt, it->lcm, n) &&
          !pm_eq(pm_lcm(G[it->i].lm(), lt, n), it->lcm, n) &&
          !pm_eq(pm_lcm(G[it->j].lm(), lt, n), it->lcm, n)) {
        it = pending.erase(it);
      } else {
        ++it;
      }
    }
  }
  struct Cand {
    int i;
    PM lcm;
    bool coprime;
    bool dead = false;
  };
  std::vector<Cand> cand;
  cand.reserve(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i)
    if (!G[i].zero())
      cand.push_back({i, pm_lcm(G[i].lm(), lt, n), pm_coprime(G[i].lm(), lt, n)});
  if (criteria) {
    // M: drop candidates whose lcm is strictly divisible by another's
    for (auto& a : cand) {
      for (const auto& b : cand) {
        if (a.i == b.i || b.dead) continue;
        if (pm_divides(b.lcm, a.lcm, n) && !pm_eq(b.lcm, a.lcm, n)) {
          a.dead = true;
          break;
        }
      }
    }
    // F: keep one representative per lcm value, preferring a coprime one so
    // the T criterion below can retire the whole class
    for (auto& a : cand) {
      if (a.dead) continue;
      for (auto& b : cand) {
        if (b.dead || b.i == a.i) continue;
        if (pm_eq(a.lcm, b.lcm, n)) {
          if (a.coprime || !b.coprime) b.dead = true;
          else a.dead = true;
          if (a.dead) break;
        }
      }
    }
    for (auto& a : cand)
      if (a.coprime) a.dead = true;
  }
  for (const auto& a : cand) {
    if (a.dead) continue;
    pending.insert(Pair{a.i, t, a.lcm, pair_sugar(G, a.i, t, a.lcm, n)});
  }
}

std::vector<EPoly> buchberger(std::vector<EPoly> gens, MonomialOrder o, int n, bool criteria) {
  std::vector<EPoly> G;
  std::set<Pair, PairLess> pending{PairLess{o, n}};
  for (auto& g : gens) {
    if (g.zero()) continue;
    G.push_back(std::move(g));
    update_pairs(pending, G, static_cast<int>(G.size()) - 1, criteria, o, n);
  }
  std::size_t processed = 0;
  while (!pending.empty()) {
    if (++processed > 2000000) throw std::runtime_error("buchberger: pair budget exceeded");
    Pair p = *pending.begin();
    pending.erase(pending.begin());
    EPoly s = spoly(G[p.i], G[p.j], o, n);
    if (s.zero()) continue;
    EPoly r = reduce(s, G, o, n);
    if (r.zero()) continue;
    G.push_back(std::move(r));
    update_pairs(pending, G, static_cast<int>(G.size()) - 1, criteria, o, n);
  }
  return G;
}

// minimal basis, then tails fully reduced against the other members
std::vector<EPoly> reduced_basis(std::vector<EPoly> G, MonomialOrder o, int n) {
  std::sort(G.begin(), G.end(),
            [&](const EPoly& a, const EPoly& b) { return pm_cmp(a.lm(), b.lm(), o, n) < 0; });
  std::vector<EPoly> minimal;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& k : minimal)
      if (pm_divides(k.lm(), g.lm(), n)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<EPoly> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      EPoly r = reduce(minimal[i], others, o, n);
      if (r.t.size() != minimal[i].t.size() ||
          !std::equal(r.t.begin(), r.t.end(), minimal[i].t.begin(),
                      [&](const ETerm& a, const ETerm& b) {
                        return pm_eq(a.m, b.m, n) && a.c == b.c;
                      })) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const EPoly& a, const EPoly& b) { return pm_cmp(a.lm(), b.lm(), o, n) > 0; });
  return minimal;
}

int exps_cmp(const Exponents& a, const Exponents& b, MonomialOrder o) {
  unsigned da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (o != MonomialOrder::Lex && da != db) return da < db ? -1 : 1;
  if (o == MonomialOrder::GrevLex) {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

PM pm_from_exps(const Exponents& e) {
  PM m;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0xffff) throw std::invalid_argument("groebner: exponent too large");
    m.e[i] = static_cast<std::uint16_t>(e[i]);
    d += e[i];
  }
  m.deg = d;
  return m;
}

Exponents exps_from_pm(const PM& m, std::size_t nvars) {
  Exponents e(nvars, 0);
  for (std::size_t i = 0; i < nvars; ++i) e[i] = m.e[i];
  return e;
}

EPoly epoly_from_mpoly(const MPoly& p, MonomialOrder o, int n) {
  Integer den(1);
  for (const auto& [e, c] : p.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  EPoly out;
  out.t.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms())
    out.t.push_back({pm_from_exps(e), Integer(c.get_num() * (den / c.get_den()))});
  normalize(out, o, n);
  out.sugar = out.zero() ? 0 : static_cast<long>(out.t.front().m.deg);
  for (const auto& term : out.t)
    out.sugar = std::max(out.sugar, static_cast<long>(term.m.deg));
  return out;
}

MPoly mpoly_from_epoly_monic(const EPoly& p, std::size_t nvars) {
  MPoly out(nvars);
  if (p.zero()) return out;
  Rational inv = Rational(1) / Rational(p.lc());
  for (const auto& term : p.t) out.add_term(exps_from_pm(term.m, nvars), Rational(term.c) * inv);
  return out;
}

bool basis_is_unit(const std::vector<EPoly>& G) {
  for (const auto& g : G)
    if (!g.zero() && g.lm().deg == 0) return true;
  return false;
}

bool epoly_zero_dim(const std::vector<EPoly>& G, int n) {
  for (int v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& g : G) {
      if (g.zero()) continue;
      const PM& m = g.lm();
      if (m.e[v] == 0) continue;
      bool pure = true;
      for (int i = 0; i < n; ++i)
        if (i != v && m.e[i] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// ---- change of order (zero-dimensional ideals) ----

struct QTerm {
  PM m;
  Rational c;
};

struct QReducer {
  PM lm;
  std::vector<QTerm> tail;  // poly = lm + tail, monic
};

// full reduction of a rational polynomial given as a descending term map
std::vector<QTerm> q_reduce(std::map<PM, Rational, PMDescLess> w,
                            const std::vector<QReducer>& red, int n) {
  std::vector<QTerm> out;
  while (!w.empty()) {
    auto lead = w.begin();
    const QReducer* r = nullptr;
    for (const auto& g : red)
      if (pm_divides(g.lm, lead->first, n)) {
        r = &g;
        break;
      }
    if (!r) {
      out.push_back({lead->first, lead->second});
      w.erase(lead);
      continue;
    }
    PM q = pm_div(lead->first, r->lm, n);
    Rational c = lead->second;
    w.erase(lead);
    for (const auto& term : r->tail) {
      PM m = pm_mul(term.m, q, n);
      auto [it, fresh] = w.emplace(m, Rational(0));
      it->second -= c * term.c;
      if (sgn(it->second) == 0) w.erase(it);
    }
  }
  return out;
}

struct LexBasisPoly {
  PM lm;
  std::vector<QTerm> tail;
};

// FGLM walk from a reduced graded basis of a zero-dimensional ideal to the
// reduced lex basis. Enumerates monomials in increasing lex order, tracking
// normal forms as vectors over the graded staircase.
std::vector<LexBasisPoly> fglm_lex(const std::vector<EPoly>& G, MonomialOrder src, int n) {
  PMDescLess desc{src, n};
  std::vector<QReducer> red;
  red.reserve(G.size());
  for (const auto& g : G) {
    QReducer r;
    r.lm = g.lm();
    Rational inv = Rational(1) / Rational(g.lc());
    for (std::size_t k = 1; k < g.t.size(); ++k)
      r.tail.push_back({g.t[k].m, Rational(g.t[k].c) * inv});
    red.push_back(std::move(r));
  }

  auto is_standard = [&](const PM& m) {
    for (const auto& r : red)
      if (pm_divides(r.lm, m, n)) return false;
    return true;
  };

  // staircase of the graded order, sorted ascending for stable indexing
  auto grad_less = [&](const PM& a, const PM& b) { return pm_cmp(a, b, src, n) < 0; };
  std::set<PM, decltype(grad_less)> stair(grad_less);
  {
    std::vector<PM> queue{PM{}};
    stair.insert(PM{});
    while (!queue.empty()) {
      PM m = queue.back();
      queue.pop_back();
      for (int v = 0; v < n; ++v) {
        PM c = m;
        c.e[v] = static_cast<std::uint16_t>(c.e[v] + 1);
        c.deg = m.deg + 1;
        if (stair.count(c) || !is_standard(c)) continue;
        if (stair.size() > 20000) throw std::runtime_error("fglm: staircase too large");
        stair.insert(c);
        queue.push_back(c);
      }
    }
  }
  std::vector<PM> B(stair.begin(), stair.end());
  const std::size_t D = B.size();
  std::map<PM, std::size_t, decltype(grad_less)> bidx(grad_less);
  for (std::size_t i = 0; i < D; ++i) bidx.emplace(B[i], i);

  // multiplication tables: NF(x_v * B[k]) as vectors over B
  std::vector<std::vector<std::vector<Rational>>> mult(
      static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    mult[v].assign(D, {});
    for (std::size_t k = 0; k < D; ++k) {
      PM m = B[k];
      m.e[v] = static_cast<std::uint16_t>(m.e[v] + 1);
      m.deg += 1;
      std::vector<Rational> vec(D, Rational(0));
      auto it = bidx.find(m);
      if (it != bidx.end()) {
        vec[it->second] = 1;
      } else {
        std::map<PM, Rational, PMDescLess> w(desc);
        w.emplace(m, Rational(1));
        for (const auto& term : q_reduce(std::move(w), red, n))
          vec[bidx.at(term.m)] = term.c;
      }
      mult[v][k] = std::move(vec);
    }
  }

  // incremental echelon over the lex staircase found so far
  struct Row {
    std::vector<Rational> v;      // echelonized vector, pivot normalized to 1
    std::vector<Rational> combo;  // expresses v over the B2 normal forms
    std::size_t pivot;
  };
  std::vector<Row> rows;
  std::vector<PM> B2;
  std::vector<std::vector<Rational>> B2vec;

  auto lex_less = [&](const PM& a, const PM& b) { return pm_cmp(a, b, MonomialOrder::Lex, n) < 0; };
  // candidate -> (parent index in B2, multiplied variable); parent -1 = unit
  std::map<PM, std::pair<int, int>, decltype(lex_less)> queue(lex_less);
  queue.emplace(PM{}, std::make_pair(-1, -1));
  std::vector<PM> lex_lts;
  std::vector<LexBasisPoly> out;

  while (!queue.empty()) {
    auto front = *queue.begin();
    queue.erase(queue.begin());
    const PM m = front.first;
    bool pruned = false;
    for (const auto& lt : lex_lts)
      if (pm_divides(lt, m, n)) {
        pruned = true;
        break;
      }
    if (pruned) continue;

    std::vector<Rational> vec(D, Rational(0));
    if (front.second.first < 0) {
      vec[bidx.at(PM{})] = 1;
    } else {
      const std::vector<Rational>& parent = B2vec[static_cast<std::size_t>(front.second.first)];
      const auto& table = mult[static_cast<std::size_t>(front.second.second)];
      for (std::size_t k = 0; k < D; ++k) {
        if (sgn(parent[k]) == 0) continue;
        const std::vector<Rational>& col = table[k];
        for (std::size_t i = 0; i < D; ++i)
          if (sgn(col[i]) != 0) vec[i] += parent[k] * col[i];
      }
    }

    // reduce against the echelon rows
    std::vector<Rational> w = vec;
    std::vector<Rational> comb(D, Rational(0));
    for (const auto& row : rows) {
      if (sgn(w[row.pivot]) == 0) continue;
      Rational f = w[row.pivot];
      for (std::size_t i = 0; i < D; ++i)
        if (sgn(row.v[i]) != 0) w[i] -= f * row.v[i];
      for (std::size_t i = 0; i < D; ++i)
        if (sgn(row.combo[i]) != 0) comb[i] += f * row.combo[i];
    }
    bool dependent = std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) == 0; });

    if (dependent) {
      LexBasisPoly p;
      p.lm = m;
      for (std::size_t k = 0; k < B2.size(); ++k)
        if (sgn(comb[k]) != 0) p.tail.push_back({B2[k], -comb[k]});
      out.push_back(std::move(p));
      lex_lts.push_back(m);
    } else {
      std::size_t piv = 0;
      while (sgn(w[piv]) == 0) ++piv;
      Rational inv = Rational(1) / w[piv];
      Row row;
      row.pivot = piv;
      row.v.assign(D, Rational(0));
      for (std::size_t i = 0; i < D; ++i)
        if (sgn(w[i]) != 0) row.v[i] = w[i] * inv;
      row.combo.assign(D, Rational(0));
      std::size_t self = B2.size();
      for (std::size_t i = 0; i < self; ++i)
        if (sgn(comb[i]) != 0) row.combo[i] = -comb[i] * inv;
      row.combo[self] = inv;
      rows.push_back(std::move(row));
      B2.push_back(m);
      B2vec.push_back(std::move(vec));
      for (int v = 0; v < n; ++v) {
        PM c = m;
        c.e[v] = static_cast<std::uint16_t>(c.e[v] + 1);
        c.deg = m.deg + 1;
        queue.emplace(c, std::make_pair(static_cast<int>(self), v));
      }
    }
  }
  return out;
}

std::size_t common_arity(const std::vector<MPoly>& gens) {
  std::size_t nv = gens.empty() ? 0 : gens.front().nvars();
  for (const auto& g : gens)
    if (g.nvars() != nv) throw std::invalid_argument("groebner: mixed variable counts");
  return nv;
}

}  // namespace

std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens, MonomialOrder order,
                                  const GroebnerOptions& opt) {
  std::size_t nv = common_arity(gens);
  if (nv > kMaxVars) throw std::invalid_argument("groebner: too many variables");
  int n = static_cast<int>(nv);
  std::vector<EPoly> eps;
  for (const auto& g : gens) {
    EPoly e = epoly_from_mpoly(g, order, n);
    if (!e.zero()) eps.push_back(std::move(e));
  }
  if (eps.empty()) return {};
  auto G = reduced_basis(buchberger(std::move(eps), order, n, opt.use_pair_criteria), order, n);
  std::vector<MPoly> out;
  out.reserve(G.size());
  for (const auto& g : G) out.push_back(mpoly_from_epoly_monic(g, nv));
  return out;
}

std::vector<MPoly> groebner_lex(const std::vector<MPoly>& gens, std::vector<std::size_t> priority,
                                const GroebnerOptions& opt) {
  std::size_t nv = common_arity(gens);
  if (nv > kMaxVars) throw std::invalid_argument("groebner: too many variables");
  int n = static_cast<int>(nv);
  if (priority.empty()) {
    priority.resize(nv);
    std::iota(priority.begin(), priority.end(), 0);
  }
  if (priority.size() != nv) throw std::invalid_argument("groebner_lex: bad priority size");
  {
    std::vector<bool> seen(nv, false);
    for (std::size_t v : priority) {
      if (v >= nv || seen[v]) throw std::invalid_argument("groebner_lex: priority not a permutation");
      seen[v] = true;
    }
  }
  // slot s of the permuted space holds original variable priority[s]
  auto permute = [&](const MPoly& p) {
    MPoly out(nv);
    for (const auto& [e, c] : p.terms()) {
      Exponents pe(nv, 0);
      for (std::size_t s = 0; s < nv; ++s) pe[s] = e[priority[s]];
      out.add_term(pe, c);
    }
    return out;
  };
  auto unpermute = [&](const MPoly& p) {
    MPoly out(nv);
    for (const auto& [e, c] : p.terms()) {
      Exponents oe(nv, 0);
      for (std::size_t s = 0; s < nv; ++s) oe[priority[s]] = e[s];
      out.add_term(oe, c);
    }
    return out;
  };

  std::vector<EPoly> eps;
  for (const auto& g : gens) {
    EPoly e = epoly_from_mpoly(permute(g), MonomialOrder::Lex, n);
    if (!e.zero()) eps.push_back(std::move(e));
  }
  if (eps.empty()) return {};

  if (!opt.force_direct) {
    std::vector<EPoly> gr;
    gr.reserve(eps.size());
    for (const auto& e : eps) {
      EPoly c = e;
      normalize(c, MonomialOrder::GrevLex, n);
      gr.push_back(std::move(c));
    }
    auto Ggr = reduced_basis(
        buchberger(std::move(gr), MonomialOrder::GrevLex, n, opt.use_pair_criteria),
        MonomialOrder::GrevLex, n);
    if (basis_is_unit(Ggr)) return {MPoly::constant(nv, Rational(1))};
    if (epoly_zero_dim(Ggr, n)) {
      auto lex = fglm_lex(Ggr, MonomialOrder::GrevLex, n);
      // emitted in increasing leading monomial; flip for the usual listing
      std::vector<MPoly> out;
      out.reserve(lex.size());
      for (auto it = lex.rbegin(); it != lex.rend(); ++it) {
        MPoly p(nv);
        p.add_term(exps_from_pm(it->lm, nv), Rational(1));
        for (const auto& term : it->tail) p.add_term(exps_from_pm(term.m, nv), term.c);
        out.push_back(unpermute(p));
      }
      return out;
    }
  }

  auto G = reduced_basis(buchberger(std::move(eps), MonomialOrder::Lex, n, opt.use_pair_criteria),
                         MonomialOrder::Lex, n);
  std::vector<MPoly> out;
  out.reserve(G.size());
  for (const auto& g : G) out.push_back(unpermute(mpoly_from_epoly_monic(g, nv)));
  return out;
}

MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis, MonomialOrder order) {
  std::size_t nv = p.nvars();
  for (const auto& g : basis)
    if (g.nvars() != nv) throw std::invalid_argument("normal_form: mixed variable counts");
  if (nv > kMaxVars) throw std::invalid_argument("normal_form: too many variables");
  int n = static_cast<int>(nv);
  PMDescLess desc{order, n};
  std::vector<QReducer> red;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    // leading term w.r.t. the requested order
    const Exponents* lead = nullptr;
    for (const auto& [e, c] : g.terms())
      if (!lead || exps_cmp(e, *lead, order) > 0) lead = &e;
    QReducer r;
    r.lm = pm_from_exps(*lead);
    Rational lc = g.terms().at(*lead);
    for (const auto& [e, c] : g.terms()) {
      if (&e == lead) continue;
      r.tail.push_back({pm_from_exps(e), c / lc});
    }
    red.push_back(std::move(r));
  }
  std::map<PM, Rational, PMDescLess> w(desc);
  for (const auto& [e, c] : p.terms()) w.emplace(pm_from_exps(e), c);
  MPoly out(nv);
  for (const auto& term : q_reduce(std::move(w), red, n))
    out.add_term(exps_from_pm(term.m, nv), term.c);
  return out;
}

bool is_zero_dimensional(const std::vector<MPoly>& basis, MonomialOrder order) {
  if (basis.empty()) return false;
  std::size_t nv = basis.front().nvars();
  for (std::size_t v = 0; v < nv; ++v) {
    bool found = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const Exponents* lead = nullptr;
      for (const auto& [e, c] : g.terms())
        if (!lead || exps_cmp(e, *lead, order) > 0) lead = &e;
      bool pure = true;
      for (std::size_t i = 0; i < nv; ++i)
        if (i != v && (*lead)[i] != 0) pure = false;
      if (pure && (*lead)[v] > 0) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace msc::exactalg
