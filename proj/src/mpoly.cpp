#include "msc/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace msc::exactalg {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  if (sgn(c) != 0) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::invalid_argument("MPoly::variable: index out of range");
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.terms_[e] = Rational(1);
  return p;
}

MPoly MPoly::from_upoly(const UPoly& p, std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw std::invalid_argument("MPoly::from_upoly: variable out of range");
  MPoly out(nvars);
  for (int i = 0; i <= p.degree(); ++i) {
    if (sgn(p.coeff(i)) == 0) continue;
    Exponents e(nvars, 0);
    e[var] = static_cast<unsigned>(i);
    out.terms_[e] = p.coeff(i);
  }
  return out;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational MPoly::constant_value() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("MPoly::add_term: bad exponent arity");
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void MPoly::check_arity(const MPoly& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("MPoly: mixed variable counts");
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  a.check_arity(b);
  MPoly r(a);
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  a.check_arity(b);
  MPoly r(a);
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_arity(b);
  MPoly r(a.nvars_);
  Exponents e(a.nvars_, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::operator*(const Rational& c) const {
  MPoly r(nvars_);
  if (sgn(c) == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly acc = MPoly::constant(nvars_, Rational(1));
  MPoly base(*this);
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned t = 0;
    for (unsigned x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

unsigned MPoly::degree_in(std::size_t var) const {
  if (var >= nvars_) throw std::invalid_argument("MPoly::degree_in: variable out of range");
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

const std::pair<const Exponents, Rational>& MPoly::leading_term() const {
  if (terms_.empty()) throw std::invalid_argument("MPoly::leading_term on zero polynomial");
  return *terms_.rbegin();
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("MPoly::eval: bad point arity");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

MPoly MPoly::eval_at(std::size_t var, const Rational& value) const {
  if (var >= nvars_) throw std::invalid_argument("MPoly::eval_at: variable out of range");
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (unsigned k = 0; k < e[var]; ++k) t *= value;
    Exponents e2 = e;
    e2[var] = 0;
    r.add_term(e2, t);
  }
  return r;
}

std::vector<MPoly> MPoly::coeffs_in(std::size_t var) const {
  if (var >= nvars_) throw std::invalid_argument("MPoly::coeffs_in: variable out of range");
  std::vector<MPoly> out(degree_in(var) + 1, MPoly(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    unsigned k = e2[var];
    e2[var] = 0;
    out[k].add_term(e2, c);
  }
  return out;
}

MPoly MPoly::with_nvars(std::size_t new_nvars) const {
  if (new_nvars < nvars_)
    throw std::invalid_argument("MPoly::with_nvars: cannot drop variables");
  MPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    e2.resize(new_nvars, 0);
    r.terms_[e2] = c;
  }
  return r;
}

bool MPoly::univariate_in(std::size_t var) const {
  if (var >= nvars_) throw std::invalid_argument("MPoly::univariate_in: variable out of range");
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != var && e[i] != 0) return false;
  return true;
}

UPoly MPoly::to_upoly(std::size_t var) const {
  if (!univariate_in(var))
    throw std::invalid_argument("MPoly::to_upoly: not univariate in requested variable");
  std::vector<Rational> c(degree_in(var) + 1, Rational(0));
  for (const auto& [e, v] : terms_) c[e[var]] = v;
  return UPoly(std::move(c));
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0) out += "-";
    Rational a = abs(c);
    std::vector<std::string> factors;
    bool has_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x != 0; });
    if (!has_var || a != 1) factors.push_back(exactalg::to_string(a));
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      std::string f = i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (e[i] > 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

}  // namespace msc::exactalg
