#include "msc/upoly.hpp"

#include <stdexcept>

namespace msc::exactalg {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) {
  UPoly p;
  if (sgn(c) != 0) p.c_ = {c};
  return p;
}

UPoly UPoly::monomial(const Rational& c, std::size_t power) {
  UPoly p;
  if (sgn(c) != 0) {
    p.c_.assign(power + 1, Rational(0));
    p.c_[power] = c;
  }
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::coeff(std::size_t i) const {
  if (i >= c_.size()) return Rational(0);
  return c_[i];
}

const Rational& UPoly::lc() const {
  if (c_.empty()) throw std::invalid_argument("UPoly::lc on zero polynomial");
  return c_.back();
}

Rational UPoly::operator()(const Rational& t) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::operator*(const Rational& c) const {
  if (sgn(c) == 0) return UPoly();
  UPoly r(*this);
  for (auto& v : r.c_) v *= c;
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return UPoly();
  return *this * (Rational(1) / lc());
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0) out += "-";
    Rational a = abs(c);
    bool unit = (a == 1);
    if (i == 0 || !unit) out += exactalg::to_string(a);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

UPoly derivative(const UPoly& p) {
  if (p.degree() <= 0) return UPoly();
  std::vector<Rational> c(p.degree());
  for (int i = 1; i <= p.degree(); ++i) c[i - 1] = p.coeff(i) * Rational(i);
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> upoly_divrem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("upoly_divrem: division by zero");
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo;
  int db = b.degree();
  if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rational(0));
  while (static_cast<int>(rem.size()) - 1 >= db) {
    while (!rem.empty() && sgn(rem.back()) == 0) rem.pop_back();
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr < db) break;
    Rational q = rem.back() / b.lc();
    quo[dr - db] = q;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= q * b.coeff(i);
    rem.pop_back();
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

namespace detail {

void make_primitive(std::vector<Integer>& c) {
  Integer g(0);
  for (const auto& v : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (sgn(g) == 0 || g == 1) return;
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

std::vector<Integer> to_primitive_int(const UPoly& p) {
  Integer den(1);
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(Integer(c.get_num() * (den / c.get_den())));
  make_primitive(out);
  return out;
}

UPoly from_int(const std::vector<Integer>& c) {
  std::vector<Rational> r;
  r.reserve(c.size());
  for (const auto& v : c) r.emplace_back(v);
  return UPoly(std::move(r));
}

static void trim_int(std::vector<Integer>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

std::vector<Integer> int_prem(std::vector<Integer> a, const std::vector<Integer>& b,
                              int* steps) {
  int k = 0;
  trim_int(a);
  const int db = static_cast<int>(b.size()) - 1;
  const Integer& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    Integer la = a.back();
    for (auto& v : a) v *= lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    trim_int(a);
    ++k;
  }
  if (steps) *steps = k;
  return a;
}

}  // namespace detail

UPoly upoly_gcd(const UPoly& p, const UPoly& q) {
  if (p.is_zero() && q.is_zero())
    throw std::invalid_argument("upoly_gcd: both arguments zero");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  std::vector<Integer> a = detail::to_primitive_int(p);
  std::vector<Integer> b = detail::to_primitive_int(q);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::vector<Integer> r = detail::int_prem(a, b, nullptr);
    detail::make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return detail::from_int(a).monic();
}

bool is_squarefree(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
  if (p.degree() <= 1) return true;
  return upoly_gcd(p, derivative(p)).degree() == 0;
}

}  // namespace msc::exactalg
