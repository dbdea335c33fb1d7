#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "msc/rational.hpp"

namespace msc::exactalg {

// Dense univariate polynomial over Rational. coeffs()[i] is the coefficient
// of x^i; the vector never has a trailing zero, the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, std::size_t power);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t i) const;
  const Rational& lc() const;  // throws on zero
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& t) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator*(const Rational& c) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly monic() const;
  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Rational> c_;
  void trim();
};

UPoly derivative(const UPoly& p);

// Field division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<UPoly, UPoly> upoly_divrem(const UPoly& a, const UPoly& b);

// Monic greatest common divisor, computed with a primitive integer remainder
// sequence to keep coefficients small. Error if both arguments are zero.
UPoly upoly_gcd(const UPoly& p, const UPoly& q);

// True iff gcd(p, p') has degree 0. Error on the zero polynomial.
bool is_squarefree(const UPoly& p);

namespace detail {

// Integer image of a UPoly: scaled by a positive rational so the coefficients
// are coprime integers. Shared by gcd and the Sturm chain.
std::vector<Integer> to_primitive_int(const UPoly& p);
void make_primitive(std::vector<Integer>& c);  // also no-op on zero
UPoly from_int(const std::vector<Integer>& c);

// r = lc(b)^k * a mod b for some k <= deg a - deg b + 1; returns k so callers
// can recover the sign relation to the true remainder.
std::vector<Integer> int_prem(std::vector<Integer> a, const std::vector<Integer>& b,
                              int* steps);

}  // namespace detail

}  // namespace msc::exactalg
