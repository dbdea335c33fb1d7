#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "msc/rational.hpp"
#include "msc/upoly.hpp"

namespace msc::exactalg {

using Exponents = std::vector<unsigned>;

// Graded lex: total degree first, ties broken lexicographically with variable
// 0 most significant. Gives every MPoly a deterministic term order.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Rational with a fixed variable count.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t i);
  static MPoly from_upoly(const UPoly& p, std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // coefficient of the unit monomial
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c);

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator*(const Rational& c) const;
  MPoly pow(unsigned k) const;
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  unsigned total_degree() const;  // 0 for the zero polynomial
  unsigned degree_in(std::size_t var) const;

  // largest term in graded lex; throws on zero
  const std::pair<const Exponents, Rational>& leading_term() const;

  Rational eval(const std::vector<Rational>& point) const;
  MPoly eval_at(std::size_t var, const Rational& value) const;

  // coefficients of powers of var, arity preserved (var's exponent zeroed)
  std::vector<MPoly> coeffs_in(std::size_t var) const;

  MPoly with_nvars(std::size_t new_nvars) const;  // append fresh variables

  bool univariate_in(std::size_t var) const;
  UPoly to_upoly(std::size_t var) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
  void check_arity(const MPoly& other) const;
};

}  // namespace msc::exactalg
