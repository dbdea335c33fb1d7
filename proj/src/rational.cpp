#include "msc/rational.hpp"

#include <stdexcept>

namespace msc::exactalg {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("rational: zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace msc::exactalg
