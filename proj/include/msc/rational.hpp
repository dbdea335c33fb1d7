#pragma once

#include <gmpxx.h>

#include <string>

namespace msc::exactalg {

// Arbitrary-precision rational, canonical form: lowest terms, denominator > 0,
// zero stored as 0/1. mpq_class maintains exactly this invariant as long as
// every value goes through canonicalization, which the helpers below enforce.
using Rational = mpq_class;
using Integer = mpz_class;

// den == 0 throws instead of tripping GMP's division-by-zero abort.
Rational make_rational(long num, long den);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "p/q", optional leading '-'.
Rational rational_from_string(const std::string& s);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

}  // namespace msc::exactalg
