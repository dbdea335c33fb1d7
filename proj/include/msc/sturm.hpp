#pragma once

#include "msc/upoly.hpp"

namespace msc::exactalg {

// Sturm chain: (p, p', then negated remainders), each remainder scaled by a
// positive rational to primitive integer coefficients. Positive scaling
// leaves every sign variation count unchanged.
struct SturmChain {
  std::vector<UPoly> elems;
};

// p must be nonzero. For square-free p the chain ends in a nonzero constant;
// otherwise it ends in a positive-degree polynomial (the gcd of p and p').
SturmChain sturm_chain(const UPoly& p);

unsigned sign_variations_at_pos_inf(const SturmChain& chain);
unsigned sign_variations_at_neg_inf(const SturmChain& chain);

// Number of real roots of a square-free polynomial. Throws ContractViolation
// when p is not square-free, std::invalid_argument on the zero polynomial.
unsigned sturm_count(const UPoly& p);

}  // namespace msc::exactalg
