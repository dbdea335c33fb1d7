#pragma once

#include "msc/mpoly.hpp"

namespace msc::exactalg {

// Resultant of p and q with respect to var, computed by the subresultant
// polynomial remainder sequence. Sign convention: the Sylvester matrix is
// assembled with deg(p) rows of q's coefficients on top of deg(q) rows of
// p's, so resultant(x - a, x - b; x) = b - a. Requires positive degree in
// var on both sides.
MPoly resultant(const MPoly& p, const MPoly& q, std::size_t var);

// Exact division helper shared with the tests: a must be divisible by b.
MPoly mpoly_divexact(const MPoly& a, const MPoly& b);

}  // namespace msc::exactalg
