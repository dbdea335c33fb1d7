#pragma once

#include <vector>

#include "msc/mpoly.hpp"

namespace msc::exactalg {

using MPolyMatrix = std::vector<std::vector<MPoly>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact determinant. Purely numeric matrices go through fraction-free Bareiss
// elimination; symbolic ones use expansion by minors memoized on column
// subsets. Throws std::invalid_argument on non-square input or mixed arities.
MPoly mat_det(const MPolyMatrix& m);

Rational mat_det(const RationalMatrix& m);

}  // namespace msc::exactalg
