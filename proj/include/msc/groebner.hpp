#pragma once

#include <cstddef>
#include <vector>

#include "msc/mpoly.hpp"

namespace msc::exactalg {

enum class MonomialOrder { Lex, GrLex, GrevLex };

struct GroebnerOptions {
  // Buchberger's product criterion plus the Gebauer-Moller chain criteria.
  // Disabled only by tests that cross-check against the unfiltered run.
  bool use_pair_criteria = true;
  // Forces the direct Buchberger computation in the target order instead of
  // the graded-basis-then-change-of-order route.
  bool force_direct = false;
};

// Reduced Groebner basis in the requested order, variables compared in their
// natural order (variable 0 largest). Output is monic, interreduced, sorted
// by decreasing leading monomial. Deterministic.
std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens, MonomialOrder order,
                                  const GroebnerOptions& opt = {});

// Reduced lex Groebner basis with variable priority given by `priority`
// (first entry largest; default natural order). Zero-dimensional ideals are
// computed in graded reverse lex first and converted by a change of order;
// everything else falls back to the direct lex computation. Both routes
// return the same basis, which is unique.
std::vector<MPoly> groebner_lex(const std::vector<MPoly>& gens,
                                std::vector<std::size_t> priority = {},
                                const GroebnerOptions& opt = {});

// Full reduction of p modulo the given polynomials (need not be a basis).
MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis, MonomialOrder order);

// True when every variable has a pure power among the leading terms. Only
// meaningful when `basis` is a Groebner basis for `order`.
bool is_zero_dimensional(const std::vector<MPoly>& basis, MonomialOrder order);

}  // namespace msc::exactalg
