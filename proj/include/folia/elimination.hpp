#pragma once

#include "folia/multipoly.hpp"
#include "folia/unipoly.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace folia {

/// Res_var(p, q) by the subresultant PRS; coefficients live in the remaining
/// variables. Throws InvalidInput when either input is zero or both have
/// degree 0 in var.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var);

struct FirstSubresultant {
  MultiPoly s1;  ///< coefficient of var
  MultiPoly s0;  ///< constant coefficient
};

/// Degree-1 subresultant S1 = s1*var + s0 of p and q. Where s1 does not
/// vanish at a common solution, var = -s0/s1 there. Throws
/// DegenerateSingularLocus when S1 is identically zero or undefined.
FirstSubresultant subresultant_first(const MultiPoly& p, const MultiPoly& q, std::string_view var);

/// Determinant of a square matrix of polynomials (fraction-free Bareiss).
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;  ///< ascending, with multiplicity
  UniPoly cofactor;                             ///< p / prod (x - r)^m
};

RationalRoots rational_roots(const UniPoly& p);
/// p must be univariate (at most one used variable).
RationalRoots rational_roots(const MultiPoly& p);

}  // namespace folia
