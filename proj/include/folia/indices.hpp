#pragma once

#include "folia/error.hpp"
#include "folia/foliation.hpp"
#include "folia/unipoly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace folia {

/// X = (-B, A) for A dx + B dy, so that i_X alpha = 0.
PolyVectorField dual_vector_field(const AffineForm& a);

/// Linear part of the dual field at a singular point of a plane 1-form.
struct PlanePointData {
  std::vector<Rational> point;
  std::array<std::array<Rational, 2>, 2> linear_part;
  Rational trace;
  Rational det;
};

/// Throws NotSingularHere when a coefficient does not vanish at the point.
PlanePointData linear_data(const AffineForm& a, const std::vector<Rational>& point);

/// tr(M)^2 / det(M) for the linear part M of the dual field. Throws
/// NotSingularHere or DegenerateLinearPart (det M = 0).
Rational bb_index(const AffineForm& a, const std::vector<Rational>& point);

/// Baum-Bott contribution of one rational point or of a group of conjugate
/// points sharing a minimal polynomial.
struct BBContribution {
  std::string cell;                ///< "affine", "inf" or "corner"
  std::optional<ProjPoint> point;  ///< set for a single rational point
  UniPoly roots_of;                ///< conjugate group: the coordinate's polynomial
  std::string roots_var;           ///< variable of roots_of
  int count = 1;
  Rational bb;                     ///< sum over the group
};

struct BBReport {
  int degree = 0;
  std::vector<BBContribution> per_point;               ///< chart z0 = 1
  std::vector<BBContribution> infinity_contributions;  ///< line z0 = 0 and (0:0:1)
  Rational total;
  Rational expected;
  bool complete = false;
  std::optional<ErrorCode> failure;
  std::vector<std::string> diagnostics;
  std::optional<Rational> shear;  ///< z1 -> z1 + c z2 applied before computing
};

/// Exact sum of Baum-Bott indices over every singular point of a foliation of
/// P^2, including points with irrational coordinates (trace over the roots of
/// the eliminant). Failures are reported through complete = false.
BBReport bb_sum_p2(const ProjFoliation& f, std::uint64_t seed = 0);

/// Sum of bb_index over the rational singular points; empty when some
/// singular point is not rational.
std::optional<Rational> bb_sum_direct(const ProjFoliation& f);

}  // namespace folia
