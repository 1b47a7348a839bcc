#pragma once

#include "folia/forms.hpp"

#include <cstdint>
#include <vector>

namespace folia {

/// z0..zn.
VarList projective_vars(int n);
/// Affine coordinates of an n-dimensional chart: x, y (n = 2), x, y, z
/// (n = 3), otherwise x1..xn.
VarList affine_vars(int n);

/// Codimension-one foliation of P^n given by a homogeneous integrable 1-form
/// in z0..zn with coprime polynomial coefficients of degree `degree` + 1.
///
/// The form is stored primitive over Z with the first nonzero coefficient
/// having positive leading coefficient, so equal foliations compare equal.
struct ProjFoliation {
  int ambient_dim = 2;
  DiffForm omega;
  int degree = 0;

  /// Coefficients of dz0..dzn.
  std::vector<MultiPoly> coefficients() const;

  friend bool operator==(const ProjFoliation& a, const ProjFoliation& b) {
    return a.ambient_dim == b.ambient_dim && a.degree == b.degree && a.omega == b.omega;
  }
};

/// Polynomial 1-form on the affine chart z_j = 1.
struct AffineForm {
  int chart_index = 0;
  DiffForm form;

  std::vector<MultiPoly> coefficients() const;
};

/// Validates and normalizes a homogeneous 1-form on P^ambient_dim. Its
/// variables must be among z0..zn. Throws MixedDegrees, ZeroForm,
/// EulerContractionNonzero or NotIntegrable.
ProjFoliation make_foliation(const DiffForm& omega, int ambient_dim);

/// Homogenizes a polynomial 1-form given on chart `chart_index`. The form's
/// context supplies the n affine variables in order; a smaller context is
/// read as a subset of affine_vars(n).
ProjFoliation from_affine(const AffineForm& a, int ambient_dim);

/// Restriction to z_j = 1 in the variables affine_vars(n), divided by the
/// coefficient gcd.
AffineForm to_chart(const ProjFoliation& f, int j);

/// Maximum over random lines of the number of tangencies counted in chart 0.
/// Throws AllLinesDegenerate when every sampled line is invariant.
int tangency_degree(const ProjFoliation& f, int trials = 5, std::uint64_t seed = 0);

/// Pullback by a homogeneous polynomial map P^source_dim -> P^m given by the
/// images of z0..zm in the source variables z0..z_source_dim.
ProjFoliation pullback_foliation(const std::vector<MultiPoly>& map, int source_dim, const ProjFoliation& g);

/// Projective point normalized so its first nonzero coordinate is 1.
using ProjPoint = std::vector<Rational>;

struct SingularPointReport {
  std::vector<ProjPoint> rational_points;  ///< chart 0, then z0 = 0, then (0:0:1)
  int residual_degree = 0;
};

/// Singular points of a foliation of P^2 with rational coordinates, found cell
/// by cell. residual_degree adds up the degrees of the parts of the
/// eliminants without rational roots.
SingularPointReport singular_points_p2(const ProjFoliation& f);

}  // namespace folia
