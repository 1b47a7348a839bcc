#pragma once

#include "folia/foliation.hpp"
#include "folia/forms.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace folia {

/// Closed logarithmic 1-form sum lambda_i df_i / f_i + dh.
struct LogClosedForm {
  VarList vars;
  std::vector<Rational> residues;
  std::vector<MultiPoly> factors;
  RatFunc extra;

  DiffForm as_rational_1form() const;
};

/// Validates lengths, nonconstant and pairwise non-associate factors, and
/// checks closedness (ClosednessViolated). The context is the union of the
/// inputs' variables unless `vars` is given.
LogClosedForm log_build(const std::vector<Rational>& residues, const std::vector<MultiPoly>& factors,
                        const RatFunc& extra, const VarList& vars = {});

/// Polynomial 1-form: multiplies by the lcm of the denominators and removes
/// the coefficient gcd. Throws ZeroForm.
DiffForm clear_poles(const DiffForm& w);

/// Clears the poles, removes the coefficient gcd and homogenizes from chart 0
/// of P^n. Throws ZeroForm when the form vanishes.
ProjFoliation log_to_foliation(const LogClosedForm& l, int ambient_dim);

/// (omega0, omega1, omega2) in a common variable context.
struct SL2Triple {
  std::array<DiffForm, 3> omega;
};

/// d w0 - w0 ^ w1, d w1 - w0 ^ w2, d w2 - w1 ^ w2.
struct MCReport {
  std::array<DiffForm, 3> residuals;
  bool ok() const;
};

MCReport mc_check(const SL2Triple& t);

/// dy/dx = a y^2 + b y + c with a, b, c in Q(x).
struct RiccatiODE {
  RatFunc a;
  RatFunc b;
  RatFunc c;
};

/// omega0 = dz + w'0 + z w'1 + (z^2 / 2) w'2 with w'0 = dy - (a y^2 + b y + c) dx,
/// w'1 = L_{d/dy} w'0, w'2 = L_{d/dy} w'1, and the triple
/// (omega0, w'1 + z w'2, w'2), in the variables x, y, z.
SL2Triple riccati_triple(const RiccatiODE& r);

/// Name of the unfolding variable for a context: t, or t1, t2, ... if taken.
std::string unfolding_var(const VarList& vars);

/// dt + w0 + t w1 + (t^2 / 2) w2 in the triple's variables plus
/// unfolding_var. Throws NotIntegrable when Omega ^ dOmega != 0.
DiffForm unfold(const SL2Triple& t);

enum class UnfoldingEnd { Zero, Infinity };

struct UnfoldingRestriction {
  DiffForm form;                ///< in the triple's variables
  std::optional<Rational> scale;  ///< form = scale * w2 (Infinity, w2 != 0)
  bool degenerate = false;        ///< the restriction vanishes identically
};

/// t = 0 slice, or t = 1/s scaled by s^2 at s = 0.
UnfoldingRestriction restrict_unfolding(const SL2Triple& t, UnfoldingEnd at);

/// Parameters of the simple-singularity normal forms; unused fields are
/// ignored by a family.
struct CatalogParams {
  Rational lambda;
  Rational epsilon;
  Rational alpha;
  Rational beta;
  long s = 1;
  long p = 1;
  long q = 1;
  long r = 1;
};

struct CatalogForm {
  int family = 1;
  CatalogParams params;
};

/// Checks the family's parameter domain (ParamDomain).
void validate(const CatalogForm& c);

/// Meromorphic closed 1-form of the family, in x, y (families 1-3) or
/// x, y, z (families 4-7). Throws ParamDomain.
DiffForm catalog_realize(const CatalogForm& c);

}  // namespace folia
