#include "folia/foliation.hpp"

#include "folia/elimination.hpp"
#include "folia/error.hpp"
#include "folia/unipoly.hpp"

#include <algorithm>
#include <random>

namespace folia {

namespace {

std::vector<MultiPoly> polynomial_coefficients(const DiffForm& form) {
  std::vector<MultiPoly> out;
  for (const auto& v : form.vars()) {
    const RatFunc c = form.component(v);
    if (!c.is_polynomial()) throw Error(ErrorCode::InvalidInput, "coefficient of d" + v + " is not a polynomial");
    out.push_back(c.num().with_vars(form.vars()));
  }
  return out;
}

DiffForm form_from(const VarList& vars, const std::vector<MultiPoly>& coeffs) {
  std::vector<RatFunc> rs(coeffs.begin(), coeffs.end());
  return DiffForm::one_form(vars, rs);
}

DiffForm embed(const DiffForm& form, const VarList& ctx, const char* what) {
  for (const auto& v : form.vars()) {
    if (std::find(ctx.begin(), ctx.end(), v) == ctx.end()) {
      throw Error(ErrorCode::InvalidInput, std::string(what) + ": unexpected variable '" + v + "'");
    }
  }
  return form.with_vars(ctx);
}

// Chart indices other than j, in order.
std::vector<int> chart_indices(int n, int j) {
  std::vector<int> out;
  for (int i = 0; i <= n; ++i) {
    if (i != j) out.push_back(i);
  }
  return out;
}

}  // namespace

VarList projective_vars(int n) {
  VarList out;
  for (int i = 0; i <= n; ++i) out.push_back("z" + std::to_string(i));
  return out;
}

VarList affine_vars(int n) {
  if (n == 2) return {"x", "y"};
  if (n == 3) return {"x", "y", "z"};
  VarList out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<MultiPoly> ProjFoliation::coefficients() const { return polynomial_coefficients(omega); }

std::vector<MultiPoly> AffineForm::coefficients() const { return polynomial_coefficients(form); }

ProjFoliation make_foliation(const DiffForm& omega_in, int ambient_dim) {
  if (ambient_dim < 2) throw Error(ErrorCode::InvalidInput, "ambient dimension must be at least 2");
  if (omega_in.degree() != 1) throw Error(ErrorCode::InvalidInput, "a foliation is given by a 1-form");
  const VarList ctx = projective_vars(ambient_dim);
  const DiffForm omega = embed(omega_in, ctx, "make_foliation");
  auto coeffs = polynomial_coefficients(omega);
  int degree = -1;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous() || (degree >= 0 && c.total_degree() != degree)) {
      throw Error(ErrorCode::MixedDegrees, "coefficients are not homogeneous of one degree");
    }
    degree = c.total_degree();
  }
  if (degree < 0) throw Error(ErrorCode::ZeroForm, "the zero form defines no foliation");
  coeffs = remove_common_factor(std::move(coeffs));
  ProjFoliation f{ambient_dim, form_from(ctx, coeffs), 0};
  for (const auto& c : coeffs) {
    if (!c.is_zero()) f.degree = c.total_degree() - 1;
  }
  if (f.degree < 0) throw Error(ErrorCode::EulerContractionNonzero, "after removing the common factor the coefficients are constant, so the contraction with R is nonzero");
  const DiffForm euler = contract(PolyVectorField::euler(ctx), f.omega);
  if (!euler.is_zero()) {
    throw Error(ErrorCode::EulerContractionNonzero, "i_R omega = " + to_string(euler));
  }
  if (!wedge(f.omega, exterior_d(f.omega)).is_zero()) {
    throw Error(ErrorCode::NotIntegrable, "omega ^ d omega is not zero");
  }
  return f;
}

ProjFoliation from_affine(const AffineForm& a, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "ambient dimension must be at least 2");
  if (a.chart_index < 0 || a.chart_index > n) throw Error(ErrorCode::InvalidInput, "chart index out of range");
  if (a.form.degree() != 1) throw Error(ErrorCode::InvalidInput, "an affine foliation is given by a 1-form");
  const VarList avars = static_cast<int>(a.form.vars().size()) == n ? a.form.vars() : affine_vars(n);
  const DiffForm form = embed(a.form, avars, "from_affine");
  int top = -1;
  for (const auto& c : polynomial_coefficients(form)) top = std::max(top, c.total_degree());
  if (top < 0) throw Error(ErrorCode::ZeroForm, "the zero form defines no foliation");

  const VarList pvars = projective_vars(n);
  const std::string zj = pvars[static_cast<std::size_t>(a.chart_index)];
  const RatFunc denom(MultiPoly::variable(zj, pvars));
  std::vector<RatFunc> images;
  for (int i : chart_indices(n, a.chart_index)) {
    images.push_back(RatFunc(MultiPoly::variable(pvars[static_cast<std::size_t>(i)], pvars)) / denom);
  }
  const DiffForm pulled = pullback(RationalMap{pvars, images}, form);
  const RatFunc clear(MultiPoly::variable(zj, pvars).pow(static_cast<unsigned>(top + 2)));
  return make_foliation(clear * pulled, n);
}

AffineForm to_chart(const ProjFoliation& f, int j) {
  const int n = f.ambient_dim;
  if (j < 0 || j > n) throw Error(ErrorCode::InvalidInput, "chart index out of range");
  const VarList pvars = projective_vars(n);
  const VarList avars = affine_vars(n);
  const auto coeffs = f.coefficients();
  std::vector<MultiPoly> out;
  for (int i : chart_indices(n, j)) {
    MultiPoly c = coeffs[static_cast<std::size_t>(i)].evaluate(pvars[static_cast<std::size_t>(j)], 1);
    VarList rest;
    for (int k : chart_indices(n, j)) rest.push_back(pvars[static_cast<std::size_t>(k)]);
    out.push_back(c.with_vars(rest).renamed(avars));
  }
  out = remove_common_factor(std::move(out));
  return AffineForm{j, form_from(avars, out)};
}

int tangency_degree(const ProjFoliation& f, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidInput, "tangency_degree needs at least one trial");
  const auto chart = to_chart(f, 0).coefficients();
  const VarList avars = affine_vars(f.ambient_dim);
  const VarList tctx{"t"};
  const MultiPoly t = MultiPoly::variable("t", tctx);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-10, 10);
  int best = -1;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<int> v(avars.size(), 0);
    std::vector<MultiPoly> line;
    while (std::all_of(v.begin(), v.end(), [](int c) { return c == 0; })) {
      for (auto& c : v) c = coord(rng);
    }
    for (std::size_t k = 0; k < avars.size(); ++k) {
      line.push_back(MultiPoly::constant(coord(rng), tctx) + t * Rational(v[k]));
    }
    MultiPoly g(tctx);
    for (std::size_t k = 0; k < avars.size(); ++k) g += chart[k].compose(line, tctx) * Rational(v[k]);
    if (!g.is_zero()) best = std::max(best, g.total_degree());
  }
  if (best < 0) throw Error(ErrorCode::AllLinesDegenerate, "every sampled line is invariant");
  return best;
}

ProjFoliation pullback_foliation(const std::vector<MultiPoly>& map, int source_dim, const ProjFoliation& g) {
  if (static_cast<int>(map.size()) != g.ambient_dim + 1) {
    throw Error(ErrorCode::InvalidInput, "map has " + std::to_string(map.size()) + " components for P^" +
                                             std::to_string(g.ambient_dim));
  }
  const VarList src = projective_vars(source_dim);
  int degree = -1;
  std::vector<RatFunc> images;
  for (const auto& c : map) {
    if (!c.is_zero() && (!c.is_homogeneous() || (degree >= 0 && c.total_degree() != degree))) {
      throw Error(ErrorCode::MixedDegrees, "map components are not homogeneous of one degree");
    }
    if (!c.is_zero()) degree = c.total_degree();
    for (const auto& v : c.used_vars()) {
      if (std::find(src.begin(), src.end(), v) == src.end()) {
        throw Error(ErrorCode::InvalidInput, "map component uses unexpected variable '" + v + "'");
      }
    }
    images.push_back(RatFunc(c.with_vars(src)));
  }
  const DiffForm pulled = pullback(RationalMap{src, images}, g.omega);
  if (pulled.is_zero()) throw Error(ErrorCode::MapImageInSingularLocus, "pullback is identically zero");
  return make_foliation(pulled, source_dim);
}

SingularPointReport singular_points_p2(const ProjFoliation& f) {
  if (f.ambient_dim != 2) throw Error(ErrorCode::InvalidInput, "singular_points_p2 needs a foliation of P^2");
  SingularPointReport report;

  // Chart z0 = 1.
  {
    const auto c = to_chart(f, 0).coefficients();
    const MultiPoly& a = c[0];
    const MultiPoly& b = c[1];
    // A zero coefficient forces the other to be a nonzero constant after
    // normalization; two coefficients free of y are coprime in x alone.
    if (!a.is_zero() && !b.is_zero() && (a.degree_in("y") > 0 || b.degree_in("y") > 0)) {
      const MultiPoly r = resultant(a, b, "y");
      if (r.is_zero()) throw Error(ErrorCode::NonReducedPencil, "chart coefficients share a factor");
      const auto xs = rational_roots(UniPoly::from_multi(r, "x"));
      report.residual_degree += xs.cofactor.degree();
      for (const auto& [x0, mult] : xs.roots) {
        const UniPoly fa = UniPoly::from_multi(a.evaluate("x", x0).with_vars({"y"}), "y");
        const UniPoly fb = UniPoly::from_multi(b.evaluate("x", x0).with_vars({"y"}), "y");
        const UniPoly fibre = gcd(fa, fb);
        if (fibre.is_zero()) throw Error(ErrorCode::NonReducedPencil, "a whole line is singular");
        const auto ys = rational_roots(fibre);
        report.residual_degree += ys.cofactor.degree();
        for (const auto& [y0, m] : ys.roots) report.rational_points.push_back({1, x0, y0});
      }
    }
  }
  // Line z0 = 0 without (0:0:1), seen in chart z1 = 1 with x = z0, y = z2.
  {
    const auto c = to_chart(f, 1).coefficients();
    const UniPoly fa = UniPoly::from_multi(c[0].evaluate("x", 0).with_vars({"y"}), "y");
    const UniPoly fb = UniPoly::from_multi(c[1].evaluate("x", 0).with_vars({"y"}), "y");
    const UniPoly line = gcd(fa, fb);
    if (line.is_zero()) throw Error(ErrorCode::NonReducedPencil, "the line at infinity is singular");
    const auto ys = rational_roots(line);
    report.residual_degree += ys.cofactor.degree();
    for (const auto& [y0, m] : ys.roots) report.rational_points.push_back({0, 1, y0});
  }
  // The point (0:0:1), the origin of chart z2 = 1.
  {
    const auto c = to_chart(f, 2).coefficients();
    if (c[0].constant_term() == 0 && c[1].constant_term() == 0) report.rational_points.push_back({0, 0, 1});
  }
  return report;
}

}  // namespace folia
