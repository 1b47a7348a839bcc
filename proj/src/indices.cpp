#include "folia/indices.hpp"

#include "folia/elimination.hpp"
#include "folia/unipoly.hpp"

#include <random>

namespace folia {

namespace {

struct PlaneCoefficients {
  MultiPoly a;
  MultiPoly b;
};

PlaneCoefficients plane_coefficients(const AffineForm& form) {
  if (form.form.vars().size() != 2) throw Error(ErrorCode::InvalidInput, "plane 1-form expected");
  const auto c = form.coefficients();
  return {c[0], c[1]};
}

// Trace and determinant of the dual field's Jacobian as polynomials.
std::pair<MultiPoly, MultiPoly> trace_det(const AffineForm& form) {
  const auto& v = form.form.vars();
  const auto [a, b] = plane_coefficients(form);
  const MultiPoly ax = a.derivative(v[0]);
  const MultiPoly ay = a.derivative(v[1]);
  const MultiPoly bx = b.derivative(v[0]);
  const MultiPoly by = b.derivative(v[1]);
  return {ay - bx, ax * by - ay * bx};
}

UniPoly univariate(const MultiPoly& p, const std::string& var) {
  return UniPoly::from_multi(p.with_vars({var}), var);
}

// p(x, Y(x)) reduced modulo r, by Horner in y.
UniPoly eval_mod(const MultiPoly& p, const UniPoly& y_of_x, const UniPoly& r) {
  const auto coeffs = p.coefficients_in("y");
  UniPoly acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = (acc * y_of_x + univariate(*it, "x")) % r;
  }
  return acc;
}

class Computation {
 public:
  Computation(BBReport& report, std::optional<Rational> shear) : report_(report), shear_(std::move(shear)) {}

  int points = 0;

  void affine_cell(const AffineForm& chart) {
    const auto [a, b] = plane_coefficients(chart);
    if (a.is_zero() || b.is_zero()) return;
    const int da = a.degree_in("y");
    const int db = b.degree_in("y");
    if (da == 0 && db == 0) return;
    if ((da == 0 && !a.is_constant()) || (db == 0 && !b.is_constant())) {
      throw Error(ErrorCode::DegenerateSingularLocus, "chart z0 = 1: a coefficient is free of y");
    }
    const UniPoly la = univariate(a.leading_coefficient_in("y"), "x");
    const UniPoly lb = univariate(b.leading_coefficient_in("y"), "x");
    if (gcd(la, lb).degree() > 0) {
      throw Error(ErrorCode::DegenerateSingularLocus, "chart z0 = 1: leading coefficients in y share a root");
    }
    const UniPoly r = squarefree_part(univariate(resultant(a, b, "y"), "x"));
    if (r.degree() <= 0) return;
    const auto s = subresultant_first(a, b, "y");
    const auto s1_inv = inverse_mod(univariate(s.s1, "x") % r, r);
    if (!s1_inv) throw Error(ErrorCode::DegenerateSingularLocus, "chart z0 = 1: two singular points share x");
    const UniPoly y_of_x = ((-univariate(s.s0, "x")) * *s1_inv) % r;
    if (!eval_mod(a, y_of_x, r).is_zero() || !eval_mod(b, y_of_x, r).is_zero()) {
      throw Error(ErrorCode::DegenerateSingularLocus, "chart z0 = 1: recovered y does not solve the system");
    }
    const auto [tr, det] = trace_det(chart);
    const UniPoly h = index_function(eval_mod(tr, y_of_x, r), eval_mod(det, y_of_x, r), r, "chart z0 = 1");
    const auto roots = rational_roots(r);
    for (const auto& [x0, m] : roots.roots) add_point("affine", {1, x0, y_of_x(x0)}, h(x0), report_.per_point);
    add_group("affine", roots.cofactor, "z1/z0", h, report_.per_point);
    points += r.degree();
  }

  void infinity_cell(const AffineForm& chart) {
    const auto [c, d] = plane_coefficients(chart);
    const UniPoly fc = univariate(c.evaluate("x", 0), "y");
    const UniPoly fd = univariate(d.evaluate("x", 0), "y");
    const UniPoly g = gcd(fc, fd);
    if (g.is_zero()) throw Error(ErrorCode::NonReducedPencil, "the line z0 = 0 is singular");
    const UniPoly m = squarefree_part(g);
    if (m.degree() <= 0) return;
    const auto [tr, det] = trace_det(chart);
    const UniPoly t = univariate(tr.evaluate("x", 0), "y") % m;
    const UniPoly dd = univariate(det.evaluate("x", 0), "y") % m;
    const UniPoly h = index_function(t, dd, m, "line z0 = 0");
    const auto roots = rational_roots(m);
    for (const auto& [y0, mult] : roots.roots) {
      add_point("inf", {0, 1, y0}, h(y0), report_.infinity_contributions);
    }
    add_group("inf", roots.cofactor, "z2/z1", h, report_.infinity_contributions);
    points += m.degree();
  }

  void corner_cell(const AffineForm& chart) {
    const auto [e, f] = plane_coefficients(chart);
    if (e.constant_term() != 0 || f.constant_term() != 0) return;
    add_point("corner", {0, 0, 1}, bb_index(chart, {0, 0}), report_.infinity_contributions);
    points += 1;
  }

 private:
  UniPoly index_function(const UniPoly& tr, const UniPoly& det, const UniPoly& r, const std::string& where) {
    const auto inv = inverse_mod(det, r);
    if (!inv) throw Error(ErrorCode::DegenerateLinearPart, where + ": a singular point has det M = 0");
    return (tr * tr * *inv) % r;
  }

  void add_point(const std::string& cell, ProjPoint p, const Rational& bb, std::vector<BBContribution>& out) {
    if (shear_) p[1] += *shear_ * p[2];
    for (const auto& c : p) {
      if (c == 0) continue;
      const Rational lead = c;
      for (auto& v : p) v /= lead;
      break;
    }
    BBContribution entry;
    entry.cell = cell;
    entry.point = std::move(p);
    entry.bb = bb;
    out.push_back(std::move(entry));
  }

  void add_group(const std::string& cell, const UniPoly& cofactor, const std::string& var, const UniPoly& h,
                 std::vector<BBContribution>& out) {
    if (cofactor.degree() <= 0) return;
    BBContribution entry;
    entry.cell = cell;
    entry.roots_of = cofactor.monic();
    entry.roots_var = var;
    entry.count = cofactor.degree();
    entry.bb = trace_mod(h % cofactor, cofactor);
    out.push_back(std::move(entry));
  }

  BBReport& report_;
  std::optional<Rational> shear_;
};

}  // namespace

PolyVectorField dual_vector_field(const AffineForm& a) {
  const auto [ca, cb] = plane_coefficients(a);
  return PolyVectorField{a.form.vars(), {-cb, ca}};
}

PlanePointData linear_data(const AffineForm& a, const std::vector<Rational>& point) {
  if (point.size() != 2) throw Error(ErrorCode::InvalidInput, "plane point expected");
  const auto& v = a.form.vars();
  const auto [ca, cb] = plane_coefficients(a);
  if (ca.evaluate(point) != 0 || cb.evaluate(point) != 0) {
    throw Error(ErrorCode::NotSingularHere, "the form does not vanish at (" + to_string(point[0]) + ", " +
                                                to_string(point[1]) + ")");
  }
  PlanePointData out;
  out.point = point;
  const auto x = dual_vector_field(a);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out.linear_part[i][j] = x.components[i].derivative(v[j]).evaluate(point);
  }
  const auto& m = out.linear_part;
  out.trace = m[0][0] + m[1][1];
  out.det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return out;
}

Rational bb_index(const AffineForm& a, const std::vector<Rational>& point) {
  const auto d = linear_data(a, point);
  if (d.det == 0) throw Error(ErrorCode::DegenerateLinearPart, "det M = 0 at a singular point");
  return d.trace * d.trace / d.det;
}

BBReport bb_sum_p2(const ProjFoliation& f, std::uint64_t seed) {
  if (f.ambient_dim != 2) throw Error(ErrorCode::InvalidInput, "bb_sum_p2 needs a foliation of P^2");
  BBReport report;
  report.degree = f.degree;
  report.expected = Rational((f.degree + 2) * (f.degree + 2));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(1, 20000);
  for (int attempt = 0; attempt < 2; ++attempt) {
    report.per_point.clear();
    report.infinity_contributions.clear();
    ProjFoliation g = f;
    if (attempt == 1) {
      const long c = pick(rng) - 10000;
      report.shear = Rational(c == 0 ? 10001 : c);
      const VarList z = projective_vars(2);
      const auto z0 = MultiPoly::variable("z0", z);
      const auto z1 = MultiPoly::variable("z1", z);
      const auto z2 = MultiPoly::variable("z2", z);
      g = pullback_foliation({z0, z1 + z2 * *report.shear, z2}, 2, f);
      report.diagnostics.push_back("retrying after the shear z1 -> z1 " + std::string(c < 0 ? "- " : "+ ") +
                                   to_string(Rational(abs(*report.shear))) + "*z2");
    }
    Computation comp(report, report.shear);
    try {
      comp.affine_cell(to_chart(g, 0));
      comp.infinity_cell(to_chart(g, 1));
      comp.corner_cell(to_chart(g, 2));
    } catch (const Error& e) {
      report.diagnostics.push_back(e.what());
      if (e.code() == ErrorCode::DegenerateSingularLocus && attempt == 0) continue;
      report.failure = e.code();
      return report;
    }
    const int expected_points = f.degree * f.degree + f.degree + 1;
    if (comp.points != expected_points) {
      report.failure = ErrorCode::MultiplePoint;
      report.diagnostics.push_back("found " + std::to_string(comp.points) + " distinct singular points, expected " +
                                   std::to_string(expected_points));
      return report;
    }
    for (const auto& c : report.per_point) report.total += c.bb;
    for (const auto& c : report.infinity_contributions) report.total += c.bb;
    report.complete = true;
    return report;
  }
  return report;
}

std::optional<Rational> bb_sum_direct(const ProjFoliation& f) {
  const auto sing = singular_points_p2(f);
  if (sing.residual_degree > 0) return std::nullopt;
  Rational total = 0;
  for (const auto& p : sing.rational_points) {
    if (p[0] != 0) {
      total += bb_index(to_chart(f, 0), {p[1] / p[0], p[2] / p[0]});
    } else if (p[1] != 0) {
      total += bb_index(to_chart(f, 1), {0, p[2] / p[1]});
    } else {
      total += bb_index(to_chart(f, 2), {0, 0});
    }
  }
  return total;
}

}  // namespace folia
