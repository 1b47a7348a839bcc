#include "folia/structures.hpp"

#include "folia/error.hpp"

#include <algorithm>
#include <numeric>

namespace folia {

namespace {

DiffForm dlog(const std::string& v, const VarList& vars) {
  return RatFunc(MultiPoly::constant(1, vars), MultiPoly::variable(v, vars)) * DiffForm::differential(v, vars);
}

RatFunc rf(const MultiPoly& p) { return RatFunc(p); }

// Coefficients evaluated at var = value, dropping every d(var) component.
DiffForm slice(const DiffForm& a, const std::string& var, const Rational& value, const VarList& keep) {
  const auto& vars = a.vars();
  const auto pos = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), var) - vars.begin());
  DiffForm out(vars, a.degree());
  for (const auto& [idx, c] : a.coefficients()) {
    if (std::find(idx.begin(), idx.end(), pos) != idx.end()) continue;
    if (c.den().evaluate(var, value).is_zero()) {
      throw Error(ErrorCode::PullbackUndefined, "coefficient has a pole on " + var + " = " + to_string(value));
    }
    out.add_term(idx, c.evaluate(var, value));
  }
  return out.with_vars(keep);
}

bool non_associate(const MultiPoly& f, const MultiPoly& g) {
  const auto h = divide_exact(f, g);
  return !(h && h->is_constant());
}

MultiPoly power_product(const VarList& vars, const std::vector<std::pair<std::string, long>>& powers) {
  MultiPoly out = MultiPoly::constant(1, vars);
  for (const auto& [v, e] : powers) out *= MultiPoly::variable(v, vars).pow(static_cast<unsigned>(e));
  return out;
}

bool in_q_minus(const Rational& r) { return r < 0; }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ParamDomain, what);
}

}  // namespace

DiffForm LogClosedForm::as_rational_1form() const {
  DiffForm out(vars, 1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const MultiPoly f = factors[i].with_vars(vars);
    DiffForm df = exterior_d(DiffForm::function(rf(f)));
    out += RatFunc(MultiPoly::constant(residues[i], vars), f) * df;
  }
  if (!extra.is_zero()) out += exterior_d(DiffForm::function(extra.with_vars(vars)));
  return out.with_vars(vars);
}

LogClosedForm log_build(const std::vector<Rational>& residues, const std::vector<MultiPoly>& factors,
                        const RatFunc& extra, const VarList& vars) {
  if (residues.size() != factors.size()) throw Error(ErrorCode::InvalidInput, "residues and factors differ in length");
  VarList ctx = vars;
  if (ctx.empty()) {
    for (const auto& f : factors) ctx = unify_vars(ctx, f.used_vars());
    ctx = unify_vars(ctx, extra.num().used_vars());
    ctx = unify_vars(ctx, extra.den().used_vars());
  }
  LogClosedForm out;
  out.vars = ctx;
  out.residues = residues;
  for (const auto& f : factors) {
    if (f.is_constant()) throw Error(ErrorCode::InvalidInput, "log factor " + to_string(f) + " is constant");
    for (const auto& v : f.used_vars()) {
      if (std::find(ctx.begin(), ctx.end(), v) == ctx.end()) {
        throw Error(ErrorCode::InvalidInput, "log factor uses " + v + " outside the context");
      }
    }
    const MultiPoly g = f.with_vars(ctx);
    for (const auto& h : out.factors) {
      if (!non_associate(g, h)) throw Error(ErrorCode::InvalidInput, "log factors " + to_string(g) + " are associate");
    }
    out.factors.push_back(g);
  }
  for (const auto& p : {extra.num(), extra.den()}) {
    for (const auto& v : p.used_vars()) {
      if (std::find(ctx.begin(), ctx.end(), v) == ctx.end()) {
        throw Error(ErrorCode::InvalidInput, "extra term uses " + v + " outside the context");
      }
    }
  }
  out.extra = extra.with_vars(ctx);
  if (!exterior_d(out.as_rational_1form()).is_zero()) {
    throw Error(ErrorCode::ClosednessViolated, "logarithmic form is not closed");
  }
  return out;
}

DiffForm clear_poles(const DiffForm& w) {
  if (w.degree() != 1) throw Error(ErrorCode::InvalidInput, "clear_poles needs a 1-form");
  if (w.is_zero()) throw Error(ErrorCode::ZeroForm, "form vanishes");
  const VarList& vars = w.vars();
  MultiPoly den = MultiPoly::constant(1, vars);
  for (const auto& [idx, c] : w.coefficients()) den = lcm(den, c.den().with_vars(vars));
  std::vector<MultiPoly> coeffs;
  for (const auto& v : vars) coeffs.push_back((w.component(v) * RatFunc(den)).as_polynomial().with_vars(vars));
  coeffs = remove_common_factor(coeffs);
  return DiffForm::one_form(vars, std::vector<RatFunc>(coeffs.begin(), coeffs.end()));
}

ProjFoliation log_to_foliation(const LogClosedForm& l, int ambient_dim) {
  const VarList chart = affine_vars(ambient_dim);
  for (const auto& v : l.vars) {
    if (std::find(chart.begin(), chart.end(), v) == chart.end()) {
      throw Error(ErrorCode::InvalidInput, "variable " + v + " is not an affine coordinate of P^" +
                                               std::to_string(ambient_dim));
    }
  }
  const DiffForm w = l.as_rational_1form().with_vars(chart);
  if (w.is_zero()) throw Error(ErrorCode::ZeroForm, "logarithmic form vanishes");
  const DiffForm cleared = clear_poles(w);
  if (!wedge(cleared, exterior_d(cleared)).is_zero()) {
    throw Error(ErrorCode::NotIntegrable, "cleared logarithmic form is not integrable");
  }
  return from_affine(AffineForm{0, cleared}, ambient_dim);
}

bool MCReport::ok() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const DiffForm& r) { return r.is_zero(); });
}

MCReport mc_check(const SL2Triple& t) {
  VarList ctx;
  for (const auto& w : t.omega) ctx = unify_vars(ctx, w.vars());
  std::array<DiffForm, 3> w;
  for (std::size_t i = 0; i < 3; ++i) w[i] = t.omega[i].with_vars(ctx);
  MCReport out;
  out.residuals[0] = exterior_d(w[0]) - wedge(w[0], w[1]);
  out.residuals[1] = exterior_d(w[1]) - wedge(w[0], w[2]);
  out.residuals[2] = exterior_d(w[2]) - wedge(w[1], w[2]);
  return out;
}

SL2Triple riccati_triple(const RiccatiODE& r) {
  const VarList vars{"x", "y", "z"};
  for (const auto* f : {&r.a, &r.b, &r.c}) {
    for (const auto& v : f->num().used_vars()) {
      if (v != "x") throw Error(ErrorCode::InvalidInput, "Riccati coefficients must depend on x only");
    }
    for (const auto& v : f->den().used_vars()) {
      if (v != "x") throw Error(ErrorCode::InvalidInput, "Riccati coefficients must depend on x only");
    }
  }
  if (r.a.is_zero() && r.b.is_zero() && r.c.is_zero()) {
    throw Error(ErrorCode::InvalidInput, "Riccati equation needs a nonzero coefficient");
  }
  const RatFunc y = rf(MultiPoly::variable("y", vars));
  const RatFunc z = rf(MultiPoly::variable("z", vars));
  const RatFunc rhs = r.a.with_vars(vars) * y * y + r.b.with_vars(vars) * y + r.c.with_vars(vars);
  const DiffForm dx = DiffForm::differential("x", vars);
  const DiffForm dy = DiffForm::differential("y", vars);
  const DiffForm dz = DiffForm::differential("z", vars);
  const auto dd_y = PolyVectorField::coordinate("y", vars);
  const DiffForm w0p = dy - rhs * dx;
  const DiffForm w1p = lie_derivative(dd_y, w0p);
  const DiffForm w2p = lie_derivative(dd_y, w1p);
  const RatFunc half_z2 = z * z * make_rational(1, 2);
  SL2Triple out;
  out.omega[0] = dz + w0p + z * w1p + half_z2 * w2p;
  out.omega[1] = w1p + z * w2p;
  out.omega[2] = w2p;
  for (auto& w : out.omega) w = w.with_vars(vars);
  return out;
}

std::string unfolding_var(const VarList& vars) {
  std::string name = "t";
  for (int k = 1; std::find(vars.begin(), vars.end(), name) != vars.end(); ++k) name = "t" + std::to_string(k);
  return name;
}

DiffForm unfold(const SL2Triple& t) {
  VarList ctx;
  for (const auto& w : t.omega) ctx = unify_vars(ctx, w.vars());
  const std::string tv = unfolding_var(ctx);
  ctx.push_back(tv);
  const RatFunc tt = rf(MultiPoly::variable(tv, ctx));
  DiffForm omega = DiffForm::differential(tv, ctx);
  omega += t.omega[0].with_vars(ctx);
  omega += tt * t.omega[1].with_vars(ctx);
  omega += (tt * tt * make_rational(1, 2)) * t.omega[2].with_vars(ctx);
  omega = omega.with_vars(ctx);
  if (!wedge(omega, exterior_d(omega)).is_zero()) {
    throw Error(ErrorCode::NotIntegrable, "unfolding is not integrable: the triple fails Maurer-Cartan");
  }
  return omega;
}

UnfoldingRestriction restrict_unfolding(const SL2Triple& t, UnfoldingEnd at) {
  const DiffForm omega = unfold(t);
  VarList base;
  for (const auto& w : t.omega) base = unify_vars(base, w.vars());
  const std::string tv = omega.vars().back();
  UnfoldingRestriction out;
  if (at == UnfoldingEnd::Zero) {
    out.form = slice(omega, tv, 0, base);
  } else {
    // t = 1/s, then multiply by s^2 and set s = 0.
    const std::string sv = unfolding_var(omega.vars());
    VarList src = base;
    src.push_back(sv);
    const RatFunc s = rf(MultiPoly::variable(sv, src));
    std::vector<RatFunc> images;
    for (const auto& v : omega.vars()) {
      images.push_back(v == tv ? RatFunc(MultiPoly::constant(1, src), s.num()) : rf(MultiPoly::variable(v, src)));
    }
    const DiffForm pulled = (s * s) * pullback(RationalMap{src, images}, omega);
    out.form = slice(pulled.with_vars(src), sv, 0, base);
    const DiffForm w2 = t.omega[2].with_vars(base);
    if (!w2.is_zero() && !out.form.is_zero()) {
      const auto& [idx, c] = *w2.coefficients().begin();
      const auto it = out.form.coefficients().find(idx);
      if (it != out.form.coefficients().end()) {
        const RatFunc ratio = it->second / c;
        if (ratio.is_constant() && out.form == ratio.num().constant_value() * w2) {
          out.scale = ratio.num().constant_value();
        }
      }
    }
  }
  out.degenerate = out.form.is_zero();
  return out;
}

void validate(const CatalogForm& c) {
  const auto& p = c.params;
  require(c.family >= 1 && c.family <= 7, "catalog family must be 1..7");
  if (c.family >= 2 && c.family != 4) require(p.s >= 1, "s must be a positive integer");
  switch (c.family) {
    case 1:
      require(!in_q_minus(p.lambda), "lambda must not be a negative rational");
      break;
    case 3:
    case 6:
      require(p.p >= 0 && p.q >= 0 && std::gcd(p.p, p.q) == 1, "p, q must be nonnegative with gcd(p, q) = 1");
      break;
    case 4:
      require(p.alpha != 0 && p.beta != 0, "alpha and beta must be nonzero");
      require(!in_q_minus(p.alpha) && !in_q_minus(p.beta) && !in_q_minus(p.alpha / p.beta),
              "alpha, beta and alpha/beta must not be negative rationals");
      break;
    case 5:
      require(p.beta != 0 && !in_q_minus(p.beta), "beta must be nonzero and not a negative rational");
      break;
    case 7:
      require(p.p >= 0 && p.q >= 0 && p.r >= 0 && std::gcd(std::gcd(p.p, p.q), p.r) == 1,
              "p, q, r must be nonnegative with gcd(p, q, r) = 1");
      break;
    default:
      break;
  }
}

DiffForm catalog_realize(const CatalogForm& c) {
  validate(c);
  const auto& p = c.params;
  const VarList vars = c.family <= 3 ? VarList{"x", "y"} : VarList{"x", "y", "z"};
  const auto one = MultiPoly::constant(1, vars);
  const auto eps = RatFunc(MultiPoly::constant(p.epsilon, vars));
  const auto dx = dlog("x", vars);
  const auto dy = dlog("y", vars);
  // epsilon + 1 / m^s
  const auto factor = [&](const MultiPoly& m) { return eps + RatFunc(one, m.pow(static_cast<unsigned>(p.s))); };
  DiffForm out(vars, 1);
  switch (c.family) {
    case 1:
      out = dx + p.lambda * dy;
      break;
    case 2:
      out = dx + factor(MultiPoly::variable("y", vars)) * dy;
      break;
    case 3:
      out = dx + factor(power_product(vars, {{"x", p.p}, {"y", p.q}})) *
                     (Rational(p.p) * dx + Rational(p.q) * dy);
      break;
    case 4:
      out = p.alpha * dx + p.beta * dy + dlog("z", vars);
      break;
    case 5:
      out = dx + p.beta * dy + factor(MultiPoly::variable("z", vars)) * DiffForm::differential("z", vars);
      break;
    case 6:
      out = dx + p.beta * dy +
            factor(power_product(vars, {{"y", p.p}, {"z", p.q}})) * (Rational(p.p) * dy + Rational(p.q) * dlog("z", vars));
      break;
    case 7:
      out = dx + p.beta * dy +
            factor(power_product(vars, {{"x", p.p}, {"y", p.q}, {"z", p.r}})) *
                (Rational(p.p) * dx + Rational(p.q) * dy + Rational(p.r) * dlog("z", vars));
      break;
    default:
      break;
  }
  out = out.with_vars(vars);
  if (!exterior_d(out).is_zero()) throw Error(ErrorCode::ClosednessViolated, "catalog form is not closed");
  return out;
}

}  // namespace folia
