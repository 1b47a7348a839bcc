#include "folia/reduction.hpp"

#include "folia/elimination.hpp"
#include "folia/error.hpp"

#include <algorithm>
#include <deque>

namespace folia {

namespace {

const VarList kXY{"x", "y"};

MultiPoly X() { return MultiPoly::variable("x", kXY); }
MultiPoly Y() { return MultiPoly::variable("y", kXY); }

MultiPoly polynomial_of(const RatFunc& f) {
  if (!f.den().is_constant()) throw Error(ErrorCode::InvalidInput, "germ coefficients must be polynomials");
  return f.num() * (Rational(1) / f.den().constant_value());
}

DiffForm plane_form(const MultiPoly& a, const MultiPoly& b) {
  return DiffForm::one_form(kXY, {RatFunc(a), RatFunc(b)});
}

UniPoly on_axis(const MultiPoly& p, const std::string& zero_var, const std::string& keep) {
  return UniPoly::from_multi(p.evaluate(zero_var, 0).with_vars({keep}), keep);
}

ChartTransform chart_transform(const MultiPoly& c, const MultiPoly& d, const MultiPoly& exceptional, int k) {
  const MultiPoly e = exceptional.pow(static_cast<unsigned>(k));
  const auto cc = divide_exact(c, e);
  const auto dd = divide_exact(d, e);
  if (!cc || !dd) throw Error(ErrorCode::InvalidInput, "pullback is not divisible by the exceptional power");
  ChartTransform out;
  out.raw = plane_form(*cc, *dd);
  out.divided_power = k;
  out.strict = PlaneGerm::make(*cc, *dd);
  return out;
}

}  // namespace

PlaneGerm PlaneGerm::make(const MultiPoly& a, const MultiPoly& b) {
  for (const auto& p : {a, b}) {
    for (const auto& v : p.used_vars()) {
      if (v != "x" && v != "y") throw Error(ErrorCode::InvalidInput, "germ variables must be x and y, found " + v);
    }
  }
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::ZeroForm, "germ form is zero");
  const auto c = remove_common_factor({a.with_vars(kXY), b.with_vars(kXY)});
  return PlaneGerm{c[0], c[1]};
}

PlaneGerm PlaneGerm::from_form(const DiffForm& form) {
  if (form.degree() != 1) throw Error(ErrorCode::InvalidInput, "germ needs a 1-form");
  for (const auto& v : form.vars()) {
    if (v != "x" && v != "y" && !form.component(v).num().is_zero()) {
      throw Error(ErrorCode::InvalidInput, "germ variables must be x and y, found " + v);
    }
  }
  const auto f = form.with_vars(unify_vars(form.vars(), kXY));
  return make(polynomial_of(f.component("x")), polynomial_of(f.component("y")));
}

DiffForm PlaneGerm::form() const { return plane_form(a, b); }

bool PlaneGerm::is_singular() const { return a.constant_term() == 0 && b.constant_term() == 0; }

int multiplicity(const PlaneGerm& g) {
  if (g.a.is_zero()) return g.b.order();
  if (g.b.is_zero()) return g.a.order();
  return std::min(g.a.order(), g.b.order());
}

bool is_dicritical(const PlaneGerm& g) {
  const auto nu = static_cast<unsigned>(multiplicity(g));
  return (X() * g.a.homogeneous_part(nu) + Y() * g.b.homogeneous_part(nu)).is_zero();
}

std::string to_string(LinearClass c) {
  switch (c) {
    case LinearClass::NilpotentOrZero: return "nilpotent_or_zero";
    case LinearClass::SaddleNode: return "saddle_node";
    case LinearClass::HyperbolicReduced: return "hyperbolic_reduced";
    case LinearClass::ResonantNonreduced: return "resonant_nonreduced";
    case LinearClass::IrrationalReduced: return "irrational_reduced";
  }
  return "";
}

bool LinearPartClass::reduced() const {
  return classification != LinearClass::NilpotentOrZero && classification != LinearClass::ResonantNonreduced;
}

LinearPartClass is_reduced(const PlaneGerm& g) {
  const std::vector<Rational> origin{0, 0};
  // Dual field (-B, A).
  const Rational m00 = -g.b.derivative("x").evaluate(origin);
  const Rational m01 = -g.b.derivative("y").evaluate(origin);
  const Rational m10 = g.a.derivative("x").evaluate(origin);
  const Rational m11 = g.a.derivative("y").evaluate(origin);
  LinearPartClass out;
  out.trace = m00 + m11;
  out.det = m00 * m11 - m01 * m10;
  const bool square = is_rational_square(out.trace * out.trace - 4 * out.det).has_value();
  if (out.det == 0) {
    out.classification = out.trace == 0 ? LinearClass::NilpotentOrZero : LinearClass::SaddleNode;
  } else if (square) {
    out.classification = out.det > 0 ? LinearClass::ResonantNonreduced : LinearClass::HyperbolicReduced;
  } else {
    out.classification = LinearClass::IrrationalReduced;
  }
  return out;
}

BlowUpResult blow_up(const PlaneGerm& g) {
  if (!g.is_singular()) throw Error(ErrorCode::NotSingularHere, "blow_up needs a singular germ");
  BlowUpResult out;
  out.multiplicity = multiplicity(g);
  out.dicritical = is_dicritical(g);
  const int k = out.multiplicity + (out.dicritical ? 1 : 0);
  const MultiPoly x = X();
  const MultiPoly y = Y();

  // Chart A: A(x, xy) dx + B(x, xy) (y dx + x dy).
  const MultiPoly aa = g.a.compose({x, x * y}, kXY);
  const MultiPoly ba = g.b.compose({x, x * y}, kXY);
  out.chart_a = chart_transform(aa + y * ba, x * ba, x, k);

  // Chart B: A(xy, y) (y dx + x dy) + B(xy, y) dy.
  const MultiPoly ab = g.a.compose({x * y, y}, kXY);
  const MultiPoly bb = g.b.compose({x * y, y}, kXY);
  out.chart_b = chart_transform(y * ab, x * ab + bb, y, k);

  const auto& sa = out.chart_a.strict;
  const UniPoly on_e = gcd(on_axis(sa.a, "x", "y"), on_axis(sa.b, "x", "y"));
  if (on_e.is_zero()) throw Error(ErrorCode::InvalidInput, "strict transform vanishes on the exceptional divisor");
  const auto roots = rational_roots(on_e);
  for (const auto& [v, m] : roots.roots) out.singular_points.push_back({'A', v});
  out.obstruction = roots.cofactor.degree() > 0 ? squarefree_part(roots.cofactor).monic() : UniPoly::constant(1);
  if (out.chart_b.strict.is_singular()) out.singular_points.push_back({'B', 0});
  return out;
}

bool verify_blow_up(const PlaneGerm& g, const BlowUpResult& r) {
  const MultiPoly x = X();
  const MultiPoly y = Y();
  const auto check = [&](const ChartTransform& t, const MultiPoly& ix, const MultiPoly& iy, const MultiPoly& e) {
    const DiffForm pulled = pullback(RationalMap{kXY, {RatFunc(ix), RatFunc(iy)}}, g.form());
    if (pulled != RatFunc(e.pow(static_cast<unsigned>(t.divided_power))) * t.raw) return false;
    const MultiPoly ra = polynomial_of(t.raw.component("x"));
    const MultiPoly rb = polynomial_of(t.raw.component("y"));
    // raw = f * strict for a polynomial f.
    const MultiPoly& ref = t.strict.a.is_zero() ? t.strict.b : t.strict.a;
    const MultiPoly& raw_ref = t.strict.a.is_zero() ? rb : ra;
    const auto f = divide_exact(raw_ref, ref);
    return f && ra == *f * t.strict.a && rb == *f * t.strict.b;
  };
  return check(r.chart_a, x, x * y, x) && check(r.chart_b, x * y, y, y);
}

PlaneGerm recenter(const PlaneGerm& g, const Rational& v) {
  const MultiPoly shifted = Y() + MultiPoly::constant(v, kXY);
  return PlaneGerm::make(g.a.substitute("y", shifted), g.b.substitute("y", shifted));
}

std::string to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::Reduced: return "reduced";
    case NodeStatus::Regular: return "regular";
    case NodeStatus::DicriticalResolved: return "dicritical-resolved";
    case NodeStatus::Interior: return "interior";
  }
  return "";
}

ReductionTree reduce(const PlaneGerm& g, int max_depth) {
  ReductionTree tree;
  ReductionNode root;
  root.germ = PlaneGerm::make(g.a, g.b);
  tree.nodes.push_back(std::move(root));
  std::deque<int> work{0};
  while (!work.empty()) {
    const int id = work.front();
    work.pop_front();
    // Copy: push_back below may reallocate.
    const ReductionNode node = tree.nodes[static_cast<std::size_t>(id)];
    auto& status = tree.nodes[static_cast<std::size_t>(id)].status;
    if (!node.germ.is_singular()) {
      status = NodeStatus::Regular;
      continue;
    }
    const auto cls = is_reduced(node.germ);
    tree.nodes[static_cast<std::size_t>(id)].linear_class = cls;
    if (cls.reduced()) {
      status = NodeStatus::Reduced;
      continue;
    }
    if (node.depth + 1 > max_depth) {
      throw Error(ErrorCode::MaxDepthExceeded, "reduction exceeded depth " + std::to_string(max_depth));
    }
    const auto r = blow_up(node.germ);
    if (r.obstruction.degree() > 0) {
      std::string where = "root";
      if (!node.chart_path.empty()) {
        where.clear();
        for (const auto& c : node.chart_path) where += (where.empty() ? "" : "/") + c;
      }
      throw Error(ErrorCode::NeedsFieldExtension, "irrational singular directions after blowing up " + where,
                  {to_string(r.obstruction, "v")});
    }
    status = r.dicritical ? NodeStatus::DicriticalResolved : NodeStatus::Interior;
    ++tree.blowup_count;
    const auto add_child = [&](const std::string& label, PlaneGerm germ) {
      ReductionNode child;
      child.id = static_cast<int>(tree.nodes.size());
      child.parent = id;
      child.chart_path = node.chart_path;
      child.chart_path.push_back(label);
      child.germ = std::move(germ);
      child.depth = node.depth + 1;
      tree.depth = std::max(tree.depth, child.depth);
      work.push_back(child.id);
      tree.nodes.push_back(std::move(child));
    };
    bool any_a = false;
    for (const auto& p : r.singular_points) {
      if (p.chart != 'A') continue;
      any_a = true;
      add_child("A@v=" + to_string(p.v), recenter(r.chart_a.strict, p.v));
    }
    if (!any_a) add_child("A", r.chart_a.strict);
    const bool b_singular = r.chart_b.strict.is_singular();
    add_child(b_singular ? "B@0" : "B", r.chart_b.strict);
  }
  return tree;
}

}  // namespace folia
