// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// all pass.

#include "commands.hpp"
#include "folia/error.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace folia;
using namespace folia::testing;
using Clock = std::chrono::steady_clock;

namespace {

const VarList kXY{"x", "y"};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects failures for one criterion.
struct Verdict {
  std::vector<std::string> failures;
  std::ostringstream summary;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  int failed = 0;
};

bool run(int number, const std::string& title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.expect(false, std::string("unexpected exception: ") + e.what());
  }
  const bool ok = v.failed == 0;
  std::printf("criterion %d: %s  %s  [%s] (%.2f s)\n", number, ok ? "PASS" : "FAIL", title.c_str(),
              v.summary.str().c_str(), seconds_since(t0));
  for (const auto& f : v.failures) std::printf("    %s\n", f.c_str());
  return ok;
}

std::vector<cli::CorpusEntry> corpus() {
  static const auto c = cli::build_corpus({});
  return c;
}

std::vector<Rational> all_contributions(const BBReport& r) {
  std::vector<Rational> out;
  for (const auto& c : r.per_point) out.push_back(c.bb);
  for (const auto& c : r.infinity_contributions) out.push_back(c.bb);
  std::sort(out.begin(), out.end());
  return out;
}

ProjFoliation entry_foliation(const cli::CorpusEntry& e) { return cli::foliation_input(cli::to_json(e)); }

bool proportional(const DiffForm& a, const DiffForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [idx, ca] = *a.coefficients().begin();
  const DiffForm b2 = b.with_vars(a.vars());
  const auto it = b2.coefficients().find(idx);
  if (it == b2.coefficients().end()) return false;
  const RatFunc ratio = it->second / ca;
  return ratio.is_constant() && b2 == ratio.num().constant_value() * a;
}

Rational random_nonzero(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  while (true) {
    const int n = num(rng);
    if (n != 0) return make_rational(n, den(rng));
  }
}

/// Componentwise Lie derivative of a 1-form: (L_X a)_j = X(a_j) + sum_i a_i d_j X_i.
DiffForm lie_componentwise(const PolyVectorField& x, const DiffForm& a) {
  const auto& ctx = a.vars();
  std::vector<RatFunc> out;
  for (const auto& vj : ctx) {
    RatFunc s{MultiPoly(ctx)};
    const RatFunc aj = a.component(vj);
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      s += RatFunc(x.components[i]) * aj.derivative(ctx[i]);
      s += a.component(ctx[i]) * RatFunc(x.components[i].derivative(vj));
    }
    out.push_back(s);
  }
  return DiffForm::one_form(ctx, out);
}

PlaneGerm random_log_germ(std::mt19937_64& rng) {
  const auto x = var("x", kXY);
  const auto y = var("y", kXY);
  std::uniform_int_distribution<int> count(2, 3);
  std::uniform_int_distribution<int> res(-5, 5);
  const int k = count(rng);
  std::vector<Rational> slopes;
  std::vector<MultiPoly> lines;
  if (rng() % 3 == 0) lines.push_back(x);
  while (static_cast<int>(lines.size()) < k) {
    const Rational s = make_rational(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 3) + 1);
    if (std::find(slopes.begin(), slopes.end(), s) != slopes.end()) continue;
    slopes.push_back(s);
    lines.push_back(y - s * x);
  }
  MultiPoly a(kXY);
  MultiPoly b(kXY);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Rational r = 0;
    while (r == 0) r = res(rng);
    MultiPoly rest = cst(1, kXY);
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j != i) rest *= lines[j];
    }
    a += r * lines[i].derivative("x") * rest;
    b += r * lines[i].derivative("y") * rest;
  }
  return PlaneGerm::make(a, b);
}

/// Pullback of the germ by the chart map equals E^k times the raw strict
/// transform, and the normalized strict transform divides the raw one.
bool back_substitution_holds(const PlaneGerm& g, const BlowUpResult& r) {
  const auto x = RatFunc(var("x", kXY));
  const auto y = RatFunc(var("y", kXY));
  const auto check = [&](const ChartTransform& c, const RationalMap& m, const MultiPoly& e) {
    MultiPoly ek = cst(1, kXY);
    for (int i = 0; i < c.divided_power; ++i) ek *= e;
    if (pullback(m, g.form()).with_vars(kXY) != RatFunc(ek) * c.raw.with_vars(kXY)) return false;
    const auto ra = c.raw.with_vars(kXY).component("x").num();
    const auto rb = c.raw.with_vars(kXY).component("y").num();
    const auto h = c.strict.a.is_zero() ? divide_exact(rb, c.strict.b) : divide_exact(ra, c.strict.a);
    return h && ra == *h * c.strict.a && rb == *h * c.strict.b;
  };
  return check(r.chart_a, RationalMap{kXY, {x, x * y}}, var("x", kXY)) &&
         check(r.chart_b, RationalMap{kXY, {x * y, y}}, var("y", kXY));
}

/// Saddle-node, or nonzero eigenvalues whose ratio is not a positive rational.
bool reduced_oracle(const PlaneGerm& g) {
  const auto d = linear_data(AffineForm{0, g.form()}, {0, 0});
  if (d.det == 0) return d.trace != 0;
  const Rational disc = d.trace * d.trace - 4 * d.det;
  return !(d.det > 0 && is_rational_square(disc));
}

void check_tree(Verdict& v, const std::string& name, const PlaneGerm& g, const ReductionTree& t) {
  int internal = 0;
  for (const auto& n : t.nodes) {
    const bool leaf = std::none_of(t.nodes.begin(), t.nodes.end(), [&](const auto& m) { return m.parent == n.id; });
    if (leaf) {
      const bool ok = (n.status == NodeStatus::Reduced && n.germ.is_singular() && reduced_oracle(n.germ)) ||
                      (n.status == NodeStatus::Regular && !n.germ.is_singular());
      v.expect(ok, name + ": leaf " + std::to_string(n.id) + " is neither reduced nor regular");
    } else {
      ++internal;
      v.expect(back_substitution_holds(n.germ, blow_up(n.germ)),
               name + ": back-substitution fails at node " + std::to_string(n.id));
    }
  }
  v.expect(t.nodes.front().germ == g, name + ": root differs from the input");
  v.expect(internal == t.blowup_count, name + ": blow-up count differs from the number of internal nodes");
}

void criterion1(Verdict& v) {
  const VarList xy = kXY;
  const auto x = var("x", xy);
  const auto y = var("y", xy);
  double worst = 0;
  for (const auto& l : {Rational(2), Rational(3), Rational(5), Rational(-3), make_rational(7, 2)}) {
    const auto t0 = Clock::now();
    const auto f = from_affine(AffineForm{0, DiffForm::one_form(xy, {RatFunc(l * y), RatFunc(-x)})}, 2);
    const auto r = bb_sum_p2(f);
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    v.expect(r.complete && r.total == 9 && r.expected == 9, "lambda " + to_string(l) + ": total " + to_string(r.total));
    v.expect(dt < 1.0, "lambda " + to_string(l) + " took " + std::to_string(dt) + " s");
    if (l == 2) {
      const std::vector<Rational> want{0, make_rational(9, 2), make_rational(9, 2)};
      v.expect(all_contributions(r) == want, "lambda 2: per-point values differ from {9/2, 0, 9/2}");
    }
  }
  v.summary << "5 cases, total 9 each, slowest " << worst << " s";
}

void criterion2(Verdict& v) {
  int cases = 0;
  int compared = 0;
  std::set<std::string> totals;
  for (const auto& e : corpus()) {
    if (e.kind != "log-arrangement") continue;
    const auto f = entry_foliation(e);
    if (f.degree != 2 && f.degree != 3) continue;
    const auto t0 = Clock::now();
    const auto r = bb_sum_p2(f);
    const auto direct = bb_sum_direct(f);
    const double dt = seconds_since(t0);
    ++cases;
    const Rational want = (f.degree + 2) * (f.degree + 2);
    totals.insert(to_string(r.total));
    v.expect(r.complete && r.total == want, e.name + ": total " + to_string(r.total) + ", want " + to_string(want));
    if (direct) {
      ++compared;
      v.expect(*direct == r.total, e.name + ": direct sum " + to_string(*direct) + " disagrees");
    }
    v.expect(dt < 10.0, e.name + " took " + std::to_string(dt) + " s");
  }
  v.expect(totals.count("16") && totals.count("25"), "degree 2 and degree 3 entries were not both found");
  v.expect(compared > 0, "no entry allowed a direct rational-point comparison");
  v.summary << cases << " entries, " << compared << " compared with the direct sum";
}

void criterion3(Verdict& v) {
  std::mt19937_64 rng(3);
  const auto x = var("x", kXY);
  const auto y = var("y", kXY);
  const std::vector<Rational> origin{0, 0};
  for (int i = 0; i < 50; ++i) {
    const Rational l1 = random_nonzero(rng, 12);
    const Rational l2 = random_nonzero(rng, 12);
    // l1 x dy - l2 y dx
    const AffineForm a{0, DiffForm::one_form(kXY, {RatFunc(-l2 * y), RatFunc(l1 * x)})};
    const Rational want = (l1 + l2) * (l1 + l2) / (l1 * l2);
    v.expect(bb_index(a, origin) == want, "pair " + to_string(l1) + ", " + to_string(l2));
  }
  // d(xy) and d(x^2 + y^2): Morse first integrals.
  v.expect(bb_index(AffineForm{0, DiffForm::one_form(kXY, {RatFunc(y), RatFunc(x)})}, origin) == 0, "d(xy)");
  v.expect(bb_index(AffineForm{0, DiffForm::one_form(kXY, {RatFunc(Rational(2) * x), RatFunc(Rational(2) * y)})},
                    origin) == 0,
           "d(x^2 + y^2)");
  int models = 0;
  for (long p = 1; p <= 20; ++p) {
    for (long q = 1; q <= 20; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++models;
      const AffineForm a{0, DiffForm::one_form(kXY, {RatFunc(Rational(p) * y), RatFunc(Rational(q) * x)})};
      const Rational bb = bb_index(a, origin);
      v.expect(bb == -Rational((p - q) * (p - q)) / Rational(p * q), "p y dx + q x dy at " + std::to_string(p) + "," +
                                                                         std::to_string(q));
      v.expect(bb <= 0 && ((bb < 0) == (p != q)), "sign at " + std::to_string(p) + "," + std::to_string(q));
    }
  }
  v.summary << "50 random pairs, 2 Morse cases, " << models << " coprime (p, q)";
}

void criterion4(Verdict& v) {
  std::mt19937_64 rng(4);
  const VarList z = projective_vars(2);
  const auto euler = PolyVectorField::euler(z);
  int n = 0;
  while (n < 500) {
    const int deg = 1 + n % 4;
    const auto a = random_poly(rng, kXY, deg, 4);
    const auto b = random_poly(rng, kXY, deg, 4);
    if (a.is_zero() && b.is_zero()) continue;
    ++n;
    const auto alpha = DiffForm::one_form(kXY, {RatFunc(a), RatFunc(b)});
    const auto f = from_affine(AffineForm{0, alpha}, 2);
    std::set<int> degrees;
    MultiPoly g;
    bool homogeneous = true;
    for (const auto& c : f.coefficients()) {
      if (c.is_zero()) continue;
      homogeneous = homogeneous && c.is_homogeneous();
      degrees.insert(c.total_degree());
      g = g.is_zero() ? c : gcd(g, c);
    }
    const std::string tag = "case " + std::to_string(n);
    v.expect(homogeneous && degrees.size() == 1, tag + ": coefficients not homogeneous of one degree");
    v.expect(g.is_constant(), tag + ": coefficient gcd is not 1");
    v.expect(contract(euler, f.omega).is_zero(), tag + ": Euler contraction nonzero");
    v.expect(wedge(f.omega, exterior_d(f.omega)).is_zero(), tag + ": not integrable");
    const MultiPoly h = a.is_zero() ? b : (b.is_zero() ? a : gcd(a, b));
    const auto reduced = DiffForm::one_form(kXY, {RatFunc(*divide_exact(a, h)), RatFunc(*divide_exact(b, h))});
    v.expect(proportional(to_chart(f, 0).form, reduced), tag + ": chart round trip is not a rescaling");
  }
  v.summary << n << " random affine forms";
}

void criterion5(Verdict& v) {
  int foliations = 0;
  for (const auto& e : corpus()) {
    if (e.kind == "germ" || e.kind == "catalog") continue;
    const auto f = entry_foliation(e);
    ++foliations;
    for (std::uint64_t seed = 0; seed <= 4; ++seed) {
      const int t = tangency_degree(f, 5, seed);
      v.expect(t == f.degree, e.name + " seed " + std::to_string(seed) + ": tangencies " + std::to_string(t) +
                                  ", degree " + std::to_string(f.degree));
    }
  }
  v.summary << foliations << " corpus foliations, seeds 0-4";
}

void criterion6(Verdict& v) {
  const auto x = var("x", kXY);
  const auto y = var("y", kXY);
  std::vector<std::pair<std::string, PlaneGerm>> suite;
  suite.emplace_back("cusp", PlaneGerm::make(Rational(3) * x * x, Rational(-2) * y));
  suite.emplace_back("radial", PlaneGerm::make(y, -x));
  for (long n = 2; n <= 5; ++n) suite.emplace_back("resonant " + std::to_string(n), PlaneGerm::make(Rational(-n) * y, x));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) suite.emplace_back("random " + std::to_string(i), random_log_germ(rng));
  double worst = 0;
  for (const auto& [name, g] : suite) {
    const auto t0 = Clock::now();
    const auto t = reduce(g);
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    v.expect(dt < 5.0, name + " took " + std::to_string(dt) + " s");
    check_tree(v, name, g, t);
    if (name.rfind("resonant ", 0) == 0) {
      v.expect(t.blowup_count == std::stol(name.substr(9)), name + ": blow-up count " + std::to_string(t.blowup_count));
    }
    if (name == "cusp") {
      v.expect(t.nodes.size() == 8 && t.blowup_count == 3 && t.depth == 3, "cusp: tree shape differs from the fixture");
      const auto& n4 = t.nodes.at(4);
      v.expect(n4.chart_path == std::vector<std::string>{"A@v=0", "B@0"}, "cusp: node 4 path");
      v.expect(n4.germ == PlaneGerm::make(y * (Rational(3) * x - Rational(2) * y), x * (Rational(3) * x - Rational(4) * y)),
               "cusp: node 4 germ");
      std::vector<Rational> leaf_bb;
      for (const auto& n : t.nodes) {
        if (n.status == NodeStatus::Reduced) leaf_bb.push_back(bb_index(AffineForm{0, n.germ.form()}, {0, 0}));
      }
      std::sort(leaf_bb.begin(), leaf_bb.end());
      v.expect(leaf_bb == std::vector<Rational>{make_rational(-25, 6), make_rational(-4, 3), make_rational(-1, 2)},
               "cusp: leaf indices differ from {-25/6, -4/3, -1/2}");
      bool guarded = false;
      try {
        reduce(g, 2);
      } catch (const Error& e) {
        guarded = e.code() == ErrorCode::MaxDepthExceeded;
      }
      v.expect(guarded, "cusp: max_depth 2 does not raise MaxDepthExceeded");
    }
  }
  v.summary << suite.size() << " germs, slowest " << worst << " s";
}

void criterion7(Verdict& v) {
  int realized = 0;
  const std::vector<Rational> values{make_rational(-3, 2), -1, 0, make_rational(1, 3), 2};
  const std::vector<std::array<long, 3>> pqr{{1, 1, 1}, {1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (int family = 1; family <= 7; ++family) {
    for (long s : {1L, 2L}) {
      for (const auto& [p, q, r] : pqr) {
        for (const auto& val : values) {
          CatalogForm c{family, {}};
          c.params.lambda = val;
          c.params.epsilon = val;
          c.params.alpha = val == 0 ? Rational(1) : val;
          c.params.beta = val == 0 ? make_rational(-1, 2) : val;
          c.params.s = s;
          c.params.p = p;
          c.params.q = q;
          c.params.r = r;
          try {
            validate(c);
          } catch (const Error&) {
            continue;
          }
          const auto w = catalog_realize(c);
          ++realized;
          v.expect(!w.is_zero() && exterior_d(w).is_zero(), "family " + std::to_string(family) + " not closed");
        }
      }
    }
  }
  v.expect(realized >= 40, "only " + std::to_string(realized) + " valid instances");
  v.summary << realized << " realized instances, all closed";
}

RatFunc random_coefficient(std::mt19937_64& rng) {
  const VarList xv{"x"};
  MultiPoly num = random_poly(rng, xv, 3, 3);
  if (rng() % 4 != 0) return RatFunc(num);
  MultiPoly den = random_poly(rng, xv, 2, 2);
  if (den.is_zero()) den = cst(1, xv);
  return RatFunc(num, den);
}

void criterion8(Verdict& v) {
  std::mt19937_64 rng(8);
  int odes = 0;
  int at_infinity = 0;
  for (int i = 0; odes < 120; ++i) {
    const RiccatiODE ode{random_coefficient(rng), random_coefficient(rng), random_coefficient(rng)};
    if (ode.a.is_zero() && ode.b.is_zero() && ode.c.is_zero()) continue;
    ++odes;
    const auto t = riccati_triple(ode);
    const std::string tag = "ode " + std::to_string(i);
    v.expect(mc_check(t).ok(), tag + ": Maurer-Cartan residual nonzero");
    const auto omega = unfold(t);
    v.expect(wedge(omega, exterior_d(omega)).is_zero(), tag + ": unfolding not integrable");
    v.expect(restrict_unfolding(t, UnfoldingEnd::Zero).form == t.omega[0], tag + ": t = 0 slice differs from omega0");
    const auto inf = restrict_unfolding(t, UnfoldingEnd::Infinity);
    if (t.omega[2].is_zero()) {
      v.expect(inf.degenerate, tag + ": t = infinity should be degenerate when omega2 = 0");
    } else {
      ++at_infinity;
      v.expect(!inf.form.is_zero() && proportional(t.omega[2], inf.form) && inf.scale && *inf.scale != 0 &&
                   inf.form == *inf.scale * t.omega[2],
               tag + ": t = infinity slice is not a nonzero multiple of omega2");
    }
  }
  v.summary << odes << " random equations, " << at_infinity << " with omega2 != 0";
}

void criterion9(Verdict& v) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(9);
  const VarList ctx{"x", "y", "z"};
  const VarList source{"u", "v"};
  std::map<std::string, int> counts;
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_poly_form(rng, ctx, i % 2, 4, 4);
    v.expect(exterior_d(exterior_d(a)).is_zero(), "d o d");
    ++counts["d o d"];
  }
  for (int i = 0; i < 1000; ++i) {
    const int p = i % 2;
    const int q = (i / 2) % 2;
    const auto a = random_poly_form(rng, ctx, p, 3, 3);
    const auto b = random_poly_form(rng, ctx, q, 3, 3);
    const Rational sign = p % 2 == 0 ? 1 : -1;
    v.expect(exterior_d(wedge(a, b)) == wedge(exterior_d(a), b) + sign * wedge(a, exterior_d(b)), "Leibniz");
    ++counts["Leibniz"];
  }
  for (int i = 0; i < 1000; ++i) {
    const int p = i % 3;
    const int q = (i / 3) % (4 - p);
    const auto a = random_poly_form(rng, ctx, p, 3, 3);
    const auto b = random_poly_form(rng, ctx, q, 3, 3);
    const Rational sign = (p * q) % 2 == 0 ? 1 : -1;
    v.expect(wedge(a, b) == sign * wedge(b, a), "anticommutativity");
    ++counts["anticommutativity"];
  }
  for (int i = 0; i < 1000; ++i) {
    PolyVectorField x{ctx, {}};
    for (std::size_t k = 0; k < ctx.size(); ++k) x.components.push_back(random_poly(rng, ctx, 3, 3));
    const auto a = random_poly_form(rng, ctx, 1, 3, 3);
    v.expect(lie_derivative(x, a) == lie_componentwise(x, a), "Cartan");
    v.expect(lie_derivative(x, a) == contract(x, exterior_d(a)) + exterior_d(contract(x, a)), "Cartan (i d + d i)");
    ++counts["Cartan"];
  }
  int pulled = 0;
  for (int i = 0; pulled < 1000; ++i) {
    std::vector<RatFunc> comps;
    for (std::size_t k = 0; k < ctx.size(); ++k) {
      if (i % 4 == 0) {
        MultiPoly den = random_poly(rng, source, 2, 2);
        if (den.is_zero()) den = cst(1, source);
        comps.push_back(RatFunc(random_poly(rng, source, 2, 3), den));
      } else {
        comps.push_back(RatFunc(random_poly(rng, source, 2, 3)));
      }
    }
    const RationalMap f{source, comps};
    const auto a = random_poly_form(rng, ctx, i % 2, 2, 3);
    try {
      v.expect(pullback(f, exterior_d(a)) == exterior_d(pullback(f, a)), "pullback commutes with d");
      ++pulled;
    } catch (const Error& e) {
      v.expect(e.code() == ErrorCode::PullbackUndefined, std::string("pullback: ") + e.what());
    }
  }
  counts["pullback"] = pulled;
  const double dt = seconds_since(t0);
  v.expect(dt < 60.0, "suite took " + std::to_string(dt) + " s");
  for (const auto& [name, n] : counts) {
    v.expect(n >= 1000, name + " ran only " + std::to_string(n) + " cases");
    v.summary << name << " " << n << "; ";
  }
  v.summary << "total " << dt << " s";
}

}  // namespace

int main() {
  std::cout.precision(3);
  bool ok = true;
  ok &= run(1, "Baum-Bott sum 9 on the degree-1 family", criterion1);
  ok &= run(2, "Baum-Bott sums on log arrangements of degree 2 and 3", criterion2);
  ok &= run(3, "hyperbolic index formula", criterion3);
  ok &= run(4, "homogenization pipeline", criterion4);
  ok &= run(5, "degree equals tangency count", criterion5);
  ok &= run(6, "reduction of singularities", criterion6);
  ok &= run(7, "catalog closedness", criterion7);
  ok &= run(8, "Maurer-Cartan suite", criterion8);
  ok &= run(9, "exterior calculus properties", criterion9);
  std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
