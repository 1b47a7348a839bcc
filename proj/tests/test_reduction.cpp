#include "folia/error.hpp"
#include "folia/reduction.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <random>

using namespace folia;
using namespace folia::testing;

namespace {

const VarList kXY{"x", "y"};

MultiPoly X() { return var("x", kXY); }
MultiPoly Y() { return var("y", kXY); }

PlaneGerm germ(const MultiPoly& a, const MultiPoly& b) { return PlaneGerm::make(a, b); }

PlaneGerm cusp() { return germ(q(3) * X() * X(), q(-2) * Y()); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

// sum lambda_i dl_i / l_i cleared by prod l_i, for lines through the origin.
PlaneGerm log_germ(const std::vector<MultiPoly>& lines, const std::vector<Rational>& residues) {
  MultiPoly a(kXY);
  MultiPoly b(kXY);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    MultiPoly rest = cst(1, kXY);
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j != i) rest *= lines[j];
    }
    a += residues[i] * lines[i].derivative("x") * rest;
    b += residues[i] * lines[i].derivative("y") * rest;
  }
  return germ(a, b);
}

PlaneGerm random_log_germ(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(2, 3);
  std::uniform_int_distribution<int> slope(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> res(-5, 5);
  const int k = count(rng);
  std::vector<Rational> slopes;
  std::vector<MultiPoly> lines;
  if (rng() % 3 == 0) lines.push_back(X());
  while (static_cast<int>(lines.size()) < k) {
    const Rational s = make_rational(slope(rng), den(rng));
    if (std::find(slopes.begin(), slopes.end(), s) != slopes.end()) continue;
    slopes.push_back(s);
    lines.push_back(Y() - s * X());
  }
  std::vector<Rational> residues;
  while (residues.size() < lines.size()) {
    const int r = res(rng);
    if (r != 0) residues.push_back(r);
  }
  return log_germ(lines, residues);
}

void check_tree(const PlaneGerm& g, const ReductionTree& t) {
  REQUIRE_FALSE(t.nodes.empty());
  CHECK(t.nodes[0].germ == g);
  int internal = 0;
  for (const auto& n : t.nodes) {
    const bool leaf = std::none_of(t.nodes.begin(), t.nodes.end(), [&](const auto& m) { return m.parent == n.id; });
    if (leaf) {
      CHECK((n.status == NodeStatus::Reduced || n.status == NodeStatus::Regular));
      if (n.status == NodeStatus::Reduced) {
        REQUIRE(n.linear_class.has_value());
        CHECK(n.linear_class->reduced());
        CHECK(n.germ.is_singular());
      } else {
        CHECK_FALSE(n.germ.is_singular());
      }
    } else {
      ++internal;
      CHECK((n.status == NodeStatus::Interior || n.status == NodeStatus::DicriticalResolved));
      const auto r = blow_up(n.germ);
      CHECK(verify_blow_up(n.germ, r));
    }
    if (n.parent >= 0) CHECK(n.depth == t.nodes[static_cast<std::size_t>(n.parent)].depth + 1);
  }
  CHECK(internal == t.blowup_count);
}

}  // namespace

TEST_CASE("multiplicity and dicriticalness") {
  CHECK(multiplicity(germ(q(-5) * Y(), q(3) * X())) == 1);
  CHECK(multiplicity(cusp()) == 1);
  CHECK(multiplicity(germ(Y() * Y(), X() * X())) == 2);
  for (int l1 = -3; l1 <= 3; ++l1) {
    for (int l2 = -3; l2 <= 3; ++l2) {
      if (l1 == 0 || l2 == 0) continue;
      // l1 x dy - l2 y dx
      CHECK(is_dicritical(germ(Rational(-l2) * Y(), Rational(l1) * X())) == (l1 == l2));
    }
  }
  CHECK_FALSE(is_dicritical(cusp()));
}

TEST_CASE("germs are gcd-normalized") {
  const auto g = germ(X() * Y() * q(4), X() * X() * q(-6));
  CHECK(g.a == Y() * q(2));
  CHECK(g.b == X() * q(-3));
  CHECK(code_of([] { germ(MultiPoly(kXY), MultiPoly(kXY)); }) == ErrorCode::ZeroForm);
}

TEST_CASE("is_reduced decision table") {
  const auto c1 = is_reduced(germ(Y(), q(3, 2) * X()));
  CHECK(c1.classification == LinearClass::HyperbolicReduced);
  CHECK(c1.reduced());
  const auto c2 = is_reduced(germ(q(-2) * Y(), X()));
  CHECK(c2.classification == LinearClass::ResonantNonreduced);
  CHECK(c2.trace == 3);
  CHECK(c2.det == 2);
  CHECK_FALSE(c2.reduced());
  const auto c3 = is_reduced(cusp());
  CHECK(c3.classification == LinearClass::NilpotentOrZero);
  CHECK_FALSE(c3.reduced());
  CHECK(is_reduced(germ(-Y(), X() * X())).classification == LinearClass::SaddleNode);
  // Radial: ratio 1.
  CHECK(is_reduced(germ(Y(), -X())).classification == LinearClass::ResonantNonreduced);
  // x dx - 2y dy: dual field (2y, x), eigenvalues +-sqrt(2).
  CHECK(is_reduced(germ(X(), q(-2) * Y())).classification == LinearClass::IrrationalReduced);
  // x dx + 2 y dy - x dy: dual (x - 2y, x), eigenvalues (1 +- i sqrt 7)/2.
  CHECK(is_reduced(germ(X(), q(2) * Y() - X())).classification == LinearClass::IrrationalReduced);
  // Rotation: eigenvalues +-i.
  CHECK(is_reduced(germ(X(), Y())).classification == LinearClass::IrrationalReduced);
}

TEST_CASE("is_reduced is invariant under linear conjugation") {
  std::mt19937_64 rng(60);
  std::uniform_int_distribution<int> c(-4, 4);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 150; ++trial) {
    const auto a = random_poly(rng, kXY, 3, 4);
    const auto b = random_poly(rng, kXY, 3, 4);
    const auto a0 = a - cst(1, kXY) * a.constant_term();
    const auto b0 = b - cst(1, kXY) * b.constant_term();
    if (a0.is_zero() && b0.is_zero()) continue;
    const Rational l11 = c(rng), l12 = c(rng), l21 = c(rng), l22 = c(rng);
    const Rational dl = l11 * l22 - l12 * l21;
    if (dl == 0) continue;
    const auto g = germ(a0, b0);
    const RationalMap phi{kXY, {RatFunc(l11 * X() + l12 * Y()), RatFunc(l21 * X() + l22 * Y())}};
    const auto h = PlaneGerm::from_form(pullback(phi, g.form()));
    const auto cg = is_reduced(g);
    const auto ch = is_reduced(h);
    CHECK(cg.classification == ch.classification);
    if (cg.det != 0) CHECK(cg.trace * cg.trace / cg.det == ch.trace * ch.trace / ch.det);
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("blow_up examples") {
  const auto radial = blow_up(germ(Y(), -X()));
  CHECK(radial.dicritical);
  CHECK(radial.chart_a.divided_power == 2);
  CHECK(radial.chart_a.strict == germ(MultiPoly(kXY), cst(1, kXY)));
  CHECK(radial.chart_b.strict == germ(cst(1, kXY), MultiPoly(kXY)));
  CHECK(radial.singular_points.empty());

  const auto c = blow_up(cusp());
  CHECK_FALSE(c.dicritical);
  CHECK(c.chart_a.divided_power == 1);
  CHECK(c.chart_a.strict == germ(q(3) * X() - q(2) * Y() * Y(), q(-2) * X() * Y()));
  REQUIRE(c.singular_points.size() == 1);
  CHECK(c.singular_points[0].chart == 'A');
  CHECK(c.singular_points[0].v == 0);
  CHECK(verify_blow_up(cusp(), c));
  CHECK(verify_blow_up(germ(Y(), -X()), radial));
}

TEST_CASE("blow_up reports irrational directions") {
  // d(x y^2 - 2x^3): tangent cone 3x(y^2 - 2x^2).
  const auto g = germ(Y() * Y() - q(6) * X() * X(), q(2) * X() * Y());
  const auto r = blow_up(g);
  CHECK(r.obstruction == UniPoly({q(-2), q(0), q(1)}));
  REQUIRE(r.singular_points.size() == 1);
  CHECK(r.singular_points[0].chart == 'B');
  try {
    reduce(g);
    FAIL("expected NeedsFieldExtension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NeedsFieldExtension);
    REQUIRE(e.details().size() == 1);
    CHECK(e.details()[0] == to_string(r.obstruction, "v"));
  }
}

TEST_CASE("strict transforms satisfy the back-substitution identity") {
  std::mt19937_64 rng(61);
  int checked = 0;
  for (int trial = 0; trial < 500 && checked < 200; ++trial) {
    const auto a = random_poly(rng, kXY, 4, 5);
    const auto b = random_poly(rng, kXY, 4, 5);
    const auto a0 = a - cst(1, kXY) * a.constant_term();
    const auto b0 = b - cst(1, kXY) * b.constant_term();
    if (a0.is_zero() && b0.is_zero()) continue;
    const auto g = germ(a0, b0);
    if (!g.is_singular()) continue;
    const auto r = blow_up(g);
    CHECK(verify_blow_up(g, r));
    const auto e_a = r.chart_a.strict.b.evaluate("x", 0);
    const auto c_a = r.chart_a.strict.a.evaluate("x", 0);
    if (r.dicritical) {
      CHECK_FALSE(e_a.is_zero());
    } else {
      CHECK(e_a.is_zero());
      CHECK_FALSE(c_a.is_zero());
    }
    ++checked;
  }
  CHECK(checked >= 150);
}

TEST_CASE("reduce on basic germs") {
  const auto hyperbolic = germ(Y(), q(3, 2) * X());
  const auto t0 = reduce(hyperbolic);
  CHECK(t0.nodes.size() == 1);
  CHECK(t0.depth == 0);
  CHECK(t0.blowup_count == 0);
  CHECK(t0.nodes[0].status == NodeStatus::Reduced);

  const auto radial = germ(Y(), -X());
  const auto t1 = reduce(radial);
  check_tree(radial, t1);
  CHECK(t1.depth == 1);
  CHECK(t1.blowup_count == 1);
  CHECK(t1.nodes[0].status == NodeStatus::DicriticalResolved);
  REQUIRE(t1.nodes.size() == 3);
  CHECK(t1.nodes[1].status == NodeStatus::Regular);
  CHECK(t1.nodes[2].status == NodeStatus::Regular);

  const auto regular = germ(cst(1, kXY), X());
  const auto t2 = reduce(regular);
  CHECK(t2.nodes.size() == 1);
  CHECK(t2.nodes[0].status == NodeStatus::Regular);
}

TEST_CASE("reduce on the cusp") {
  const auto t = reduce(cusp());
  check_tree(cusp(), t);
  CHECK(t.nodes.size() == 8);
  CHECK(t.blowup_count == 3);
  CHECK(t.depth == 3);
  REQUIRE(t.nodes.size() == 8);
  CHECK(t.nodes[1].germ == germ(q(3) * X() - q(2) * Y() * Y(), q(-2) * X() * Y()));
  CHECK(t.nodes[1].chart_path == std::vector<std::string>{"A@v=0"});
  CHECK(t.nodes[2].chart_path == std::vector<std::string>{"B"});
  CHECK(t.nodes[2].status == NodeStatus::Regular);
  CHECK(t.nodes[4].germ == germ(Y() * (q(3) * X() - q(2) * Y()), X() * (q(3) * X() - q(4) * Y())));
  CHECK(t.nodes[4].chart_path == std::vector<std::string>{"A@v=0", "B@0"});
  std::vector<Rational> bbs;
  for (const auto& n : t.nodes) {
    if (n.status != NodeStatus::Reduced) continue;
    bbs.push_back(n.linear_class->trace * n.linear_class->trace / n.linear_class->det);
  }
  std::sort(bbs.begin(), bbs.end());
  CHECK(bbs == std::vector<Rational>{q(-25, 6), q(-4, 3), q(-1, 2)});
  CHECK(code_of([] { reduce(cusp(), 2); }) == ErrorCode::MaxDepthExceeded);
}

TEST_CASE("reduce on resonant germs") {
  for (int n = 2; n <= 5; ++n) {
    // x dy - n y dx
    const auto g = germ(Rational(-n) * Y(), X());
    CHECK(is_reduced(g).classification == LinearClass::ResonantNonreduced);
    const auto t = reduce(g);
    check_tree(g, t);
    CHECK(t.blowup_count == n);
  }
}

TEST_CASE("reduce on random germs with rational reduction data") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_log_germ(rng);
    const auto start = std::chrono::steady_clock::now();
    const auto t = reduce(g);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check_tree(g, t);
    CHECK(secs < 5.0);
  }
}
