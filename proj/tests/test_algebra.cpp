#include "folia/elimination.hpp"
#include "folia/error.hpp"
#include "folia/multipoly.hpp"
#include "folia/ratfunc.hpp"
#include "folia/unipoly.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace folia;
using namespace folia::testing;

namespace {

const VarList kXY{"x", "y"};

// Laplace-expansion determinant; independent of the Bareiss routine.
MultiPoly laplace_det(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return cst(1);
  if (n == 1) return m[0][0];
  MultiPoly out;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    MultiPoly term = m[0][c] * laplace_det(minor);
    out += (c % 2 == 0) ? term : -term;
  }
  return out;
}

// Sylvester matrix determinant, the textbook definition of the resultant.
MultiPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, const std::string& v) {
  const auto cp = p.coefficients_in(v);
  const auto cq = q.coefficients_in(v);
  const std::size_t m = cp.size() - 1;
  const std::size_t n = cq.size() - 1;
  std::vector<std::vector<MultiPoly>> s(m + n, std::vector<MultiPoly>(m + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) s[i][i + m - k] = cp[k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + n - k] = cq[k];
  }
  return laplace_det(s);
}

// All rational roots by divisor enumeration; only for small coefficients.
std::vector<Rational> brute_force_roots(const UniPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : p.coeffs()) ints.push_back(c.get_num() * (den / c.get_den()));
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  std::vector<Rational> out;
  if (low > 0) out.push_back(0);
  const long c0 = Integer(abs(ints[low])).get_si();
  const long lc = Integer(abs(ints.back())).get_si();
  for (long a = 1; a <= c0; ++a) {
    if (c0 % a) continue;
    for (long b = 1; b <= lc; ++b) {
      if (lc % b) continue;
      for (int s : {1, -1}) {
        Rational r = make_rational(s * a, b);
        if (p(r) == 0 && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
}

TEST_CASE("is_rational_square") {
  CHECK(*is_rational_square(q(4, 9)) == q(2, 3));
  CHECK_FALSE(is_rational_square(q(2)).has_value());
  CHECK(*is_rational_square(q(0)) == 0);
  CHECK_FALSE(is_rational_square(q(-4)).has_value());
}

TEST_CASE("poly_arith examples") {
  const auto x = var("x", kXY);
  const auto y = var("y", kXY);
  CHECK((x + y) + (x - y) == 2 * x * q(1) * 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(((x + y) * MultiPoly(kXY)).is_zero());
  CHECK(to_string(x * x * y * q(2) - y * q(3, 2) + cst(1, kXY)) == "2*x^2*y - 3/2*y + 1");
}

TEST_CASE("contexts unify by name") {
  const auto x = MultiPoly::variable("x");
  const auto y = MultiPoly::variable("y");
  const auto s = x + y;
  CHECK(s.vars() == VarList{"x", "y"});
  const auto t = MultiPoly::variable("b") + MultiPoly::variable("a", {"c"});
  CHECK(t.vars() == VarList{"a", "b", "c"});
  // Subset context keeps the larger order.
  const auto u = MultiPoly::variable("y", {"z", "y"}) + MultiPoly::variable("y");
  CHECK(u.vars() == VarList{"z", "y"});
  CHECK(x == x.with_vars({"y", "x"}));
}

TEST_CASE("poly_gcd examples") {
  const auto x = var("x", kXY);
  const auto y = var("y", kXY);
  CHECK(gcd(x * x * y, x * y * y) == x * y);
  CHECK(gcd(x * x - cst(1, kXY), x - cst(1, kXY)) == x - cst(1, kXY));
  CHECK(gcd(x + cst(1, kXY), y + cst(1, kXY)) == cst(1, kXY));
  CHECK_THROWS_AS(gcd(MultiPoly(kXY), MultiPoly(kXY)), Error);
  // Normalized to a positive leading coefficient.
  CHECK(gcd(-x * y, MultiPoly(kXY)) == x * y);
}

TEST_CASE("partial_derivative examples") {
  const auto x = var("x", kXY);
  const auto y = var("y", kXY);
  CHECK((x * x * y).derivative("x") == 2 * x * y * q(1));
  CHECK((x * x).derivative("y").is_zero());
  CHECK((x.pow(3) + x).derivative("x") == 3 * x * x * q(1) + cst(1, kXY));
  CHECK_THROWS_AS(x.derivative("w"), Error);
}

TEST_CASE("homogeneous_part examples") {
  const auto x = var("x", kXY);
  const auto y = var("y", kXY);
  CHECK((x * x + y).homogeneous_part(1) == y);
  CHECK((x * x + y).homogeneous_part(2) == x * x);
  CHECK(cst(3).homogeneous_part(0) == cst(3));
}

TEST_CASE("resultant examples") {
  const auto x = var("x", kXY);
  const auto y = var("y", kXY);
  // 2x2 Sylvester determinant by hand: det [[1, -x^2], [1, x]] = x + x^2.
  CHECK(resultant(y - x * x, y + x, "y") == x + x * x);
  // p evaluated at the root of q.
  CHECK(resultant(x * x + cst(1), x - cst(1), "x") == cst(2));
  CHECK(resultant(y, y, "y").is_zero());
  CHECK_THROWS_AS(resultant(x, x + cst(1), "y"), Error);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(7);
  const VarList ctx{"x", "y", "z"};
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_poly(rng, ctx, 4, 5);
    auto qq = random_poly(rng, ctx, 4, 5);
    if (p.degree_in("y") < 1 || qq.degree_in("y") < 1) continue;
    CHECK(resultant(p, qq, "y") == sylvester_resultant(p, qq, "y"));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("resultant vanishes exactly on a shared factor") {
  std::mt19937_64 rng(11);
  const VarList ctx{"x", "y"};
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_poly(rng, ctx, 2, 3);
    if (g.degree_in("y") < 1) continue;
    auto a = random_poly(rng, ctx, 2, 3) + cst(1, ctx);
    auto b = random_poly(rng, ctx, 2, 3) + var("y", ctx);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(resultant(a * g, b * g, "y").is_zero());
    if (gcd(a, b).degree_in("y") == 0 && (a.degree_in("y") > 0 || b.degree_in("y") > 0)) {
      CHECK_FALSE(resultant(a, b, "y").is_zero());
    }
  }
}

TEST_CASE("subresultant_first examples") {
  const auto x = var("x", kXY);
  const auto y = var("y", kXY);
  {
    auto s = subresultant_first(y - x * x, y + x, "y");
    // On common solutions x^2 = -x, both give the same y.
    for (long xv : {0L, -1L}) {
      Rational yv = -s.s0.evaluate("x", xv).constant_value() / s.s1.evaluate("x", xv).constant_value();
      CHECK(yv == Rational(xv * xv));
    }
  }
  {
    auto s = subresultant_first(y * y - x, y, "y");
    CHECK(s.s0.is_zero());
    CHECK_FALSE(s.s1.is_zero());
  }
  {
    auto s = subresultant_first(y - cst(1), y - cst(1), "y");
    CHECK(-s.s0.constant_value() / s.s1.constant_value() == 1);
  }
  CHECK_THROWS_AS(subresultant_first(y * y, y * y * y, "y"), Error);
}

TEST_CASE("subresultant_first matches the determinant definition on random inputs") {
  // S1 = prem-free characterisation: S1 lies in the ideal (p, q) with cofactors
  // of degree < n-1 and < m-1; check instead that at rational common roots it
  // recovers y, using constructed systems with known solutions.
  std::mt19937_64 rng(5);
  const VarList ctx{"x", "y"};
  const auto x = var("x", ctx);
  const auto y = var("y", ctx);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> d(-4, 4);
    const Rational x0 = d(rng), y0 = d(rng);
    auto a = (y - cst(1, ctx) * y0) * (y + x * d(rng) + cst(d(rng), ctx)) + (x - cst(1, ctx) * x0) * d(rng);
    auto b = (y - cst(1, ctx) * y0) * (x + cst(d(rng), ctx)) + (x - cst(1, ctx) * x0) * (y * y + cst(1, ctx));
    if (a.degree_in("y") < 1 || b.degree_in("y") < 1) continue;
    FirstSubresultant s;
    try {
      s = subresultant_first(a, b, "y");
    } catch (const Error&) {
      continue;
    }
    const Rational s1 = s.s1.evaluate("x", x0).constant_value();
    const Rational s0 = s.s0.evaluate("x", x0).constant_value();
    if (s1 != 0) CHECK(-s0 / s1 == y0);
  }
}

TEST_CASE("rational_roots examples") {
  {
    auto r = rational_roots(UniPoly({q(-1), q(0), q(1)}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == std::pair<Rational, int>{q(-1), 1});
    CHECK(r.roots[1] == std::pair<Rational, int>{q(1), 1});
    CHECK(r.cofactor == UniPoly::constant(1));
  }
  {
    const UniPoly f = UniPoly({q(-1, 2), q(1)}) * UniPoly({q(-1, 2), q(1)}) * UniPoly({q(1), q(0), q(1)});
    auto r = rational_roots(f);
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0] == std::pair<Rational, int>{q(1, 2), 2});
    CHECK(r.cofactor == UniPoly({q(1), q(0), q(1)}));
  }
  {
    auto r = rational_roots(UniPoly({q(-2), q(0), q(1)}));
    CHECK(r.roots.empty());
    CHECK(r.cofactor == UniPoly({q(-2), q(0), q(1)}));
  }
}

TEST_CASE("rational_roots agrees with divisor enumeration") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> count(0, 4);
  for (int trial = 0; trial < 150; ++trial) {
    UniPoly f = UniPoly::constant(make_rational(num(rng) == 0 ? 1 : num(rng), den(rng)));
    const int k = count(rng);
    for (int i = 0; i < k; ++i) f = f * UniPoly({make_rational(-num(rng), den(rng)), q(1)});
    if (count(rng) > 1) f = f * UniPoly({q(num(rng) == 0 ? 3 : 2), q(0), q(1)});
    if (f.is_zero()) continue;
    auto r = rational_roots(f);
    std::vector<Rational> got;
    UniPoly rebuilt = r.cofactor;
    for (const auto& [root, mult] : r.roots) {
      got.push_back(root);
      for (int m = 0; m < mult; ++m) rebuilt = rebuilt * UniPoly({-root, q(1)});
    }
    CHECK(got == brute_force_roots(f));
    CHECK(rebuilt == f);
  }
}

TEST_CASE("rational_roots handles large coefficients") {
  // Roots with big numerators and denominators, beyond trial division.
  const Rational r1 = parse_rational("1000000007/999983");
  const Rational r2 = parse_rational("-123456789012345/97");
  UniPoly f = UniPoly({-r1, q(1)}) * UniPoly({-r2, q(1)}) * UniPoly({q(5), q(0), q(1)});
  auto r = rational_roots(f);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0].first == r2);
  CHECK(r.roots[1].first == r1);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(2024);
  const std::vector<VarList> contexts{{"x"}, {"x", "y"}, {"x", "y", "z"}, {"a", "b", "c", "d"}};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& ctx = contexts[static_cast<std::size_t>(trial) % contexts.size()];
    auto a = random_poly(rng, ctx, 5, 4);
    auto b = random_poly(rng, ctx, 5, 4);
    auto c = random_poly(rng, ctx, 5, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("gcd property: gcd(p g, q g) = gcd(p, q) g up to scale") {
  std::mt19937_64 rng(99);
  const VarList ctx{"x", "y", "z"};
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto p = random_poly(rng, ctx, 3, 3);
    auto qq = random_poly(rng, ctx, 3, 3);
    auto g = random_poly(rng, ctx, 2, 3);
    if (p.is_zero() || qq.is_zero() || g.is_zero()) continue;
    const auto lhs = gcd(p * g, qq * g);
    const auto rhs = (gcd(p, qq) * g).primitive_part();
    CHECK(lhs == rhs);
    CHECK(divide_exact(p * g, lhs).has_value());
    CHECK(divide_exact(qq * g, lhs).has_value());
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("Euler identity for homogeneous polynomials") {
  std::mt19937_64 rng(17);
  const VarList ctx{"z0", "z1", "z2", "z3"};
  for (int trial = 0; trial < 200; ++trial) {
    const int k = trial % 6;
    auto p = random_homogeneous(rng, ctx, k, 5);
    MultiPoly euler(ctx);
    for (const auto& v : ctx) euler += var(v, ctx) * p.derivative(v);
    CHECK(euler == p * Rational(k));
  }
}

TEST_CASE("trace over roots equals direct summation") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> roots;
    UniPoly r = UniPoly::constant(3);
    const int k = 1 + trial % 5;
    while (static_cast<int>(roots.size()) < k) {
      Rational c = make_rational(num(rng), den(rng));
      if (std::find(roots.begin(), roots.end(), c) != roots.end()) continue;
      roots.push_back(c);
      r = r * UniPoly({-c, q(1)});
    }
    UniPoly g({make_rational(num(rng), den(rng)), q(num(rng)), q(num(rng)), make_rational(1, den(rng)), q(2),
               q(num(rng))});
    Rational direct = 0;
    for (const auto& c : roots) direct += g(c);
    CHECK(trace_mod(g, r) == direct);
  }
}

TEST_CASE("univariate helpers") {
  const UniPoly m({q(-2), q(0), q(1)});  // x^2 - 2
  auto inv = inverse_mod(UniPoly::x(), m);
  REQUIRE(inv.has_value());
  CHECK((UniPoly::x() * *inv) % m == UniPoly::constant(1));
  CHECK_FALSE(inverse_mod(UniPoly({q(-1), q(1)}), UniPoly({q(1), q(-2), q(1)})).has_value());
  CHECK(squarefree_part(UniPoly({q(1), q(-2), q(1)})) == UniPoly({q(-1), q(1)}));
  // Sum of h(root) over the conjugate roots of x^2 - 2 for h = x^2 + x: 2 + 2 + 0.
  CHECK(trace_mod(UniPoly({q(0), q(1), q(1)}), m) == 4);
}

TEST_CASE("rational functions normalize") {
  const auto x = var("x", kXY);
  const auto y = var("y", kXY);
  RatFunc f(x * x - y * y, (x - y) * q(2));
  CHECK(f.is_polynomial());
  CHECK(f.num() == (x + y) * q(1, 2));
  RatFunc g(x, y * q(-3));
  CHECK(g.den() == y);
  CHECK(g.num() == x * q(-1, 3));
  CHECK(RatFunc(x, y) + RatFunc(-x, y) == RatFunc(MultiPoly(kXY)));
  CHECK(RatFunc(x, y).derivative("y") == RatFunc(-x, y * y));
}
