#include "folia/elimination.hpp"

#include "folia/error.hpp"

#include <algorithm>

namespace folia {

MultiPoly resultant(const MultiPoly& p_in, const MultiPoly& q_in, std::string_view var) {
  if (p_in.is_zero() || q_in.is_zero()) throw Error(ErrorCode::InvalidInput, "resultant of a zero polynomial");
  const auto ctx = unify_vars(p_in.vars(), q_in.vars());
  MultiPoly a = p_in.with_vars(ctx);
  MultiPoly b = q_in.with_vars(ctx);
  int da = a.degree_in(var);
  int db = b.degree_in(var);
  if (da == 0 && db == 0) throw Error(ErrorCode::InvalidInput, "resultant: both inputs have degree 0 in " + std::string(var));
  if (da == 0) return a.pow(static_cast<unsigned>(db));
  if (db == 0) return b.pow(static_cast<unsigned>(da));

  int s = 1;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if ((da & 1) && (db & 1)) s = -s;
  }
  MultiPoly g = MultiPoly::constant(1, ctx);
  MultiPoly h = MultiPoly::constant(1, ctx);
  while (true) {
    const int dega = a.degree_in(var);
    const int degb = b.degree_in(var);
    const int delta = dega - degb;
    if ((dega & 1) && (degb & 1)) s = -s;
    MultiPoly r = pseudo_remainder(a, b, var);
    a = std::move(b);
    b = divide_or_throw(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.leading_coefficient_in(var);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (b.is_zero()) return MultiPoly(ctx);
    if (b.degree_in(var) == 0) break;
  }
  const int dega = a.degree_in(var);
  if (dega == 1) {
    h = b;
  } else {
    h = divide_or_throw(b.pow(static_cast<unsigned>(dega)), h.pow(static_cast<unsigned>(dega - 1)));
  }
  return s < 0 ? -h : h;
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(1);
  int sign = 1;
  MultiPoly prev = MultiPoly::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pivot = i;
    while (pivot < n && m[pivot][i].is_zero()) ++pivot;
    if (pivot == n) return MultiPoly();
    if (pivot != i) {
      std::swap(m[pivot], m[i]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < n; ++r) {
      for (std::size_t c = i + 1; c < n; ++c) {
        m[r][c] = divide_or_throw(m[r][c] * m[i][i] - m[r][i] * m[i][c], prev);
      }
    }
    prev = m[i][i];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

FirstSubresultant subresultant_first(const MultiPoly& p_in, const MultiPoly& q_in, std::string_view var) {
  if (p_in.is_zero() || q_in.is_zero()) throw Error(ErrorCode::InvalidInput, "subresultant of a zero polynomial");
  const auto ctx = unify_vars(p_in.vars(), q_in.vars());
  MultiPoly a = p_in.with_vars(ctx);
  MultiPoly b = q_in.with_vars(ctx);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  const int m = a.degree_in(var);
  const int n = b.degree_in(var);
  if (m == 0) throw Error(ErrorCode::InvalidInput, "subresultant: both inputs have degree 0 in " + std::string(var));
  if (n == 0) throw Error(ErrorCode::DegenerateSingularLocus, "subresultant chain has no degree-1 member");

  MultiPoly s1;
  MultiPoly s0;
  if (n == 1) {
    MultiPoly scaled = m > 2 ? b * b.leading_coefficient_in(var).pow(static_cast<unsigned>(m - 2)) : b;
    auto coeffs = scaled.coefficients_in(var);
    s0 = coeffs.size() > 0 ? coeffs[0] : MultiPoly(ctx);
    s1 = coeffs.size() > 1 ? coeffs[1] : MultiPoly(ctx);
  } else {
    // Rows var^(n-2-i) * a and var^(m-2-i) * b; column c holds the
    // coefficient of var^(m+n-2-c).
    const auto ca = a.coefficients_in(var);
    const auto cb = b.coefficients_in(var);
    const auto rows = static_cast<std::size_t>(m + n - 2);
    const auto cols = static_cast<std::size_t>(m + n - 1);
    std::vector<std::vector<MultiPoly>> mat(rows, std::vector<MultiPoly>(cols, MultiPoly(ctx)));
    std::size_t row = 0;
    auto fill = [&](const std::vector<MultiPoly>& coeffs, int shift) {
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const int power = static_cast<int>(k) + shift;
        mat[row][static_cast<std::size_t>(m + n - 2 - power)] = coeffs[k];
      }
      ++row;
    };
    for (int i = 0; i < n - 1; ++i) fill(ca, n - 2 - i);
    for (int i = 0; i < m - 1; ++i) fill(cb, m - 2 - i);
    auto minor_with = [&](std::size_t last_col) {
      std::vector<std::vector<MultiPoly>> sq(rows);
      for (std::size_t r = 0; r < rows; ++r) {
        sq[r].assign(mat[r].begin(), mat[r].begin() + static_cast<std::ptrdiff_t>(rows - 1));
        sq[r].push_back(mat[r][last_col]);
      }
      return determinant(std::move(sq)).with_vars(ctx);
    };
    s1 = minor_with(cols - 2);
    s0 = minor_with(cols - 1);
  }
  if (s1.is_zero() && s0.is_zero()) {
    throw Error(ErrorCode::DegenerateSingularLocus, "degree-1 subresultant vanishes identically");
  }
  return {s1.with_vars(ctx), s0.with_vars(ctx)};
}

namespace {

// Integer polynomial with coefficients lowest degree first.
using IntPoly = std::vector<Integer>;

IntPoly to_primitive_integer(const UniPoly& p) {
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g != 0) {
    for (auto& v : out) v /= g;
  }
  return out;
}

Integer eval_mod(const IntPoly& f, const Integer& x, const Integer& mod) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * x + *it;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
  }
  return acc;
}

IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<unsigned long>(k));
  return d;
}

// Candidate rational roots of a squarefree primitive integer polynomial with
// nonzero constant term: simple roots modulo a prime are Hensel-lifted past
// 2*|lc|*|c0|, where lc*root is an integer of absolute value <= |lc|*|c0|.
std::vector<Rational> nonzero_rational_roots(const IntPoly& f) {
  const Integer& lc = f.back();
  const Integer& c0 = f.front();
  const Integer bound = 2 * abs(lc) * abs(c0) + 1;
  const IntPoly df = derivative(f);

  Integer prime = 1009;
  while (true) {
    if (lc % prime == 0) {
      mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
      continue;
    }
    std::vector<Integer> residues;
    bool simple = true;
    for (Integer r = 0; r < prime && simple; ++r) {
      if (eval_mod(f, r, prime) != 0) continue;
      if (eval_mod(df, r, prime) == 0) simple = false;
      residues.push_back(r);
    }
    if (!simple) {
      mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
      continue;
    }
    std::vector<Rational> found;
    for (Integer r : residues) {
      Integer mod = prime;
      while (mod <= bound) {
        mod *= mod;
        Integer fr = eval_mod(f, r, mod);
        Integer dfr = eval_mod(df, r, mod);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), dfr.get_mpz_t(), mod.get_mpz_t());
        r = r - fr * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
      }
      Integer n = lc * r;
      mpz_mod(n.get_mpz_t(), n.get_mpz_t(), mod.get_mpz_t());
      if (2 * n > mod) n -= mod;
      Rational candidate(n, lc);
      candidate.canonicalize();
      Rational value = 0;
      for (auto it = f.rbegin(); it != f.rend(); ++it) value = value * candidate + Rational(*it);
      if (value == 0) found.push_back(candidate);
    }
    return found;
  }
}

}  // namespace

RationalRoots rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidInput, "rational roots of the zero polynomial");
  RationalRoots out;
  out.cofactor = p;
  if (p.degree() == 0) return out;

  std::vector<Rational> candidates;
  IntPoly f = to_primitive_integer(squarefree_part(p));
  if (f.front() == 0) {
    candidates.push_back(0);
    f.erase(f.begin());
  }
  if (f.size() > 1) {
    auto more = nonzero_rational_roots(f);
    candidates.insert(candidates.end(), more.begin(), more.end());
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& r : candidates) {
    const UniPoly factor({-r, Rational(1)});
    int mult = 0;
    while (true) {
      auto [q, rem] = divmod(out.cofactor, factor);
      if (!rem.is_zero()) break;
      out.cofactor = std::move(q);
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(r, mult);
  }
  return out;
}

RationalRoots rational_roots(const MultiPoly& p) {
  const auto used = p.used_vars();
  if (used.size() > 1) throw Error(ErrorCode::InvalidInput, "rational_roots expects a univariate polynomial");
  const std::string var = used.empty() ? std::string("x") : used.front();
  return rational_roots(UniPoly::from_multi(p, var));
}

}  // namespace folia
