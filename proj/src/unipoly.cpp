#include "folia/unipoly.hpp"

#include "folia/error.hpp"

namespace folia {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::x() { return UniPoly({Rational(0), Rational(1)}); }

UniPoly UniPoly::from_multi(const MultiPoly& p, const std::string& var) {
  for (const auto& v : p.used_vars()) {
    if (v != var) throw Error(ErrorCode::InvalidInput, "polynomial is not univariate in '" + var + "': " + to_string(p));
  }
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_in(var), -1) + 1));
  const auto idx = p.var_index(var);
  for (const auto& [e, v] : p.terms()) c[idx ? e[*idx] : 0] = v;
  return UniPoly(std::move(c));
}

MultiPoly UniPoly::to_multi(const std::string& var) const {
  MultiPoly::TermMap t;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) t.emplace(Exponent{static_cast<unsigned>(k)}, c_[k]);
  }
  return MultiPoly({var}, std::move(t));
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw Error(ErrorCode::InvalidInput, "leading coefficient of zero polynomial");
  return c_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const Rational& c) {
  std::vector<Rational> out = a.c_;
  for (auto& v : out) v *= c;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "univariate division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k) + bc.size() - 1] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::optional<UniPoly> inverse_mod(const UniPoly& a, const UniPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  UniPoly r0 = m;
  UniPoly r1 = a % m;
  UniPoly s0;
  UniPoly s1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return (s0 * (1 / r0.leading())) % m;
}

std::vector<Rational> power_sums(const UniPoly& m, std::size_t count) {
  const UniPoly monic = m.monic();
  const auto d = static_cast<std::size_t>(monic.degree());
  // monic = x^d + a[d-1] x^(d-1) + ... + a[0]
  const auto& a = monic.coeffs();
  std::vector<Rational> p(count);
  if (count > 0) p[0] = static_cast<unsigned long>(d);
  for (std::size_t k = 1; k < count; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= std::min(k - 1, d); ++i) acc += a[d - i] * p[k - i];
    if (k <= d) acc += a[d - k] * static_cast<unsigned long>(k);
    p[k] = -acc;
  }
  return p;
}

Rational trace_mod(const UniPoly& h, const UniPoly& m) {
  if (m.degree() <= 0) return 0;
  const UniPoly reduced = h % m;
  const auto sums = power_sums(m, static_cast<std::size_t>(m.degree()));
  Rational total = 0;
  for (std::size_t k = 0; k < reduced.coeffs().size(); ++k) total += reduced.coeffs()[k] * sums[k];
  return total;
}

std::string to_string(const UniPoly& p, const std::string& var) { return to_string(p.to_multi(var)); }

}  // namespace folia
