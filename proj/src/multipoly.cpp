#include "folia/multipoly.hpp"

#include "folia/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace folia {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), 0u);
  const auto db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

VarList unify_vars(const VarList& a, const VarList& b) {
  if (a == b) return a;
  auto contains_all = [](const VarList& big, const VarList& small) {
    return std::all_of(small.begin(), small.end(), [&](const std::string& v) {
      return std::find(big.begin(), big.end(), v) != big.end();
    });
  };
  if (contains_all(a, b)) return a;
  if (contains_all(b, a)) return b;
  VarList out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MultiPoly::MultiPoly(VarList vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(VarList vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (const auto& [e, c] : terms_) {
    if (e.size() != vars_.size()) throw Error(ErrorCode::InvalidInput, "exponent length does not match context");
  }
  drop_zeros();
}

MultiPoly MultiPoly::constant(const Rational& c, VarList vars) {
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponent(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name, VarList vars) {
  if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
  MultiPoly p(std::move(vars));
  Exponent e(p.vars_.size(), 0);
  e[*p.var_index(name)] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(VarList vars, Exponent e, const Rational& c) {
  TermMap t;
  t.emplace(std::move(e), c);
  return MultiPoly(std::move(vars), std::move(t));
}

MultiPoly MultiPoly::from_coefficients(const std::string& var, const std::vector<MultiPoly>& coeffs) {
  MultiPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    out += coeffs[k].shifted(var, static_cast<unsigned>(k));
  }
  return out;
}

std::optional<std::size_t> MultiPoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponent(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidInput, "polynomial is not constant: " + to_string(*this));
  return constant_term();
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

int MultiPoly::order() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

int MultiPoly::degree_in(std::string_view var) const {
  if (terms_.empty()) return -1;
  auto idx = var_index(var);
  if (!idx) return 0;
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[*idx]);
  return static_cast<int>(best);
}

const Exponent& MultiPoly::leading_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidInput, "leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidInput, "leading term of zero polynomial");
  return terms_.begin()->second;
}

bool MultiPoly::is_homogeneous() const { return terms_.empty() || total_degree() == order(); }

VarList MultiPoly::used_vars() const {
  VarList out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] > 0) {
        out.push_back(vars_[i]);
        break;
      }
    }
  }
  return out;
}

MultiPoly MultiPoly::with_vars(const VarList& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::optional<std::size_t>> target(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) target[i] = static_cast<std::size_t>(it - vars.begin());
  }
  MultiPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!target[i]) throw Error(ErrorCode::InvalidInput, "variable '" + vars_[i] + "' missing from target context");
      ne[*target[i]] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly MultiPoly::renamed(const VarList& names) const {
  if (names.size() != vars_.size()) throw Error(ErrorCode::InvalidInput, "rename: context size mismatch");
  MultiPoly out = *this;
  out.vars_ = names;
  return out;
}

void MultiPoly::drop_zeros() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

namespace {

template <typename Op>
void accumulate_into(MultiPoly::TermMap& dst, const MultiPoly::TermMap& src, Op op) {
  for (const auto& [e, c] : src) {
    auto [it, inserted] = dst.try_emplace(e, 0);
    op(it->second, c);
    if (it->second == 0) dst.erase(it);
  }
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (vars_ != other.vars_) {
    auto ctx = unify_vars(vars_, other.vars_);
    *this = with_vars(ctx);
    return *this += other.with_vars(ctx);
  }
  accumulate_into(terms_, other.terms_, [](Rational& a, const Rational& b) { a += b; });
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (vars_ != other.vars_) {
    auto ctx = unify_vars(vars_, other.vars_);
    *this = with_vars(ctx);
    return *this -= other.with_vars(ctx);
  }
  accumulate_into(terms_, other.terms_, [](Rational& a, const Rational& b) { a -= b; });
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    auto ctx = unify_vars(a.vars_, b.vars_);
    return a.with_vars(ctx) * b.with_vars(ctx);
  }
  MultiPoly out(a.vars_);
  Exponent e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.try_emplace(e, 0);
      it->second += ca * cb;
    }
  }
  out.drop_zeros();
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ctx = unify_vars(a.vars_, b.vars_);
  return a.with_vars(ctx).terms_ == b.with_vars(ctx).terms_;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(1, vars_);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::shifted(std::string_view var, unsigned k) const {
  MultiPoly base = *this;
  if (!base.var_index(var)) base = base.with_vars([&] {
    auto v = vars_;
    v.emplace_back(var);
    return v;
  }());
  const auto idx = *base.var_index(var);
  MultiPoly out(base.vars_);
  for (const auto& [e0, c0] : base.terms_) {
    Exponent e = e0;
    Rational c = c0;
    e[idx] += k;
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
  auto idx = var_index(var);
  if (!idx) {
    if (vars_.empty() && terms_.empty()) return *this;
    throw Error(ErrorCode::InvalidInput, "unknown variable '" + std::string(var) + "'");
  }
  MultiPoly out(vars_);
  for (const auto& [e0, c0] : terms_) {
    Exponent e = e0;
    Rational c = c0;
    if (e[*idx] == 0) continue;
    c *= e[*idx];
    e[*idx] -= 1;
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

MultiPoly MultiPoly::homogeneous_part(unsigned k) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0u) == k) out.terms_.emplace(e, c);
  }
  return out;
}

MultiPoly MultiPoly::evaluate(std::string_view var, const Rational& value) const {
  auto idx = var_index(var);
  if (!idx) return *this;
  MultiPoly out(vars_);
  for (const auto& [e0, c0] : terms_) {
    Exponent e = e0;
    Rational c = c0;
    c *= folia::pow(value, e[*idx]);
    if (c == 0) continue;
    e[*idx] = 0;
    auto [it, inserted] = out.terms_.try_emplace(std::move(e), 0);
    it->second += c;
  }
  out.drop_zeros();
  return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw Error(ErrorCode::InvalidInput, "evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t *= folia::pow(point[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& q) const {
  auto idx = var_index(var);
  if (!idx) return *this;
  auto coeffs = coefficients_in(var);
  // Horner in q.
  MultiPoly acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * q + *it;
  return acc;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images, const VarList& target) const {
  if (images.size() != vars_.size()) throw Error(ErrorCode::InvalidInput, "compose: image count mismatch");
  std::vector<MultiPoly> img;
  img.reserve(images.size());
  for (const auto& q : images) img.push_back(q.with_vars(target));
  std::vector<std::vector<MultiPoly>> powers(img.size());
  auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(1, target));
    while (cache.size() <= k) cache.push_back(cache.back() * img[i]);
    return cache[k];
  };
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(c, target);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t *= power(i, e[i]);
    }
    out += t;
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view var) const {
  auto idx = var_index(var);
  if (!idx) return terms_.empty() ? std::vector<MultiPoly>{} : std::vector<MultiPoly>{*this};
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree_in(var), -1) + 1), MultiPoly(vars_));
  for (const auto& [e0, c0] : terms_) {
    Exponent e = e0;
    Rational c = c0;
    const auto k = e[*idx];
    e[*idx] = 0;
    out[k].terms_.emplace(std::move(e), c);
  }
  return out;
}

MultiPoly MultiPoly::leading_coefficient_in(std::string_view var) const {
  auto coeffs = coefficients_in(var);
  return coeffs.empty() ? MultiPoly(vars_) : coeffs.back();
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 1;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  if (sgn(leading_coefficient()) < 0) out = -out;
  return out;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  MultiPoly out = *this;
  out *= 1 / content();
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero polynomial");
  if (p.vars() != q.vars()) {
    auto ctx = unify_vars(p.vars(), q.vars());
    return divide_exact(p.with_vars(ctx), q.with_vars(ctx));
  }
  if (q.is_constant()) return p * (1 / q.constant_term());
  const auto& lq = q.leading_exponent();
  const auto& lc = q.leading_coefficient();
  const auto n = p.nvars();
  MultiPoly rem = p;
  MultiPoly quot(p.vars());
  Exponent te(n);
  while (!rem.is_zero()) {
    const auto& lr = rem.leading_exponent();
    for (std::size_t i = 0; i < n; ++i) {
      if (lr[i] < lq[i]) return std::nullopt;
      te[i] = lr[i] - lq[i];
    }
    auto t = MultiPoly::monomial(p.vars(), te, rem.leading_coefficient() / lc);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

MultiPoly divide_or_throw(const MultiPoly& p, const MultiPoly& q) {
  auto r = divide_exact(p, q);
  if (!r) throw Error(ErrorCode::InvalidInput, "inexact division of " + to_string(p) + " by " + to_string(q));
  return *std::move(r);
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::string_view var) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "pseudo-remainder by zero");
  const int da = a.degree_in(var);
  const int db = b.degree_in(var);
  if (da < db) return a;
  const MultiPoly lb = b.leading_coefficient_in(var);
  MultiPoly r = a;
  int e = da - db + 1;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    MultiPoly lr = r.leading_coefficient_in(var);
    r = lb * r - lr * b.shifted(var, static_cast<unsigned>(dr - db));
    --e;
  }
  if (e > 0) r *= lb.pow(static_cast<unsigned>(e));
  return r;
}

namespace {

MultiPoly normalize_gcd(const MultiPoly& p) { return p.primitive_part(); }

}  // namespace

MultiPoly content_in(const MultiPoly& p, std::string_view var) {
  MultiPoly g;
  bool first = true;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = first ? normalize_gcd(c) : gcd(g, c);
    first = false;
    if (g.is_constant()) break;
  }
  if (first) return MultiPoly(p.vars());
  return g;
}

MultiPoly gcd(const MultiPoly& p_in, const MultiPoly& q_in) {
  if (p_in.is_zero() && q_in.is_zero()) throw Error(ErrorCode::InvalidInput, "gcd(0, 0) is undefined");
  const auto ctx = unify_vars(p_in.vars(), q_in.vars());
  const MultiPoly p = p_in.with_vars(ctx);
  const MultiPoly q = q_in.with_vars(ctx);
  if (p.is_zero()) return normalize_gcd(q);
  if (q.is_zero()) return normalize_gcd(p);
  if (p.is_constant() || q.is_constant()) return MultiPoly::constant(1, ctx);

  std::string var;
  for (const auto& v : ctx) {
    if (p.degree_in(v) > 0 || q.degree_in(v) > 0) {
      var = v;
      break;
    }
  }
  if (p.degree_in(var) == 0) return gcd(p, content_in(q, var));
  if (q.degree_in(var) == 0) return gcd(content_in(p, var), q);

  const MultiPoly cp = content_in(p, var);
  const MultiPoly cq = content_in(q, var);
  const MultiPoly g = gcd(cp, cq);
  MultiPoly a = divide_or_throw(p, cp).primitive_part();
  MultiPoly b = divide_or_throw(q, cq).primitive_part();
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  // Primitive polynomial remainder sequence.
  while (true) {
    MultiPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      b = MultiPoly::constant(1, ctx);
      break;
    }
    a = std::move(b);
    b = divide_or_throw(r, content_in(r, var)).primitive_part();
  }
  return normalize_gcd(g * b);
}

std::vector<MultiPoly> remove_common_factor(std::vector<MultiPoly> ps) {
  std::optional<MultiPoly> g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g ? gcd(*g, p) : p.primitive_part();
    if (g->is_constant()) break;
  }
  if (!g) return ps;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  const MultiPoly* first = nullptr;
  for (auto& p : ps) {
    if (p.is_zero()) continue;
    if (!g->is_constant()) p = divide_or_throw(p, *g);
    if (!first) first = &p;
    for (const auto& [e, c] : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(first->leading_coefficient()) < 0) scale = -scale;
  for (auto& p : ps) p *= scale;
  return ps;
}

MultiPoly lcm(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return MultiPoly(unify_vars(p.vars(), q.vars()));
  return normalize_gcd(divide_or_throw(p * q, gcd(p, q)));
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool is_one = std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || is_one) {
      out << to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << p.vars()[i];
      if (e[i] > 1) out << "^" << e[i];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace folia
