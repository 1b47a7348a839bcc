#include "folia/ratfunc.hpp"

#include "folia/error.hpp"

#include <algorithm>

namespace folia {

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(1, num_.vars())) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidInput, "rational function with zero denominator");
  const auto ctx = unify_vars(num.vars(), den.vars());
  num_ = num.with_vars(ctx);
  den_ = den.with_vars(ctx);
  normalize();
}

RatFunc RatFunc::constant(const Rational& c, VarList vars) { return RatFunc(MultiPoly::constant(c, std::move(vars))); }

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1, num_.vars());
    return;
  }
  if (!den_.is_constant()) {
    const MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_or_throw(num_, g);
      den_ = divide_or_throw(den_, g);
    }
  }
  const Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    num_ *= 1 / lead;
    den_ *= 1 / lead;
  }
}

MultiPoly RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw Error(ErrorCode::InvalidInput, "rational function is not a polynomial: " + to_string(*this));
  return num_;
}

RatFunc RatFunc::with_vars(const VarList& vars) const {
  RatFunc out = *this;
  out.num_ = num_.with_vars(vars);
  out.den_ = den_.with_vars(vars);
  return out;
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -num_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc operator*(const RatFunc& a, const Rational& c) {
  RatFunc out = a;
  out.num_ *= c;
  if (out.num_.is_zero()) out.den_ = MultiPoly::constant(1, out.num_.vars());
  return out;
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return RatFunc(den_, num_).pow(-k);
  RatFunc out = *this;
  out.num_ = num_.pow(static_cast<unsigned>(k));
  out.den_ = den_.pow(static_cast<unsigned>(k));
  return out;
}

RatFunc RatFunc::derivative(std::string_view var) const {
  if (!num_.var_index(var)) return RatFunc(MultiPoly(num_.vars()));
  if (is_polynomial()) return RatFunc(num_.derivative(var));
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::evaluate(std::string_view var, const Rational& value) const {
  MultiPoly d = den_.evaluate(var, value);
  if (d.is_zero()) throw Error(ErrorCode::PullbackUndefined, "denominator vanishes identically after substitution");
  return RatFunc(num_.evaluate(var, value), d);
}

RatFunc RatFunc::compose(const std::vector<RatFunc>& images, const VarList& target) const {
  if (images.size() != vars().size()) throw Error(ErrorCode::InvalidInput, "compose: image count mismatch");
  bool polynomial_images = true;
  for (const auto& f : images) polynomial_images = polynomial_images && f.is_polynomial();
  if (polynomial_images) {
    std::vector<MultiPoly> imgs;
    for (const auto& f : images) imgs.push_back(f.as_polynomial());
    MultiPoly d = den_.compose(imgs, target);
    if (d.is_zero()) throw Error(ErrorCode::PullbackUndefined, "denominator vanishes identically after substitution");
    return RatFunc(num_.compose(imgs, target), d);
  }
  // Common denominator: p(N/D) = sum c_e prod N_i^e_i D_i^(d_i - e_i) / prod D_i^d_i,
  // with d_i the degree of num and den in variable i.
  const std::size_t n = images.size();
  std::vector<unsigned> top(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    top[i] = static_cast<unsigned>(std::max({num_.degree_in(vars()[i]), den_.degree_in(vars()[i]), 0}));
  }
  auto substitute = [&](const MultiPoly& p) {
    MultiPoly out(target);
    for (const auto& [e, c] : p.terms()) {
      MultiPoly t = MultiPoly::constant(c, target);
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] > 0) t *= images[i].num().with_vars(target).pow(e[i]);
        if (top[i] > e[i]) t *= images[i].den().with_vars(target).pow(top[i] - e[i]);
      }
      out += t;
    }
    return out;
  };
  MultiPoly d = substitute(den_);
  if (d.is_zero()) throw Error(ErrorCode::PullbackUndefined, "denominator vanishes identically after substitution");
  return RatFunc(substitute(num_), d);
}

std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace folia
