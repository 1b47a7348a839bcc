#include "folia/forms.hpp"

#include "folia/error.hpp"

#include <algorithm>
#include <sstream>

namespace folia {

namespace {

// Sorts idx in place, returning the permutation sign, or 0 on a repeat.
int sort_with_sign(FormIndex& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

void check_degree(int degree) {
  if (degree < 0 || degree > kMaxFormDegree) {
    throw Error(ErrorCode::UnsupportedDegree, "form degree " + std::to_string(degree) + " outside 0..3");
  }
}

std::size_t index_of(const VarList& vars, std::string_view name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw Error(ErrorCode::InvalidInput, "unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - vars.begin());
}

}  // namespace

DiffForm::DiffForm(VarList vars, int degree) : vars_(std::move(vars)), degree_(degree) { check_degree(degree); }

DiffForm DiffForm::function(const RatFunc& f) {
  DiffForm out(f.vars(), 0);
  out.add_term({}, f);
  return out;
}

DiffForm DiffForm::differential(const std::string& var, VarList vars) {
  if (std::find(vars.begin(), vars.end(), var) == vars.end()) vars.push_back(var);
  DiffForm out(vars, 1);
  out.add_term({index_of(out.vars_, var)}, RatFunc::constant(1, out.vars_));
  return out;
}

DiffForm DiffForm::one_form(VarList vars, const std::vector<RatFunc>& coeffs) {
  if (coeffs.size() != vars.size()) throw Error(ErrorCode::InvalidInput, "one_form: coefficient count mismatch");
  DiffForm out(std::move(vars), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.add_term({i}, coeffs[i]);
  return out;
}

bool DiffForm::has_polynomial_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.is_polynomial(); });
}

RatFunc DiffForm::coefficient(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != degree_) throw Error(ErrorCode::InvalidInput, "coefficient: wrong index length");
  FormIndex idx;
  for (const auto& n : names) idx.push_back(index_of(vars_, n));
  const int sign = sort_with_sign(idx);
  if (sign == 0) return RatFunc(MultiPoly(vars_));
  auto it = coeffs_.find(idx);
  if (it == coeffs_.end()) return RatFunc(MultiPoly(vars_));
  return sign > 0 ? it->second : -it->second;
}

RatFunc DiffForm::component(std::string_view var) const { return coefficient({std::string(var)}); }

void DiffForm::add_term(FormIndex idx, const RatFunc& c) {
  if (static_cast<int>(idx.size()) != degree_) throw Error(ErrorCode::InvalidInput, "add_term: wrong index length");
  if (c.is_zero()) return;
  const int sign = sort_with_sign(idx);
  if (sign == 0) return;
  for (auto i : idx) {
    if (i >= vars_.size()) throw Error(ErrorCode::InvalidInput, "add_term: index out of range");
  }
  RatFunc value = c.with_vars(vars_);
  if (sign < 0) value = -value;
  auto [it, inserted] = coeffs_.try_emplace(idx, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

DiffForm DiffForm::with_vars(const VarList& vars) const {
  if (vars == vars_) return *this;
  DiffForm out(vars, degree_);
  for (const auto& [idx, c] : coeffs_) {
    FormIndex ni;
    for (auto i : idx) ni.push_back(index_of(vars, vars_[i]));
    out.add_term(std::move(ni), c.with_vars(vars));
  }
  return out;
}

DiffForm DiffForm::operator-() const {
  DiffForm out = *this;
  for (auto& [idx, c] : out.coeffs_) c = -c;
  return out;
}

DiffForm& DiffForm::operator+=(const DiffForm& other) {
  if (other.is_zero() && other.degree_ != degree_) return *this;
  if (is_zero() && other.degree_ != degree_) return *this = other.with_vars(unify_vars(vars_, other.vars_));
  if (other.degree_ != degree_) throw Error(ErrorCode::InvalidInput, "adding forms of different degree");
  if (vars_ != other.vars_) {
    const auto ctx = unify_vars(vars_, other.vars_);
    *this = with_vars(ctx);
    return *this += other.with_vars(ctx);
  }
  for (const auto& [idx, c] : other.coeffs_) add_term(idx, c);
  return *this;
}

DiffForm operator*(const RatFunc& f, const DiffForm& a) {
  const auto ctx = unify_vars(a.vars_, f.vars());
  DiffForm out(ctx, a.degree_);
  const RatFunc g = f.with_vars(ctx);
  for (const auto& [idx, c] : a.with_vars(ctx).coeffs_) out.add_term(idx, g * c);
  return out;
}

DiffForm operator*(const Rational& c, const DiffForm& a) {
  DiffForm out(a.vars_, a.degree_);
  for (const auto& [idx, v] : a.coeffs_) out.add_term(idx, v * c);
  return out;
}

bool operator==(const DiffForm& a, const DiffForm& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.degree_ != b.degree_ || a.coeffs_.size() != b.coeffs_.size()) return false;
  if (a.vars_ == b.vars_) return a.coeffs_ == b.coeffs_;
  const auto ctx = unify_vars(a.vars_, b.vars_);
  return a.with_vars(ctx).coeffs_ == b.with_vars(ctx).coeffs_;
}

DiffForm DiffForm::map_coefficients(const std::vector<RatFunc>& images, const VarList& target) const {
  DiffForm out(target, degree_);
  for (const auto& [idx, c] : coeffs_) {
    FormIndex ni;
    for (auto i : idx) ni.push_back(index_of(target, vars_[i]));
    out.add_term(std::move(ni), c.compose(images, target));
  }
  return out;
}

PolyVectorField PolyVectorField::euler(const VarList& vars) {
  PolyVectorField x{vars, {}};
  for (const auto& v : vars) x.components.push_back(MultiPoly::variable(v, vars));
  return x;
}

PolyVectorField PolyVectorField::coordinate(const std::string& var, const VarList& vars) {
  PolyVectorField x{vars, {}};
  if (std::find(x.vars.begin(), x.vars.end(), var) == x.vars.end()) x.vars.push_back(var);
  for (const auto& v : x.vars) x.components.push_back(MultiPoly::constant(v == var ? 1 : 0, x.vars));
  return x;
}

DiffForm exterior_d(const DiffForm& a) {
  if (a.degree() >= kMaxFormDegree) {
    throw Error(ErrorCode::UnsupportedDegree, "exterior derivative of a degree-3 form");
  }
  DiffForm out(a.vars(), a.degree() + 1);
  for (const auto& [idx, c] : a.coefficients()) {
    for (std::size_t j = 0; j < a.vars().size(); ++j) {
      if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
      RatFunc dc = c.derivative(a.vars()[j]);
      if (dc.is_zero()) continue;
      FormIndex ni{j};
      ni.insert(ni.end(), idx.begin(), idx.end());
      out.add_term(std::move(ni), dc);
    }
  }
  return out;
}

DiffForm wedge(const DiffForm& a_in, const DiffForm& b_in) {
  const int degree = a_in.degree() + b_in.degree();
  if (degree > kMaxFormDegree) throw Error(ErrorCode::UnsupportedDegree, "wedge product of total degree > 3");
  const auto ctx = unify_vars(a_in.vars(), b_in.vars());
  const DiffForm a = a_in.with_vars(ctx);
  const DiffForm b = b_in.with_vars(ctx);
  DiffForm out(ctx, degree);
  for (const auto& [ia, ca] : a.coefficients()) {
    for (const auto& [ib, cb] : b.coefficients()) {
      if (std::find_first_of(ia.begin(), ia.end(), ib.begin(), ib.end()) != ia.end()) continue;
      FormIndex ni = ia;
      ni.insert(ni.end(), ib.begin(), ib.end());
      out.add_term(std::move(ni), ca * cb);
    }
  }
  return out;
}

DiffForm contract(const PolyVectorField& x, const DiffForm& a_in) {
  if (a_in.degree() == 0) throw Error(ErrorCode::UnsupportedDegree, "interior product of a 0-form");
  if (x.components.size() != x.vars.size()) throw Error(ErrorCode::InvalidInput, "vector field component count mismatch");
  const auto ctx = unify_vars(a_in.vars(), x.vars);
  const DiffForm a = a_in.with_vars(ctx);
  std::vector<RatFunc> comp(ctx.size(), RatFunc(MultiPoly(ctx)));
  for (std::size_t i = 0; i < x.vars.size(); ++i) {
    comp[index_of(ctx, x.vars[i])] = RatFunc(x.components[i].with_vars(ctx));
  }
  DiffForm out(ctx, a.degree() - 1);
  for (const auto& [idx, c] : a.coefficients()) {
    for (std::size_t m = 0; m < idx.size(); ++m) {
      const RatFunc& xi = comp[idx[m]];
      if (xi.is_zero()) continue;
      FormIndex rest;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k != m) rest.push_back(idx[k]);
      }
      out.add_term(std::move(rest), m % 2 == 0 ? xi * c : -(xi * c));
    }
  }
  return out;
}

DiffForm lie_derivative(const PolyVectorField& x, const DiffForm& a) {
  if (a.degree() > 2) throw Error(ErrorCode::UnsupportedDegree, "Lie derivative of a degree-3 form");
  DiffForm out = contract(x, exterior_d(a));
  if (a.degree() > 0) out += exterior_d(contract(x, a));
  return out;
}

DiffForm pullback(const RationalMap& f, const DiffForm& a) {
  if (f.components.size() != a.vars().size()) {
    throw Error(ErrorCode::InvalidInput, "pullback: map has " + std::to_string(f.components.size()) +
                                             " components for " + std::to_string(a.vars().size()) + " variables");
  }
  const VarList& src = f.source;
  std::vector<RatFunc> images;
  std::vector<DiffForm> differentials;
  for (const auto& c : f.components) {
    images.push_back(c.with_vars(src));
    differentials.push_back(exterior_d(DiffForm::function(images.back())));
  }
  DiffForm out(src, a.degree());
  for (const auto& [idx, c] : a.coefficients()) {
    DiffForm term = DiffForm::function(c.compose(images, src));
    for (auto i : idx) term = wedge(term, differentials[i]);
    out += term;
  }
  return out;
}

DiffForm pullback(const std::vector<RatFunc>& components, const DiffForm& a) {
  VarList src;
  for (const auto& c : components) src = unify_vars(src, c.vars());
  return pullback(RationalMap{src, components}, a);
}

std::string to_string(const DiffForm& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : a.coefficients()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(c) << ")";
    for (std::size_t k = 0; k < idx.size(); ++k) out << (k == 0 ? " " : "^") << "d" << a.vars()[idx[k]];
  }
  return out.str();
}

}  // namespace folia
