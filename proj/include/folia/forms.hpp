#pragma once

#include "folia/ratfunc.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace folia {

/// Positions into the variable context, strictly increasing.
using FormIndex = std::vector<std::size_t>;

inline constexpr int kMaxFormDegree = 3;

/// Alternating differential form of degree 0..3 with rational-function
/// coefficients. Only strictly increasing index tuples are stored and zero
/// coefficients are dropped.
class DiffForm {
 public:
  DiffForm() = default;
  DiffForm(VarList vars, int degree);

  static DiffForm function(const RatFunc& f);
  static DiffForm differential(const std::string& var, VarList vars);
  /// sum coeffs[i] d vars[i]
  static DiffForm one_form(VarList vars, const std::vector<RatFunc>& coeffs);

  const VarList& vars() const { return vars_; }
  int degree() const { return degree_; }
  const std::map<FormIndex, RatFunc>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool has_polynomial_coefficients() const;

  /// Coefficient of d v_1 ^ ... ^ d v_k for the named variables in the given
  /// order (sign of the permutation applied).
  RatFunc coefficient(const std::vector<std::string>& names) const;
  /// 1-form coefficient of d var.
  RatFunc component(std::string_view var) const;

  /// Adds c * d v_{idx[0]} ^ ... ; idx may be unsorted or repeat (then no-op).
  void add_term(FormIndex idx, const RatFunc& c);

  DiffForm with_vars(const VarList& vars) const;

  DiffForm operator-() const;
  DiffForm& operator+=(const DiffForm& other);
  DiffForm& operator-=(const DiffForm& other) { return *this += -other; }
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  friend DiffForm operator*(const RatFunc& f, const DiffForm& a);
  friend DiffForm operator*(const Rational& c, const DiffForm& a);
  /// Both zero compares equal regardless of degree.
  friend bool operator==(const DiffForm& a, const DiffForm& b);
  friend bool operator!=(const DiffForm& a, const DiffForm& b) { return !(a == b); }

  /// Every coefficient with each variable replaced by its image.
  DiffForm map_coefficients(const std::vector<RatFunc>& images, const VarList& target) const;

 private:
  VarList vars_;
  int degree_ = 0;
  std::map<FormIndex, RatFunc> coeffs_;
};

/// Polynomial vector field sum components[i] d/d vars[i].
struct PolyVectorField {
  VarList vars;
  std::vector<MultiPoly> components;

  static PolyVectorField euler(const VarList& vars);
  static PolyVectorField coordinate(const std::string& var, const VarList& vars);
};

/// Rational map given by the image of each target variable, expressed in
/// the source variables.
struct RationalMap {
  VarList source;
  std::vector<RatFunc> components;
};

DiffForm exterior_d(const DiffForm& a);
DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm contract(const PolyVectorField& x, const DiffForm& a);
/// Cartan formula i_X d + d i_X.
DiffForm lie_derivative(const PolyVectorField& x, const DiffForm& a);
/// F^* a; a's context lists the target variables in the order of F's components.
DiffForm pullback(const RationalMap& f, const DiffForm& a);
/// Pullback with the source context taken as the union of the component contexts.
DiffForm pullback(const std::vector<RatFunc>& components, const DiffForm& a);

/// "(c1) dx + (c2) dy" style rendering.
std::string to_string(const DiffForm& a);

}  // namespace folia
