#pragma once

#include "folia/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace folia {

using Exponent = std::vector<unsigned>;
using VarList = std::vector<std::string>;

/// Graded lexicographic order, largest first: higher total degree wins,
/// ties broken lexicographically on the exponent vector.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Merges two variable contexts. Equal contexts are kept; when one contains
/// the other the larger order wins; otherwise the union is sorted by name.
VarList unify_vars(const VarList& a, const VarList& b);

/// Sparse multivariate polynomial over Q in a named variable context.
///
/// Terms are kept in canonical grlex order with no zero coefficients, so two
/// polynomials in the same context are equal iff their term maps are equal.
/// Binary operations unify contexts by name first (see unify_vars).
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(VarList vars);
  MultiPoly(VarList vars, TermMap terms);

  static MultiPoly constant(const Rational& c, VarList vars = {});
  /// The polynomial `name`; `name` is appended to `vars` if absent.
  static MultiPoly variable(const std::string& name, VarList vars = {});
  static MultiPoly monomial(VarList vars, Exponent e, const Rational& c);
  /// Sum of coeffs[k] * var^k; the coefficients must not involve `var`.
  static MultiPoly from_coefficients(const std::string& var, const std::vector<MultiPoly>& coeffs);

  const VarList& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  std::optional<std::size_t> var_index(std::string_view name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the zero exponent.
  Rational constant_term() const;
  /// Value of a constant polynomial; throws InvalidInput otherwise.
  Rational constant_value() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest total degree of a term (order at the origin); -1 for zero.
  int order() const;
  int degree_in(std::string_view var) const;
  const Exponent& leading_exponent() const;
  const Rational& leading_coefficient() const;
  bool is_homogeneous() const;
  /// Variables that occur with a positive exponent.
  VarList used_vars() const;

  /// Re-expresses the polynomial in a context that contains every used variable.
  MultiPoly with_vars(const VarList& vars) const;
  /// Positional renaming; `names` must have the same length as vars().
  MultiPoly renamed(const VarList& names) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned k) const;
  /// Multiplies by var^k.
  MultiPoly shifted(std::string_view var, unsigned k) const;

  MultiPoly derivative(std::string_view var) const;
  MultiPoly homogeneous_part(unsigned k) const;

  /// Substitutes var = value; the context is unchanged.
  MultiPoly evaluate(std::string_view var, const Rational& value) const;
  /// Evaluates at a full point given in context order.
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Substitutes var = q; the result context is the union of both.
  MultiPoly substitute(std::string_view var, const MultiPoly& q) const;
  /// Simultaneous substitution of every variable of the context by
  /// images[i]; the result lives in `target`.
  MultiPoly compose(const std::vector<MultiPoly>& images, const VarList& target) const;

  /// coeffs[k] is the coefficient of var^k, in the same context.
  std::vector<MultiPoly> coefficients_in(std::string_view var) const;
  /// Coefficient of the highest power of var.
  MultiPoly leading_coefficient_in(std::string_view var) const;

  /// Positive rational c with p / c primitive over Z and leading coefficient > 0.
  Rational content() const;
  MultiPoly primitive_part() const;

 private:
  void drop_zeros();

  VarList vars_;
  TermMap terms_;
};

/// Exact quotient p / q, or nullopt when q does not divide p. Throws on q = 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);
/// As divide_exact but throws InvalidInput when the division is not exact.
MultiPoly divide_or_throw(const MultiPoly& p, const MultiPoly& q);

/// Greatest common divisor, primitive over Z with positive leading coefficient.
/// Throws InvalidInput when both inputs are zero.
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);
MultiPoly lcm(const MultiPoly& p, const MultiPoly& q);

/// Divides a tuple of polynomials by their common gcd and rational content,
/// leaving integer coefficients and a positive leading coefficient on the
/// first nonzero entry. An all-zero tuple is returned unchanged.
std::vector<MultiPoly> remove_common_factor(std::vector<MultiPoly> ps);

/// gcd of the coefficients of p seen as a polynomial in var.
MultiPoly content_in(const MultiPoly& p, std::string_view var);

/// lc_var(b)^(deg a - deg b + 1) * a reduced modulo b.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::string_view var);

std::string to_string(const MultiPoly& p);

}  // namespace folia
