#pragma once

#include "folia/multipoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace folia {

/// Reduced quotient num/den of polynomials.
///
/// Canonical form: gcd(num, den) = 1 and den has leading coefficient 1 in
/// grlex order, so equal rational functions are structurally equal.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(MultiPoly num);  // NOLINT(google-explicit-constructor): polynomials are rational functions
  RatFunc(MultiPoly num, MultiPoly den);
  static RatFunc constant(const Rational& c, VarList vars = {});

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const VarList& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  /// Throws InvalidInput unless is_polynomial().
  MultiPoly as_polynomial() const;

  RatFunc with_vars(const VarList& vars) const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const Rational& c);
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  RatFunc pow(int k) const;
  RatFunc derivative(std::string_view var) const;
  RatFunc evaluate(std::string_view var, const Rational& value) const;
  /// Simultaneous substitution var_i -> images[i] over the context vars();
  /// the result lives in `target`. Throws PullbackUndefined when the
  /// denominator becomes identically zero.
  RatFunc compose(const std::vector<RatFunc>& images, const VarList& target) const;

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_ = MultiPoly::constant(1);
};

std::string to_string(const RatFunc& f);

}  // namespace folia
