#pragma once

#include "folia/multipoly.hpp"
#include "folia/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace folia {

/// Dense univariate polynomial over Q, coefficients stored lowest degree
/// first and trimmed so the last coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly x();
  /// Throws InvalidInput when p involves a variable other than var.
  static UniPoly from_multi(const MultiPoly& p, const std::string& var);

  MultiPoly to_multi(const std::string& var) const;

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Rational& c);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly derivative() const;
  UniPoly monic() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of Euclidean division.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Monic squarefree part.
UniPoly squarefree_part(const UniPoly& p);
/// Inverse of a modulo m, or an empty optional when gcd(a, m) != 1.
std::optional<UniPoly> inverse_mod(const UniPoly& a, const UniPoly& m);
/// Power sums p_k = sum of root^k over the roots of m (with multiplicity),
/// for k = 0 .. count-1, from Newton's identities.
std::vector<Rational> power_sums(const UniPoly& m, std::size_t count);
/// Sum of h(root) over the roots of m, i.e. the trace of multiplication by h
/// in Q[x]/(m).
Rational trace_mod(const UniPoly& h, const UniPoly& m);

std::string to_string(const UniPoly& p, const std::string& var = "x");

}  // namespace folia
