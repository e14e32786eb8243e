#pragma once

// Sparse multivariate polynomials over Q.  Variables are plain indices; names
// only matter for printing.

#include "modcurve/arith.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace modcurve {

class MPoly {
 public:
  /// Exponent vector with trailing zeros trimmed, so equal monomials compare equal.
  using Monomial = std::vector<unsigned>;

  MPoly() = default;
  MPoly(const Rational& c);
  MPoly(const BigInt& c) : MPoly(Rational(c)) {}
  MPoly(int c) : MPoly(Rational(c)) {}

  static MPoly var(std::size_t index, unsigned exponent = 1);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; throws otherwise.
  Rational constant_value() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
  friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
  friend MPoly operator*(const MPoly& x, const MPoly& y);
  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly pow(unsigned e) const;

  std::set<std::size_t> variables() const;
  bool uses(std::size_t v) const;
  unsigned degree_in(std::size_t v) const;
  /// Coefficient of v^k, as a polynomial in the other variables.
  MPoly coefficient_in(std::size_t v, unsigned k) const;
  /// Groups terms by their exponents in the given variables.
  std::map<Monomial, MPoly> collect(const std::vector<std::size_t>& vars) const;

  MPoly substitute(std::size_t v, const MPoly& value) const;
  Rational evaluate(const std::map<std::size_t, Rational>& values) const;

  /// Exact quotient by (v - root) when it divides, nothing otherwise.
  std::optional<MPoly> divide_linear(std::size_t v, const Rational& root) const;
  /// Exact quotient by the monomial, nothing when some term is not divisible.
  std::optional<MPoly> divide_monomial(const Monomial& m) const;
  /// Largest monomial dividing every term (the zero polynomial gives the empty monomial).
  Monomial monomial_content() const;

  /// Coefficients low to high of a polynomial in v alone.
  std::vector<Rational> univariate(std::size_t v) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

/// Distinct rational roots of a nonzero univariate polynomial, ascending.
std::vector<Rational> rational_roots(std::vector<Rational> coeffs);

}  // namespace modcurve
