#pragma once

// Exact scalar arithmetic shared by every other module: arbitrary-precision
// integers and rationals, Bezout coefficients, unit congruences, trial-division
// factorization and the multiplicative counting functions used for cusp counts.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modcurve {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a mathematical precondition of an operation is violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace arith {

template <class Int>
struct ExtGcd {
  Int g;  // always >= 0
  Int u;
  Int v;
};

/// Extended Euclid: g = gcd(a, b) >= 0 and a*u + b*v = g.
template <class Int>
ExtGcd<Int> ext_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

/// gcd with the convention gcd(a, 0) = |a|.
template <class Int>
Int gcd(Int a, Int b) {
  return ext_gcd<Int>(a, b).g;
}

/// Least nonnegative residue of a modulo m (m >= 1).
template <class Int>
Int mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

/// The unique k with 1 <= k < v and k*u = 1 (mod v); returns 0 when v == 1.
BigInt solve_unit_congruence(const BigInt& u, const BigInt& v);
std::int64_t solve_unit_congruence(std::int64_t u, std::int64_t v);

struct PrimePower {
  std::int64_t prime;
  int exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization with strictly increasing primes. factorize(1) is empty.
class Factorization {
 public:
  explicit Factorization(std::int64_t n);

  const std::vector<PrimePower>& factors() const& { return factors_; }
  std::vector<PrimePower> factors() && { return std::move(factors_); }
  std::int64_t value() const { return value_; }
  /// The set of primes dividing the value.
  std::vector<std::int64_t> primes() const;

 private:
  std::int64_t value_;
  std::vector<PrimePower> factors_;
};

bool is_prime(std::int64_t n);

/// All positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// prod over primes l | q of (1 - 1/l^2).
Rational prime_density(std::int64_t q);

/// N(p) = prod (1 + r_i (p_i - 1)/(p_i + 1)); N(1) = 1.
Rational mult_N(std::int64_t p);

/// Index of the level-p_i^j Hecke-type subgroup: 1 for j = 0, (p+1) p^(j-1) otherwise.
BigInt n1(std::int64_t prime, int j);
/// Share of level classes whose width carries p_i^j, before the orbit correction.
Rational n2(std::int64_t prime, int r, int j);
/// Share of orbits whose width carries p_i^j: p/(p+1) at j = 0 or r, (p-1)/(p+1) inside.
Rational n3(std::int64_t prime, int r, int j);

BigInt pow(const BigInt& base, unsigned exponent);

/// num/den in lowest terms; den must be nonzero.
Rational frac(const BigInt& num, const BigInt& den);

/// Converts an exact rational to an integer, throwing if it is not integral.
BigInt to_integer(const Rational& value, const std::string& what);

/// "p" or "p/q".
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

}  // namespace arith
}  // namespace modcurve
