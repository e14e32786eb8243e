#include "modcurve/arith.hpp"

namespace modcurve::arith {

namespace {

template <class Int>
Int unit_congruence(const Int& u, const Int& v) {
  if (v < 1) throw DomainError("solve_unit_congruence: modulus must be >= 1");
  auto e = ext_gcd<Int>(u, v);
  if (e.g != 1) throw DomainError("solve_unit_congruence: arguments are not coprime");
  if (v == 1) return Int(0);
  return mod<Int>(e.u, v);
}

void check_exponent(std::int64_t prime, int r, int j, const char* who) {
  if (!is_prime(prime)) throw DomainError(std::string(who) + ": not a prime");
  if (r < 1) throw DomainError(std::string(who) + ": exponent r must be >= 1");
  if (j < 0 || j > r) throw DomainError(std::string(who) + ": j out of range [0, r]");
}

}  // namespace

BigInt solve_unit_congruence(const BigInt& u, const BigInt& v) {
  return unit_congruence<BigInt>(u, v);
}

std::int64_t solve_unit_congruence(std::int64_t u, std::int64_t v) {
  return unit_congruence<std::int64_t>(u, v);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization::Factorization(std::int64_t n) : value_(n) {
  if (n < 1) throw DomainError("factorization requires n >= 1");
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) factors_.push_back({d, e});
  }
  if (n > 1) factors_.push_back({n, 1});
}

std::vector<std::int64_t> Factorization::primes() const {
  std::vector<std::int64_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw DomainError("divisors requires n >= 1");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational prime_density(std::int64_t q) {
  Rational out = 1;
  for (auto l : Factorization(q).primes()) {
    out *= Rational(1) - frac(1, BigInt(l) * l);
  }
  return out;
}

Rational mult_N(std::int64_t p) {
  Rational out = 1;
  for (const auto& f : Factorization(p).factors()) {
    out *= Rational(1) + frac(BigInt(f.exponent) * (f.prime - 1), f.prime + 1);
  }
  return out;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigInt n1(std::int64_t prime, int j) {
  if (!is_prime(prime)) throw DomainError("n1: not a prime");
  if (j < 0) throw DomainError("n1: j must be >= 0");
  if (j == 0) return 1;
  return BigInt(prime + 1) * pow(BigInt(prime), static_cast<unsigned>(j - 1));
}

Rational n2(std::int64_t prime, int r, int j) {
  check_exponent(prime, r, j, "n2");
  const BigInt p = prime;
  if (j == 0) return frac(p, p + 1);
  if (j < r) return frac((p - 1) * pow(p, static_cast<unsigned>(j)), p + 1);
  return frac(pow(p, static_cast<unsigned>(r + 1)), p + 1);
}

Rational n3(std::int64_t prime, int r, int j) {
  check_exponent(prime, r, j, "n3");
  const BigInt p = prime;
  if (j == 0 || j == r) return frac(p, p + 1);
  return frac(p - 1, p + 1);
}

Rational frac(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(num, den);
}

BigInt to_integer(const Rational& value, const std::string& what) {
  if (denominator(value) != 1) {
    throw DomainError(what + " is not an integer: " + to_string(value));
  }
  return numerator(value);
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace modcurve::arith
