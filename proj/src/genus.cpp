#include "modcurve/genus.hpp"

#include "modcurve/cusps.hpp"
#include "modcurve/modular_group.hpp"

namespace modcurve::genus {

namespace {

BigInt nonnegative(const Rational& value, const std::string& what) {
  BigInt g = arith::to_integer(value, what);
  if (g < 0) throw DomainError(what + " is negative: " + g.str());
  return g;
}

}  // namespace

BigInt genus_q(std::int64_t q) {
  if (q < 1) throw DomainError("genus_q requires q >= 1");
  if (q <= 2) return 0;
  Rational v = arith::frac(BigInt(q - 6) * q * q, 24) * arith::prime_density(q);
  return nonnegative(1 + v, "g_q");
}

BigInt genus_qn(std::int64_t q, std::int64_t n) {
  if (q < 5) throw DomainError("genus_qn requires q >= 5");
  if (n < 1 || q % n != 0) throw DomainError(std::to_string(n) + " does not divide " + std::to_string(q));
  Rational v = (Rational(q) - 6 * arith::mult_N(q / n)) * arith::frac(BigInt(n) * q, 24) *
               arith::prime_density(q);
  return nonnegative(1 + v, "g_q^n");
}

BigInt euler_genus(const BigInt& h, const BigInt& r) {
  // Free action of Gamma_q^n for q >= 4: its traces are 2 mod q while elliptic
  // elements have trace in {-1, 0, 1}.
  return nonnegative(Rational(1) - arith::frac(h, 2) + arith::frac(r, 12), "Euler genus");
}

BigInt genus_prime_quotient(std::int64_t q) {
  if (q < 10 || group::type_classify(q) != group::LevelType::TypeI) {
    throw DomainError("genus_prime_quotient requires a type I level q >= 10");
  }
  const std::int64_t p = q / 2;
  Rational v = (Rational(p) - 3 * arith::mult_N(p)) * arith::frac(p, 12) * arith::prime_density(p);
  return nonnegative(1 + v, "g'_q");
}

BigInt hurwitz_deficiency(const BigInt& n, const BigInt& g_bar, const std::vector<std::int64_t>& orders) {
  Rational s = 2 * Rational(g_bar) - 2;
  for (auto m : orders) {
    if (m < 2) throw DomainError("branch orders must be >= 2");
    s += Rational(1) - arith::frac(1, m);
  }
  return arith::to_integer(Rational(n) * s, "Hurwitz deficiency");
}

bool is_semihyperelliptic_level(std::int64_t q) {
  if (genus_q(q) == 0) return true;
  if (q < 5) return false;
  for (auto n : arith::divisors(q)) {
    if (genus_qn(q, n) == 0) return true;
  }
  return false;
}

GenusReport genus_report(std::int64_t q, std::int64_t n) {
  GenusReport out{q, n, cusps::h_n_formula(q, n), group::r_n_formula(q, n), genus_qn(q, n)};
  if (euler_genus(out.h, out.r) != out.g) throw DomainError("genus formulas disagree");
  return out;
}

}  // namespace modcurve::genus
