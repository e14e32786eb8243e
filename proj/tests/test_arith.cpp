#include "modcurve/arith.hpp"
#include "modcurve/cyclotomic.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace modcurve;

TEST_CASE("ext_gcd gives Bezout coefficients") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t a = dist(rng), b = dist(rng);
    auto e = arith::ext_gcd<BigInt>(a, b);
    CHECK(e.g == std::gcd(a, b));
    CHECK(a * e.u + b * e.v == e.g);
  }
  CHECK(arith::gcd<BigInt>(7, 0) == 7);
  CHECK(arith::gcd<BigInt>(0, -7) == 7);
  CHECK(arith::gcd<BigInt>(0, 0) == 0);
}

TEST_CASE("mod is the least nonnegative residue") {
  CHECK(arith::mod<std::int64_t>(-1, 8) == 7);
  CHECK(arith::mod<std::int64_t>(16, 8) == 0);
  CHECK(arith::mod<BigInt>(BigInt(-17), BigInt(5)) == 3);
}

TEST_CASE("solve_unit_congruence") {
  CHECK(arith::solve_unit_congruence(std::int64_t{3}, std::int64_t{8}) == 3);
  CHECK(arith::solve_unit_congruence(std::int64_t{4}, std::int64_t{1}) == 0);
  CHECK(arith::solve_unit_congruence(BigInt(2), BigInt(9)) == 5);
  for (std::int64_t v = 2; v <= 40; ++v) {
    for (std::int64_t u = -v; u <= 2 * v; ++u) {
      if (std::gcd(u, v) != 1) {
        CHECK_THROWS_AS(arith::solve_unit_congruence(u, v), DomainError);
        continue;
      }
      const auto k = arith::solve_unit_congruence(u, v);
      CHECK(k >= 1);
      CHECK(k < v);
      CHECK(arith::mod<std::int64_t>(k * u, v) == 1);
    }
  }
}

TEST_CASE("factorization reconstructs n and uses primes") {
  for (std::int64_t n = 1; n <= 3000; ++n) {
    arith::Factorization f(n);
    std::int64_t prod = 1;
    for (const auto& pp : f.factors()) {
      CHECK(arith::is_prime(pp.prime));
      for (int i = 0; i < pp.exponent; ++i) prod *= pp.prime;
    }
    CHECK(prod == n);
  }
  auto f = arith::Factorization(360).factors();
  REQUIRE(f.size() == 3);
  CHECK(f[0] == arith::PrimePower{2, 3});
  CHECK(f[1] == arith::PrimePower{3, 2});
  CHECK(f[2] == arith::PrimePower{5, 1});
  CHECK_THROWS_AS(arith::Factorization(0), DomainError);
}

TEST_CASE("divisors against the naive scan") {
  for (std::int64_t n = 1; n <= 500; ++n) {
    std::vector<std::int64_t> naive;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) naive.push_back(d);
    }
    CHECK(arith::divisors(n) == naive);
  }
}

TEST_CASE("prime density and N") {
  CHECK(arith::prime_density(1) == 1);
  CHECK(arith::prime_density(12) == Rational(2, 3));  // (3/4)(8/9)
  CHECK(arith::mult_N(1) == 1);
  CHECK(arith::mult_N(5) == Rational(5, 3));
  CHECK(arith::mult_N(8) == 2);
  CHECK(arith::mult_N(12) == Rational(5, 3) * Rational(3, 2));
  // Multiplicative over coprime parts.
  for (std::int64_t a = 1; a <= 30; ++a) {
    for (std::int64_t b = 1; b <= 30; ++b) {
      if (std::gcd(a, b) == 1) CHECK(arith::mult_N(a * b) == arith::mult_N(a) * arith::mult_N(b));
    }
  }
}

TEST_CASE("n1, n2, n3") {
  CHECK(arith::n1(2, 0) == 1);
  CHECK(arith::n1(2, 3) == 12);
  CHECK(arith::n1(5, 1) == 6);
  CHECK(arith::n3(2, 3, 0) == Rational(2, 3));
  CHECK(arith::n3(2, 3, 1) == Rational(1, 3));
  CHECK(arith::n3(2, 3, 3) == Rational(2, 3));
  // The shares over j = 0..r add up to N(p^r).
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int r = 1; r <= 4; ++r) {
      Rational s = 0;
      for (int j = 0; j <= r; ++j) s += arith::n3(p, r, j);
      std::int64_t pr = 1;
      for (int i = 0; i < r; ++i) pr *= p;
      CHECK(s == arith::mult_N(pr));
    }
  }
  CHECK_THROWS_AS(arith::n1(4, 1), DomainError);
  CHECK_THROWS_AS(arith::n3(3, 2, 3), DomainError);
}

TEST_CASE("to_integer and frac") {
  CHECK(arith::to_integer(Rational(10, 2), "x") == 5);
  CHECK_THROWS_AS(arith::to_integer(Rational(1, 3), "x"), DomainError);
  CHECK_THROWS_AS(arith::frac(1, 0), DomainError);
  CHECK(arith::to_string(Rational(-6, 4)) == "-3/2");
  CHECK(arith::to_string(BigInt(1) << 70) == "1180591620717411303424");
}

TEST_CASE("cyclotomic ring identities") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dist(-5, 5);
  auto random_element = [&](std::size_t d) {
    CyclotomicElement x(d);
    for (std::size_t i = 0; i < d; ++i) x = x + CyclotomicElement::monomial(d, i, dist(rng));
    return x;
  };
  for (std::size_t d : {1u, 2u, 5u, 8u}) {
    for (int i = 0; i < 30; ++i) {
      auto x = random_element(d), y = random_element(d), z = random_element(d);
      CHECK(cyclo_eq(cyclo_mul(x, y), cyclo_mul(y, x)));
      CHECK(cyclo_eq(cyclo_mul(cyclo_mul(x, y), z), cyclo_mul(x, cyclo_mul(y, z))));
      CHECK((x * (y + z)) == (x * y + x * z));
    }
    const auto t = CyclotomicElement::monomial(d, 1);
    CHECK(t.pow(static_cast<unsigned>(d)) == CyclotomicElement(d, 1));
  }
  CHECK(to_string(CyclotomicElement::monomial(8, -1, 2)) == "2*t^7");
  CHECK(to_string(CyclotomicElement(8)) == "0");
  CHECK_THROWS_AS(CyclotomicElement(8) + CyclotomicElement(4), DomainError);
  // Not a field: t^4 squared is 1 without t^4 being -1.
  const auto t4 = CyclotomicElement::monomial(8, 4);
  CHECK(t4 * t4 == CyclotomicElement(8, 1));
  CHECK_FALSE(t4 == CyclotomicElement(8, -1));
}
