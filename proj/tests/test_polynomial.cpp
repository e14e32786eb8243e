#include "modcurve/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace modcurve;

namespace {

MPoly random_poly(std::mt19937_64& rng, std::size_t vars) {
  std::uniform_int_distribution<int> coef(-4, 4), expo(0, 2);
  MPoly out;
  for (int t = 0; t < 4; ++t) {
    MPoly term(coef(rng));
    for (std::size_t v = 0; v < vars; ++v) term *= MPoly::var(v, static_cast<unsigned>(expo(rng)));
    out += term;
  }
  return out;
}

const std::vector<std::string> kNames{"x", "y", "z"};

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluation is a ring map") {
  std::mt19937_64 rng(6);
  std::map<std::size_t, Rational> at{{0, Rational(2, 3)}, {1, -1}, {2, 5}};
  for (int i = 0; i < 50; ++i) {
    auto a = random_poly(rng, 3), b = random_poly(rng, 3);
    CHECK((a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at));
    CHECK((a + b).evaluate(at) == a.evaluate(at) + b.evaluate(at));
  }
}

TEST_CASE("substitute, collect and coefficients") {
  const MPoly x = MPoly::var(0), y = MPoly::var(1);
  const MPoly p = x * x * y + 3 * x - 2;
  CHECK(p.substitute(0, y + 1) == (y + 1) * (y + 1) * y + 3 * (y + 1) - 2);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.coefficient_in(0, 2) == y);
  CHECK(p.coefficient_in(0, 0) == MPoly(-2));
  auto by_x = p.collect({0});
  CHECK(by_x.size() == 3);
  CHECK(p.to_string(kNames) == "x^2*y + 3*x - 2");
  CHECK(MPoly().to_string(kNames) == "0");
  CHECK(p.variables() == std::set<std::size_t>{0, 1});
}

TEST_CASE("exact division") {
  const MPoly x = MPoly::var(0), y = MPoly::var(1);
  const MPoly p = (x - 3) * (x * y + 1);
  auto q = p.divide_linear(0, 3);
  REQUIRE(q.has_value());
  CHECK(*q == x * y + 1);
  CHECK_FALSE(p.divide_linear(0, 2).has_value());
  const MPoly m = x * x * y * (y + x);
  CHECK(m.monomial_content() == MPoly::Monomial{2, 1});
  CHECK(*m.divide_monomial({2, 1}) == y + x);
  CHECK_FALSE(m.divide_monomial({3, 0}).has_value());
}

TEST_CASE("rational roots") {
  // 6 (x + 1)(x - 1/2)(x - 2/3) = 6x^3 - x^2 - 5x + 2
  CHECK(rational_roots({2, -5, -1, 6}) == std::vector<Rational>{-1, Rational(1, 2), Rational(2, 3)});
  CHECK(rational_roots({1, 0, 1}).empty());
  CHECK(rational_roots({0, 0, 1}) == std::vector<Rational>{0});
  // Property: roots found by the search really are roots, and planted ones are found.
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(-6, 6), e(1, 4);
  for (int i = 0; i < 40; ++i) {
    const MPoly x = MPoly::var(0);
    const Rational r1(d(rng), e(rng)), r2(d(rng), e(rng));
    const MPoly p = (x - r1) * (x - r2) * (x * x + 1);
    auto roots = rational_roots(p.univariate(0));
    CHECK(std::find(roots.begin(), roots.end(), r1) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), r2) != roots.end());
    for (const auto& r : roots) CHECK(p.evaluate({{0, r}}) == 0);
  }
}
