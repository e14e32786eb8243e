#include "modcurve/equation.hpp"

#include "modcurve/curve.hpp"
#include "modcurve/genus.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace modcurve;

namespace {

std::vector<std::int64_t> all_exponents(const equation::SemiHyperellipticEquation& e) {
  std::vector<std::int64_t> m;
  for (const auto& b : e.finite) m.push_back(b.m);
  return m;
}

}  // namespace

TEST_CASE("rotation numbers and exponents are inverse") {
  for (std::int64_t p = 2; p <= 24; ++p) {
    for (std::int64_t m = 1; m < p; ++m) {
      const auto rot = equation::rotation_from_exponent(p, m);
      CHECK(rot.orbit_len == std::gcd(p, m));
      CHECK(equation::exponent_from_rotation(p, rot) == m);
    }
  }
  CHECK(equation::rotation_from_exponent(8, 2) == equation::RotationNumber{2, 1});
  CHECK(equation::rotation_from_exponent(8, 3) == equation::RotationNumber{1, 3});
}

TEST_CASE("equation invariants") {
  auto e = equation::SemiHyperellipticEquation::make(8, {{"0", Rational(0), 2}, {"1", Rational(1), 1}, {"a", std::nullopt, 1}});
  CHECK(e.m_infinity == 4);
  CHECK(e.to_string() == "y^8 = x^2*(x-1)*(x-a)");
  CHECK(e.symbolic_labels() == std::vector<std::string>{"a"});
  CHECK(e.exponents() == std::vector<std::int64_t>{1, 1, 2});
  auto f = equation::SemiHyperellipticEquation::make(8, {{"0", Rational(0), 2}, {"1", Rational(1), 1}, {"-1", Rational(-1), 1}});
  CHECK(f.to_string() == "y^8 = x^2*(x-1)*(x+1)");
  CHECK_THROWS_AS(equation::SemiHyperellipticEquation::make(8, {{"0", Rational(0), 8}}), DomainError);
  CHECK_THROWS_AS(equation::SemiHyperellipticEquation::make(8, {{"0", Rational(0), 2}, {"1", Rational(0), 1}}), DomainError);
}

TEST_CASE("built equations are covers of the right genus") {
  for (std::int64_t q : {5, 6, 7, 8, 9, 10, 12}) {
    CAPTURE(q);
    const auto b = equation::build_equation(q, 1);
    CHECK(b.p == q);
    CHECK(b.orbits.size() == b.equation.finite.size());
    // Non-branch orbits are the free ones of full length p.
    std::size_t branched = 0;
    for (const auto& o : cusps::tau_orbits(q, 1)) branched += o.size() < static_cast<std::size_t>(q) ? 1 : 0;
    CHECK(branched == b.orbits.size());
    for (const auto& bo : b.orbits) {
      CHECK(std::gcd(b.p, bo.m) == static_cast<std::int64_t>(bo.orbit.size()));
      CHECK(equation::exponent_from_rotation(b.p, bo.rotation) == bo.m);
    }
    const auto m = all_exponents(b.equation);
    CHECK(std::accumulate(m.begin(), m.end(), std::int64_t{0}) % q == 0);
    CHECK(b.equation.m_infinity == 0);
    CHECK(curve::curve_genus(b.equation) == genus::genus_q(q));
    CHECK(oracle::cyclic_cover_genus(q, m) == genus::genus_q(q));
  }
  CHECK_THROWS_AS(equation::build_equation(11, 1), DomainError);
}

TEST_CASE("normalized equations") {
  auto norm = [](std::int64_t q, equation::Convention c) {
    const auto b = equation::build_equation(q, 1);
    return equation::normalize_equation(b, equation::choose_normalization(b, c), equation::default_label_prefix(q))
        .to_string();
  };
  const auto dz = equation::Convention::DistinguishedZero;
  CHECK(norm(7, dz) == "y^7 = x*(x-1)^2");
  CHECK(norm(8, dz) == "y^8 = x^2*(x-1)*(x-a)");
  CHECK(norm(9, dz) == "y^9 = x*(x-1)^3*(x-p1)^3*(x-p2)^4");
  CHECK(norm(10, dz) == "y^10 = x*(x-1)^2*(x-q1)^5*(x-q2)^5*(x-q3)^8");
  CHECK(norm(12, equation::Convention::MinInfinity) ==
        "y^12 = x*(x-1)^2*(x-r1)^3*(x-r2)^3*(x-r3)^4*(x-r4)^4*(x-r5)^6");
  for (std::int64_t q : {6, 7, 8, 9, 10, 12}) {
    for (auto c : {dz, equation::Convention::Ascending, equation::Convention::MinInfinity}) {
      const auto b = equation::build_equation(q, 1);
      const auto e = equation::normalize_equation(b, equation::choose_normalization(b, c), "c");
      CHECK(curve::curve_genus(e) == genus::genus_q(q));
      CHECK(e.m_infinity > 0);
      CHECK(e.finite.size() + 1 == b.orbits.size());
    }
  }
  CHECK(equation::default_label_prefix(9) == "p");
  CHECK(equation::default_label_prefix(10) == "q");
  CHECK(equation::default_label_prefix(12) == "r");
  CHECK(equation::default_label_prefix(8) == "a");
  CHECK(equation::parse_convention("min-infinity") == equation::Convention::MinInfinity);
  CHECK_THROWS_AS(equation::parse_convention("nope"), DomainError);
}
