#include "modcurve/cusps.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <array>

using namespace modcurve;

TEST_CASE("cusp parsing and canonical classes") {
  CHECK(cusps::Cusp::parse("inf").is_infinity());
  CHECK(cusps::Cusp::parse("3/8") == cusps::Cusp(3, 8));
  CHECK(cusps::Cusp::parse("-3/-8") == cusps::Cusp(3, 8));
  CHECK(cusps::Cusp::parse("3/-8") == cusps::Cusp(-3, 8));
  CHECK(cusps::Cusp::parse("2") == cusps::Cusp(2, 1));
  CHECK_THROWS_AS(cusps::Cusp::parse("2/4"), DomainError);
  CHECK_THROWS_AS(cusps::Cusp::parse("x"), DomainError);
  CHECK(cusps::Cusp::infinity().to_string() == "1/0");
  CHECK(cusps::CuspClass(8, 3, 0).to_string() == "3/8");
  CHECK(cusps::CuspClass(8, 7, 4) == cusps::CuspClass(8, 1, 4));
  CHECK(cusps::cusp_canonical(8, cusps::Cusp(11, 8)) == cusps::CuspClass(8, 3, 0));
  CHECK_THROWS_AS(cusps::CuspClass(8, 2, 4), DomainError);
}

TEST_CASE("cusp counts against enumeration") {
  for (std::int64_t q = 3; q <= 24; ++q) {
    CAPTURE(q);
    const auto classes = cusps::enumerate_cusps(q);
    CHECK(static_cast<std::int64_t>(classes.size()) == static_cast<std::int64_t>(oracle::cusp_classes(q).size()));
    CHECK(cusps::h_formula(q) == classes.size());
  }
  CHECK(cusps::h_formula(5) == 12);
  CHECK(cusps::h_formula(8) == 24);
}

TEST_CASE("equivalence witnesses lie in Gamma(q) and move the cusp") {
  const std::int64_t q = 7;
  for (auto [x1, z1, x2, z2] : {std::array<std::int64_t, 4>{1, 0, 8, 7}, {2, 7, -5, 7}, {1, 3, 8, 3}}) {
    cusps::Cusp a(x1, z1), b(x2, z2);
    auto w = cusps::find_equivalence_witness(q, a, b);
    REQUIRE(w.has_value());
    CHECK(group::cusp_action(*w, a) == b);
    CHECK(group::gamma_qn_member(*w, q, q));
  }
  CHECK_FALSE(cusps::find_equivalence_witness(7, cusps::Cusp(1, 0), cusps::Cusp(2, 7)).has_value());
}

TEST_CASE("orbit counts against Burnside") {
  for (std::int64_t q = 5; q <= 24; ++q) {
    for (auto n : arith::divisors(q)) {
      CAPTURE(q);
      CAPTURE(n);
      const auto orbits = cusps::tau_orbits(q, n);
      CHECK(static_cast<std::int64_t>(orbits.size()) == oracle::orbit_count_burnside(q, n));
      CHECK(cusps::h_n_formula(q, n) == orbits.size());
      std::size_t members = 0;
      for (const auto& o : orbits) members += o.size();
      CHECK(members == cusps::enumerate_cusps(q).size());
    }
  }
  CHECK(cusps::h_n_formula(8, 1) == 6);
}

TEST_CASE("widths against conjugated translations") {
  for (std::int64_t q = 3; q <= 20; ++q) {
    for (auto n : arith::divisors(q)) {
      for (const auto& c : cusps::enumerate_cusps(q)) {
        const auto lift = c.lift();
        const auto x = static_cast<std::int64_t>(lift.x()), z = static_cast<std::int64_t>(lift.z());
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(lift.to_string());
        const auto expected = oracle::width_by_conjugation(q, n, x, z);
        CHECK(cusps::width_bruteforce(q, n, lift) == expected);
        CHECK(cusps::width(q, n, lift) == expected);
      }
    }
  }
}

TEST_CASE("widths sum to the index and follow the distribution") {
  for (std::int64_t q = 5; q <= 24; ++q) {
    for (auto n : arith::divisors(q)) {
      BigInt total = 0;
      for (const auto& o : cusps::tau_orbits(q, n)) {
        total += cusps::width(q, n, o.representative().lift());
        CHECK(cusps::lemma_width_check(q, n, o));
      }
      CHECK(total == group::r_n_formula(q, n));
      CHECK(cusps::width_distribution(q, n) == cusps::width_distribution_direct(q, n));
    }
  }
  const auto d = cusps::width_distribution(8, 1);
  CHECK(d == std::map<std::int64_t, BigInt>{{1, 2}, {2, 1}, {4, 1}, {8, 2}});
}

TEST_CASE("q = 8, n = 1 orbits") {
  const auto orbits = cusps::tau_orbits(8, 1);
  REQUIRE(orbits.size() == 6);
  std::vector<std::string> reps;
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) {
    reps.push_back(o.representative().to_string());
    sizes.push_back(o.size());
  }
  CHECK(reps == std::vector<std::string>{"1/0", "3/8", "1/4", "1/2", "0/1", "1/3"});
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 4, 8, 8});
  CHECK_THROWS_AS(cusps::tau_orbits(8, 3), DomainError);
  CHECK_THROWS_AS(cusps::enumerate_cusps(61), DomainError);
}
