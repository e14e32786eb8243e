#include "modcurve/modular_group.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace modcurve;

TEST_CASE("PSL(2, Z/q) size against the brute-force count") {
  for (std::int64_t q = 2; q <= 16; ++q) {
    CAPTURE(q);
    const auto elems = group::enumerate_psl(q);
    CHECK(static_cast<std::int64_t>(elems.size()) == oracle::psl_size(q));
    CHECK(std::set<group::GroupElement>(elems.begin(), elems.end()).size() == elems.size());
    if (q >= 3) CHECK(group::r_formula(q) == oracle::psl_size(q));
  }
  CHECK(group::r_formula(7) == 168);
  CHECK(group::r_formula(8) == 192);
  CHECK_THROWS_AS(group::enumerate_psl(41), DomainError);
  CHECK_THROWS_AS(group::enumerate_psl(1), DomainError);
}

TEST_CASE("R_q^n is R_q n / q") {
  for (std::int64_t q = 3; q <= 30; ++q) {
    for (auto n : arith::divisors(q)) CHECK(group::r_n_formula(q, n) * q == group::r_formula(q) * n);
  }
  CHECK(group::r_n_formula(8, 1) == 24);
  CHECK_THROWS_AS(group::r_n_formula(8, 3), DomainError);
}

TEST_CASE("PSL canonical representative") {
  group::GroupElement a(group::MatModQ(8, 7, 0, 0, 7));
  CHECK(a == group::GroupElement::identity(8));
  group::GroupElement b(group::MatModQ(8, 3, 1, 0, 3));
  group::GroupElement c(group::MatModQ(8, 5, 7, 0, 5));
  CHECK(b == c);
  CHECK_THROWS_AS(group::MatModQ(8, 2, 0, 0, 1), DomainError);
}

TEST_CASE("element orders against the oracle") {
  for (std::int64_t q : {5, 8, 9, 12}) {
    for (const auto& g : group::enumerate_psl(q)) {
      const auto& m = g.rep();
      CHECK(group::element_order(g) == oracle::psl_order({m.a(), m.b(), m.c(), m.d()}, q));
    }
  }
}

TEST_CASE("type classification and the largest element order") {
  CHECK(group::type_classify(2) == group::LevelType::TypeI);
  CHECK(group::type_classify(10) == group::LevelType::TypeI);
  CHECK(group::type_classify(14) == group::LevelType::TypeI);
  CHECK(group::type_classify(6) == group::LevelType::TypeII);
  CHECK(group::type_classify(8) == group::LevelType::TypeII);
  CHECK(group::type_classify(20) == group::LevelType::TypeII);
  CHECK(group::max_order_formula(10) == 15);
  CHECK(group::max_order_formula(8) == 8);
  // The closed form fails where two odd coprime parts combine, e.g. orders 3
  // and 10 in SL(2, Z/3) x SL(2, Z/5) give order 30 in PSL(2, Z/15).
  const std::set<std::int64_t> counterexamples{15, 20, 21};
  for (std::int64_t q = 2; q <= 24; ++q) {
    CAPTURE(q);
    const auto brute = group::max_element_order(q);
    CHECK(brute == oracle::max_psl_order(q));
    CHECK((brute == group::max_order_formula(q)) == (counterexamples.count(q) == 0));
  }
  CHECK(group::max_element_order(15) == 30);
  CHECK(group::max_element_order(20) == 30);
  CHECK(group::max_element_order(21) == 42);
  // The element exhibited for type I q = 2p: (p+1 1; p 1) has order 3p.
  for (std::int64_t p : {5, 7, 11}) {
    CHECK(group::element_order(group::GroupElement(group::MatModQ(2 * p, p + 1, 1, p, 1))) == 3 * p);
  }
}

TEST_CASE("center of PSL(2, Z/q)") {
  CHECK(group::center(7).size() == 1);
  // 3 I squares to I mod 8 and is not -I, so it survives in PSL.
  const auto z8 = group::center(8);
  REQUIRE(z8.size() == 2);
  CHECK(z8[0] == group::GroupElement::identity(8));
  CHECK(z8[1] == group::GroupElement(group::MatModQ(8, 3, 0, 0, 3)));
  // Scalars lambda I with lambda^2 = 1, modulo +-1.
  for (std::int64_t q = 3; q <= 16; ++q) {
    std::int64_t roots = 0;
    for (std::int64_t l = 1; l < q; ++l) roots += (l * l) % q == 1 ? 1 : 0;
    CHECK(static_cast<std::int64_t>(group::center(q).size()) == roots / 2);
  }
}

TEST_CASE("Gamma_q^n membership") {
  CHECK(group::gamma_qn_member({1, 1, 0, 1}, 8, 1));
  CHECK_FALSE(group::gamma_qn_member({1, 1, 0, 1}, 8, 2));
  CHECK(group::gamma_qn_member({1, 8, 0, 1}, 8, 8));
  CHECK(group::gamma_qn_member({1, 4, 0, 1}, 8, 4));
  CHECK_FALSE(group::gamma_qn_member({1, 4, 0, 1}, 8, 8));
  CHECK_FALSE(group::gamma_qn_member({1, 0, 4, 1}, 8, 1));
  CHECK_THROWS_AS(group::gamma_qn_member({2, 0, 0, 1}, 8, 1), DomainError);
}

TEST_CASE("cusp action") {
  const cusps::Cusp inf = cusps::Cusp::infinity();
  CHECK(group::cusp_action(group::IntMatrix{3, 1, 8, 3}, inf) == cusps::Cusp(3, 8));
  CHECK(group::cusp_action(group::IntMatrix{0, -1, 1, 0}, cusps::Cusp(0, 1)) == inf);
  const auto maps = group::maps_between_cusps(8, cusps::cusp_canonical(8, inf), cusps::cusp_canonical(8, cusps::Cusp(3, 8)));
  CHECK(maps.size() == 8);
  const auto c38 = cusps::cusp_canonical(8, cusps::Cusp(3, 8));
  const std::set<cusps::CuspClass> quarter{{8, 1, 4}, {8, 3, 4}};
  const std::set<cusps::CuspClass> half{{8, 1, 2}, {8, 3, 2}, {8, 5, 2}, {8, 7, 2}};
  for (const auto& g : maps) {
    CHECK(group::cusp_action(g, cusps::cusp_canonical(8, inf)) == c38);
    CHECK(group::cusp_action(g, c38) == cusps::cusp_canonical(8, inf));
    for (const auto* s : {&quarter, &half}) {
      std::set<cusps::CuspClass> image;
      for (const auto& c : *s) image.insert(group::cusp_action(g, c));
      CHECK(image == *s);
    }
  }
  // The stabilizer of a class has |PSL| / h_q elements.
  for (std::int64_t q : {5, 7, 8}) {
    const auto c = cusps::cusp_canonical(q, inf);
    CHECK(static_cast<std::int64_t>(group::maps_between_cusps(q, c, c).size()) * static_cast<std::int64_t>(oracle::cusp_classes(q).size()) ==
          oracle::psl_size(q));
  }
}
