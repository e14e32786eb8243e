#include "modcurve/canonical.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <complex>
#include <random>

using namespace modcurve;
using namespace modcurve::canonical;
using C = std::complex<double>;

namespace {

constexpr std::size_t kC33 = 12;

C to_complex(const Cyc& z) {
  std::vector<double> c;
  for (const auto& v : z.coefficients()) c.push_back(static_cast<double>(v));
  return oracle::root_sum(c, z.modulus());
}

C horner(const std::vector<Rational>& coeffs, C x) {
  C s = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * x + static_cast<double>(*it);
  return s;
}

/// Canonical image of a point on y^8 = x^2 (x-1)(x+1) with nonzero y.
ProjPoint<C> sample_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const C x(u(rng), u(rng));
  const C y = std::pow(x * x * (x - 1.0) * (x + 1.0), 1.0 / 8);
  return embed_point(x, y);
}

double max_residual(const C& a, const ProjPoint<C>& z) {
  double scale = 0;
  for (const auto& v : z) scale = std::max(scale, std::abs(v));
  double out = 0;
  for (const auto& r : quadric_residuals(a, z)) out = std::max(out, std::abs(r) / (scale * scale));
  return out;
}

ProjPoint<C> apply_numeric(const std::array<std::array<C, 5>, 5>& m, const ProjPoint<C>& z) {
  ProjPoint<C> out{};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) out[i] += m[i][j] * z[j];
  }
  return out;
}

}  // namespace

TEST_CASE("rational points of the family lie on the three quadrics") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  int tested = 0;
  while (tested < 50) {
    Rational x(num(rng), den(rng)), y(num(rng), den(rng));
    if (x == 0 || x == 1 || y == 0) continue;
    // Choose a so that (x, y) is on y^8 = x^2 (x-1)(x-a).
    Rational y8 = y * y * y * y * y * y * y * y;
    Rational a = x - y8 / (x * x * (x - 1));
    CHECK(on_model(a, embed_point(x, y)));
    CHECK_FALSE(on_model(Rational(a + 1), embed_point(x, y)));
    ++tested;
  }
}

TEST_CASE("the canonical image of X8 satisfies the quadrics numerically") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) CHECK(max_residual(C(-1), sample_point(rng)) < 1e-9);
}

TEST_CASE("sigma matrices preserve the model only at a = -1") {
  for (std::int64_t j = 0; j < 8; ++j) CHECK(sigma_preserves_ideal(Rational(-1), j));
  for (int a : {2, 3, -2, 5}) CHECK_FALSE(sigma_preserves_ideal(Rational(a), 0));

  std::mt19937_64 rng(3);
  for (std::int64_t j = 0; j < 8; ++j) {
    const auto s = sigma_matrix(j, Rational(-1));
    std::array<std::array<C, 5>, 5> m{};
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) m[r][c] = to_complex(s[r][c]);
    for (int i = 0; i < 20; ++i) CHECK(max_residual(C(-1), apply_numeric(m, sample_point(rng))) < 1e-9);
  }
}

TEST_CASE("sigma closure and the deck matrix") {
  const auto d = deck_matrix();
  Matrix5 dp = multiply(d, d);
  for (int k = 2; k < 8; ++k) dp = multiply(dp, d);
  const Matrix5 id = multiply(sigma_matrix(0, Rational(-1)), sigma_matrix(0, Rational(-1)));
  CHECK(proportional(dp, id));
  CHECK(preserves_ideal(d, Rational(-1)));
  CHECK(preserves_ideal(d, Rational(5)));
  for (std::int64_t j = 0; j < 8; ++j) {
    for (std::int64_t k = 0; k < 8; ++k) {
      Matrix5 pw = id;
      for (std::int64_t e = 0; e < (j + k) % 8; ++e) pw = multiply(pw, d);
      CHECK(proportional(multiply(sigma_matrix(j, Rational(-1)), sigma_matrix(k, Rational(-1))), pw));
    }
  }
  CHECK_FALSE(proportional(sigma_matrix(0, Rational(-1)), sigma_matrix(1, Rational(-1))));
}

TEST_CASE("elimination pins a = -1 and an eight-element family") {
  const auto r = elimination_solve();
  CHECK(r.a == Rational(-1));
  CHECK(r.family_size == 8);
  REQUIRE(r.relations.size() == 1);
  CHECK_FALSE(r.steps.empty());
  CHECK(family_matches_sigma(r));

  // Independent count: roots of unity satisfying the relation.
  const auto rel = r.relations[0].univariate(kC33);
  int roots = 0;
  for (int k = 0; k < 8; ++k) {
    const C w = std::polar(1.0, 2 * 3.14159265358979323846 * k / 8);
    if (std::abs(horner(rel, w)) < 1e-9) ++roots;
  }
  CHECK(roots == 8);

  // Each member, evaluated numerically, maps the curve to itself.
  std::mt19937_64 rng(5);
  for (int k = 0; k < 8; ++k) {
    const C w = std::polar(1.0, 2 * 3.14159265358979323846 * k / 8);
    std::array<std::array<C, 5>, 5> m{};
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m[i][j] = horner(r.entries[i][j].univariate(kC33), w);
    for (int s = 0; s < 10; ++s) CHECK(max_residual(C(-1), apply_numeric(m, sample_point(rng))) < 1e-9);
  }
}

TEST_CASE("automorphism counts and special points") {
  const auto cc = automorphism_count_crosscheck();
  CHECK(cc.group_side == 8);
  CHECK(cc.sigma_side == 8);
  CHECK(cc.agrees());
  const auto pts = special_point_checks();
  CHECK(pts.size() >= 4);
  for (const auto& p : pts) {
    CAPTURE(p.name);
    CHECK(p.on_model);
  }
}

TEST_CASE("projective equality") {
  const auto p = exact_point({1, 2, 0, 3, 4});
  const auto s = Cyc::monomial(kRootOrder, 3, Rational(2));
  const ProjPoint<Cyc> q{p[0] * s, p[1] * s, p[2] * s, p[3] * s, p[4] * s};
  CHECK(proj_equal(p, q));
  CHECK_FALSE(proj_equal(p, exact_point({1, 2, 0, 3, 5})));
  CHECK_FALSE(proj_equal(exact_point({0, 0, 0, 0, 0}), exact_point({0, 0, 0, 0, 0})));
}
