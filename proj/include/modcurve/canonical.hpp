#pragma once

// The canonical model of y^8 = x^2(x-1)(x-a) in P^4 as an intersection of
// three quadrics, its special points, the automorphisms swapping (1,0) and
// (a,0), and the elimination that pins a.

#include "modcurve/cyclotomic.hpp"
#include "modcurve/polynomial.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace modcurve::canonical {

/// Q[t]/(t^8 - 1): t plays the primitive 8th root of unity.
using Cyc = Cyclotomic<Rational>;
inline constexpr std::size_t kRootOrder = 8;

template <class R>
using ProjPoint = std::array<R, 5>;

/// Residuals of z3^2 - z2 z5, z2^2 - z1 (z4 + z5), z1^2 - z4 (z4 - (a - 1) z5).
template <class R>
std::array<R, 3> quadric_residuals(const R& a, const ProjPoint<R>& z) {
  return {z[2] * z[2] - z[1] * z[4], z[1] * z[1] - z[0] * (z[3] + z[4]),
          z[0] * z[0] - z[3] * (z[3] - a * z[4] + z[4])};
}

template <class R>
bool on_model(const R& a, const ProjPoint<R>& z) {
  for (const auto& r : quadric_residuals(a, z)) {
    if (!(r == a - a)) return false;
  }
  return true;
}

/// [1/y^3, x/y^5, x/y^6, x(x-1)/y^7, x/y^7]; y must be nonzero.
template <class R>
ProjPoint<R> embed_point(const R& x, const R& y) {
  if (y == y - y) throw DomainError("embed_point: y = 0, use the special-point images");
  R y3 = y * y * y, y5 = y3 * y * y, y6 = y5 * y, y7 = y6 * y;
  R one = y / y;
  return {one / y3, x / y5, x / y6, x * (x - one) / y7, x / y7};
}

/// p ~ q: both nonzero and all 2x2 minors vanish.
template <class R>
bool proj_equal(const ProjPoint<R>& p, const ProjPoint<R>& q) {
  const R zero = p[0] - p[0];
  bool p_zero = true, q_zero = true;
  for (std::size_t i = 0; i < 5; ++i) {
    p_zero = p_zero && p[i] == zero;
    q_zero = q_zero && q[i] == zero;
  }
  if (p_zero || q_zero) return false;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (!(p[i] * q[j] - p[j] * q[i] == zero)) return false;
    }
  }
  return true;
}

using Matrix5 = std::array<std::array<Cyc, 5>, 5>;

/// diag(-t^(4j), t^(2j), t^j) with the block (-1, a - 1; 0, 1) on z4, z5.
Matrix5 sigma_matrix(std::int64_t j, const Rational& a);
/// diag(t^4, t^2, t, 1, 1): the deck map (x, y) -> (x, t y) in these coordinates, up to scale.
Matrix5 deck_matrix();

Matrix5 multiply(const Matrix5& x, const Matrix5& y);
ProjPoint<Cyc> apply(const Matrix5& m, const ProjPoint<Cyc>& z);
ProjPoint<Cyc> exact_point(const std::array<Rational, 5>& z);
/// Scalar multiples of one another as linear maps.
bool proportional(const Matrix5& x, const Matrix5& y);

/// Each pulled-back quadric lies in the span of the three quadrics.
bool preserves_ideal(const Matrix5& m, const Rational& a);
bool sigma_preserves_ideal(const Rational& a, std::int64_t j);

struct EliminationStep {
  std::string name;
  std::vector<std::string> derived;  // e.g. "c_2_3 = 0"
};

struct EliminationResult {
  Rational a;
  /// Entries c_ij (row-major) as polynomials in the one free entry c_3_3.
  std::array<std::array<MPoly, 5>, 5> entries;
  /// Relations left on c_3_3 after every step.
  std::vector<MPoly> relations;
  std::vector<EliminationStep> steps;
  /// Number of 8th roots of unity satisfying the relations.
  std::size_t family_size = 0;

  std::string entry_string(std::size_t i, std::size_t j) const;
  std::string relation_string(std::size_t k) const;
};

EliminationResult elimination_solve();

/// Whether the solved family equals sigma_matrix(j, -1) for every j.
bool family_matches_sigma(const EliminationResult& r);

/// Number of PSL(2, Z/8) elements taking [inf] to [3/8] against the number of
/// valid sigma matrices at a = -1; true when both are 8.
struct CountCheck {
  std::size_t group_side;
  std::size_t sigma_side;
  bool agrees() const { return group_side == sigma_side && group_side == 8; }
};
CountCheck automorphism_count_crosscheck();

/// Exact membership of the special-point images for symbolic a.
struct SpecialPointCheck {
  std::string name;
  bool on_model;
};
std::vector<SpecialPointCheck> special_point_checks();

}  // namespace modcurve::canonical
