#pragma once

// Cyclic covers y^p = prod (x - a_i)^(m_i) of the projective line: fibers,
// genus, orders of monomial functions and differentials, holomorphic bases,
// lifting of Moebius maps, and a numeric check of explicit isomorphisms.

#include "modcurve/equation.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace modcurve::curve {

using Curve = equation::SemiHyperellipticEquation;
using Complex = std::complex<double>;

/// Points above one branch value: `points` points, each of ramification index `index`.
struct Fiber {
  std::string label;  // branch label or "inf"
  std::int64_t points;
  std::int64_t index;
};

/// One fiber per finite branch, then the fiber over infinity.
std::vector<Fiber> ramification_profile(const Curve& c);
BigInt curve_genus(const Curve& c);

/// prod (x - a_i)^(alpha_i) * y^(-gamma), times dx when `differential`.
struct Monomial {
  std::vector<std::int64_t> alpha;  // one entry per finite branch
  std::int64_t gamma = 0;
  bool differential = true;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// A point over a branch value (branch index, or infinity), with its sheet.
struct SheetPoint {
  std::optional<std::size_t> branch;  // nothing means infinity
  std::int64_t sheet = 0;

  friend bool operator==(const SheetPoint&, const SheetPoint&) = default;
};

std::int64_t differential_order(const Curve& c, const Monomial& f, const SheetPoint& pt);
/// Sum of orders over every point of every fiber (non-branch zeros and poles
/// of the alpha factors cancel, so only branch fibers contribute).
std::int64_t divisor_degree(const Curve& c, const Monomial& f);
/// e.g. "x*(x-1)/y^7 dx".
std::string to_string(const Curve& c, const Monomial& f);

/// Monomial holomorphic differentials, genus-many; throws if the search falls short.
std::vector<Monomial> holomorphic_basis(const Curve& c);

equation::RotationNumber rotation_at_branch(const Curve& c, std::size_t i);

/// Fractional-linear map x -> (a x + b)/(c x + d) with exact coefficients.
struct MoebiusMap {
  Rational a, b, c, d;

  static MoebiusMap identity() { return {1, 0, 0, 1}; }
  /// Image of a point of the projective line; nothing stands for infinity.
  std::optional<Rational> apply(const std::optional<Rational>& x) const;
  /// (this o other)(x) = this(other(x)).
  MoebiusMap compose(const MoebiusMap& other) const;
};

struct LiftCertificate {
  std::int64_t twist;
  /// Image of each branch point; index finite.size() stands for infinity.
  std::vector<std::size_t> permutation;
  std::string note;
};

/// The branch points as used by the lift criterion: finite branches, then
/// infinity when m_infinity > 0.  Requires every finite value to be exact.
std::vector<std::optional<Rational>> branch_points(const Curve& c);

/// A certificate when T permutes the branch points and some unit s mod p has
/// m_{T(b)} = s m_b for every branch point b; nothing otherwise.
std::optional<LiftCertificate> moebius_lift_check(const Curve& c, const MoebiusMap& t);
/// Whether s is a valid twist for T on c.
bool is_valid_twist(const Curve& c, const MoebiusMap& t, std::int64_t s);

/// Values of the single symbolic branch for which some Moebius map swapping
/// branch points `from` and `to` lifts.  Indices as in branch_points, with
/// the symbolic branch placed as if it had a value.
std::vector<Rational> solve_branch_constant(const Curve& family, std::size_t from, std::size_t to);

/// Replaces the symbolic branch with the given value.
Curve assign_constant(const Curve& family, const Rational& value);

/// A curve y^p = f(x) for floating evaluation.
struct NumericCurve {
  std::int64_t p;
  std::function<Complex(Complex)> rhs;
  std::vector<Complex> branch_values;
};

NumericCurve numeric_curve(const Curve& c);

using PointMap = std::function<std::pair<Complex, Complex>(Complex, Complex)>;

struct IsoReport {
  std::size_t samples = 0;  // points tested (x samples times sheets)
  double max_residual = 0;  // relative residual of the target equation
  double max_roundtrip = 0;  // |inverse(forward(P)) - P|, when an inverse is given
};

/// Samples x away from the branch values, takes every y over it, pushes the
/// point through `forward` and measures the target equation.
IsoReport verify_isomorphism_numeric(const NumericCurve& source, const NumericCurve& target,
                                     const PointMap& forward, const std::optional<PointMap>& inverse,
                                     std::size_t x_samples, std::mt19937_64& rng);

/// The explicit isomorphism between y^8 = x^2(x-1)(x+1) and
/// y^4 = x(x-1)(x+1)(x^2+1)^2, with its inverse.
std::pair<PointMap, PointMap> octic_to_quartic_maps();
NumericCurve quartic_model();

/// (x, y) -> (x, zeta_p y).
std::pair<Complex, Complex> deck_transform(const Curve& c, const std::pair<Complex, Complex>& pt);
/// Advances the sheet index within the fiber.
SheetPoint deck_transform(const Curve& c, const SheetPoint& pt);

}  // namespace modcurve::curve
