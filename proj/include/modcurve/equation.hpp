#pragma once

// Rotation numbers of the translation tau_n at cusps, the exponents they force,
// and assembly of the cyclic-cover equation y^p = prod (x - a_i)^(m_i) of X_q.

#include "modcurve/arith.hpp"
#include "modcurve/cusps.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modcurve::equation {

/// R(orbit_len, k): orbit length of the point and exponent of the root of unity
/// by which tau^orbit_len turns a local chart.
struct RotationNumber {
  std::int64_t orbit_len;
  std::int64_t k;

  friend bool operator==(const RotationNumber&, const RotationNumber&) = default;
};

/// Rotation number of tau_n at the class of c; q >= 5, n | q.
RotationNumber rotation_number(std::int64_t q, std::int64_t n, const cusps::Cusp& c);
/// The unique m in [1, p) with gcd(p, m) = orbit_len and k (m/orbit_len) = 1 mod p/orbit_len.
std::int64_t exponent_from_rotation(std::int64_t p, const RotationNumber& rot);
/// R(gcd(p, m), k) with k the inverse of m/gcd modulo p/gcd; 1 <= m < p.
RotationNumber rotation_from_exponent(std::int64_t p, std::int64_t m);

/// One factor (x - value)^m.  A branch without a value carries a symbolic label.
struct Branch {
  std::string label;
  std::optional<Rational> value;
  std::int64_t m;

  friend bool operator==(const Branch&, const Branch&) = default;
};

/// y^p = prod (x - a_i)^(m_i), with infinity exponent m_infinity so that the
/// total is divisible by p.
struct SemiHyperellipticEquation {
  std::int64_t p = 2;
  std::vector<Branch> finite;
  std::int64_t m_infinity = 0;

  /// Builds the equation, deriving m_infinity and checking the invariants.
  static SemiHyperellipticEquation make(std::int64_t p, std::vector<Branch> finite);

  /// Sorted finite exponents.
  std::vector<std::int64_t> exponents() const;
  /// Labels of branches that still have no value.
  std::vector<std::string> symbolic_labels() const;
  /// Fixed grammar, e.g. "y^8 = x^2*(x-1)*(x+1)"; factors in branch order.
  std::string to_string() const;

  friend bool operator==(const SemiHyperellipticEquation&, const SemiHyperellipticEquation&) = default;
};

struct BranchOrbit {
  cusps::CuspOrbit orbit;
  RotationNumber rotation;
  std::int64_t m;
};

struct EquationBuild {
  std::int64_t q;
  std::int64_t n;
  std::int64_t p;
  std::vector<BranchOrbit> orbits;  // in tau_orbits order
  SemiHyperellipticEquation equation;  // every branch finite and symbolic: a1, a2, ...
};

/// Requires q >= 5 and X_q^n of genus zero.
EquationBuild build_equation(std::int64_t q, std::int64_t n);

/// Which branch orbits go to infinity, 0 and 1.
struct Normalization {
  std::size_t to_infinity;
  std::size_t to_zero;
  std::size_t to_one;
};

enum class Convention {
  /// Largest exponent to infinity; an orbit with strictly largest gcd(p, m)
  /// among the rest to 0; everything else ascending by exponent.
  DistinguishedZero,
  /// Largest exponent to infinity, the rest ascending.
  Ascending,
  /// Smallest exponent to infinity, the rest ascending.
  MinInfinity,
};

Convention parse_convention(const std::string& name);
std::string to_string(Convention c);

Normalization choose_normalization(const EquationBuild& build, Convention convention);

/// Letter used for undetermined constants at level q.
std::string default_label_prefix(std::int64_t q);

/// Sends the chosen orbits to infinity, 0 and 1.  The other orbits keep
/// symbolic labels prefix1, prefix2, ... (just prefix when only one is left),
/// ordered by exponent then orbit order.
SemiHyperellipticEquation normalize_equation(const EquationBuild& build, const Normalization& choice,
                                             const std::string& label_prefix);

/// Index into build.orbits of the orbit assigned to each finite branch of a
/// normalized equation, in branch order.
std::vector<std::size_t> normalized_branch_orbits(const EquationBuild& build, const Normalization& choice);

}  // namespace modcurve::equation
