#include "modcurve/equation.hpp"

#include "modcurve/genus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace modcurve::equation {

RotationNumber rotation_number(std::int64_t q, std::int64_t n, const cusps::Cusp& c) {
  if (q < 5) throw DomainError("rotation_number requires q >= 5");
  if (n < 1 || q % n != 0) throw DomainError(std::to_string(n) + " does not divide " + std::to_string(q));
  const std::int64_t p = q / n;
  const BigInt bp = p;
  const BigInt g = arith::gcd<BigInt>(bp, c.z());
  // x w - y z = 1; w is fixed mod z and gcd(p, z) divides z, so any choice works.
  const BigInt w = arith::ext_gcd<BigInt>(c.x(), c.z()).u;
  const BigInt k = arith::mod<BigInt>(w * w, g);
  return {static_cast<std::int64_t>(bp / g), static_cast<std::int64_t>(k)};
}

std::int64_t exponent_from_rotation(std::int64_t p, const RotationNumber& rot) {
  const std::int64_t n = rot.orbit_len;
  if (n < 1 || p % n != 0 || n >= p) {
    throw DomainError("exponent_from_rotation: orbit length must be a proper divisor of p");
  }
  if (arith::gcd(rot.k, p / n) != 1) {
    throw DomainError("exponent_from_rotation: no exponent realizes this rotation number");
  }
  return n * arith::solve_unit_congruence(rot.k, p / n);
}

RotationNumber rotation_from_exponent(std::int64_t p, std::int64_t m) {
  if (m < 1 || m >= p) throw DomainError("rotation_from_exponent requires 1 <= m < p");
  const std::int64_t g = arith::gcd(p, m);
  return {g, arith::solve_unit_congruence(m / g, p / g)};
}

SemiHyperellipticEquation SemiHyperellipticEquation::make(std::int64_t p, std::vector<Branch> finite) {
  if (p < 2) throw DomainError("degree p must be >= 2");
  std::int64_t total = 0;
  std::set<std::string> labels;
  std::set<Rational> values;
  for (const auto& b : finite) {
    if (b.m < 1 || b.m >= p) throw DomainError("branch exponents must lie in [1, p)");
    if (!labels.insert(b.label).second) throw DomainError("duplicate branch label " + b.label);
    if (b.value && !values.insert(*b.value).second) throw DomainError("duplicate branch value");
    total += b.m;
  }
  SemiHyperellipticEquation out;
  out.p = p;
  out.finite = std::move(finite);
  out.m_infinity = arith::mod<std::int64_t>(-total, p);
  return out;
}

std::vector<std::int64_t> SemiHyperellipticEquation::exponents() const {
  std::vector<std::int64_t> out;
  for (const auto& b : finite) out.push_back(b.m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> SemiHyperellipticEquation::symbolic_labels() const {
  std::vector<std::string> out;
  for (const auto& b : finite) {
    if (!b.value) out.push_back(b.label);
  }
  return out;
}

std::string SemiHyperellipticEquation::to_string() const {
  std::string rhs;
  for (const auto& b : finite) {
    std::string factor;
    if (!b.value) {
      factor = "(x-" + b.label + ")";
    } else if (*b.value == 0) {
      factor = "x";
    } else if (*b.value < 0) {
      factor = "(x+" + arith::to_string(Rational(-*b.value)) + ")";
    } else {
      factor = "(x-" + arith::to_string(*b.value) + ")";
    }
    if (b.m > 1) factor += "^" + std::to_string(b.m);
    if (!rhs.empty()) rhs += "*";
    rhs += factor;
  }
  return "y^" + std::to_string(p) + " = " + (rhs.empty() ? "1" : rhs);
}

EquationBuild build_equation(std::int64_t q, std::int64_t n) {
  if (q < 5) throw DomainError("build_equation requires q >= 5");
  if (genus::genus_qn(q, n) != 0) {
    throw DomainError("X_" + std::to_string(q) + "^" + std::to_string(n) + " has genus " +
                      genus::genus_qn(q, n).str() + ", not 0");
  }
  EquationBuild out{q, n, q / n, {}, {}};
  if (out.p < 2) throw DomainError("build_equation requires q/n >= 2");
  std::vector<Branch> branches;
  for (auto& orbit : cusps::tau_orbits(q, n)) {
    if (static_cast<std::int64_t>(orbit.size()) >= out.p) continue;
    auto rot = rotation_number(q, n, orbit.representative().lift());
    for (const auto& member : orbit.members) {
      if (!(rotation_number(q, n, member.lift()) == rot)) {
        throw DomainError("rotation number is not constant on an orbit");
      }
    }
    std::int64_t m = exponent_from_rotation(out.p, rot);
    branches.push_back({"a" + std::to_string(branches.size() + 1), std::nullopt, m});
    out.orbits.push_back({std::move(orbit), rot, m});
  }
  out.equation = SemiHyperellipticEquation::make(out.p, std::move(branches));
  if (out.equation.m_infinity != 0) throw DomainError("exponent sum is not divisible by p");
  return out;
}

Convention parse_convention(const std::string& name) {
  if (name == "distinguished-zero") return Convention::DistinguishedZero;
  if (name == "ascending") return Convention::Ascending;
  if (name == "min-infinity") return Convention::MinInfinity;
  throw DomainError("unknown normalization convention '" + name + "'");
}

std::string to_string(Convention c) {
  switch (c) {
    case Convention::DistinguishedZero: return "distinguished-zero";
    case Convention::Ascending: return "ascending";
    case Convention::MinInfinity: return "min-infinity";
  }
  return "";
}

namespace {

/// Indices ordered by (m, orbit order), excluding the given ones.
std::vector<std::size_t> ascending_rest(const EquationBuild& build, const std::set<std::size_t>& skip) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < build.orbits.size(); ++i) {
    if (!skip.count(i)) out.push_back(i);
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](std::size_t a, std::size_t b) { return build.orbits[a].m < build.orbits[b].m; });
  return out;
}

}  // namespace

Normalization choose_normalization(const EquationBuild& build, Convention convention) {
  const auto& orbits = build.orbits;
  if (orbits.size() < 3) throw DomainError("normalization needs at least 3 branch orbits");
  std::size_t inf = 0;
  for (std::size_t i = 1; i < orbits.size(); ++i) {
    bool better = convention == Convention::MinInfinity ? orbits[i].m < orbits[inf].m
                                                        : orbits[i].m > orbits[inf].m;
    if (better) inf = i;
  }
  auto rest = ascending_rest(build, {inf});
  if (convention == Convention::DistinguishedZero) {
    std::int64_t best = 0;
    std::size_t count = 0, zero = 0;
    for (auto i : rest) {
      std::int64_t g = arith::gcd(build.p, orbits[i].m);
      if (g > best) {
        best = g;
        count = 1;
        zero = i;
      } else if (g == best) {
        ++count;
      }
    }
    if (count == 1) {
      auto others = ascending_rest(build, {inf, zero});
      return {inf, zero, others.front()};
    }
  }
  return {inf, rest[0], rest[1]};
}

std::string default_label_prefix(std::int64_t q) {
  switch (q) {
    case 9: return "p";
    case 10: return "q";
    case 12: return "r";
    default: return "a";
  }
}

std::vector<std::size_t> normalized_branch_orbits(const EquationBuild& build, const Normalization& choice) {
  const std::size_t r = build.orbits.size();
  std::set<std::size_t> chosen{choice.to_infinity, choice.to_zero, choice.to_one};
  if (chosen.size() != 3 || *chosen.rbegin() >= r) {
    throw DomainError("normalization needs three distinct branch orbits");
  }
  std::vector<std::size_t> out{choice.to_zero, choice.to_one};
  for (auto i : ascending_rest(build, chosen)) out.push_back(i);
  return out;
}

SemiHyperellipticEquation normalize_equation(const EquationBuild& build, const Normalization& choice,
                                             const std::string& label_prefix) {
  auto order = normalized_branch_orbits(build, choice);
  std::vector<Branch> branches;
  branches.push_back({"0", Rational(0), build.orbits[order[0]].m});
  branches.push_back({"1", Rational(1), build.orbits[order[1]].m});
  const std::size_t free = order.size() - 2;
  for (std::size_t k = 0; k < free; ++k) {
    std::string label = free == 1 ? label_prefix : label_prefix + std::to_string(k + 1);
    branches.push_back({label, std::nullopt, build.orbits[order[k + 2]].m});
  }
  auto out = SemiHyperellipticEquation::make(build.p, std::move(branches));
  if (out.m_infinity != build.orbits[choice.to_infinity].m) {
    throw DomainError("normalized infinity exponent does not match the chosen orbit");
  }
  return out;
}

}  // namespace modcurve::equation
