#pragma once

// Cusp sets of Gamma(q) and Gamma_q^n: enumeration, translation orbits,
// widths and width distributions.

#include "modcurve/cusp.hpp"
#include "modcurve/modular_group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace modcurve::cusps {

/// Largest level for which cusp classes are enumerated.
inline constexpr std::int64_t kCuspEnumerationLimit = 60;

/// gamma in Gamma(q) up to sign with gamma(c1) = c2, or nothing if the classes differ.
std::optional<group::IntMatrix> find_equivalence_witness(std::int64_t q, const Cusp& c1, const Cusp& c2);

/// All classes of Gamma(q), sorted by lifted representative; 3 <= q <= 60.
std::vector<CuspClass> enumerate_cusps(std::int64_t q);
/// h_q = q^2/2 prod (1 - 1/l^2), q >= 3.
BigInt h_formula(std::int64_t q);
/// h_q^n = n q N(q/n)/2 prod (1 - 1/l^2), q >= 5.
BigInt h_n_formula(std::int64_t q, std::int64_t n);

/// An orbit of translation by n on the classes of Gamma(q).
struct CuspOrbit {
  std::int64_t q;
  std::int64_t n;
  std::vector<CuspClass> members;  // sorted by lifted representative

  const CuspClass& representative() const { return members.front(); }
  std::size_t size() const { return members.size(); }
};

/// Orbits sorted by (size, representative z, representative x).
std::vector<CuspOrbit> tau_orbits(std::int64_t q, std::int64_t n);

/// Width in Gamma_q^n: q / gcd(q/n, z) for q >= 5, the congruence scan below that.
std::int64_t width(std::int64_t q, std::int64_t n, const Cusp& c);
/// Least R >= 1 whose conjugated translation lies in Gamma_q^n up to sign.
std::int64_t width_bruteforce(std::int64_t q, std::int64_t n, const Cusp& c);

/// Closed-form count of orbits by width; q >= 5.
std::map<std::int64_t, BigInt> width_distribution(std::int64_t q, std::int64_t n);
/// The same counts read off the enumerated orbits.
std::map<std::int64_t, BigInt> width_distribution_direct(std::int64_t q, std::int64_t n);

/// (q/n) * width of the orbit equals the summed Gamma(q) widths of its members.
bool lemma_width_check(std::int64_t q, std::int64_t n, const CuspOrbit& orbit);

}  // namespace modcurve::cusps
