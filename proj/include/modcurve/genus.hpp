#pragma once

// Genus formulas for X_q, X_q^n and the type I quotient, plus the
// Euler-characteristic and Hurwitz relations used to cross-check them.

#include "modcurve/arith.hpp"

#include <cstdint>
#include <vector>

namespace modcurve::genus {

/// 1 + (q - 6) q^2/24 prod (1 - 1/l^2); 0 for q in {1, 2}.
BigInt genus_q(std::int64_t q);
/// 1 + (q - 6 N(q/n)) n q/24 prod (1 - 1/l^2), q >= 5.
BigInt genus_qn(std::int64_t q, std::int64_t n);
/// 1 - h/2 + R/12; throws when the result is fractional or negative.
BigInt euler_genus(const BigInt& h, const BigInt& r);
/// Genus of X_{2p} modulo the order-3 subgroup, for type I q = 2p >= 10.
BigInt genus_prime_quotient(std::int64_t q);
/// N (2 g_bar - 2 + sum (1 - 1/m_i)), which equals 2g - 2 of the cover.
BigInt hurwitz_deficiency(const BigInt& n, const BigInt& g_bar, const std::vector<std::int64_t>& orders);
/// Some X_q^n (n | q, n = q included) has genus zero.
bool is_semihyperelliptic_level(std::int64_t q);

struct GenusReport {
  std::int64_t q;
  std::int64_t n;
  BigInt h;
  BigInt r;
  BigInt g;
};

/// Cusp count, index and genus of X_q^n from the closed forms; q >= 5.
GenusReport genus_report(std::int64_t q, std::int64_t n);

}  // namespace modcurve::genus
