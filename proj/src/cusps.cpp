#include "modcurve/cusps.hpp"

#include <algorithm>
#include <set>

namespace modcurve::cusps {

namespace {

void check_divisor(std::int64_t q, std::int64_t n) {
  if (n < 1 || q % n != 0) {
    throw DomainError(std::to_string(n) + " does not divide " + std::to_string(q));
  }
}

/// (x u; z v) with determinant one.
group::IntMatrix complete(const Cusp& c) {
  auto e = arith::ext_gcd<BigInt>(c.x(), c.z());  // x*s + z*t = 1
  return {c.x(), -e.v, c.z(), e.u};
}

bool is_identity_mod(const group::IntMatrix& m, const BigInt& q) {
  return arith::mod<BigInt>(m.a - 1, q) == 0 && arith::mod<BigInt>(m.b, q) == 0 &&
         arith::mod<BigInt>(m.c, q) == 0 && arith::mod<BigInt>(m.d - 1, q) == 0;
}

}  // namespace

std::optional<group::IntMatrix> find_equivalence_witness(std::int64_t q, const Cusp& c1, const Cusp& c2) {
  if (q < 1) throw DomainError("level must be >= 1");
  const BigInt bq = q;
  const auto a_inv = complete(c1).inverse();
  const auto a2 = complete(c2);
  for (std::int64_t j = 0; j < q; ++j) {
    group::IntMatrix t{1, j, 0, 1};
    auto gamma = a2 * t * a_inv;
    if (is_identity_mod(gamma, bq)) return gamma;
    if (is_identity_mod(-gamma, bq)) return -gamma;
  }
  return std::nullopt;
}

std::vector<CuspClass> enumerate_cusps(std::int64_t q) {
  if (q < 3 || q > kCuspEnumerationLimit) {
    throw DomainError("level " + std::to_string(q) + " outside cusp enumeration range [3, " +
                      std::to_string(kCuspEnumerationLimit) + "]");
  }
  std::set<CuspClass> seen;
  for (std::int64_t x = 0; x < q; ++x) {
    for (std::int64_t z = 0; z < q; ++z) {
      if (arith::gcd(arith::gcd(x, z), q) == 1) seen.insert(CuspClass(q, x, z));
    }
  }
  std::vector<CuspClass> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), lift_less);
  return out;
}

BigInt h_formula(std::int64_t q) {
  if (q < 3) throw DomainError("h_formula requires q >= 3");
  return arith::to_integer(arith::frac(BigInt(q) * q, 2) * arith::prime_density(q), "h_q");
}

BigInt h_n_formula(std::int64_t q, std::int64_t n) {
  if (q < 5) throw DomainError("h_n_formula requires q >= 5");
  check_divisor(q, n);
  Rational v = arith::frac(BigInt(n) * q, 2) * arith::mult_N(q / n) * arith::prime_density(q);
  return arith::to_integer(v, "h_q^n");
}

std::vector<CuspOrbit> tau_orbits(std::int64_t q, std::int64_t n) {
  check_divisor(q, n);
  std::set<CuspClass> done;
  std::vector<CuspOrbit> out;
  for (const auto& c : enumerate_cusps(q)) {
    if (done.count(c)) continue;
    CuspOrbit orbit{q, n, {}};
    CuspClass cur = c;
    while (!done.count(cur)) {
      done.insert(cur);
      orbit.members.push_back(cur);
      cur = CuspClass(q, cur.x() + n * cur.z(), cur.z());
    }
    std::sort(orbit.members.begin(), orbit.members.end(), lift_less);
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(), [](const CuspOrbit& a, const CuspOrbit& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lift_less(a.representative(), b.representative());
  });
  return out;
}

std::int64_t width(std::int64_t q, std::int64_t n, const Cusp& c) {
  check_divisor(q, n);
  if (q <= 4) return width_bruteforce(q, n, c);
  const std::int64_t p = q / n;
  // gcd(p, 0) = p, so infinity gets width n.
  auto g = static_cast<std::int64_t>(arith::gcd<BigInt>(p, c.z()));
  return q / g;
}

std::int64_t width_bruteforce(std::int64_t q, std::int64_t n, const Cusp& c) {
  check_divisor(q, n);
  const BigInt bq = q, bn = n;
  const BigInt xz = c.x() * c.z(), zz = c.z() * c.z(), xx = c.x() * c.x();
  for (std::int64_t r = 1; r <= q; ++r) {
    const BigInt rxz = r * xz;
    bool common = arith::mod<BigInt>(r * zz, bq) == 0 && arith::mod<BigInt>(r * xx, bn) == 0;
    if (!common) continue;
    if (arith::mod<BigInt>(rxz, bq) == 0) return r;
    if (arith::mod<BigInt>(rxz - 2, bq) == 0 && arith::mod<BigInt>(rxz + 2, bq) == 0) return r;
  }
  throw DomainError("width scan exhausted");  // unreachable: r = q always qualifies
}

std::map<std::int64_t, BigInt> width_distribution(std::int64_t q, std::int64_t n) {
  if (q < 5) throw DomainError("width_distribution requires q >= 5");
  check_divisor(q, n);
  const std::int64_t p = q / n;
  const Rational base = arith::frac(h_formula(q), p);
  std::map<std::int64_t, Rational> acc{{n, base}};
  for (const auto& f : arith::Factorization(p).factors()) {
    std::map<std::int64_t, Rational> next;
    for (const auto& [w, count] : acc) {
      std::int64_t pj = 1;
      for (int j = 0; j <= f.exponent; ++j) {
        next[w * pj] += count * arith::n3(f.prime, f.exponent, j);
        pj *= f.prime;
      }
    }
    acc = std::move(next);
  }
  std::map<std::int64_t, BigInt> out;
  for (const auto& [w, count] : acc) out[w] = arith::to_integer(count, "width count");
  return out;
}

std::map<std::int64_t, BigInt> width_distribution_direct(std::int64_t q, std::int64_t n) {
  std::map<std::int64_t, BigInt> out;
  for (const auto& orbit : tau_orbits(q, n)) out[width(q, n, orbit.representative().lift())] += 1;
  return out;
}

bool lemma_width_check(std::int64_t q, std::int64_t n, const CuspOrbit& orbit) {
  check_divisor(q, n);
  const std::int64_t lhs = (q / n) * width(q, n, orbit.representative().lift());
  std::int64_t rhs = 0;
  for (std::size_t i = 0; i < orbit.size(); ++i) rhs += q;  // every Gamma(q) width is q
  return lhs == rhs;
}

}  // namespace modcurve::cusps
