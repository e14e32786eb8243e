#pragma once

// Cusps x/z of the extended rational line and their classes modulo Gamma(q).

#include "modcurve/arith.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace modcurve::cusps {

/// Reduced x/z with z >= 0; infinity is stored as 1/0.
class Cusp {
 public:
  Cusp() : x_(1), z_(0) {}
  /// Normalizes the sign; throws unless gcd(x, z) = 1.
  Cusp(BigInt x, BigInt z);

  static Cusp infinity() { return Cusp(); }
  /// Accepts "inf", "x/z" (optional sign) or a bare integer.
  static Cusp parse(const std::string& text);

  const BigInt& x() const { return x_; }
  const BigInt& z() const { return z_; }
  bool is_infinity() const { return z_ == 0; }

  /// "1/0" for infinity, otherwise "x/z".
  std::string to_string() const;

  friend bool operator==(const Cusp&, const Cusp&) = default;

 private:
  BigInt x_;
  BigInt z_;
};

/// A Gamma(q) class, stored as the lexicographically smaller of +-(x, z) mod q.
class CuspClass {
 public:
  /// Throws unless gcd(x, z, q) = 1 and q >= 1.
  CuspClass(std::int64_t q, std::int64_t x, std::int64_t z);

  std::int64_t level() const { return q_; }
  std::int64_t x() const { return x_; }
  std::int64_t z() const { return z_; }

  /// Smallest coprime representative: least z in [0, q] (z = 0 only for 1/0),
  /// then least x >= 0, over both signs.
  Cusp lift() const;
  std::string to_string() const { return lift().to_string(); }

  friend bool operator==(const CuspClass&, const CuspClass&) = default;
  friend auto operator<=>(const CuspClass&, const CuspClass&) = default;

 private:
  std::int64_t q_, x_, z_;
};

CuspClass cusp_canonical(std::int64_t q, const Cusp& c);

/// Orders classes by their lifted representative: (z, x).
bool lift_less(const CuspClass& a, const CuspClass& b);

}  // namespace modcurve::cusps
