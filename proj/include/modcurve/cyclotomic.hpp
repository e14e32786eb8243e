#pragma once

// Elements of R[t]/(t^d - 1) over a coefficient ring R.  Only ring equality is
// ever needed, so no reduction by the cyclotomic polynomial happens.

#include "modcurve/arith.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace modcurve {

template <class Coeff>
class Cyclotomic {
 public:
  explicit Cyclotomic(std::size_t d) : coeffs_(check_modulus(d), Coeff(0)) {}
  Cyclotomic(std::size_t d, const Coeff& constant) : Cyclotomic(d) { coeffs_[0] = constant; }

  /// c * t^j, exponent taken mod d.
  static Cyclotomic monomial(std::size_t d, std::int64_t j, const Coeff& c = Coeff(1)) {
    Cyclotomic out(d);
    out.coeffs_[static_cast<std::size_t>(arith::mod<std::int64_t>(j, static_cast<std::int64_t>(d)))] = c;
    return out;
  }

  std::size_t modulus() const { return coeffs_.size(); }
  const Coeff& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!(c == Coeff(0))) return false;
    }
    return true;
  }

  Cyclotomic operator-() const {
    Cyclotomic out(modulus());
    for (std::size_t i = 0; i < modulus(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    same_modulus(o);
    for (std::size_t i = 0; i < modulus(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    same_modulus(o);
    for (std::size_t i = 0; i < modulus(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
  friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
    x.same_modulus(y);
    const std::size_t d = x.modulus();
    Cyclotomic out(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (x.coeffs_[i] == Coeff(0)) continue;
      for (std::size_t j = 0; j < d; ++j) {
        out.coeffs_[(i + j) % d] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    return out;
  }

  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
    x.same_modulus(y);
    return x.coeffs_ == y.coeffs_;
  }

  Cyclotomic pow(unsigned e) const {
    Cyclotomic out(modulus(), Coeff(1));
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
  }

 private:
  static std::size_t check_modulus(std::size_t d) {
    if (d < 1) throw DomainError("cyclotomic modulus must be >= 1");
    return d;
  }
  void same_modulus(const Cyclotomic& o) const {
    if (modulus() != o.modulus()) throw DomainError("cyclotomic modulus mismatch");
  }

  std::vector<Coeff> coeffs_;
};

using CyclotomicElement = Cyclotomic<BigInt>;

inline CyclotomicElement cyclo_mul(const CyclotomicElement& x, const CyclotomicElement& y) { return x * y; }
inline bool cyclo_eq(const CyclotomicElement& x, const CyclotomicElement& y) { return x == y; }

/// Human-readable form such as "1 + 2*t^3".
template <class Coeff>
std::string to_string(const Cyclotomic<Coeff>& x) {
  std::string out;
  for (std::size_t i = 0; i < x.modulus(); ++i) {
    if (x[i] == Coeff(0)) continue;
    if (!out.empty()) out += " + ";
    std::string c = arith::to_string(x[i]);
    if (i == 0) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace modcurve
