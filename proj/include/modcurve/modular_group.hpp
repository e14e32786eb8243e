#pragma once

// SL(2, Z/q) and PSL(2, Z/q) by enumeration, integer matrices for the groups
// Gamma(q) and Gamma_q^n, and the action of both on cusps.

#include "modcurve/arith.hpp"
#include "modcurve/cusp.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace modcurve::group {

/// Largest level for which PSL(2, Z/q) is enumerated.
inline constexpr std::int64_t kEnumerationLimit = 40;

/// Integer 2x2 matrix (a b; c d).
struct IntMatrix {
  BigInt a, b, c, d;

  static IntMatrix identity() { return {1, 0, 0, 1}; }
  BigInt det() const { return a * d - b * c; }
  /// Inverse of a determinant-one matrix.
  IntMatrix inverse() const;
  IntMatrix operator-() const { return {-a, -b, -c, -d}; }
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  std::string to_string() const;
};

/// Determinant-one matrix with entries reduced to [0, q).
class MatModQ {
 public:
  /// Reduces the entries; throws if q < 2 or ad - bc != 1 mod q.
  MatModQ(std::int64_t q, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static MatModQ identity(std::int64_t q) { return MatModQ(q, 1, 0, 0, 1); }
  static MatModQ reduce(std::int64_t q, const IntMatrix& m);

  std::int64_t modulus() const { return q_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

  MatModQ operator-() const { return MatModQ(q_, -a_, -b_, -c_, -d_); }
  friend MatModQ operator*(const MatModQ& x, const MatModQ& y);
  friend bool operator==(const MatModQ&, const MatModQ&) = default;
  friend auto operator<=>(const MatModQ&, const MatModQ&) = default;
  std::string to_string() const;

 private:
  std::int64_t q_, a_, b_, c_, d_;
};

/// Element of PSL(2, Z/q): the lexicographically smaller of M and -M.
class GroupElement {
 public:
  explicit GroupElement(const MatModQ& m);
  static GroupElement identity(std::int64_t q) { return GroupElement(MatModQ::identity(q)); }

  const MatModQ& rep() const { return rep_; }
  std::int64_t modulus() const { return rep_.modulus(); }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return GroupElement(x.rep_ * y.rep_);
  }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  std::string to_string() const { return rep_.to_string(); }

 private:
  MatModQ rep_;
};

/// All of PSL(2, Z/q), sorted; 2 <= q <= kEnumerationLimit.
std::vector<GroupElement> enumerate_psl(std::int64_t q);

/// |PSL(2, Z/q)| = q^3/2 prod (1 - 1/l^2), q >= 3.
BigInt r_formula(std::int64_t q);
/// Index of Gamma_q^n: n q^2/2 prod (1 - 1/l^2), q >= 3, n | q.
BigInt r_n_formula(std::int64_t q, std::int64_t n);

std::int64_t element_order(const GroupElement& g);

enum class LevelType { TypeI, TypeII };
LevelType type_classify(std::int64_t q);
std::string to_string(LevelType t);
/// Closed form: 3q/2 for type I, q for type II.
std::int64_t max_order_formula(std::int64_t q);
/// Maximum of element_order over the enumerated group.
std::int64_t max_element_order(std::int64_t q);

std::vector<GroupElement> center(std::int64_t q);

/// a = d = 1, c = 0 mod q and b = 0 mod n; throws if det != 1 or n does not divide q.
bool gamma_qn_member(const IntMatrix& m, std::int64_t q, std::int64_t n);

/// Exact fractional-linear action on a cusp.
cusps::Cusp cusp_action(const IntMatrix& m, const cusps::Cusp& c);
/// Action mod q; the image is returned as the lifted representative of its class.
cusps::Cusp cusp_action(const GroupElement& g, const cusps::Cusp& c);
cusps::CuspClass cusp_action(const GroupElement& g, const cusps::CuspClass& c);

/// Every element of PSL(2, Z/q) carrying class c1 to class c2.
std::vector<GroupElement> maps_between_cusps(std::int64_t q, const cusps::CuspClass& c1,
                                             const cusps::CuspClass& c2);

}  // namespace modcurve::group
