#include "modcurve/modular_group.hpp"

#include <algorithm>
#include <set>

namespace modcurve::group {

namespace {

void check_guard(std::int64_t q) {
  if (q < 2 || q > kEnumerationLimit) {
    throw DomainError("level " + std::to_string(q) + " outside enumeration range [2, " +
                      std::to_string(kEnumerationLimit) + "]");
  }
}

void check_divisor(std::int64_t q, std::int64_t n) {
  if (n < 1 || q % n != 0) {
    throw DomainError(std::to_string(n) + " does not divide " + std::to_string(q));
  }
}

}  // namespace

IntMatrix IntMatrix::inverse() const {
  if (det() != 1) throw DomainError("inverse: determinant is not 1");
  return {d, -b, -c, a};
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

std::string IntMatrix::to_string() const {
  return "(" + a.str() + " " + b.str() + "; " + c.str() + " " + d.str() + ")";
}

MatModQ::MatModQ(std::int64_t q, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : q_(q) {
  if (q < 2) throw DomainError("matrix modulus must be >= 2");
  a_ = arith::mod(a, q);
  b_ = arith::mod(b, q);
  c_ = arith::mod(c, q);
  d_ = arith::mod(d, q);
  if (arith::mod(a_ * d_ - b_ * c_, q) != 1) throw DomainError("determinant is not 1 mod q");
}

MatModQ MatModQ::reduce(std::int64_t q, const IntMatrix& m) {
  BigInt bq = q;
  auto r = [&](const BigInt& v) { return static_cast<std::int64_t>(arith::mod<BigInt>(v, bq)); };
  return MatModQ(q, r(m.a), r(m.b), r(m.c), r(m.d));
}

MatModQ operator*(const MatModQ& x, const MatModQ& y) {
  if (x.q_ != y.q_) throw DomainError("modulus mismatch");
  return MatModQ(x.q_, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                 x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

std::string MatModQ::to_string() const {
  return "(" + std::to_string(a_) + " " + std::to_string(b_) + "; " + std::to_string(c_) + " " +
         std::to_string(d_) + ") mod " + std::to_string(q_);
}

GroupElement::GroupElement(const MatModQ& m) : rep_(std::min(m, -m)) {}

std::vector<GroupElement> enumerate_psl(std::int64_t q) {
  check_guard(q);
  std::set<GroupElement> seen;
  for (std::int64_t a = 0; a < q; ++a) {
    for (std::int64_t b = 0; b < q; ++b) {
      for (std::int64_t c = 0; c < q; ++c) {
        for (std::int64_t d = 0; d < q; ++d) {
          if (arith::mod(a * d - b * c, q) == 1) seen.insert(GroupElement(MatModQ(q, a, b, c, d)));
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

BigInt r_formula(std::int64_t q) {
  if (q < 3) throw DomainError("r_formula requires q >= 3");
  Rational q3 = Rational(BigInt(q) * q * q);
  return arith::to_integer(q3 / 2 * arith::prime_density(q), "R_q");
}

BigInt r_n_formula(std::int64_t q, std::int64_t n) {
  if (q < 3) throw DomainError("r_n_formula requires q >= 3");
  check_divisor(q, n);
  Rational v = Rational(BigInt(n) * q * q);
  return arith::to_integer(v / 2 * arith::prime_density(q), "R_q^n");
}

std::int64_t element_order(const GroupElement& g) {
  const auto id = GroupElement::identity(g.modulus());
  GroupElement acc = g;
  std::int64_t m = 1;
  while (!(acc == id)) {
    acc = acc * g;
    ++m;
  }
  return m;
}

LevelType type_classify(std::int64_t q) {
  if (q < 2) throw DomainError("type_classify requires q >= 2");
  return (q % 4 == 2 && q % 3 != 0) ? LevelType::TypeI : LevelType::TypeII;
}

std::string to_string(LevelType t) { return t == LevelType::TypeI ? "I" : "II"; }

std::int64_t max_order_formula(std::int64_t q) {
  return type_classify(q) == LevelType::TypeI ? 3 * q / 2 : q;
}

std::int64_t max_element_order(std::int64_t q) {
  std::int64_t best = 1;
  for (const auto& g : enumerate_psl(q)) best = std::max(best, element_order(g));
  return best;
}

std::vector<GroupElement> center(std::int64_t q) {
  auto all = enumerate_psl(q);
  std::vector<GroupElement> out;
  for (const auto& g : all) {
    bool central = std::all_of(all.begin(), all.end(), [&](const GroupElement& h) { return g * h == h * g; });
    if (central) out.push_back(g);
  }
  return out;
}

bool gamma_qn_member(const IntMatrix& m, std::int64_t q, std::int64_t n) {
  if (m.det() != 1) throw DomainError("gamma_qn_member: determinant is not 1");
  check_divisor(q, n);
  BigInt bq = q, bn = n;
  return arith::mod<BigInt>(m.a - 1, bq) == 0 && arith::mod<BigInt>(m.d - 1, bq) == 0 &&
         arith::mod<BigInt>(m.c, bq) == 0 && arith::mod<BigInt>(m.b, bn) == 0;
}

cusps::Cusp cusp_action(const IntMatrix& m, const cusps::Cusp& c) {
  BigInt x = m.a * c.x() + m.b * c.z();
  BigInt z = m.c * c.x() + m.d * c.z();
  BigInt g = arith::gcd<BigInt>(x, z);
  if (g == 0) throw DomainError("cusp_action: singular matrix");
  return cusps::Cusp(x / g, z / g);
}

cusps::CuspClass cusp_action(const GroupElement& g, const cusps::CuspClass& c) {
  const auto& m = g.rep();
  if (m.modulus() != c.level()) throw DomainError("cusp_action: level mismatch");
  return cusps::CuspClass(c.level(), m.a() * c.x() + m.b() * c.z(), m.c() * c.x() + m.d() * c.z());
}

cusps::Cusp cusp_action(const GroupElement& g, const cusps::Cusp& c) {
  return cusp_action(g, cusps::cusp_canonical(g.modulus(), c)).lift();
}

std::vector<GroupElement> maps_between_cusps(std::int64_t q, const cusps::CuspClass& c1,
                                             const cusps::CuspClass& c2) {
  std::vector<GroupElement> out;
  for (const auto& g : enumerate_psl(q)) {
    if (cusp_action(g, c1) == c2) out.push_back(g);
  }
  return out;
}

}  // namespace modcurve::group
