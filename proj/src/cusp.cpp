#include "modcurve/cusp.hpp"

#include <optional>
#include <utility>

namespace modcurve::cusps {

Cusp::Cusp(BigInt x, BigInt z) : x_(std::move(x)), z_(std::move(z)) {
  if (arith::gcd<BigInt>(x_, z_) != 1) {
    throw DomainError("cusp " + x_.str() + "/" + z_.str() + " is not reduced");
  }
  if (z_ < 0 || (z_ == 0 && x_ < 0)) {
    x_ = -x_;
    z_ = -z_;
  }
}

Cusp Cusp::parse(const std::string& text) {
  if (text == "inf" || text == "oo" || text == "infinity") return infinity();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Cusp(BigInt(text), 1);
    return Cusp(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw DomainError("cannot parse cusp '" + text + "'");
  }
}

std::string Cusp::to_string() const { return x_.str() + "/" + z_.str(); }

CuspClass::CuspClass(std::int64_t q, std::int64_t x, std::int64_t z) : q_(q) {
  if (q < 1) throw DomainError("cusp class level must be >= 1");
  x = arith::mod<std::int64_t>(x, q);
  z = arith::mod<std::int64_t>(z, q);
  if (arith::gcd<std::int64_t>(arith::gcd<std::int64_t>(x, z), q) != 1) {
    throw DomainError("residue pair is not primitive modulo q");
  }
  std::int64_t nx = arith::mod<std::int64_t>(-x, q), nz = arith::mod<std::int64_t>(-z, q);
  if (std::pair(nx, nz) < std::pair(x, z)) {
    x = nx;
    z = nz;
  }
  x_ = x;
  z_ = z;
}

Cusp CuspClass::lift() const {
  std::optional<std::pair<std::int64_t, std::int64_t>> best;  // (z, x)
  for (int sign : {1, -1}) {
    std::int64_t u = arith::mod<std::int64_t>(sign * x_, q_);
    std::int64_t v = arith::mod<std::int64_t>(sign * z_, q_);
    std::int64_t z, x;
    if (v == 0 && u == arith::mod<std::int64_t>(1, q_)) {
      z = 0;
      x = 1;
    } else {
      z = v == 0 ? q_ : v;
      x = u;
      while (arith::gcd<std::int64_t>(x, z) != 1) x += q_;
    }
    if (!best || std::pair(z, x) < *best) best = std::pair(z, x);
  }
  return Cusp(best->second, best->first);
}

CuspClass cusp_canonical(std::int64_t q, const Cusp& c) {
  BigInt bq = q;
  return CuspClass(q, static_cast<std::int64_t>(arith::mod<BigInt>(c.x(), bq)),
                   static_cast<std::int64_t>(arith::mod<BigInt>(c.z(), bq)));
}

bool lift_less(const CuspClass& a, const CuspClass& b) {
  Cusp la = a.lift(), lb = b.lift();
  return std::pair(la.z(), la.x()) < std::pair(lb.z(), lb.x());
}

}  // namespace modcurve::cusps
