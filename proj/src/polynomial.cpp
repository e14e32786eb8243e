#include "modcurve/polynomial.hpp"

#include <algorithm>

namespace modcurve {

namespace {

void trim(MPoly::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

MPoly::Monomial product(const MPoly::Monomial& x, const MPoly::Monomial& y) {
  MPoly::Monomial out(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

unsigned exponent(const MPoly::Monomial& m, std::size_t v) { return v < m.size() ? m[v] : 0; }

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational horner(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

MPoly MPoly::var(std::size_t index, unsigned exponent) {
  Monomial m(index + 1, 0);
  m[index] = exponent;
  trim(m);
  MPoly out;
  out.terms_[m] = 1;
  return out;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MPoly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& x, const MPoly& y) {
  MPoly out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) out.add_term(product(mx, my), cx * cy);
  }
  return out;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly out(1);
  for (unsigned i = 0; i < e; ++i) out *= *this;
  return out;
}

std::set<std::size_t> MPoly::variables() const {
  std::set<std::size_t> out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) out.insert(i);
    }
  }
  return out;
}

bool MPoly::uses(std::size_t v) const { return degree_in(v) > 0; }

unsigned MPoly::degree_in(std::size_t v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, exponent(m, v));
  return d;
}

MPoly MPoly::coefficient_in(std::size_t v, unsigned k) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    if (exponent(m, v) != k) continue;
    Monomial rest = m;
    if (v < rest.size()) rest[v] = 0;
    trim(rest);
    out.add_term(rest, c);
  }
  return out;
}

std::map<MPoly::Monomial, MPoly> MPoly::collect(const std::vector<std::size_t>& vars) const {
  std::map<Monomial, MPoly> out;
  for (const auto& [m, c] : terms_) {
    Monomial key, rest = m;
    for (auto v : vars) {
      key.push_back(exponent(m, v));
      if (v < rest.size()) rest[v] = 0;
    }
    trim(rest);
    out[key].add_term(rest, c);
  }
  return out;
}

MPoly MPoly::substitute(std::size_t v, const MPoly& value) const {
  std::vector<MPoly> powers{MPoly(1)};
  MPoly out;
  for (const auto& [m, c] : terms_) {
    unsigned e = exponent(m, v);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    if (v < rest.size()) rest[v] = 0;
    trim(rest);
    MPoly term;
    term.terms_[rest] = c;
    out += term * powers[e];
  }
  return out;
}

Rational MPoly::evaluate(const std::map<std::size_t, Rational>& values) const {
  Rational out = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = values.find(i);
      if (it == values.end()) throw DomainError("evaluate: unassigned variable");
      for (unsigned k = 0; k < m[i]; ++k) t *= it->second;
    }
    out += t;
  }
  return out;
}

std::optional<MPoly> MPoly::divide_linear(std::size_t v, const Rational& root) const {
  // Synthetic division in v with coefficients in the other variables.
  const unsigned d = degree_in(v);
  if (is_zero()) return MPoly();
  std::vector<MPoly> c(d + 1);
  for (unsigned k = 0; k <= d; ++k) c[k] = coefficient_in(v, k);
  if (d == 0) return std::nullopt;
  std::vector<MPoly> quotient(d);
  MPoly carry;
  for (unsigned k = d; k >= 1; --k) {
    carry = c[k] + carry * MPoly(root);
    quotient[k - 1] = carry;
  }
  if (!(c[0] + carry * MPoly(root)).is_zero()) return std::nullopt;
  MPoly out;
  for (unsigned k = 0; k < d; ++k) out += quotient[k] * var(v, k);
  return out;
}

std::optional<MPoly> MPoly::divide_monomial(const Monomial& divisor) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial rest(std::max(m.size(), divisor.size()), 0);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      unsigned have = exponent(m, i), need = exponent(divisor, i);
      if (have < need) return std::nullopt;
      rest[i] = have - need;
    }
    trim(rest);
    out.add_term(rest, c);
  }
  return out;
}

MPoly::Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial out = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    out.resize(std::min(out.size(), m.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], m[i]);
  }
  trim(out);
  return out;
}

std::vector<Rational> MPoly::univariate(std::size_t v) const {
  for (auto u : variables()) {
    if (u != v) throw DomainError("univariate: polynomial has other variables");
  }
  std::vector<Rational> out(degree_in(v) + 1, Rational(0));
  for (const auto& [m, c] : terms_) out[exponent(m, v)] = c;
  return out;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "v" + std::to_string(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    Rational mag = c < 0 ? Rational(-c) : c;
    std::string coeff = arith::to_string(mag);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += mono;
    }
  }
  return out;
}

std::vector<Rational> rational_roots(std::vector<Rational> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) throw DomainError("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (coeffs[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  std::vector<Rational> reduced(coeffs.begin() + static_cast<std::ptrdiff_t>(shift), coeffs.end());
  if (reduced.size() > 1) {
    BigInt lcm = 1;
    for (const auto& c : reduced) {
      lcm = lcm / arith::gcd<BigInt>(lcm, denominator(c)) * denominator(c);
    }
    std::vector<BigInt> ints;
    for (const auto& c : reduced) ints.push_back(numerator(Rational(c * lcm)));
    for (const auto& num : positive_divisors(ints.front())) {
      for (const auto& den : positive_divisors(ints.back())) {
        if (arith::gcd<BigInt>(num, den) != 1) continue;
        for (int sign : {1, -1}) {
          Rational r(BigInt(sign) * num, den);
          if (horner(reduced, r) == 0) roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace modcurve
