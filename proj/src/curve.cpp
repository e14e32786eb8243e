#include "modcurve/curve.hpp"

#include "modcurve/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace modcurve::curve {

namespace {

struct LocalData {
  std::int64_t points;   // gcd(p, m)
  std::int64_t index;    // p / gcd(p, m)
  std::int64_t y_order;  // m / gcd(p, m), negated at infinity
};

LocalData at_branch(const Curve& c, std::size_t i) {
  const std::int64_t m = c.finite.at(i).m;
  const std::int64_t g = arith::gcd(c.p, m);
  return {g, c.p / g, m / g};
}

std::int64_t total_m(const Curve& c) {
  std::int64_t s = 0;
  for (const auto& b : c.finite) s += b.m;
  return s;
}

LocalData at_infinity(const Curve& c) {
  const std::int64_t s = total_m(c);
  const std::int64_t g = arith::gcd(c.p, s);  // gcd(p, 0) = p
  return {g, c.p / g, -(s / g)};
}

void check_monomial(const Curve& c, const Monomial& f) {
  if (f.alpha.size() != c.finite.size()) throw DomainError("monomial needs one exponent per branch");
}

std::string factor_text(const equation::Branch& b) {
  if (!b.value) return "(x-" + b.label + ")";
  if (*b.value == 0) return "x";
  if (*b.value < 0) return "(x+" + arith::to_string(Rational(-*b.value)) + ")";
  return "(x-" + arith::to_string(*b.value) + ")";
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Homogeneous point [u : v] of the projective line with entries in Q[a].
struct HomPoint {
  MPoly u, v;
};

MPoly bracket(const HomPoint& s, const HomPoint& t) { return s.u * t.v - s.v * t.u; }

}  // namespace

std::vector<Fiber> ramification_profile(const Curve& c) {
  std::vector<Fiber> out;
  for (std::size_t i = 0; i < c.finite.size(); ++i) {
    auto d = at_branch(c, i);
    out.push_back({c.finite[i].label, d.points, d.index});
  }
  auto d = at_infinity(c);
  out.push_back({"inf", d.points, d.index});
  return out;
}

BigInt curve_genus(const Curve& c) {
  std::int64_t twice = -2 * c.p;
  for (const auto& f : ramification_profile(c)) twice += f.points * (f.index - 1);
  if (twice % 2 != 0) throw DomainError("Riemann-Hurwitz gives an odd 2g - 2");
  return twice / 2 + 1;
}

std::int64_t differential_order(const Curve& c, const Monomial& f, const SheetPoint& pt) {
  check_monomial(c, f);
  if (pt.branch) {
    const std::size_t i = *pt.branch;
    auto d = at_branch(c, i);
    if (pt.sheet < 0 || pt.sheet >= d.points) throw DomainError("sheet index out of range");
    std::int64_t order = f.alpha[i] * d.index - f.gamma * d.y_order;
    if (f.differential) order += d.index - 1;
    return order;
  }
  auto d = at_infinity(c);
  if (pt.sheet < 0 || pt.sheet >= d.points) throw DomainError("sheet index out of range");
  std::int64_t degree = 0;
  for (auto a : f.alpha) degree += a;
  std::int64_t order = -degree * d.index - f.gamma * d.y_order;
  if (f.differential) order += -d.index - 1;
  return order;
}

std::int64_t divisor_degree(const Curve& c, const Monomial& f) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < c.finite.size(); ++i) {
    total += at_branch(c, i).points * differential_order(c, f, {i, 0});
  }
  total += at_infinity(c).points * differential_order(c, f, {std::nullopt, 0});
  return total;
}

std::string to_string(const Curve& c, const Monomial& f) {
  check_monomial(c, f);
  std::vector<std::string> num, den;
  for (std::size_t i = 0; i < c.finite.size(); ++i) {
    if (f.alpha[i] == 0) continue;
    std::int64_t e = std::abs(f.alpha[i]);
    std::string t = factor_text(c.finite[i]) + (e > 1 ? "^" + std::to_string(e) : "");
    (f.alpha[i] > 0 ? num : den).push_back(t);
  }
  if (f.gamma != 0) {
    std::int64_t e = std::abs(f.gamma);
    std::string t = "y" + (e > 1 ? "^" + std::to_string(e) : std::string());
    (f.gamma < 0 ? num : den).push_back(t);
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& t : v) s += (s.empty() ? "" : "*") + t;
    return s;
  };
  std::string out = num.empty() ? "1" : join(num);
  if (!den.empty()) out += "/" + (den.size() == 1 ? den[0] : "(" + join(den) + ")");
  if (f.differential) out = (out == "1" ? std::string("dx") : out + " dx");
  return out;
}

std::vector<Monomial> holomorphic_basis(const Curve& c) {
  const std::size_t r = c.finite.size();
  const auto inf = at_infinity(c);
  std::vector<Monomial> out;
  for (std::int64_t gamma = 0; gamma < c.p; ++gamma) {
    // Smallest alpha_i keeping the order at each finite branch nonnegative.
    std::vector<std::int64_t> low(r);
    std::int64_t used = 0;
    for (std::size_t i = 0; i < r; ++i) {
      auto d = at_branch(c, i);
      low[i] = std::max<std::int64_t>(0, ceil_div(gamma * d.y_order - d.index + 1, d.index));
      used += low[i];
    }
    // Largest total degree keeping the order at infinity nonnegative.
    const std::int64_t top = floor_div(-gamma * inf.y_order - inf.index - 1, inf.index);
    if (top < used) continue;
    auto free_it = std::find(low.begin(), low.end(), 0);
    if (top > used && free_it == low.end()) {
      throw DomainError("holomorphic_basis: no branch factor left to raise");
    }
    const std::size_t j = static_cast<std::size_t>(free_it - low.begin());
    for (std::int64_t t = top - used; t >= 0; --t) {
      Monomial m{low, gamma, true};
      if (t > 0) m.alpha[j] += t;
      out.push_back(std::move(m));
    }
  }
  const BigInt g = curve_genus(c);
  if (BigInt(out.size()) != g) {
    throw DomainError("holomorphic_basis found " + std::to_string(out.size()) + " differentials, genus is " +
                      g.str());
  }
  return out;
}

equation::RotationNumber rotation_at_branch(const Curve& c, std::size_t i) {
  return equation::rotation_from_exponent(c.p, c.finite.at(i).m);
}

std::optional<Rational> MoebiusMap::apply(const std::optional<Rational>& x) const {
  if (a * d - b * c == 0) throw DomainError("Moebius map is singular");
  if (!x) {
    if (c == 0) return std::nullopt;
    return a / c;
  }
  Rational den = c * *x + d;
  if (den == 0) return std::nullopt;
  return (a * *x + b) / den;
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::vector<std::optional<Rational>> branch_points(const Curve& c) {
  std::vector<std::optional<Rational>> out;
  for (const auto& b : c.finite) {
    if (!b.value) throw DomainError("branch " + b.label + " has no value");
    out.push_back(b.value);
  }
  if (c.m_infinity > 0) out.push_back(std::nullopt);
  return out;
}

namespace {

std::vector<std::int64_t> branch_exponents(const Curve& c) {
  std::vector<std::int64_t> out;
  for (const auto& b : c.finite) out.push_back(b.m);
  if (c.m_infinity > 0) out.push_back(c.m_infinity);
  return out;
}

std::optional<std::vector<std::size_t>> branch_permutation(const Curve& c, const MoebiusMap& t) {
  auto pts = branch_points(c);
  std::vector<std::size_t> perm;
  for (const auto& b : pts) {
    auto img = t.apply(b);
    auto it = std::find(pts.begin(), pts.end(), img);
    if (it == pts.end()) return std::nullopt;
    perm.push_back(static_cast<std::size_t>(it - pts.begin()));
  }
  return perm;
}

bool twist_fits(std::int64_t p, const std::vector<std::int64_t>& m, const std::vector<std::size_t>& perm,
                std::int64_t s) {
  if (arith::gcd(s, p) != 1) return false;
  for (std::size_t b = 0; b < perm.size(); ++b) {
    if (arith::mod<std::int64_t>(m[perm[b]] - s * m[b], p) != 0) return false;
  }
  return true;
}

std::optional<std::int64_t> find_twist(std::int64_t p, const std::vector<std::int64_t>& m,
                                       const std::vector<std::size_t>& perm) {
  for (std::int64_t s = 1; s < std::max<std::int64_t>(p, 2); ++s) {
    if (twist_fits(p, m, perm, s)) return s;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LiftCertificate> moebius_lift_check(const Curve& c, const MoebiusMap& t) {
  auto perm = branch_permutation(c, t);
  if (!perm) return std::nullopt;
  auto s = find_twist(c.p, branch_exponents(c), *perm);
  if (!s) return std::nullopt;
  return LiftCertificate{*s, *perm, "m(T(b)) = " + std::to_string(*s) + " m(b) mod " + std::to_string(c.p)};
}

bool is_valid_twist(const Curve& c, const MoebiusMap& t, std::int64_t s) {
  auto perm = branch_permutation(c, t);
  return perm && twist_fits(c.p, branch_exponents(c), *perm, arith::mod<std::int64_t>(s, c.p));
}

Curve assign_constant(const Curve& family, const Rational& value) {
  auto branches = family.finite;
  std::size_t symbolic = 0;
  for (auto& b : branches) {
    if (b.value) continue;
    b.value = value;
    ++symbolic;
  }
  if (symbolic != 1) throw DomainError("family must have exactly one symbolic branch");
  return Curve::make(family.p, std::move(branches));
}

std::vector<Rational> solve_branch_constant(const Curve& family, std::size_t from, std::size_t to) {
  constexpr std::size_t kA = 0;
  std::vector<HomPoint> pts;
  std::set<Rational> existing;
  std::size_t symbolic = 0;
  for (const auto& b : family.finite) {
    if (b.value) {
      pts.push_back({MPoly(*b.value), MPoly(1)});
      existing.insert(*b.value);
    } else {
      pts.push_back({MPoly::var(kA), MPoly(1)});
      ++symbolic;
    }
  }
  if (symbolic != 1) throw DomainError("family must have exactly one symbolic branch");
  if (family.m_infinity > 0) pts.push_back({MPoly(1), MPoly(0)});
  const std::size_t k = pts.size();
  if (from >= k || to >= k || from == to) throw DomainError("demand must name two distinct branch points");
  if (k < 4) throw DomainError("fewer than four branch points leave the constant unconstrained");

  auto m = branch_exponents(family);
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  std::set<Rational> found;
  bool any_candidate = false;
  do {
    if (perm[from] != to || perm[to] != from) continue;
    if (!find_twist(family.p, m, perm)) continue;
    any_candidate = true;
    // The map is pinned by points 0, 1, 2; each further point must keep its
    // cross ratio with them.
    std::vector<MPoly> conditions;
    const auto& z1 = pts[0];
    const auto& z2 = pts[1];
    const auto& z3 = pts[2];
    const auto& w1 = pts[perm[0]];
    const auto& w2 = pts[perm[1]];
    const auto& w3 = pts[perm[2]];
    for (std::size_t i = 3; i < k; ++i) {
      const auto& z4 = pts[i];
      const auto& w4 = pts[perm[i]];
      MPoly lhs = bracket(z1, z3) * bracket(z2, z4) * bracket(w1, w4) * bracket(w2, w3);
      MPoly rhs = bracket(w1, w3) * bracket(w2, w4) * bracket(z1, z4) * bracket(z2, z3);
      MPoly cond = lhs - rhs;
      if (!cond.is_zero()) conditions.push_back(std::move(cond));
    }
    if (conditions.empty()) throw DomainError("constraints vanish identically; the constant is free");
    for (const auto& root : rational_roots(conditions.front().univariate(kA))) {
      if (existing.count(root)) continue;
      bool all = std::all_of(conditions.begin(), conditions.end(),
                             [&](const MPoly& cnd) { return cnd.evaluate({{kA, root}}) == 0; });
      if (all) found.insert(root);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!any_candidate) throw DomainError("no branch permutation respects the exponents");
  return {found.begin(), found.end()};
}

NumericCurve numeric_curve(const Curve& c) {
  std::vector<std::pair<Complex, std::int64_t>> factors;
  std::vector<Complex> values;
  for (const auto& b : c.finite) {
    if (!b.value) throw DomainError("branch " + b.label + " has no value");
    Complex v(static_cast<double>(*b.value), 0.0);
    factors.emplace_back(v, b.m);
    values.push_back(v);
  }
  return {c.p,
          [factors](Complex x) {
            Complex out = 1;
            for (const auto& [v, m] : factors) out *= std::pow(x - v, static_cast<double>(m));
            return out;
          },
          values};
}

IsoReport verify_isomorphism_numeric(const NumericCurve& source, const NumericCurve& target,
                                     const PointMap& forward, const std::optional<PointMap>& inverse,
                                     std::size_t x_samples, std::mt19937_64& rng) {
  constexpr double kAvoid = 1e-3;
  constexpr std::size_t kMaxAttempts = 1000000;
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  IsoReport report;
  std::size_t accepted = 0, attempts = 0;
  const double turn = 2.0 * std::numbers::pi / static_cast<double>(source.p);
  while (accepted < x_samples) {
    if (++attempts > kMaxAttempts) throw DomainError("sampling kept hitting poles");
    Complex x(coord(rng), coord(rng));
    bool near = std::any_of(source.branch_values.begin(), source.branch_values.end(),
                            [&](Complex b) { return std::abs(x - b) < kAvoid; });
    if (near) continue;
    Complex y0 = std::pow(source.rhs(x), 1.0 / static_cast<double>(source.p));
    bool ok = true;
    std::vector<std::pair<double, double>> local;
    for (std::int64_t j = 0; j < source.p && ok; ++j) {
      Complex y = y0 * std::polar(1.0, turn * static_cast<double>(j));
      auto [x2, y2] = forward(x, y);
      if (!std::isfinite(std::abs(x2)) || !std::isfinite(std::abs(y2))) {
        ok = false;
        break;
      }
      Complex lhs = std::pow(y2, static_cast<double>(target.p));
      Complex rhs = target.rhs(x2);
      double residual = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
      double roundtrip = 0;
      if (inverse) {
        auto [x3, y3] = (*inverse)(x2, y2);
        roundtrip = std::max(std::abs(x3 - x), std::abs(y3 - y)) / std::max({1.0, std::abs(x), std::abs(y)});
      }
      local.emplace_back(residual, roundtrip);
    }
    if (!ok) continue;
    for (auto [res, rt] : local) {
      report.max_residual = std::max(report.max_residual, res);
      report.max_roundtrip = std::max(report.max_roundtrip, rt);
      ++report.samples;
    }
    ++accepted;
  }
  return report;
}

std::pair<PointMap, PointMap> octic_to_quartic_maps() {
  const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi / 16.0);
  const double root8 = std::pow(8.0, 0.25);
  const double root2 = std::pow(2.0, 0.25);
  PointMap forward = [=](Complex x, Complex y) {
    Complex y4 = y * y * y * y;
    return std::pair{std::pow(zeta, 4) * y4 / (x * (x + 1.0)), root8 * y / (zeta * (x + 1.0))};
  };
  PointMap inverse = [=](Complex x, Complex y) {
    Complex x2 = x * x;
    return std::pair{-(x2 - 1.0) / (x2 + 1.0), root2 * zeta * y / (x2 + 1.0)};
  };
  return {forward, inverse};
}

NumericCurve quartic_model() {
  const Complex i(0, 1);
  return {4,
          [](Complex x) {
            Complex s = x * x + 1.0;
            return x * (x - 1.0) * (x + 1.0) * s * s;
          },
          {0.0, 1.0, -1.0, i, -i}};
}

std::pair<Complex, Complex> deck_transform(const Curve& c, const std::pair<Complex, Complex>& pt) {
  return {pt.first, pt.second * std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(c.p))};
}

SheetPoint deck_transform(const Curve& c, const SheetPoint& pt) {
  const std::int64_t n = pt.branch ? at_branch(c, *pt.branch).points : at_infinity(c).points;
  if (pt.sheet < 0 || pt.sheet >= n) throw DomainError("sheet index out of range");
  return {pt.branch, (pt.sheet + 1) % n};
}

}  // namespace modcurve::curve
