#include "modcurve/canonical.hpp"

#include <algorithm>

#include "modcurve/cusps.hpp"
#include "modcurve/modular_group.hpp"

#include <set>
#include <utility>

namespace modcurve::canonical {

namespace {

Cyc zero() { return Cyc(kRootOrder); }
Cyc constant(const Rational& c) { return Cyc(kRootOrder, c); }
Cyc root_power(std::int64_t j) { return Cyc::monomial(kRootOrder, j); }

// Upper-triangular coefficients of a quadratic form: entry (i, k), i <= k,
// multiplies z_i z_k.
using QuadForm = std::array<std::array<Cyc, 5>, 5>;

template <class T, std::size_t N>
std::array<T, N> filled(const T& v) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<T, N>{((void)I, v)...};
  }(std::make_index_sequence<N>{});
}

QuadForm empty_form() { return filled<std::array<Cyc, 5>, 5>(filled<Cyc, 5>(zero())); }

std::array<QuadForm, 3> model_forms(const Rational& a) {
  std::array<QuadForm, 3> out{empty_form(), empty_form(), empty_form()};
  out[0][2][2] = constant(1);
  out[0][1][4] = constant(-1);
  out[1][1][1] = constant(1);
  out[1][0][3] = constant(-1);
  out[1][0][4] = constant(-1);
  out[2][0][0] = constant(1);
  out[2][3][3] = constant(-1);
  out[2][3][4] = constant(a - 1);
  return out;
}

QuadForm pullback(const QuadForm& q, const Matrix5& m) {
  QuadForm out = empty_form();
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t k = i; k < 5; ++k) {
      if (q[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < 5; ++j) {
        for (std::size_t l = 0; l < 5; ++l) {
          out[std::min(j, l)][std::max(j, l)] += q[i][k] * m[i][j] * m[k][l];
        }
      }
    }
  }
  return out;
}

// Variables of the elimination: c_ij at 5 i + j, then a, then z1..z5.
constexpr std::size_t kA = 25;
constexpr std::size_t kZ = 26;

std::size_t c_var(std::size_t i, std::size_t j) { return 5 * i + j; }

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> v;
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) v.push_back("c" + std::to_string(i) + std::to_string(j));
    }
    v.push_back("a");
    for (int k = 1; k <= 5; ++k) v.push_back("z" + std::to_string(k));
    return v;
  }();
  return n;
}

MPoly z(std::size_t k) { return MPoly::var(kZ + k); }
MPoly a_var() { return MPoly::var(kA); }

std::array<MPoly, 3> symbolic_forms(const std::array<MPoly, 5>& w) {
  return quadric_residuals<MPoly>(a_var(), w);
}

class Eliminator {
 public:
  MPoly reduce(const MPoly& p) const {
    MPoly out = p;
    for (const auto& [v, value] : subst_) {
      if (out.uses(v)) out = out.substitute(v, value);
    }
    return out;
  }

  MPoly entry(std::size_t i, std::size_t j) const { return reduce(MPoly::var(c_var(i, j))); }

  std::array<MPoly, 5> image(const std::array<MPoly, 5>& v) const {
    std::array<MPoly, 5> out;
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) out[i] += entry(i, j) * v[j];
    }
    return out;
  }

  /// Conditions expressing that each quadric pulls back into the span of the three.
  std::vector<MPoly> membership_conditions(std::size_t which) const {
    std::array<MPoly, 5> zs{z(0), z(1), z(2), z(3), z(4)};
    const auto original = symbolic_forms(zs);
    const MPoly pulled = reduce(symbolic_forms(image(zs))[which]);
    std::vector<std::size_t> zvars{kZ, kZ + 1, kZ + 2, kZ + 3, kZ + 4};
    auto coeffs = pulled.collect(zvars);
    auto coef = [&](std::size_t k) {
      MPoly::Monomial key(5, 0);
      key[k] = 2;
      auto it = coeffs.find(key);
      return it == coeffs.end() ? MPoly() : it->second;
    };
    // z3^2, z2^2, z1^2 each occur in exactly one quadric, so they read off the multipliers.
    MPoly residual = pulled - coef(2) * original[0] - coef(1) * original[1] - coef(0) * original[2];
    std::vector<MPoly> out;
    for (auto& [key, c] : reduce(residual).collect(zvars)) out.push_back(c);
    return out;
  }

  /// Runs the rewriting rules on the conditions, returning what could not be solved.
  std::vector<MPoly> solve(std::vector<MPoly> conds, EliminationStep& step) {
    while (true) {
      std::vector<MPoly> live;
      for (const auto& c : conds) {
        MPoly r = reduce(c);
        if (r.is_zero()) continue;
        if (r.is_constant()) throw DomainError("elimination: inconsistent condition in step " + step.name);
        live.push_back(std::move(r));
      }
      conds = std::move(live);
      if (conds.empty()) return {};
      if (apply_zero_rule(conds, step) || apply_strip_rule(conds) || apply_linear_rule(conds, step)) continue;
      return conds;
    }
  }

 private:
  void assign(std::size_t v, const MPoly& value, EliminationStep& step) {
    MPoly r = reduce(value);
    for (auto& [u, w] : subst_) w = w.substitute(v, r);
    subst_[v] = r;
    step.derived.push_back(names()[v] + " = " + r.to_string(names()));
  }

  // k * v^e = 0 gives v = 0.
  bool apply_zero_rule(const std::vector<MPoly>& conds, EliminationStep& step) {
    for (const auto& c : conds) {
      if (c.terms().size() != 1) continue;
      auto vars = c.variables();
      if (vars.size() != 1 || known_nonzero(*vars.begin())) continue;
      assign(*vars.begin(), MPoly(), step);
      return true;
    }
    return false;
  }

  bool known_nonzero(std::size_t v) const {
    if (v == kA) return true;  // a differs from the branch value 0
    if (v >= kA) return false;
    const std::size_t i = v / 5, j = v % 5;
    if (i != j) return false;
    // An invertible matrix has no zero row.
    for (std::size_t k = 0; k < 5; ++k) {
      if (k != i && !entry(i, k).is_zero()) return false;
    }
    return !entry(i, i).is_zero();
  }

  // Divides out monomial factors known to be nonzero, and a - 1.
  bool apply_strip_rule(std::vector<MPoly>& conds) const {
    for (auto& c : conds) {
      MPoly::Monomial content = c.monomial_content();
      bool any = false;
      for (std::size_t v = 0; v < content.size(); ++v) {
        if (content[v] == 0) continue;
        if (known_nonzero(v)) {
          any = true;
        } else {
          content[v] = 0;
        }
      }
      if (any) {
        c = *c.divide_monomial(content);
        return true;
      }
      if (c.uses(kA)) {
        if (auto q = c.divide_linear(kA, 1)) {  // a differs from the branch value 1
          c = *q;
          return true;
        }
      }
    }
    return false;
  }

  // Solves a condition linear in some variable with a constant coefficient,
  // preferring matrix entries over a.
  bool apply_linear_rule(const std::vector<MPoly>& conds, EliminationStep& step) {
    for (bool entries_only : {true, false}) {
      for (const auto& c : conds) {
        for (auto v : c.variables()) {
          if (entries_only && v >= kA) continue;
          if (c.degree_in(v) != 1) continue;
          MPoly k = c.coefficient_in(v, 1);
          if (!k.is_constant()) continue;
          MPoly rest = c.coefficient_in(v, 0);
          assign(v, -rest * MPoly(Rational(1) / k.constant_value()), step);
          return true;
        }
      }
    }
    return false;
  }

  std::map<std::size_t, MPoly> subst_;
};

using Expected = std::vector<std::pair<std::size_t, MPoly>>;

void expect(const Eliminator& e, const EliminationStep& step, const Expected& expected) {
  for (const auto& [v, value] : expected) {
    if (!(e.reduce(MPoly::var(v)) == e.reduce(value))) {
      throw DomainError("elimination step '" + step.name + "' did not give " + names()[v] + " = " +
                        value.to_string(names()) + " (got " + e.reduce(MPoly::var(v)).to_string(names()) + ")");
    }
  }
}

std::array<MPoly, 5> vec(std::initializer_list<MPoly> xs) {
  std::array<MPoly, 5> out;
  std::size_t i = 0;
  for (const auto& x : xs) out[i++] = x;
  return out;
}

MPoly cvar(std::size_t i, std::size_t j) { return MPoly::var(c_var(i - 1, j - 1)); }

Cyc evaluate_at_root(const MPoly& p, std::size_t var, std::int64_t j) {
  Cyc out = zero();
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] != 0 && v != var) throw DomainError("evaluate_at_root: unexpected variable");
    }
    std::int64_t e = var < m.size() ? m[var] : 0;
    out += root_power(j * e) * constant(c);
  }
  return out;
}

}  // namespace

Matrix5 sigma_matrix(std::int64_t j, const Rational& a) {
  Matrix5 m = empty_form();
  m[0][0] = -root_power(4 * j);
  m[1][1] = root_power(2 * j);
  m[2][2] = root_power(j);
  m[3][3] = constant(-1);
  m[3][4] = constant(a - 1);
  m[4][4] = constant(1);
  return m;
}

Matrix5 deck_matrix() {
  Matrix5 m = empty_form();
  m[0][0] = root_power(4);
  m[1][1] = root_power(2);
  m[2][2] = root_power(1);
  m[3][3] = constant(1);
  m[4][4] = constant(1);
  return m;
}

Matrix5 multiply(const Matrix5& x, const Matrix5& y) {
  Matrix5 out = empty_form();
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t k = 0; k < 5; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < 5; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  }
  return out;
}

ProjPoint<Cyc> apply(const Matrix5& m, const ProjPoint<Cyc>& v) {
  ProjPoint<Cyc> out{zero(), zero(), zero(), zero(), zero()};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

ProjPoint<Cyc> exact_point(const std::array<Rational, 5>& v) {
  return {constant(v[0]), constant(v[1]), constant(v[2]), constant(v[3]), constant(v[4])};
}

bool proportional(const Matrix5& x, const Matrix5& y) {
  // Flatten and compare as points of a 25-dimensional space.
  for (std::size_t p = 0; p < 25; ++p) {
    for (std::size_t q = p + 1; q < 25; ++q) {
      const Cyc& x1 = x[p / 5][p % 5];
      const Cyc& x2 = x[q / 5][q % 5];
      const Cyc& y1 = y[p / 5][p % 5];
      const Cyc& y2 = y[q / 5][q % 5];
      if (!(x1 * y2 - x2 * y1).is_zero()) return false;
    }
  }
  return true;
}

bool preserves_ideal(const Matrix5& m, const Rational& a) {
  const auto forms = model_forms(a);
  for (const auto& form : forms) {
    QuadForm pulled = pullback(form, m);
    const Cyc l1 = pulled[2][2], l2 = pulled[1][1], l3 = pulled[0][0];
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t k = i; k < 5; ++k) {
        Cyc r = pulled[i][k] - l1 * forms[0][i][k] - l2 * forms[1][i][k] - l3 * forms[2][i][k];
        if (!r.is_zero()) return false;
      }
    }
  }
  return true;
}

bool sigma_preserves_ideal(const Rational& a, std::int64_t j) {
  if (a == 1) throw DomainError("a = 1 is degenerate");
  return preserves_ideal(sigma_matrix(j, a), a);
}

std::string EliminationResult::entry_string(std::size_t i, std::size_t j) const {
  return entries.at(i).at(j).to_string(names());
}

std::string EliminationResult::relation_string(std::size_t k) const { return relations.at(k).to_string(names()); }

EliminationResult elimination_solve() {
  Eliminator e;
  EliminationResult out;
  const MPoly a = a_var();
  auto run = [&](const std::string& name, std::vector<MPoly> conds, const Expected& expected) {
    EliminationStep step{name, {}};
    auto left = e.solve(std::move(conds), step);
    expect(e, step, expected);
    out.steps.push_back(step);
    return left;
  };
  auto none_left = [](const std::vector<MPoly>& left, const std::string& name) {
    if (!left.empty()) throw DomainError("elimination step '" + name + "' left unsolved conditions");
  };

  // sigma(0,0,0,0,1) = (0,0,0,a-1,1), the scale fixed to 1.
  {
    auto img = e.image(vec({0, 0, 0, 0, 1}));
    std::vector<MPoly> conds{img[0], img[1], img[2], img[3] - (a - 1), img[4] - 1};
    none_left(run("image of (1,0)", conds,
                  {{c_var(0, 4), 0}, {c_var(1, 4), 0}, {c_var(2, 4), 0}, {c_var(3, 4), a - 1}, {c_var(4, 4), 1}}),
              "image of (1,0)");
  }
  // sigma(0,0,0,a-1,1) is a multiple of (0,0,0,0,1).
  {
    auto img = e.image(vec({0, 0, 0, a - 1, 1}));
    std::vector<MPoly> conds{img[0], img[1], img[2], img[3]};
    none_left(run("image of (a,0)", conds, {{c_var(0, 3), 0}, {c_var(1, 3), 0}, {c_var(2, 3), 0}, {c_var(3, 3), -1}}),
              "image of (a,0)");
  }
  // The sheets over infinity, [1, s, 0, 1, 0] with s = +-1 and [1, s, 0, -1, 0]
  // with s = +-i, go to points with z3 = z5 = 0.  Both signs of s occur, so
  // the parts with and without s vanish separately.
  {
    std::vector<MPoly> conds;
    for (const auto& u : {vec({1, 0, 0, 1, 0}), vec({1, 0, 0, -1, 0}), vec({0, 1, 0, 0, 0})}) {
      auto img = e.image(u);
      conds.push_back(img[2]);
      conds.push_back(img[4]);
    }
    none_left(run("sheets over infinity", conds,
                  {{c_var(2, 0), 0}, {c_var(2, 1), 0}, {c_var(4, 0), 0}, {c_var(4, 1), 0}, {c_var(4, 3), 0}}),
              "sheets over infinity");
  }
  // The sheets over 0, [+-sqrt(a), 0, 0, -1, 1], go to points with z2 = z3 = 0;
  // sqrt(a) is nonzero, so again both parts vanish.
  {
    std::vector<MPoly> conds;
    for (const auto& u : {vec({0, 0, 0, -1, 1}), vec({1, 0, 0, 0, 0})}) {
      auto img = e.image(u);
      conds.push_back(img[1]);
      conds.push_back(img[2]);
    }
    none_left(run("sheets over 0", conds, {{c_var(1, 0), 0}}), "sheets over 0");
  }
  none_left(run("first quadric", e.membership_conditions(0),
                {{c_var(1, 2), 0}, {c_var(4, 2), 0}, {c_var(1, 1), cvar(3, 3).pow(2)}}),
            "first quadric");
  none_left(run("second quadric", e.membership_conditions(1),
                {{c_var(0, 1), 0},
                 {c_var(0, 2), 0},
                 {c_var(3, 0), 0},
                 {c_var(3, 1), 0},
                 {c_var(3, 2), 0},
                 {c_var(0, 0), -cvar(3, 3).pow(4)},
                 {kA, -1}}),
            "second quadric");
  auto raw = run("third quadric", e.membership_conditions(2), {});
  // Scalar multiples of one relation count once.
  std::vector<MPoly> left;
  for (const auto& r : raw) {
    MPoly scaled = r * MPoly(Rational(1) / r.terms().begin()->second);
    if (std::find(left.begin(), left.end(), scaled) == left.end()) left.push_back(scaled);
  }
  const MPoly expected_relation = cvar(3, 3).pow(8) - 1;
  if (left.size() != 1 || !(left[0] == expected_relation || left[0] == -expected_relation)) {
    std::string got;
    for (const auto& l : left) got += " [" + l.to_string(names()) + "]";
    throw DomainError("elimination step 'third quadric' did not leave c33^8 = 1:" + got);
  }
  out.relations.push_back(expected_relation);
  if (!out.steps.empty()) out.steps.back().derived.push_back(expected_relation.to_string(names()) + " = 0");

  out.a = e.reduce(a).constant_value();
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) out.entries[i][j] = e.entry(i, j);
  }
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(kRootOrder); ++j) {
    bool ok = true;
    for (const auto& r : out.relations) ok = ok && evaluate_at_root(r, c_var(2, 2), j).is_zero();
    if (ok) ++out.family_size;
  }
  return out;
}

bool family_matches_sigma(const EliminationResult& r) {
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(kRootOrder); ++j) {
    const Matrix5 expected = sigma_matrix(j, r.a);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t k = 0; k < 5; ++k) {
        if (!(evaluate_at_root(r.entries[i][k], c_var(2, 2), j) == expected[i][k])) return false;
      }
    }
  }
  return true;
}

CountCheck automorphism_count_crosscheck() {
  const auto inf = cusps::cusp_canonical(8, cusps::Cusp::infinity());
  const auto target = cusps::cusp_canonical(8, cusps::Cusp(3, 8));
  CountCheck out{group::maps_between_cusps(8, inf, target).size(), 0};
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(kRootOrder); ++j) {
    if (sigma_preserves_ideal(-1, j)) ++out.sigma_side;
  }
  return out;
}

std::vector<SpecialPointCheck> special_point_checks() {
  constexpr std::size_t b_var = 1;  // a = b^2 below
  const MPoly a = MPoly::var(0), b = MPoly::var(b_var);
  std::vector<SpecialPointCheck> out;
  auto add = [&](const std::string& name, bool ok) { out.push_back({name, ok}); };

  add("(1,0) -> [0,0,0,0,1]", on_model<MPoly>(a, {0, 0, 0, 0, 1}));
  add("(a,0) -> [0,0,0,a-1,1]", on_model<MPoly>(a, {0, 0, 0, a - 1, 1}));
  for (int s : {1, -1}) {
    std::string sign = s > 0 ? "+" : "-";
    add("0_l -> [" + sign + "sqrt(a),0,0,-1,1]", on_model<MPoly>(b * b, {MPoly(s) * b, 0, 0, -1, 1}));
    add("inf_l -> [1," + sign + "1,0,1,0]", on_model<MPoly>(a, {1, MPoly(s), 0, 1, 0}));
  }
  // In Q[a][t]/(t^8 - 1) the square of i = t^2 is t^4, not -1, so these are
  // written as -[1, +-i, 0, -1, 0] = [t^4, -+i, 0, 1, 0] with -i = t^6.
  using CycPoly = Cyclotomic<MPoly>;
  const CycPoly ca(kRootOrder, a);
  auto c = [](const MPoly& v) { return CycPoly(kRootOrder, v); };
  auto t = [](std::int64_t j) { return CycPoly::monomial(kRootOrder, j); };
  for (int s : {1, -1}) {
    add(std::string("inf_l -> [1,") + (s > 0 ? "+" : "-") + "i,0,-1,0]",
        on_model<CycPoly>(ca, {t(4), t(s > 0 ? 6 : 2), c(0), c(1), c(0)}));
  }
  return out;
}

}  // namespace modcurve::canonical
