#include "modcurve/cli.hpp"

#include "modcurve/canonical.hpp"
#include "modcurve/curve.hpp"
#include "modcurve/cusps.hpp"
#include "modcurve/equation.hpp"
#include "modcurve/genus.hpp"
#include "modcurve/golden.hpp"
#include "modcurve/modular_group.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace modcurve::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(const BigInt& v) { return arith::to_string(v); }
std::string str(const Rational& v) { return arith::to_string(v); }

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += str(xs[i]);
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

struct Check {
  std::string name;
  bool pass;
  std::string expected;
  std::string got;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  json inputs = json::object();
  json result = json::object();

  void line(const std::string& s) { lines_.push_back(s); }
  void note(const std::string& s) {
    result["notes"].push_back(s);
    line("note: " + s);
  }
  void check(const std::string& name, const std::string& expected, const std::string& got) {
    checks_.push_back({name, expected == got, expected, got});
  }
  void check_true(const std::string& name, bool ok, const std::string& expected = "true",
                  const std::string& got_if_false = "false") {
    checks_.push_back({name, ok, expected, ok ? expected : got_if_false});
  }

  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
  }

  json to_json() const {
    json doc;
    doc["command"] = command_;
    doc["inputs"] = inputs;
    doc["result"] = result;
    doc["checks"] = json::array();
    for (const auto& c : checks_) {
      doc["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"got", c.got}});
    }
    return doc;
  }

  void print_text(std::ostream& out) const {
    for (const auto& l : lines_) out << l << '\n';
    for (const auto& c : checks_) {
      if (c.pass) {
        out << "[PASS] " << c.name << ": " << c.got << '\n';
      } else {
        out << "[FAIL] " << c.name << ": expected " << c.expected << ", got " << c.got << '\n';
      }
    }
  }

 private:
  std::string command_;
  std::vector<std::string> lines_;
  std::vector<Check> checks_;
};

void require_divisor(std::int64_t q, std::int64_t n) {
  if (n < 1 || q % n != 0) throw UsageError("--n " + str(n) + " must be a positive divisor of --q " + str(q));
}

cusps::Cusp parse_cusp(const std::string& text) {
  try {
    return cusps::Cusp::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("bad cusp '" + text + "': " + e.what());
  }
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator");
    return arith::frac(BigInt(text.substr(0, slash)), den);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("bad rational '" + text + "'");
  }
}

// ---------------------------------------------------------------- genus

Report cmd_genus(std::int64_t q, std::optional<std::int64_t> n) {
  Report r("genus");
  r.inputs["q"] = str(q);
  if (n) r.inputs["n"] = str(*n);
  if (q < 1) throw UsageError("--q must be >= 1");
  const BigInt g = genus::genus_q(q);
  r.result["g_q"] = str(g);
  r.line("g_" + str(q) + " = " + str(g));
  if (q <= 2) r.note("for q <= 2 the genus of X_q is taken to be 0");
  if (n) {
    if (q < 5) throw UsageError("--n needs q >= 5");
    require_divisor(q, *n);
    const BigInt gn = genus::genus_qn(q, *n);
    const BigInt h = cusps::h_n_formula(q, *n);
    const BigInt big_r = group::r_n_formula(q, *n);
    r.result["g_q^n"] = str(gn);
    r.result["h"] = str(h);
    r.result["R"] = str(big_r);
    r.line("g_" + str(q) + "^" + str(*n) + " = " + str(gn) + "  (h = " + str(h) + ", R = " + str(big_r) + ")");
    r.check("1 - h/2 + R/12", str(gn), str(genus::euler_genus(h, big_r)));
  }
  return r;
}

// ---------------------------------------------------------------- cusps

Report cmd_cusps(std::int64_t q, std::int64_t n, bool widths, bool distribution) {
  Report r("cusps");
  r.inputs = {{"q", str(q)}, {"n", str(n)}, {"widths", widths}, {"distribution", distribution}};
  if (q < 3 || q > cusps::kCuspEnumerationLimit) {
    throw UsageError("--q must lie in [3, " + str(cusps::kCuspEnumerationLimit) + "]");
  }
  require_divisor(q, n);
  const auto orbits = cusps::tau_orbits(q, n);
  r.line("q = " + str(q) + ", n = " + str(n) + ": " + str(static_cast<std::int64_t>(orbits.size())) + " orbits");
  if (widths && q <= 4) r.note("q <= 4: widths come from the congruence scan, the closed form needs q >= 5");
  r.result["orbits"] = json::array();
  std::vector<std::int64_t> formula_widths, scanned_widths;
  for (const auto& o : orbits) {
    json row;
    const auto rep = o.representative().lift();
    row["representative"] = rep.to_string();
    row["size"] = str(static_cast<std::int64_t>(o.size()));
    row["members"] = json::array();
    for (const auto& m : o.members) row["members"].push_back(m.to_string());
    std::string text = "  " + rep.to_string() + "  size " + str(static_cast<std::int64_t>(o.size()));
    if (widths) {
      const auto w = cusps::width(q, n, rep);
      formula_widths.push_back(w);
      scanned_widths.push_back(cusps::width_bruteforce(q, n, rep));
      row["width"] = str(w);
      text += "  width " + str(w);
    }
    r.result["orbits"].push_back(row);
    r.line(text);
  }
  if (q >= 5) {
    r.check("orbit count against h_q^n", str(cusps::h_n_formula(q, n)),
            str(static_cast<std::int64_t>(orbits.size())));
  }
  if (widths && q >= 5) r.check("widths against the congruence scan", join(scanned_widths), join(formula_widths));
  if (distribution) {
    if (q < 5) throw UsageError("--distribution needs q >= 5");
    const auto formula = cusps::width_distribution(q, n);
    const auto direct = cusps::width_distribution_direct(q, n);
    auto render = [](const std::map<std::int64_t, BigInt>& d) {
      std::string s;
      for (const auto& [w, c] : d) s += (s.empty() ? "" : ",") + str(w) + ":" + str(c);
      return s;
    };
    r.result["distribution"] = json::object();
    for (const auto& [w, c] : formula) {
      r.result["distribution"][str(w)] = str(c);
      r.line("  width " + str(w) + ": " + str(c) + " orbits");
    }
    r.check("width distribution against the orbits", render(direct), render(formula));
  }
  return r;
}

// ---------------------------------------------------------------- rotation

json rotation_row(std::int64_t p, const equation::RotationNumber& rot, std::string& text) {
  json row{{"orbit_len", str(rot.orbit_len)}, {"k", str(rot.k)}};
  text += "  R(" + str(rot.orbit_len) + ", " + str(rot.k) + ")";
  if (rot.orbit_len < p) {
    const auto m = equation::exponent_from_rotation(p, rot);
    row["m"] = str(m);
    text += "  m " + str(m);
  } else {
    row["m"] = nullptr;
    text += "  unbranched";
  }
  return row;
}

Report cmd_rotation(std::int64_t q, std::int64_t n, const std::optional<std::string>& cusp) {
  Report r("rotation");
  r.inputs = {{"q", str(q)}, {"n", str(n)}};
  if (cusp) r.inputs["cusp"] = *cusp;
  if (q < 5) throw UsageError("rotation numbers need q >= 5");
  require_divisor(q, n);
  if (q > cusps::kCuspEnumerationLimit) throw UsageError("--q must be <= " + str(cusps::kCuspEnumerationLimit));
  const std::int64_t p = q / n;
  if (cusp) {
    const auto c = parse_cusp(*cusp);
    const auto rot = equation::rotation_number(q, n, c);
    std::string text = c.to_string();
    r.result = rotation_row(p, rot, text);
    r.result["cusp"] = c.to_string();
    r.line(text);
    if (rot.orbit_len < p) {
      const auto m = equation::exponent_from_rotation(p, rot);
      const auto back = equation::rotation_from_exponent(p, m);
      r.check("rotation recovered from m", "R(" + str(rot.orbit_len) + ", " + str(rot.k) + ")",
              "R(" + str(back.orbit_len) + ", " + str(back.k) + ")");
    }
    return r;
  }
  r.result["rows"] = json::array();
  for (const auto& o : cusps::tau_orbits(q, n)) {
    const auto rep = o.representative().lift();
    std::string text = "  " + rep.to_string() + "  size " + str(static_cast<std::int64_t>(o.size()));
    json row = rotation_row(p, equation::rotation_number(q, n, rep), text);
    row["cusp"] = rep.to_string();
    row["size"] = str(static_cast<std::int64_t>(o.size()));
    r.result["rows"].push_back(row);
    r.line(text);
  }
  return r;
}

// ---------------------------------------------------------------- equation

struct Normalized {
  equation::Normalization choice;
  equation::SemiHyperellipticEquation eq;
};

equation::EquationBuild build_for(std::int64_t q, std::optional<std::int64_t> n_opt) {
  if (q < 5) throw Unsupported("equations are built from cusp data for q >= 5 only");
  if (q > cusps::kCuspEnumerationLimit) throw UsageError("--q must be <= " + str(cusps::kCuspEnumerationLimit));
  const std::int64_t n = n_opt.value_or(1);
  require_divisor(q, n);
  if (!genus::is_semihyperelliptic_level(q)) {
    throw Unsupported("X_" + str(q) + " is not semi-hyperelliptic: g_q^n > 0 for every n dividing " + str(q) +
                      " (g_q^1 = " + str(genus::genus_qn(q, 1)) + ")");
  }
  const BigInt g = genus::genus_qn(q, n);
  if (g != 0) {
    throw Unsupported("X_" + str(q) + "^" + str(n) + " has genus " + str(g) + ", so it is not the projective line");
  }
  if (q == n) throw Unsupported("n = q gives the trivial cover");
  return equation::build_equation(q, n);
}

Normalized normalize_for(const equation::EquationBuild& build, const std::string& convention) {
  equation::Convention conv;
  try {
    conv = equation::parse_convention(convention);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (build.orbits.size() < 3) {
    throw Unsupported("normalization needs 3 branch orbits, X_" + str(build.q) + "^" + str(build.n) + " has " +
                      str(static_cast<std::int64_t>(build.orbits.size())));
  }
  auto choice = equation::choose_normalization(build, conv);
  return {choice, equation::normalize_equation(build, choice, equation::default_label_prefix(build.q))};
}

/// Solves the single undetermined constant of a normalized equation by
/// asking for a lifted Moebius map that swaps the branch at 1 with it.
equation::SemiHyperellipticEquation solve_single_constant(const equation::EquationBuild& build, const Normalized& nz,
                                                          Report& r) {
  const auto& eq = nz.eq;
  const auto labels = eq.symbolic_labels();
  if (labels.size() != 1) {
    throw Unsupported(str(static_cast<std::int64_t>(labels.size())) +
                      " undetermined constants; only a single one can be solved for");
  }
  std::size_t from = eq.finite.size(), to = eq.finite.size();
  for (std::size_t i = 0; i < eq.finite.size(); ++i) {
    if (eq.finite[i].value && *eq.finite[i].value == 1) from = i;
    if (!eq.finite[i].value) to = i;
  }
  if (from == eq.finite.size()) throw Unsupported("normalized equation has no branch at 1");
  const auto which = equation::normalized_branch_orbits(build, nz.choice);
  const auto& c1 = build.orbits.at(which.at(from)).orbit.representative();
  const auto& c2 = build.orbits.at(which.at(to)).orbit.representative();
  if (build.q > group::kEnumerationLimit) throw Unsupported("level too large for the group enumeration");
  const auto maps = group::maps_between_cusps(build.q, c1, c2);
  r.result["maps_between_cusps"] = str(static_cast<std::int64_t>(maps.size()));
  r.line("elements of PSL(2, Z/" + str(build.q) + ") taking [" + c1.to_string() + "] to [" + c2.to_string() +
         "]: " + str(static_cast<std::int64_t>(maps.size())));
  if (maps.empty()) throw Unsupported("no automorphism carries the branch at 1 to the branch " + labels[0]);
  const auto values = curve::solve_branch_constant(eq, from, to);
  json cands = json::array();
  for (const auto& v : values) cands.push_back(str(v));
  r.result["candidates"] = cands;
  r.line("values of " + labels[0] + " admitting a lift: " + join(values));
  if (values.size() != 1) {
    throw Unsupported("the lifting condition leaves " + str(static_cast<std::int64_t>(values.size())) +
                      " candidates for " + labels[0]);
  }
  r.result["constant"] = {{"label", labels[0]}, {"value", str(values[0])}};
  return curve::assign_constant(eq, values[0]);
}

void add_orbit_table(const equation::EquationBuild& build, Report& r) {
  r.result["rows"] = json::array();
  r.line("cusp  size  n  k  m");
  for (const auto& o : build.orbits) {
    const auto rep = o.orbit.representative().to_string();
    const auto size = static_cast<std::int64_t>(o.orbit.size());
    r.result["rows"].push_back({{"cusp", rep},
                                {"size", str(size)},
                                {"n", str(o.rotation.orbit_len)},
                                {"k", str(o.rotation.k)},
                                {"m", str(o.m)}});
    r.line(rep + "  " + str(size) + "  " + str(o.rotation.orbit_len) + "  " + str(o.rotation.k) + "  " + str(o.m));
  }
}

Report cmd_equation(std::int64_t q, std::optional<std::int64_t> n, bool normalize, const std::string& convention,
                    bool solve) {
  Report r("equation");
  r.inputs = {{"q", str(q)},
              {"n", str(n.value_or(1))},
              {"normalize", normalize || solve},
              {"convention", convention},
              {"solve_constants", solve}};
  const auto build = build_for(q, n);
  const BigInt g = genus::genus_q(q);
  add_orbit_table(build, r);
  r.result["equation"] = build.equation.to_string();
  r.result["exponents"] = json::array();
  for (auto m : build.equation.exponents()) r.result["exponents"].push_back(str(m));
  r.line(build.equation.to_string());
  r.check("genus of the cover against g_q", str(g), str(curve::curve_genus(build.equation)));
  if (!normalize && !solve) return r;

  const auto nz = normalize_for(build, convention);
  r.result["normalized"] = nz.eq.to_string();
  json undetermined = json::array();
  for (const auto& l : nz.eq.symbolic_labels()) undetermined.push_back(l);
  r.result["undetermined"] = undetermined;
  r.line("normalized: " + nz.eq.to_string());
  if (!nz.eq.symbolic_labels().empty()) r.line("undetermined constants: " + join(nz.eq.symbolic_labels(), ", "));
  r.check("genus of the normalized cover", str(g), str(curve::curve_genus(nz.eq)));
  if (!solve) return r;
  if (nz.eq.symbolic_labels().empty()) {
    r.note("no undetermined constants");
    r.result["solved"] = nz.eq.to_string();
    return r;
  }
  const auto solved = solve_single_constant(build, nz, r);
  r.result["solved"] = solved.to_string();
  r.line("solved: " + solved.to_string());
  r.check("genus of the solved cover", str(g), str(curve::curve_genus(solved)));
  return r;
}

Report cmd_lift_solve(std::int64_t q, std::optional<std::int64_t> n, const std::string& convention) {
  Report r("lift-solve");
  r.inputs = {{"q", str(q)}, {"n", str(n.value_or(1))}, {"convention", convention}};
  const auto build = build_for(q, n);
  const auto nz = normalize_for(build, convention);
  r.result["family"] = nz.eq.to_string();
  r.line("family: " + nz.eq.to_string());
  const auto solved = solve_single_constant(build, nz, r);
  r.result["solved"] = solved.to_string();
  r.line("solved: " + solved.to_string());
  const auto pts = curve::branch_points(solved);
  r.check("genus of the solved cover", str(genus::genus_q(q)), str(curve::curve_genus(solved)));
  r.result["branch_points"] = json::array();
  for (const auto& b : pts) r.result["branch_points"].push_back(b ? str(*b) : std::string("inf"));
  return r;
}

// ---------------------------------------------------------------- group

Report cmd_group(std::int64_t q, bool order, bool max_order, bool center, const std::vector<std::string>& cusp_maps) {
  Report r("group");
  r.inputs = {{"q", str(q)}, {"order", order}, {"max_order", max_order}, {"center", center}};
  if (!cusp_maps.empty()) r.inputs["cusp_maps"] = cusp_maps;
  if (q < 2 || q > group::kEnumerationLimit) throw UsageError("--q must lie in [2, " + str(group::kEnumerationLimit) + "]");
  if (!order && !max_order && !center && cusp_maps.empty()) order = true;
  if (order) {
    const auto size = static_cast<std::int64_t>(group::enumerate_psl(q).size());
    r.result["order"] = str(size);
    r.line("|PSL(2, Z/" + str(q) + ")| = " + str(size));
    if (q >= 3) r.check("order against the closed form", str(group::r_formula(q)), str(size));
  }
  if (max_order) {
    const auto m = group::max_element_order(q);
    const auto type = group::to_string(group::type_classify(q));
    r.result["max_order"] = str(m);
    r.result["type"] = type;
    r.line("largest element order " + str(m) + " (type " + type + ")");
    r.check("largest order against 3q/2 or q", str(group::max_order_formula(q)), str(m));
  }
  if (center) {
    const auto z = group::center(q);
    json elems = json::array();
    std::vector<std::string> names;
    for (const auto& e : z) {
      elems.push_back(e.to_string());
      names.push_back(e.to_string());
    }
    r.result["center"] = elems;
    r.line(z.size() == 1 ? "center: identity only" : "center: " + join(names, " "));
  }
  if (!cusp_maps.empty()) {
    const auto c1 = cusps::cusp_canonical(q, parse_cusp(cusp_maps.at(0)));
    const auto c2 = cusps::cusp_canonical(q, parse_cusp(cusp_maps.at(1)));
    const auto maps = group::maps_between_cusps(q, c1, c2);
    json elems = json::array();
    r.line(str(static_cast<std::int64_t>(maps.size())) + " elements take [" + c1.to_string() + "] to [" +
           c2.to_string() + "]");
    for (const auto& e : maps) {
      elems.push_back(e.to_string());
      r.line("  " + e.to_string());
    }
    r.result["cusp_maps"] = {{"from", c1.to_string()}, {"to", c2.to_string()}, {"count", str(static_cast<std::int64_t>(maps.size()))}, {"elements", elems}};
  }
  return r;
}

// ---------------------------------------------------------------- verification

const equation::SemiHyperellipticEquation& octic_family() {
  static const auto eq = [] {
    const auto build = equation::build_equation(8, 1);
    return equation::normalize_equation(
        build, equation::choose_normalization(build, equation::Convention::DistinguishedZero), "a");
  }();
  return eq;
}

/// Column tokens of the orders table as monomials on the octic family.
curve::Monomial table6_column(const std::string& col) {
  using M = curve::Monomial;
  static const std::map<std::string, M> columns{
      {"x", M{{1, 0, 0}, 0, false}},
      {"x-1", M{{0, 1, 0}, 0, false}},
      {"y", M{{0, 0, 0}, -1, false}},
      {"dx", M{{0, 0, 0}, 0, true}},
      {"dx/y^3", M{{0, 0, 0}, 3, true}},
      {"x.dx/y^5", M{{1, 0, 0}, 5, true}},
      {"x.dx/y^6", M{{1, 0, 0}, 6, true}},
      {"x(x-1).dx/y^7", M{{1, 1, 0}, 7, true}},
      {"x.dx/y^7", M{{1, 0, 0}, 7, true}},
  };
  auto it = columns.find(col);
  if (it == columns.end()) throw DomainError("unknown column " + col);
  return it->second;
}

curve::SheetPoint table6_row(const std::string& row) {
  if (row == "0_l") return {0, 0};
  if (row == "(1,0)") return {1, 0};
  if (row == "(a,0)") return {2, 0};
  if (row == "inf_l") return {std::nullopt, 0};
  throw DomainError("unknown row " + row);
}

std::string cell_name(const golden::Record& rec) {
  return "table " + str(rec.table) + " [" + rec.row + ", " + rec.column + "]";
}

void verify_table1(Report& r, std::int64_t q_max) {
  for (const auto& rec : golden::table(1)) {
    const std::int64_t q = std::stoll(rec.column);
    if (q > q_max) continue;
    std::string got;
    if (rec.row == "g_q") {
      got = str(genus::genus_q(q));
    } else if (q >= 5) {
      got = str(genus::genus_qn(q, 1));
    } else {
      // X_q^1 is a quotient of X_q, which has genus 0 here.
      got = genus::genus_q(q) == 0 ? "0" : "?";
    }
    r.check(cell_name(rec), rec.value, got);
  }
}

void verify_table2(Report& r) {
  const auto build = equation::build_equation(8, 1);
  for (const auto& rec : golden::table(2)) {
    std::string got = "missing";
    for (const auto& o : build.orbits) {
      if (o.orbit.representative().to_string() != rec.row) continue;
      if (rec.column == "size") got = str(static_cast<std::int64_t>(o.orbit.size()));
      if (rec.column == "k") got = str(o.rotation.k);
      if (rec.column == "m") got = str(o.m);
    }
    r.check(cell_name(rec), rec.value, got);
  }
}

void verify_table6(Report& r) {
  const auto& fam = octic_family();
  for (const auto& rec : golden::table(6)) {
    const auto got = curve::differential_order(fam, table6_column(rec.column), table6_row(rec.row));
    r.check(cell_name(rec), rec.value, str(got));
  }
}

void verify_table7(Report& r) {
  for (const auto& rec : golden::table(7)) {
    const std::int64_t q = std::stoll(rec.column);
    BigInt got;
    if (rec.row == "g_q") got = genus::genus_q(q);
    if (rec.row == "g_q^1") got = genus::genus_qn(q, 1);
    if (rec.row == "g_q'") got = genus::genus_prime_quotient(q);
    r.check(cell_name(rec), rec.value, str(got));
  }
}

void verify_oracles(Report& r, std::int64_t q_max) {
  for (std::int64_t q = 2; q <= q_max; ++q) {
    r.check("largest element order, q = " + str(q), str(group::max_order_formula(q)),
            str(group::max_element_order(q)));
  }
  for (std::int64_t q = 3; q <= q_max; ++q) {
    const std::string at = ", q = " + str(q);
    r.check("|PSL(2, Z/q)| by enumeration" + at, str(group::r_formula(q)),
            str(static_cast<std::int64_t>(group::enumerate_psl(q).size())));
    const auto classes = cusps::enumerate_cusps(q);
    r.check("cusp count by enumeration" + at, str(cusps::h_formula(q)),
            str(static_cast<std::int64_t>(classes.size())));
    if (q < 5) continue;
    std::vector<std::string> h_exp, h_got, sum_exp, sum_got, g_exp, g_got;
    std::size_t width_mismatch = 0, lemma_mismatch = 0, dist_mismatch = 0;
    for (auto n : arith::divisors(q)) {
      const auto orbits = cusps::tau_orbits(q, n);
      h_exp.push_back(str(cusps::h_n_formula(q, n)));
      h_got.push_back(str(static_cast<std::int64_t>(orbits.size())));
      BigInt total = 0;
      for (const auto& o : orbits) {
        total += cusps::width(q, n, o.representative().lift());
        if (!cusps::lemma_width_check(q, n, o)) ++lemma_mismatch;
      }
      sum_exp.push_back(str(group::r_n_formula(q, n)));
      sum_got.push_back(str(total));
      for (const auto& c : classes) {
        if (cusps::width(q, n, c.lift()) != cusps::width_bruteforce(q, n, c.lift())) ++width_mismatch;
      }
      if (cusps::width_distribution(q, n) != cusps::width_distribution_direct(q, n)) ++dist_mismatch;
      g_exp.push_back(str(genus::genus_qn(q, n)));
      g_got.push_back(str(genus::euler_genus(cusps::h_n_formula(q, n), group::r_n_formula(q, n))));
    }
    r.check("orbit counts over n | q" + at, join(h_exp), join(h_got));
    r.check("summed orbit widths against R_q^n" + at, join(sum_exp), join(sum_got));
    r.check("width mismatches against the congruence scan" + at, "0", str(static_cast<std::int64_t>(width_mismatch)));
    r.check("width distribution mismatches" + at, "0", str(static_cast<std::int64_t>(dist_mismatch)));
    r.check("orbit width lemma failures" + at, "0", str(static_cast<std::int64_t>(lemma_mismatch)));
    r.check("g_q^n against 1 - h/2 + R/12" + at, join(g_exp), join(g_got));
  }
  for (std::int64_t q : {7, 8, 12}) {
    if (q > q_max) continue;
    r.check("Hurwitz relation for (q, 3, 2), q = " + str(q), str(2 * genus::genus_q(q) - 2),
            str(genus::hurwitz_deficiency(group::r_formula(q), 0, {q, 3, 2})));
  }
}

void verify_canonical(Report& r) {
  const auto e = canonical::elimination_solve();
  r.check("elimination forces a", "-1", str(e.a));
  r.check("size of the solved family", "8", str(static_cast<std::int64_t>(e.family_size)));
  r.check_true("solved family is sigma_0, ..., sigma_7", canonical::family_matches_sigma(e));
  for (const auto& s : e.steps) r.line("  " + s.name + ": " + join(s.derived, "; "));
  for (std::int64_t j = 0; j < 8; ++j) {
    r.check_true("sigma_" + str(j) + " preserves the quadrics at a = -1", canonical::sigma_preserves_ideal(-1, j));
  }
  for (int a : {2, 3, -2}) {
    bool any = false;
    for (std::int64_t j = 0; j < 8; ++j) any = any || canonical::sigma_preserves_ideal(a, j);
    r.check_true("no sigma preserves the quadrics at a = " + str(a), !any);
  }
  // D^0 is D^8.
  std::vector<canonical::Matrix5> deck_powers{canonical::deck_matrix()};
  for (int i = 1; i < 8; ++i) deck_powers.push_back(canonical::multiply(deck_powers.back(), canonical::deck_matrix()));
  std::rotate(deck_powers.rbegin(), deck_powers.rbegin() + 1, deck_powers.rend());
  bool closed = true;
  for (std::int64_t j = 0; j < 8; ++j) {
    for (std::int64_t k = 0; k < 8; ++k) {
      closed = closed && canonical::proportional(
                             canonical::multiply(canonical::sigma_matrix(j, -1), canonical::sigma_matrix(k, -1)),
                             deck_powers[(j + k) % 8]);
    }
  }
  r.check_true("sigma_j sigma_k is the deck power D^(j+k)", closed);
  const auto count = canonical::automorphism_count_crosscheck();
  r.check("elements of PSL(2, Z/8) taking [inf] to [3/8]", "8", str(static_cast<std::int64_t>(count.group_side)));
  r.check("sigma matrices at a = -1", "8", str(static_cast<std::int64_t>(count.sigma_side)));
  const auto inf = cusps::cusp_canonical(8, cusps::Cusp::infinity());
  const auto c38 = cusps::cusp_canonical(8, cusps::Cusp(3, 8));
  auto cls = [](std::vector<std::pair<int, int>> xs) {
    std::set<cusps::CuspClass> out;
    for (auto [x, z] : xs) out.insert(cusps::CuspClass(8, x, z));
    return out;
  };
  const auto quarter = cls({{1, 4}, {3, 4}});
  const auto half = cls({{1, 2}, {3, 2}, {5, 2}, {7, 2}});
  std::size_t good = 0;
  const auto maps = group::maps_between_cusps(8, inf, c38);
  for (const auto& g : maps) {
    bool ok = group::cusp_action(g, c38) == inf;
    for (const auto* set : {&quarter, &half}) {
      std::set<cusps::CuspClass> image;
      for (const auto& c : *set) image.insert(group::cusp_action(g, c));
      ok = ok && image == *set;
    }
    if (ok) ++good;
  }
  r.check("maps swapping [inf] and [3/8] and fixing both orbit sets", str(static_cast<std::int64_t>(maps.size())),
          str(static_cast<std::int64_t>(good)));
  for (const auto& s : canonical::special_point_checks()) r.check_true("on the model: " + s.name, s.on_model);
  const auto basis = curve::holomorphic_basis(curve::assign_constant(octic_family(), -1));
  std::vector<std::string> names;
  for (const auto& m : basis) names.push_back(curve::to_string(octic_family(), m));
  r.check("holomorphic basis", "1/y^3 dx,x/y^5 dx,x/y^6 dx,x*(x-1)/y^7 dx,x/y^7 dx", join(names));
}

void verify_iso(Report& r, std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  const auto source = curve::numeric_curve(curve::assign_constant(octic_family(), -1));
  const auto [forward, inverse] = curve::octic_to_quartic_maps();
  const auto rep = curve::verify_isomorphism_numeric(source, curve::quartic_model(), forward, inverse, samples, rng);
  r.result["iso"] = {{"seed", str(static_cast<std::int64_t>(seed))},
                     {"points", str(static_cast<std::int64_t>(rep.samples))},
                     {"max_residual", rep.max_residual},
                     {"max_roundtrip", rep.max_roundtrip}};
  r.check_true("isomorphism residual below 1e-9 on " + str(static_cast<std::int64_t>(rep.samples)) + " points",
               rep.max_residual < 1e-9, "< 1e-9", sci(rep.max_residual));
  r.check_true("round trip deviation below 1e-9", rep.max_roundtrip < 1e-9, "< 1e-9", sci(rep.max_roundtrip));
  if (rep.max_residual < 1e-9) r.line("max residual " + sci(rep.max_residual) + ", round trip " + sci(rep.max_roundtrip));
}

struct VerifyOptions {
  std::vector<int> tables;
  bool oracles = false;
  bool canonical = false;
  bool iso = false;
  std::int64_t q_max = 24;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
};

Report cmd_verify(VerifyOptions o) {
  Report r("verify");
  if (o.tables.empty() && !o.oracles && !o.canonical && !o.iso) {
    o.tables = {1, 2, 6, 7};
    o.oracles = o.canonical = o.iso = true;
  }
  json tables = json::array();
  for (int t : o.tables) tables.push_back(str(t));
  r.inputs = {{"tables", tables}, {"oracles", o.oracles}, {"canonical", o.canonical}, {"iso", o.iso},
              {"q_max", str(o.q_max)}};
  if (o.q_max < 3 || o.q_max > group::kEnumerationLimit) {
    throw UsageError("--q-max must lie in [3, " + str(group::kEnumerationLimit) + "]");
  }
  if (o.samples < 1) throw UsageError("--samples must be positive");
  for (int t : o.tables) {
    switch (t) {
      case 1: verify_table1(r, o.q_max); break;
      case 2: verify_table2(r); break;
      case 6: verify_table6(r); break;
      case 7: verify_table7(r); break;
      default: throw UsageError("no golden data for table " + str(t) + " (have 1, 2, 6, 7)");
    }
  }
  if (o.oracles) verify_oracles(r, o.q_max);
  if (o.canonical) verify_canonical(r);
  if (o.iso) verify_iso(r, o.seed, o.samples);
  std::int64_t failed = 0;
  for (const auto& c : r.checks()) failed += c.pass ? 0 : 1;
  r.result["checked"] = str(static_cast<std::int64_t>(r.checks().size()));
  r.result["failed"] = str(failed);
  r.line(str(static_cast<std::int64_t>(r.checks().size())) + " checks, " + str(failed) + " failed");
  return r;
}

// ---------------------------------------------------------------- canonical

Report cmd_canonical(const std::optional<std::string>& a_text) {
  Report r("canonical");
  if (!a_text) {
    r.line("z3^2 = z2 z5, z2^2 = z1 (z4 + z5), z1^2 = z4 (z4 - (a - 1) z5)");
    verify_canonical(r);
    return r;
  }
  r.inputs["a"] = *a_text;
  const Rational a = parse_rational(*a_text);
  if (a == 0 || a == 1) throw UsageError("a must differ from the branch values 0 and 1");
  json rows = json::array();
  for (std::int64_t j = 0; j < 8; ++j) {
    const bool ok = canonical::sigma_preserves_ideal(a, j);
    rows.push_back(ok);
    r.line("sigma_" + str(j) + (ok ? " preserves" : " does not preserve") + " the quadrics");
  }
  r.result["a"] = str(a);
  r.result["sigma_preserves"] = rows;
  return r;
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.to_json().dump(2) << '\n';
  } else {
    r.print_text(out);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cusps, genera and semi-hyperelliptic equations of the modular curves X_q.", "modcurve"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::uint64_t seed = 20240601;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "Seed of the numeric isomorphism check");

  std::int64_t q = 0, n = 1;
  std::optional<std::int64_t> n_given;
  auto add_q = [&](CLI::App* sub) { sub->add_option("--q", q, "Level q")->required(); };
  auto add_n = [&](CLI::App* sub) {
    return sub->add_option_function<std::int64_t>("--n", [&](const std::int64_t& v) { n = v; n_given = v; },
                                                  "Divisor n of q");
  };

  auto* genus_cmd = app.add_subcommand("genus", "g_q, and g_q^n, h_q^n, R_q^n when --n is given");
  add_q(genus_cmd);
  add_n(genus_cmd);

  bool widths = false, distribution = false;
  auto* cusps_cmd = app.add_subcommand("cusps", "Orbits of translation by n on the cusps of Gamma(q)");
  add_q(cusps_cmd);
  add_n(cusps_cmd);
  cusps_cmd->add_flag("--widths", widths, "Show widths in Gamma_q^n");
  cusps_cmd->add_flag("--distribution", distribution, "Count orbits by width");

  std::optional<std::string> cusp;
  auto* rotation_cmd = app.add_subcommand("rotation", "Rotation numbers of tau_n and the exponents they force");
  add_q(rotation_cmd);
  add_n(rotation_cmd);
  rotation_cmd->add_option("--cusp", cusp, "A single cusp, 'inf' or 'x/z'");

  bool normalize = false, solve = false;
  std::string convention = "distinguished-zero";
  auto* equation_cmd = app.add_subcommand("equation", "Equation of X_q as a cyclic cover of the line");
  add_q(equation_cmd);
  add_n(equation_cmd);
  equation_cmd->add_flag("--normalize", normalize, "Move three branch orbits to infinity, 0 and 1");
  equation_cmd->add_option("--convention", convention,
                           "Which orbits are moved: distinguished-zero, ascending or min-infinity");
  equation_cmd->add_flag("--solve-constants", solve, "Determine a single remaining constant");

  bool order = false, max_order = false, center = false;
  std::vector<std::string> cusp_maps;
  auto* group_cmd = app.add_subcommand("group", "PSL(2, Z/q) by enumeration");
  add_q(group_cmd);
  group_cmd->add_flag("--order", order, "Order of the group");
  group_cmd->add_flag("--max-order", max_order, "Largest element order");
  group_cmd->add_flag("--center", center, "The center");
  group_cmd->add_option("--cusp-maps", cusp_maps, "Elements taking one cusp class to another")->expected(2);

  VerifyOptions vopt;
  std::string tables;
  auto* verify_cmd = app.add_subcommand("verify", "Check the embedded table data and the oracles; all when nothing is selected");
  verify_cmd->add_option("--tables", tables, "Comma-separated table ids among 1, 2, 6, 7");
  verify_cmd->add_flag("--oracles", vopt.oracles, "Closed forms against enumeration up to --q-max");
  verify_cmd->add_flag("--canonical", vopt.canonical, "The canonical model of X_8");
  verify_cmd->add_flag("--iso", vopt.iso, "Numeric check of the isomorphism onto y^4 = x(x-1)(x+1)(x^2+1)^2");
  verify_cmd->add_option("--q-max", vopt.q_max, "Largest level for table 1 and the oracles");
  verify_cmd->add_option("--samples", vopt.samples, "x samples of the numeric check");

  auto* lift_cmd = app.add_subcommand("lift-solve", "Solve the constant of a normalized equation by lifting Moebius maps");
  add_q(lift_cmd);
  add_n(lift_cmd);
  lift_cmd->add_option("--convention", convention, "Normalization convention");

  std::optional<std::string> a_text;
  auto* canonical_cmd = app.add_subcommand("canonical", "The canonical model of y^8 = x^2(x-1)(x-a) in P^4");
  canonical_cmd->add_option("--a", a_text, "Test the sigma matrices at this rational a instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "modcurve: error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    std::optional<Report> report;
    if (*genus_cmd) {
      report = cmd_genus(q, n_given);
    } else if (*cusps_cmd) {
      report = cmd_cusps(q, n, widths, distribution);
    } else if (*rotation_cmd) {
      report = cmd_rotation(q, n, cusp);
    } else if (*equation_cmd) {
      report = cmd_equation(q, n_given, normalize, convention, solve);
    } else if (*group_cmd) {
      report = cmd_group(q, order, max_order, center, cusp_maps);
    } else if (*verify_cmd) {
      std::stringstream ss(tables);
      for (std::string t; std::getline(ss, t, ',');) {
        try {
          vopt.tables.push_back(std::stoi(t));
        } catch (const std::exception&) {
          throw UsageError("bad table id '" + t + "'");
        }
      }
      vopt.seed = seed;
      report = cmd_verify(vopt);
    } else if (*lift_cmd) {
      report = cmd_lift_solve(q, n_given, convention);
    } else if (*canonical_cmd) {
      report = cmd_canonical(a_text);
    }
    emit(*report, format, out);
    if (!report->passed()) {
      for (const auto& c : report->checks()) {
        if (c.pass) continue;
        err << "modcurve: check failed: " << c.name << ": expected " << c.expected << ", got " << c.got << '\n';
        break;
      }
      return kMismatch;
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "modcurve: error: " << e.what() << '\n';
    return kUsage;
  } catch (const Unsupported& e) {
    err << "modcurve: unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const DomainError& e) {
    err << "modcurve: error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace modcurve::cli
