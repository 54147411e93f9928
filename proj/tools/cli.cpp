#include "cli.hpp"

#include "dioph/conic.hpp"
#include "dioph/cubic.hpp"
#include "dioph/curve_invariants.hpp"
#include "dioph/error.hpp"
#include "dioph/function_field.hpp"
#include "dioph/groebner.hpp"
#include "dioph/integral_search.hpp"
#include "dioph/parser.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace dioph::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Request {
  std::string command;
  std::vector<std::string> positional;
  std::optional<std::string> bound;
  std::optional<std::string> height;
  std::optional<unsigned> degree;
  std::optional<std::uint64_t> steps;
  bool json = false;
  std::vector<std::string> base_points;
  std::optional<std::string> slope;
  std::vector<std::string> pins;
  std::string order = "lex";
  std::optional<std::string> vars;
  unsigned threads = 1;
  bool solve = false;
};

struct Report {
  Json doc;
  std::string text;
  int exit = kOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- formatting ------------------------------------------------------------

const Integer kJsonSafe("9007199254740991");

Json json_integer(const Integer& v) {
  if (abs(v) <= kJsonSafe) return Json(v.get_si());
  return Json(to_string(v));
}

Json json_rational(const Rational& v) { return Json(to_string(v)); }

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c + 1 == cells.size()) {
        s += cells[c];
      } else {
        s += cells[c] + std::string(width[c] - cells[c].size() + 2, ' ');
      }
    }
    os << s << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string key_values(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::size_t w = 0;
  for (const auto& [k, v] : kv) w = std::max(w, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string verdict_of(bool truncated, bool found) {
  if (truncated) return "truncated";
  return found ? "found" : "empty";
}

Json integer_points_json(const std::vector<IntegerPoint>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) {
    arr.push_back({{"x", json_integer(p.x)},
                   {"y", json_integer(p.y)},
                   {"height", json_integer(std::max({abs(p.x), abs(p.y), Integer(1)}))}});
  }
  return arr;
}

std::string integer_points_text(const std::vector<IntegerPoint>& pts) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : pts) rows.push_back({to_string(p.x), to_string(p.y)});
  return table({"x", "y"}, rows);
}

Json rational_point_json(const RationalPoint& p) {
  return {{"x", json_rational(p.x)}, {"y", json_rational(p.y)}, {"height", json_integer(height(p))}};
}

Json rational_points_json(const std::vector<ProjectiveSolution>& pts) {
  Json arr = Json::array();
  for (const auto& s : pts) arr.push_back(rational_point_json(s.point()));
  return arr;
}

std::string rational_points_text(const std::vector<ProjectiveSolution>& pts) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : pts) {
    RationalPoint p = s.point();
    rows.push_back({to_string(p.x), to_string(p.y), to_string(s.height())});
  }
  return table({"x", "y", "height"}, rows);
}

// ---- argument parsing ------------------------------------------------------

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

RationalPoint parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected a point \"x,y\"", text.size());
  return {parse_rational(trim(std::string_view(text).substr(0, comma))),
          parse_rational(trim(std::string_view(text).substr(comma + 1)))};
}

EllipticPoint parse_elliptic_point(const std::string& text) {
  const std::string t = trim(text);
  if (t == "inf" || t == "O" || t == "infinity") return EllipticPoint::infinity();
  RationalPoint p = parse_point(t);
  return EllipticPoint::at(p.x, p.y);
}

Integer nonnegative(const std::string& text, const char* what) {
  Integer v = parse_integer(trim(text));
  if (v < 0) throw UsageError(std::string(what) + " must be nonnegative");
  return v;
}

void expect_positionals(const Request& req, std::size_t n) {
  if (req.positional.size() != n) {
    throw UsageError(req.command + ": expected " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") +
                     ", got " + std::to_string(req.positional.size()));
  }
}

SearchOptions search_options(const Request& req) {
  SearchOptions o;
  o.step_budget = req.steps;
  o.threads = std::max(1U, req.threads);
  return o;
}

Json base_doc(const Request& req, const std::string& input) {
  Json doc;
  doc["command"] = req.command;
  doc["input"] = input;
  return doc;
}

// ---- commands --------------------------------------------------------------

Report cmd_analyze(const Request& req) {
  expect_positionals(req, 1);
  const BivariatePolynomial f = BivariatePolynomial::parse(req.positional[0]);
  const CurveInvariants inv = classify(f);
  Report r;
  r.doc = base_doc(req, f.to_string());
  r.doc["invariants"] = {{"degree", inv.degree},
                         {"genus", inv.genus},
                         {"s", inv.punctures},
                         {"class", std::string(to_string(inv.trichotomy))},
                         {"siegel_finite_integral", inv.siegel_finite_integral},
                         {"smoothness_checked", inv.smoothness_checked}};
  r.text = key_values({{"curve", f.to_string()},
                       {"degree d", std::to_string(inv.degree)},
                       {"genus g", std::to_string(inv.genus) + (inv.smoothness_checked ? "" : " (curve is singular; "
                                                                                              "smooth-curve value)")},
                       {"points at infinity s", std::to_string(inv.punctures)},
                       {"class", std::string(to_string(inv.trichotomy))},
                       {"finitely many integral points (2g-2+s > 0)", yes_no(inv.siegel_finite_integral)},
                       {"affine part smooth", yes_no(inv.smoothness_checked)}});
  r.text += "note: s is the number of distinct linear factors of the top-degree form; it can differ from the\n"
            "number of punctures when the projective closure is singular at infinity\n";
  return r;
}

Report from_integral(const Request& req, const std::string& input, const IntegralSearchResult& res,
                     const Integer& bound, const std::string& caption) {
  Report r;
  r.doc = base_doc(req, input);
  r.doc["points"] = integer_points_json(res.points);
  r.doc["verdict"] = verdict_of(res.truncated, !res.points.empty());
  r.doc["bound"] = json_integer(bound);
  r.doc["steps"] = res.steps;
  std::ostringstream os;
  os << caption << '\n';
  if (res.truncated) os << "search truncated after " << res.steps << " steps; results are partial\n";
  os << res.points.size() << " solution" << (res.points.size() == 1 ? "" : "s") << '\n';
  if (!res.points.empty()) os << integer_points_text(res.points);
  r.text = os.str();
  if (res.truncated) r.exit = kBudgetExhausted;
  return r;
}

Report cmd_solve_cubes(const Request& req) {
  expect_positionals(req, 1);
  const Integer m = parse_integer(trim(req.positional[0]));
  const Integer bound = taxicab_bound(m);
  IntegralSearchResult res = sum_of_cubes_solutions(m, search_options(req));
  return from_integral(req, to_string(m), res, bound,
                       "x^3 + y^3 = " + to_string(m) + ", complete for |x|, |y| <= " + to_string(bound));
}

Report cmd_search_integral(const Request& req) {
  expect_positionals(req, 1);
  if (!req.bound) throw UsageError("search-integral needs --bound");
  const BivariatePolynomial f = BivariatePolynomial::parse(req.positional[0]);
  const Integer bound = nonnegative(*req.bound, "--bound");
  IntegralSearchResult res = box_search_integral(f, bound, search_options(req));
  return from_integral(req, f.to_string(), res, bound,
                       f.to_string() + " = 0, integer points with |x|, |y| <= " + to_string(bound));
}

Report cmd_search_rational(const Request& req) {
  expect_positionals(req, 1);
  if (!req.height) throw UsageError("search-rational needs --height");
  const BivariatePolynomial f = BivariatePolynomial::parse(req.positional[0]);
  const Integer h = nonnegative(*req.height, "--height");
  RationalSearchResult res = rational_point_search(f, h, search_options(req));
  Integer record = 0;
  for (const auto& s : res.points) record = std::max(record, s.height());
  Report r;
  r.doc = base_doc(req, f.to_string());
  r.doc["points"] = rational_points_json(res.points);
  r.doc["verdict"] = verdict_of(res.truncated, !res.points.empty());
  r.doc["bound"] = json_integer(h);
  r.doc["record"] = json_integer(record);
  r.doc["steps"] = res.steps;
  std::ostringstream os;
  os << f.to_string() << " = 0, rational points of height <= " << h << '\n';
  if (res.truncated) os << "search truncated after " << res.steps << " steps; results are partial\n";
  os << res.points.size() << " point" << (res.points.size() == 1 ? "" : "s") << ", height record " << record
     << " (a lower bound for the largest height of any rational point)\n";
  if (!res.points.empty()) os << rational_points_text(res.points);
  r.text = os.str();
  if (res.truncated) r.exit = kBudgetExhausted;
  return r;
}

Report cmd_conic_decide(const Request& req) {
  expect_positionals(req, 3);
  const Conic conic(parse_integer(trim(req.positional[0])), parse_integer(trim(req.positional[1])),
                    parse_integer(trim(req.positional[2])));
  const HolzerVerdict v = holzer_decide(conic, search_options(req));
  Report r;
  r.doc = base_doc(req, conic.polynomial().to_string());
  r.doc["verdict"] = verdict_of(v.truncated, v.witness.has_value());
  r.doc["bound"] = json_integer(v.bound);
  if (v.witness) r.doc["points"] = rational_points_json({*v.witness});
  if (v.no_real_points) r.doc["reason"] = "no real points";
  std::ostringstream os;
  os << conic.polynomial().to_string() << " = 0\n";
  if (v.no_real_points) {
    os << "no rational points: the left side is positive and c < 0\n";
  } else if (v.witness) {
    os << "rational point found within height bound " << v.bound << '\n' << rational_points_text({*v.witness});
  } else if (v.truncated) {
    os << "undecided: search truncated after " << v.steps << " steps (bound " << v.bound << ")\n";
    r.exit = kBudgetExhausted;
  } else {
    os << "no rational points: none of height <= " << v.bound << " = floor(sqrt(abc)), which would exist "
       << "if any rational point did\n";
  }
  r.text = os.str();
  return r;
}

std::pair<Rational, Rational> parse_slope(const std::string& text) {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string::npos) return {Rational(1), parse_rational(t)};
  const Integer u = parse_integer(trim(std::string_view(t).substr(0, slash)));
  const Integer v = parse_integer(trim(std::string_view(t).substr(slash + 1)));
  if (u == 0 && v == 0) throw ParseError("slope 0/0", slash);
  return {Rational(v), Rational(u)};
}

Report cmd_conic_param(const Request& req) {
  expect_positionals(req, 1);
  const BivariatePolynomial f = BivariatePolynomial::parse(req.positional[0]);
  if (req.base_points.size() != 1) throw UsageError("conic-param needs exactly one --base-point");
  const RationalPoint base = parse_point(req.base_points[0]);
  Report r;
  r.doc = base_doc(req, f.to_string());
  std::ostringstream os;
  if (req.slope) {
    const auto [dx, dy] = parse_slope(*req.slope);
    auto pt = chord_point_direction(f, base, dx, dy);
    r.doc["verdict"] = pt ? "found" : "empty";
    r.doc["points"] = Json::array();
    if (pt) {
      r.doc["points"].push_back(rational_point_json(*pt));
      os << "second intersection: (" << to_string(pt->x) << ", " << to_string(pt->y) << ")\n";
    } else {
      os << "no second affine intersection: the line is tangent or meets the conic again at infinity\n";
    }
  } else {
    const Integer h = nonnegative(req.height.value_or("10"), "--height");
    const RationalSearchResult res = enumerate_rational_points(f, base, h, search_options(req));
    r.doc["points"] = rational_points_json(res.points);
    r.doc["verdict"] = verdict_of(res.truncated, !res.points.empty());
    r.doc["bound"] = json_integer(h);
    r.doc["slope_bound"] = json_integer(slope_height_bound(base, h));
    os << "rational points of height <= " << h << " on " << f.to_string() << " = 0 from lines through ("
       << to_string(base.x) << ", " << to_string(base.y) << ")\n";
    if (res.truncated) {
      os << "truncated after " << res.steps << " slopes; results are partial\n";
      r.exit = kBudgetExhausted;
    }
    os << res.points.size() << " point" << (res.points.size() == 1 ? "" : "s") << '\n'
       << rational_points_text(res.points);
  }
  r.text = os.str();
  return r;
}

Report third_point_report(const Request& req, const BivariatePolynomial& f, const std::optional<RationalPoint>& pt) {
  Report r;
  r.doc = base_doc(req, f.to_string());
  r.doc["verdict"] = pt ? "found" : "empty";
  r.doc["points"] = Json::array();
  if (pt) {
    r.doc["points"].push_back(rational_point_json(*pt));
    r.text = "third intersection: (" + to_string(pt->x) + ", " + to_string(pt->y) + ")\nheight " +
             to_string(height(*pt)) + '\n';
  } else {
    r.text = "third intersection is at infinity\n";
  }
  return r;
}

Report cmd_tangent(const Request& req) {
  expect_positionals(req, 1);
  if (req.base_points.size() != 1) throw UsageError("tangent needs exactly one --base-point");
  const BivariatePolynomial f = BivariatePolynomial::parse(req.positional[0]);
  return third_point_report(req, f, tangent_third_point(f, parse_point(req.base_points[0])));
}

Report cmd_secant(const Request& req) {
  expect_positionals(req, 1);
  if (req.base_points.size() != 2) throw UsageError("secant needs exactly two --base-point options");
  const BivariatePolynomial f = BivariatePolynomial::parse(req.positional[0]);
  return third_point_report(req, f,
                            secant_third_point(f, parse_point(req.base_points[0]), parse_point(req.base_points[1])));
}

Report cmd_ec_add(const Request& req) {
  expect_positionals(req, 2);
  if (req.base_points.size() != 2) throw UsageError("ec-add needs exactly two --base-point options");
  const WeierstrassCurve e(parse_integer(trim(req.positional[0])), parse_integer(trim(req.positional[1])));
  const EllipticPoint sum = e.add(parse_elliptic_point(req.base_points[0]), parse_elliptic_point(req.base_points[1]));
  Report r;
  r.doc = base_doc(req, e.polynomial().to_string());
  r.doc["points"] = Json::array();
  if (sum.is_infinity()) {
    r.doc["infinity"] = true;
    r.text = "P + Q = O (the point at infinity)\n";
  } else {
    r.doc["points"].push_back(rational_point_json(*sum.affine));
    r.text = "P + Q = (" + to_string(sum.affine->x) + ", " + to_string(sum.affine->y) + ")\n";
  }
  return r;
}

Report cmd_mordell(const Request& req) {
  expect_positionals(req, 1);
  if (!req.bound) throw UsageError("mordell needs --bound");
  const Integer k = parse_integer(trim(req.positional[0]));
  const Integer bound = nonnegative(*req.bound, "--bound");
  IntegralSearchResult res = mordell_integral_search(k, bound, search_options(req));
  Report r = from_integral(req, to_string(k), res, bound,
                           "y^2 = x^3 + " + to_string(k) + ", complete for |x| <= " + to_string(bound) +
                               " only (no bound on |x| is proved)");
  r.doc["complete_within_bound"] = true;
  return r;
}

Report cmd_baker(const Request& req) {
  expect_positionals(req, 2);
  const Integer a = parse_integer(trim(req.positional[0]));
  const Integer b = parse_integer(trim(req.positional[1]));
  const BakerEstimate est = baker_log_log_bound(a, b);
  Report r;
  r.doc = base_doc(req, "a=" + to_string(a) + " b=" + to_string(b));
  r.doc["log10_log10_bound"] = est.decimal;
  r.doc["value"] = json_rational(est.value);
  r.doc["error_bound"] = json_rational(est.error_bound);
  r.text = "log10(log10(B)) = " + est.decimal + "\nso B has about 10^" + est.decimal.substr(0, est.decimal.find('.') + 3) +
           " decimal digits, useless as a search cutoff\n";
  return r;
}

bool looks_numeric(const std::string& s) {
  const std::string t = trim(s);
  return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
}

Report cmd_ff_bound(const Request& req) {
  unsigned d = 0, s = 0;
  Json td;
  std::string input;
  if (req.positional.size() == 2 && looks_numeric(req.positional[0]) && looks_numeric(req.positional[1])) {
    d = static_cast<unsigned>(nonnegative(req.positional[0], "d").get_ui());
    s = static_cast<unsigned>(nonnegative(req.positional[1], "s").get_ui());
    input = "d=" + std::to_string(d) + " s=" + std::to_string(s);
  } else {
    expect_positionals(req, 1);
    const FunctionFieldCurve curve = FunctionFieldCurve::parse(req.positional[0]);
    const TDiscriminant disc = t_discriminant(curve);
    d = curve.xy_degree();
    s = disc.s;
    input = format_polynomial(curve.polynomial(), {"x", "y", "t"});
    td = {{"eliminant", disc.eliminant.to_string("t")}, {"groebner_fallback", disc.groebner_fallback}};
  }
  const Integer bound = ff_degree_bound(d, s);
  Report r;
  r.doc = base_doc(req, input);
  r.doc["degree"] = d;
  r.doc["s"] = s;
  if (!td.is_null()) r.doc["t_discriminant"] = td;
  r.doc["bound"] = json_integer(bound);
  r.doc["label"] = "generic-case bound";
  std::vector<std::pair<std::string, std::string>> kv{{"degree d", std::to_string(d)}, {"s", std::to_string(s)}};
  if (!td.is_null()) kv.push_back({"t-discriminant", td["eliminant"].get<std::string>()});
  kv.push_back({"(d^2-3d-1)(2s+1)", to_string(bound) + " (generic-case bound)"});
  r.text = key_values(kv);
  return r;
}

Pin parse_pin(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("expected a pin \"t:x,y\"", text.size());
  const RationalPoint p = parse_point(text.substr(colon + 1));
  return {parse_rational(trim(std::string_view(text).substr(0, colon))), p.x, p.y};
}

Report cmd_ff_search(const Request& req) {
  expect_positionals(req, 1);
  if (!req.degree) throw UsageError("ff-search needs --degree");
  const FunctionFieldCurve curve = FunctionFieldCurve::parse(req.positional[0]);
  FFSearchOptions opts;
  for (const auto& p : req.pins) opts.pins.push_back(parse_pin(p));
  opts.step_budget = req.steps;
  const FFSearchResult res = search_ff_solutions(curve, *req.degree, opts);
  Report r;
  r.doc = base_doc(req, format_polynomial(curve.polynomial(), {"x", "y", "t"}));
  Json sols = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : res.solutions) {
    sols.push_back({{"p", s.p().to_string("t")}, {"q", s.q().to_string("t")}, {"r", s.r().to_string("t")}});
    rows.push_back({s.p().to_string("t"), s.q().to_string("t"), s.r().to_string("t")});
  }
  r.doc["solutions"] = sols;
  r.doc["positive_dimensional"] = res.positive_dimensional;
  r.doc["pruned_branches"] = res.pruned_branches;
  if (!res.positive_dimensional) r.doc["verdict"] = verdict_of(res.truncated, !res.solutions.empty());
  r.doc["bound"] = *req.degree;
  std::ostringstream os;
  os << "solutions (p/r, q/r) with deg <= " << *req.degree << ": " << res.equations << " equations\n";
  if (res.truncated) {
    os << "Groebner computation stopped by the step budget; no solutions extracted\n";
    r.exit = kBudgetExhausted;
  } else if (res.positive_dimensional) {
    os << "the solution set is positive-dimensional; add --pin t:x,y constraints\n";
  } else {
    os << res.solutions.size() << " solution" << (res.solutions.size() == 1 ? "" : "s");
    if (res.pruned_branches > 0) os << ", " << res.pruned_branches << " non-rational branch(es) pruned";
    os << '\n';
    if (!rows.empty()) os << table({"p(t)", "q(t)", "r(t)"}, rows);
  }
  r.text = os.str();
  return r;
}

std::vector<std::string> detect_variables(const std::vector<std::string>& texts) {
  std::set<std::string> names;
  for (const auto& t : texts) {
    for (std::size_t i = 0; i < t.size();) {
      if (std::isalpha(static_cast<unsigned char>(t[i]))) {
        std::size_t j = i;
        while (j < t.size() && (std::isalnum(static_cast<unsigned char>(t[j])) || t[j] == '_')) ++j;
        names.insert(t.substr(i, j - i));
        i = j;
      } else {
        ++i;
      }
    }
  }
  return {names.begin(), names.end()};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Report cmd_groebner(const Request& req) {
  if (req.positional.empty()) throw UsageError("groebner needs at least one polynomial");
  MonomialOrder order;
  if (req.order == "lex") {
    order = MonomialOrder::Lex;
  } else if (req.order == "grevlex") {
    order = MonomialOrder::GrevLex;
  } else {
    throw UsageError("--order must be lex or grevlex");
  }
  const std::vector<std::string> vars = req.vars ? split_list(*req.vars) : detect_variables(req.positional);
  std::vector<MultivariatePolynomial> gens;
  for (const auto& t : req.positional) gens.push_back(parse_polynomial(t, vars, order));
  BuchbergerOptions opts;
  if (req.steps) opts.step_budget = *req.steps;
  const GroebnerBasis basis = buchberger(gens, order, opts);
  Report r;
  std::string input;
  for (std::size_t i = 0; i < gens.size(); ++i) input += (i ? ", " : "") + format_polynomial(gens[i], vars);
  r.doc = base_doc(req, input);
  r.doc["order"] = req.order;
  r.doc["variables"] = vars;
  Json b = Json::array();
  std::ostringstream os;
  os << "reduced Groebner basis (" << req.order;
  for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? " > " : ", ") << vars[i];
  os << "):\n";
  for (const auto& g : basis.generators) {
    b.push_back(format_polynomial(g, vars));
    os << "  " << format_polynomial(g, vars) << '\n';
  }
  r.doc["basis"] = b;
  if (req.solve) {
    const ZeroDimensionalSolutions zd = solve_zero_dimensional(basis);
    Json sols = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : zd.solutions) {
      Json s = Json::object();
      std::vector<std::string> row;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        s[vars[i]] = json_rational(v[i]);
        row.push_back(to_string(v[i]));
      }
      sols.push_back(s);
      rows.push_back(row);
    }
    r.doc["solutions"] = sols;
    r.doc["pruned_branches"] = zd.pruned_branches;
    r.doc["verdict"] = zd.solutions.empty() ? "empty" : "found";
    os << zd.solutions.size() << " rational solution" << (zd.solutions.size() == 1 ? "" : "s");
    if (zd.pruned_branches > 0) os << ", " << zd.pruned_branches << " non-rational branch(es) pruned";
    os << '\n';
    if (!rows.empty()) os << table(vars, rows);
  }
  r.text = os.str();
  return r;
}

const std::map<std::string, std::pair<std::function<Report(const Request&)>, std::string>>& commands() {
  static const std::map<std::string, std::pair<std::function<Report(const Request&)>, std::string>> table{
      {"analyze", {cmd_analyze, "degree, genus, points at infinity and integral-point finiteness of f(x,y)=0"}},
      {"solve-cubes", {cmd_solve_cubes, "all integer solutions of x^3 + y^3 = m"}},
      {"search-integral", {cmd_search_integral, "integer points of f(x,y)=0 in the box |x|,|y| <= --bound"}},
      {"search-rational", {cmd_search_rational, "rational points of f(x,y)=0 of height <= --height"}},
      {"conic-decide", {cmd_conic_decide, "decide whether a x^2 + b y^2 = c has a rational point"}},
      {"conic-param", {cmd_conic_param, "rational points of a conic from lines through --base-point"}},
      {"tangent", {cmd_tangent, "third intersection of a cubic with its tangent at --base-point"}},
      {"secant", {cmd_secant, "third intersection of a cubic with the line through two --base-point"}},
      {"ec-add", {cmd_ec_add, "sum of two points on y^2 = x^3 + a x + b"}},
      {"mordell", {cmd_mordell, "integer points of y^2 = x^3 + k with |x| <= --bound"}},
      {"baker", {cmd_baker, "size of Baker's bound for y^2 = x^3 + a x + b"}},
      {"ff-bound", {cmd_ff_bound, "degree bound (d^2-3d-1)(2s+1), from d s or from F(x,y,t)"}},
      {"ff-search", {cmd_ff_search, "solutions in rational functions of t of degree <= --degree"}},
      {"groebner", {cmd_groebner, "reduced Groebner basis of the given polynomials"}},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Diophantine toolkit: plane curves over Q, conics, cubics and function fields", "dioph"};
  app.require_subcommand(1);
  Request req;
  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    sub->add_option("args", req.positional, "command arguments (polynomials, integers)");
    sub->add_option("--bound", req.bound, "search bound");
    sub->add_option("--height", req.height, "height bound");
    sub->add_option("--degree", req.degree, "degree of the unknown polynomials");
    sub->add_option("--steps", req.steps, "step budget (default: unbounded)");
    sub->add_flag("--json", req.json, "emit JSON");
    sub->add_option("--base-point", req.base_points, "point \"x,y\" (repeatable)");
    sub->add_option("--slope", req.slope, "slope \"u/v\"; v = 0 is the vertical line");
    sub->add_option("--pin", req.pins, "constraint \"t:x,y\" for ff-search (repeatable)");
    sub->add_option("--order", req.order, "monomial order: lex or grevlex");
    sub->add_option("--vars", req.vars, "variable order, e.g. \"x,y,z\"");
    sub->add_option("--threads", req.threads, "worker threads for searches");
    sub->add_flag("--solve", req.solve, "groebner: also list the rational solutions");
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  for (const auto* sub : app.get_subcommands()) req.command = sub->get_name();

  try {
    Report r = commands().at(req.command).first(req);
    if (req.json) {
      out << r.doc.dump() << '\n';
    } else {
      out << r.text;
    }
    return r.exit;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kParseError;
  } catch (const BudgetExhausted& e) {
    err << "step budget exhausted after " << e.steps() << " steps: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPreconditionViolation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace dioph::cli
