#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "oddcycle/errors.hpp"
#include "oddcycle/optimizer.hpp"

namespace oddcycle {

namespace {

constexpr int kDigits = std::numeric_limits<double>::digits;

// Complex-step derivative: exact to rounding for real-analytic f.
template <class F>
double derivative(F f, double x) {
  constexpr double h = 1e-30;
  return std::imag(f(std::complex<double>(x, h))) / h;
}

template <class F>
double real_at(F f, double x) {
  return std::real(f(std::complex<double>(x, 0.0)));
}

// Root of g in [a, b]; g(a) and g(b) must differ in sign.
template <class G>
double bracketed_root(G g, double a, double b) {
  double fa = g(a), fb = g(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa < 0) == (fb < 0)) throw StateError("bracketed_root: no sign change");
  boost::uintmax_t iters = 200;
  auto r = boost::math::tools::toms748_solve(g, a, b, fa, fb,
                                             boost::math::tools::eps_tolerance<double>(kDigits),
                                             iters);
  return (r.first + r.second) / 2;
}

// Widen [x - w, x + w] inside [lo, hi] until g changes sign; nullopt if it never does.
template <class G>
std::optional<std::pair<double, double>> bracket_near(G g, double x, double lo, double hi) {
  for (double w = 1e-6; w < 1; w *= 4) {
    double a = std::max(lo, x - w), b = std::min(hi, x + w);
    if ((g(a) < 0) != (g(b) < 0) || g(a) == 0 || g(b) == 0) return std::make_pair(a, b);
  }
  return std::nullopt;
}

struct Argmin {
  double x;
  double fx;
};

Argmin best_of(Argmin m, double lo, double hi, auto f) {
  if (f(lo) < m.fx) m = {lo, f(lo)};
  if (f(hi) < m.fx) m = {hi, f(hi)};
  return m;
}

// Minimum of a smooth f on [lo, hi]: Brent, then a derivative root polish,
// then the endpoints.
template <class F>
Argmin smooth_min(F f, double lo, double hi) {
  auto fr = [&](double x) { return real_at(f, x); };
  if (hi <= lo) return {lo, fr(lo)};
  auto [x0, f0] = boost::math::tools::brent_find_minima(fr, lo, hi, kDigits / 2);
  Argmin m{x0, f0};
  auto df = [&](double x) { return derivative(f, x); };
  if (auto br = bracket_near(df, x0, lo, hi)) {
    double x = bracketed_root(df, br->first, br->second);
    if (fr(x) <= m.fx) m = {x, fr(x)};
  }
  return best_of(m, lo, hi, fr);
}

// Minimum of max(f1, f2): at a crossing or at a smooth minimum of one piece.
template <class F1, class F2>
Argmin kink_min(F1 f1, F2 f2, double lo, double hi) {
  auto g = [&](double x) { return std::max(real_at(f1, x), real_at(f2, x)); };
  auto [x0, f0] = boost::math::tools::brent_find_minima(g, lo, hi, kDigits / 2);
  Argmin m{x0, f0};
  auto gap = [&](double x) { return real_at(f1, x) - real_at(f2, x); };
  if (auto br = bracket_near(gap, x0, lo, hi)) {
    double x = bracketed_root(gap, br->first, br->second);
    m = {x, g(x)};
  } else {
    Argmin a = smooth_min(f1, lo, hi), b = smooth_min(f2, lo, hi);
    for (Argmin c : {a, b})
      if (g(c.x) < m.fx) m = {c.x, g(c.x)};
  }
  return best_of(m, lo, hi, g);
}

}  // namespace

CaseTable continuous_case_minimum() {
  CaseTable t;
  const double r6 = std::sqrt(6.0);
  const double r52 = std::sqrt(2.5);
  const double c0 = (4 - r6) / 5;

  {
    auto f1 = [](auto r) { return r; };
    auto f2 = [](auto r) { return (1.0 - r) / 2.0; };
    Argmin m = kink_min(f1, f2, 0.0, 1.0);
    t.cases.push_back({"R = R2, |R| <= b+1, s = 0", 1.0 / 3, m.fx, m.x, m.fx, 1.0 / 3,
                       "max(rho, (1 - rho)/2) over 0 <= rho <= 1"});
  }
  {
    auto f1 = [](auto r) { return r; };
    auto f2 = [](auto r) { return (2.0 - 2.0 * r - r * r) / (6.0 * (1.0 - r)); };
    Argmin m = kink_min(f1, f2, 0.0, 0.99);
    t.cases.push_back({"R = R2, |R| <= b+1, s >= 1", c0, m.fx, m.x, m.fx, c0,
                       "max(rho, (2 - 2rho - rho^2)/(6(1 - rho))); crossing is the root of "
                       "5rho^2 - 8rho + 2"});
  }
  {
    auto h = [](auto r) { return (1.0 - 2.0 * r + 2.0 * r * r) / (2.0 - r); };
    Argmin m = smooth_min(h, 0.0, 1.0);
    t.cases.push_back({"R = R2, |R| > b+1, s = 0", 2 - r52, m.x, m.x, m.fx, 4 * r52 - 6,
                       "stated value 2 - sqrt(5/2) is the minimiser rho* of "
                       "(1 - 2rho + 2rho^2)/(2 - rho); the bound at rho* is 4 sqrt(5/2) - 6"});
  }
  {
    auto g2 = [](auto r) { return (2.0 - 2.0 * r + 2.0 * r * r) / (6.0 - 3.0 * r); };
    double r0 = bracketed_root([&](double r) { return real_at(g2, r) - r; }, 0.05, 0.9);
    Argmin m = smooth_min(g2, r0, 1.0);
    t.cases.push_back({"R = R2, |R| > b+1, s >= 1", c0, m.fx, m.x, m.fx, c0,
                       "(2 - 2rho + 2rho^2)/(6 - 3rho) over the rho where it does not exceed "
                       "rho; attained at the boundary"});
  }
  {
    auto f = [](auto r) { return (1.0 + r) / 2.0; };
    Argmin m = smooth_min(f, 0.0, 1.0);
    t.cases.push_back({"R = R1, s = 0", 0.5, m.fx, m.x, m.fx, 0.5,
                       "(1 + rho)/2 over 0 <= rho <= 1; the case condition is not used"});
  }
  {
    // beta >= 1 - 2alpha and beta <= 1 - 7alpha leave alpha <= 0.
    double a_max = bracketed_root([](double a) { return (1 - 7 * a) - (1 - 2 * a); }, -0.5, 0.5);
    auto f = [](auto a) { return 1.0 - 2.0 * a; };
    Argmin m = smooth_min(f, 0.0, std::max(0.0, a_max));
    t.cases.push_back({"R = R1, s >= 1", 1.0, m.fx, m.x, m.fx, 1.0,
                       "1 - 2alpha with alpha <= (1 - beta)/7; location is alpha"});
  }

  t.overall_stated = t.cases.front().stated;
  t.overall_numeric = t.cases.front().numeric;
  for (const auto& c : t.cases) {
    t.overall_stated = std::min(t.overall_stated, c.stated);
    t.overall_numeric = std::min(t.overall_numeric, c.numeric);
  }
  t.prior_lower = 1 - 1 / std::sqrt(2.0);
  t.prior_upper = 1 / (4 * std::log(2.0));
  return t;
}

// ---------------------------------------------------------------------------

long long saved_edge_bound(int n, double eps) {
  if (!(eps > 0 && eps < 1)) throw ArgumentError("saved_edge_bound: need 0 < eps < 1");
  constexpr long long scale = 1000000;
  const Rational e(std::llround(eps * scale), scale);
  const Rational v = (e * static_cast<long long>(n) * n - n) / 2;
  long long q = v.numerator() / v.denominator();
  if (v.numerator() < 0 && v.numerator() % v.denominator() != 0) --q;
  return q;
}

AuditReport breaker_constant_audit(double eps, std::optional<int> n) {
  if (!(eps > 0 && eps < 1)) throw ArgumentError("breaker_constant_audit: need 0 < eps < 1");
  AuditReport rep;
  rep.eps = eps;
  rep.n = n;
  const double se = std::sqrt(eps);
  const double euler = std::sqrt(std::exp(1.0));

  auto add = [&](std::string name, double lhs, std::string rel, double rhs, std::string note = {}) {
    bool holds = rel == ">"    ? lhs > rhs
                 : rel == ">=" ? lhs >= rhs
                 : rel == "<"  ? lhs < rhs
                               : lhs <= rhs;
    rep.lines.push_back({std::move(name), lhs, rhs, std::move(rel), holds, false, std::move(note)});
  };

  add("size lemma, leading term (per n^2)", 9 * eps / 8, ">", eps / 2);
  add("average-degree step at s = 2n/3, leading term", 3 * (1 - eps) / 2, "<=", 1.5);

  auto factors = [&](double root, const std::string& tag) {
    const double f1 = (2.0 / 3 - root) / 8 - 3 * se / 2 - 5 * eps / 4;
    const double f2 = (2.0 / 3 - root) / 4 - eps / 2 - 3 * se / 2;
    add("final product, first factor (" + tag + ")", f1, ">", 0,
        "lower bound on the number of rounds per n");
    rep.lines.back().flagged = f1 < 0;
    add("final product, second factor (" + tag + ")", f2, ">", 0,
        "lower bound on the edges saved per round, per n");
    rep.lines.back().flagged = f2 < 0;
    add("final product (" + tag + ")", f1 * f2, ">", eps);
    if (f1 < 0 || f2 < 0) {
      rep.lines.back().flagged = true;
      rep.lines.back().note = "comparison is vacuous: a factor is negative";
    }
  };
  factors(se, "sqrt(eps) in both places");
  factors(euler, "first term read as sqrt(e), e = 2.718...");

  if (n) {
    const int m = *n;
    const double nd = m;
    const double b = std::ceil((nd - eps * nd) / 2);
    add("saved-edge budget floor((eps n^2 - n)/2)", double(saved_edge_bound(m, eps)), ">=", 0);
    add("saved-edge lemma, last step", ((nd * nd - eps * nd * nd) - (nd - 2)) / (2 * (nd - 1)),
        "<=", b);
    const double fl = std::floor(se * nd);
    const double sum = std::floor(se * nd + 1) * (3 * se * nd / 2 - 2) - 0.75 * (fl + 1) * fl / 2;
    add("size lemma, saved-edge sum vs its lower bound", sum, ">=",
        9 * eps * nd * nd / 8 - 3 * se * nd);
    add("size lemma, finite n", 9 * eps * nd * nd / 8 - 3 * se * nd, ">",
        (eps * nd * nd - nd) / 2);
    const double s = std::floor(2 * nd / 3);
    add("average-degree step at s = floor(2n/3)", (b + 2) / (nd - s - 2), "<=", 1.5);
  }
  return rep;
}

// ---------------------------------------------------------------------------

nlohmann::json structure_to_json(const GnbStructure& g) {
  return {{"s", g.s}, {"a", g.a}, {"r1", g.r1}, {"r2", g.r2}};
}

nlohmann::json case_table_to_json(const CaseTable& t) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : t.cases)
    cases.push_back({{"case", c.name},
                     {"stated", c.stated},
                     {"numeric", c.numeric},
                     {"location", c.location},
                     {"true_min", c.true_min},
                     {"true_min_closed", c.true_min_closed},
                     {"note", c.note}});
  return {{"cases", cases},
          {"overall", {{"stated", t.overall_stated}, {"numeric", t.overall_numeric}}},
          {"prior_work", {{"lower", t.prior_lower}, {"upper", t.prior_upper}}}};
}

nlohmann::json audit_to_json(const AuditReport& r) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : r.lines)
    lines.push_back({{"name", l.name},
                     {"lhs", l.lhs},
                     {"relation", l.relation},
                     {"rhs", l.rhs},
                     {"holds", l.holds},
                     {"flagged", l.flagged},
                     {"note", l.note}});
  nlohmann::json j = {{"eps", r.eps}, {"lines", lines}};
  j["n"] = r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr);
  return j;
}

std::string render_case_table(const CaseTable& t) {
  std::ostringstream os;
  os.precision(12);
  for (const auto& c : t.cases) {
    os << c.name << ": " << c.stated << " (numeric " << c.numeric << ", at " << c.location << ")";
    if (std::abs(c.true_min - c.stated) > 1e-9) os << ", bound minimum " << c.true_min;
    os << "\n";
  }
  os << "overall: " << t.overall_stated << " (numeric " << t.overall_numeric << ")\n";
  os << "earlier bounds: " << t.prior_lower << " and " << t.prior_upper << "\n";
  return os.str();
}

std::string render_audit(const AuditReport& r) {
  std::ostringstream os;
  os.precision(6);
  os << "eps = " << r.eps;
  if (r.n) os << ", n = " << *r.n;
  os << "\n";
  for (const auto& l : r.lines) {
    os << (l.holds ? "holds " : "fails ") << (l.flagged ? "[flag] " : "       ") << l.name << ": "
       << l.lhs << " " << l.relation << " " << l.rhs;
    if (!l.note.empty()) os << "  (" << l.note << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace oddcycle
