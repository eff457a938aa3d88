// Command-line surface for the tensor-calculus workbench: certification of
// truncated ambient expansions, obstruction diagnostics, and self-tests.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fga/ambient.hpp"
#include "fga/diagnostics.hpp"
#include "fga/report.hpp"

namespace {

using namespace fga;

struct Cfg {
  std::string command;
  std::string f_text;
  bool example1 = false, example2 = false;
  std::array<std::string, 7> a{"0", "0", "0", "0", "0", "0", "0"};
  std::string b = "0";
  int points = 5;
  std::uint64_t seed = 0;
  std::string mode = "exact";
  unsigned prec = 256;
  int order = 10;  // F-jet order for metric builds
  int depth = 2;   // derivative depth for the holonomy span
  std::string tu_grid;
  bool json = false;
  std::string out;
};

Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (...) {
    throw FieldError("bad rational literal: " + s);
  }
}

std::vector<std::pair<Rational, Rational>> parse_tu(const std::string& s) {
  std::vector<std::pair<Rational, Rational>> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ';')) {
    auto comma = item.find(',');
    if (comma == std::string::npos)
      throw FieldError("tu-grid entries must look like t,u");
    out.emplace_back(parse_rational(item.substr(0, comma)),
                     parse_rational(item.substr(comma + 1)));
  }
  if (out.empty()) throw FieldError("empty tu-grid");
  return out;
}

Example2Params example2_params(const Cfg& cfg) {
  Example2Params ps;
  for (int i = 0; i < 7; ++i) ps.a[i] = parse_rational(cfg.a[i]);
  ps.b = parse_rational(cfg.b);
  return ps;
}

StrategyOptions strategy_options(const Cfg& cfg) {
  StrategyOptions opt;
  opt.forder = cfg.order;
  opt.points = cfg.points;
  opt.seed = cfg.seed;
  opt.exact = (cfg.mode == "exact");
  opt.prec_bits = cfg.prec;
  if (!cfg.tu_grid.empty()) opt.tu_grid = parse_tu(cfg.tu_grid);
  return opt;
}

std::string input_label(const Cfg& cfg) {
  if (cfg.example2) {
    std::string s = "example2 a=[";
    for (int i = 0; i < 7; ++i) s += (i ? "," : "") + cfg.a[i];
    return s + "] b=" + cfg.b;
  }
  if (cfg.example1) return "example1 F=" + cfg.f_text;
  return "F=" + cfg.f_text;
}

void emit(const Cfg& cfg, const Json& j, const std::string& text) {
  std::string payload = cfg.json ? j.dump(2) + "\n" : text;
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    f << payload;
  }
  std::cout << payload;
}

/// True when the expression depends on no coordinate other than q
/// (probed at several fixed points; derivative jets are exact).
bool depends_on_q_only(const Expr& e) {
  const Point5 probes[] = {
      {{Rational(1), Rational(2), Rational(1, 3), Rational(3), Rational(-2)}},
      {{Rational(-3), Rational(1, 2), Rational(5), Rational(-1), Rational(7)}},
      {{Rational(2, 5), Rational(-4), Rational(-1, 7), Rational(6), Rational(1)}}};
  for (int v : {CX, CY, CP, CZ}) {
    Expr d = diff_expr(e, v);
    for (const auto& at : probes)
      if (eval_scalar<Rational>(d, at) != 0) return false;
  }
  return true;
}

/// |f|^{num/3} for a jet with nonzero constant term (real cube-root branch,
/// even power, so the result is positive either way).
template <class T>
Jet<T> abs_pow_thirds(const Jet<T>& f, int num) {
  Jet<T> a = f;
  if (to_bigfloat(a.value()) < 0) a = -a;
  return jet_pow(a, Rational(num, 3));
}

// --- verify-example1 -------------------------------------------------------

template <class T>
int cmd_verify_example1(const Cfg& cfg) {
  Expr F;
  try {
    F = parse_expr(cfg.f_text);
  } catch (const ParseError& pe) {
    std::cerr << "invalid expression: " << pe.what() << "\n";
    return 2;
  }
  if (!depends_on_q_only(F)) {
    std::cerr << "F must depend on q only\n";
    return 2;
  }
  Expr F2e = diff_expr(diff_expr(F, CQ), CQ);
  Expr F3e = diff_expr(F2e, CQ), F4e = diff_expr(F3e, CQ);

  StrategyOptions opt = strategy_options(cfg);
  BigFloat ftol = BigFloat("1e-50");

  auto builder = [&](const Point5& at) {
    MetricJet<T> g = build_example1_metric<T>(F, at, opt.forder);
    if constexpr (!is_exact_field<T>) {
      // conformal representative: divide out -15 F''^{10/3}
      Jet<T> f2 = eval_jet<T>(F2e, at, g.budget);
      if (f2.value() == 0) throw FieldError("degenerate ODE point");
      Jet<T> scale = jet_inv(T(-15) * abs_pow_thirds(f2, 10));
      for (auto& row : g.g)
        for (auto& c : row) c = c * scale;
    }
    return g;
  };

  // In float mode the representative is the one with beta = 0 and
  // alpha = 2 F''^{4/3} P dq^2; verify both per point.
  auto extra = [&](const Point5& at, const MetricJet<T>&,
                   const GrahamCoefficients<T>& gc) {
    if constexpr (is_exact_field<T>) {
      (void)at; (void)gc;
      return true;
    } else {
      if (gc.beta.max_abs() > ftol) return false;
      int bo = gc.alpha.budget();
      Jet<T> f2 = eval_jet<T>(F2e, at, bo), f3 = eval_jet<T>(F3e, at, bo),
             f4 = eval_jet<T>(F4e, at, bo);
      Jet<T> P = (T(4) * f3 * f3 - T(3) * f2 * f4) *
                 jet_inv(T(90) * abs_pow_thirds(f2, 10));
      Jet<T> expect_qq = T(2) * abs_pow_thirds(f2, 4) * P;
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          Jet<T> want = (i == CQ && j == CQ) ? expect_qq : Jet<T>(5, bo);
          if ((gc.alpha(i, j).truncated(bo) - want.truncated(bo)).max_abs() >
              ftol)
            return false;
        }
      return true;
    }
  };

  StrategyReport rep = run_strategy<T>(builder, opt, extra);

  // anholonomic-frame fixture checks (float internals; cube roots)
  int fixture_failures = 0;
  {
    std::mt19937_64 rng(cfg.seed + 1);
    int done = 0, attempts = 0;
    while (done < std::min(cfg.points, 3) && attempts < 100) {
      ++attempts;
      Point5 at = random_point(rng);
      try {
        auto fr = example1_fixture_checks<BigFloat>(F, at, 2, 1, BigFloat("1e-40"));
        if (!fr.all()) ++fixture_failures;
        ++done;
      } catch (const FieldError&) {
        continue;  // F'' = 0 there
      }
    }
    if (done == 0) ++fixture_failures;
  }

  Json j = strategy_json(rep, input_label(cfg), opt.exact, cfg.prec);
  j["command"] = "verify-example1";
  j["alpha_beta_mismatches"] = rep.extra_failures;
  j["fixture_failures"] = fixture_failures;
  bool ok = rep.certified() && rep.extra_failures == 0 && fixture_failures == 0;
  std::ostringstream text;
  text << "verify-example1: " << input_label(cfg) << "\n"
       << "  verdict: " << rep.verdict << "\n"
       << "  alpha/beta representative checks failed: " << rep.extra_failures
       << "\n"
       << "  frame fixture checks failed: " << fixture_failures << "\n"
       << "  overall: " << (ok ? "pass" : "fail") << "\n";
  emit(cfg, j, text.str());
  return ok ? 0 : 1;
}

// --- verify-example2 -------------------------------------------------------

template <class T>
int cmd_verify_example2(const Cfg& cfg) {
  Example2Params ps = example2_params(cfg);
  StrategyOptions opt = strategy_options(cfg);
  int morder = std::max(opt.forder - 4, 6);

  auto builder = [&](const Point5& at) {
    return build_example2_metric<T>(ps, at, morder);
  };

  // closed forms for the expansion coefficients of this representative
  const std::vector<std::string> pnames = {"a0", "a1", "a2", "a3",
                                           "a4", "a5", "a6", "b"};
  std::vector<Rational> pvals(ps.a.begin(), ps.a.end());
  pvals.push_back(ps.b);
  auto E = [&](const std::string& s) { return parse_expr(s, pnames); };
  Expr axx = E("(-2*a2+4*b^2+3*a3*p+6*a4*p^2-20*a5*p^3-120*a6*p^4)/10");
  Expr axy = E("-(9/20)*(a3-10*a5*p^2-40*a6*p^3)");
  Expr ayy = E("-(9/5)*(a4+5*a5*p+15*a6*p^2)");
  Expr bxx = E("(a4-10*a5*p+60*a6*p^2)/100");
  Expr bxy = E("(3/40)*(a5-12*a6*p)");
  Expr byy = E("(27/20)*a6");
  BigFloat tol = is_exact_field<T> ? BigFloat(0) : BigFloat("1e-40");

  auto check_entry = [&](const Jet<T>& got, const Expr* want, const Point5& at,
                         int bo) {
    Jet<T> w = want ? eval_jet<T>(*want, at, bo, pvals) : Jet<T>(5, bo);
    return (got.truncated(bo) - w.truncated(bo)).max_abs() <= tol;
  };
  auto extra = [&](const Point5& at, const MetricJet<T>&,
                   const GrahamCoefficients<T>& gc) {
    int ao = gc.alpha.budget(), bo = gc.beta.budget();
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) {
        const Expr *wa = nullptr, *wb = nullptr;
        if (i == CX && j == CX) { wa = &axx; wb = &bxx; }
        if (i == CX && j == CY) { wa = &axy; wb = &bxy; }
        if (i == CY && j == CY) { wa = &ayy; wb = &byy; }
        if (!check_entry(gc.alpha(i, j), wa, at, ao)) return false;
        if (!check_entry(gc.beta(i, j), wb, at, bo)) return false;
      }
    return true;
  };

  StrategyReport rep = run_strategy<T>(builder, opt, extra);

  // C-space obstruction at one extra sampled point
  std::string cspace_kind = "error";
  std::string cspace_note;
  {
    std::mt19937_64 rng(cfg.seed + 1);
    for (int attempt = 0; attempt < 50; ++attempt) {
      Point5 at = random_point(rng);
      try {
        MetricJet<T> g = builder(at);
        CurvatureEngine<T> e(g);
        auto cs = cspace_test(e);
        cspace_kind = cs.kind == CSpaceKind::None ? "none"
                      : cs.kind == CSpaceKind::Solution ? "solution"
                                                        : "degenerate";
        break;
      } catch (const FieldError&) {
        continue;
      }
    }
    if (cspace_kind != "none")
      cspace_note = "C-space system not fully obstructed; parameters are "
                    "likely non-generic";
  }

  Json j = strategy_json(rep, input_label(cfg), opt.exact, cfg.prec);
  j["command"] = "verify-example2";
  j["coefficient_mismatches"] = rep.extra_failures;
  j["cspace"] = cspace_kind;
  if (!cspace_note.empty()) j["cspace_note"] = cspace_note;
  bool ok = rep.certified() && rep.extra_failures == 0;
  std::ostringstream text;
  text << "verify-example2: " << input_label(cfg) << "\n"
       << "  verdict: " << rep.verdict << "\n"
       << "  alpha/beta closed-form mismatches: " << rep.extra_failures << "\n"
       << "  cspace: " << cspace_kind
       << (cspace_note.empty() ? "" : " (" + cspace_note + ")") << "\n"
       << "  overall: " << (ok ? "pass" : "fail") << "\n";
  emit(cfg, j, text.str());
  return ok ? 0 : 1;
}

// --- generic builder for strategy / cspace / holonomy ----------------------

template <class T>
std::function<MetricJet<T>(const Point5&)> make_builder(const Cfg& cfg,
                                                        Expr& F_out) {
  if (cfg.example2) {
    Example2Params ps = example2_params(cfg);
    int morder = std::max(cfg.order - 4, 6);
    return [ps, morder](const Point5& at) {
      return build_example2_metric<T>(ps, at, morder);
    };
  }
  if (cfg.f_text.empty())
    throw FieldError("need --f or --example2");
  F_out = parse_expr(cfg.f_text);
  Expr F = F_out;
  int forder = cfg.order;
  if (cfg.example1) {
    if (!depends_on_q_only(F)) throw FieldError("F must depend on q only");
    return [F, forder](const Point5& at) {
      return build_example1_metric<T>(F, at, forder);
    };
  }
  return [F, forder](const Point5& at) {
    return build_nurowski_metric<T>(F, at, forder);
  };
}

template <class T>
int cmd_strategy(const Cfg& cfg) {
  Expr F;
  auto builder = make_builder<T>(cfg, F);
  StrategyOptions opt = strategy_options(cfg);
  StrategyReport rep = run_strategy<T>(builder, opt);
  Json j = strategy_json(rep, input_label(cfg), opt.exact, cfg.prec);
  j["command"] = "strategy";
  std::ostringstream text;
  text << "strategy: " << input_label(cfg) << "\n  verdict: " << rep.verdict
       << "\n";
  if (!rep.detail.empty()) text << "  detail: " << rep.detail << "\n";
  emit(cfg, j, text.str());
  return rep.certified() ? 0 : 1;
}

template <class T>
int cmd_cspace(const Cfg& cfg) {
  Expr F;
  auto builder = make_builder<T>(cfg, F);
  std::mt19937_64 rng(cfg.seed);
  Json pts = Json::array();
  std::ostringstream text;
  text << "cspace: " << input_label(cfg) << "\n";
  int done = 0, attempts = 0;
  while (done < cfg.points) {
    if (++attempts > 50 * cfg.points + 100)
      throw FieldError("could not sample enough nondegenerate points");
    Point5 at = random_point(rng);
    MetricJet<T> g;
    try {
      g = builder(at);
    } catch (const FieldError&) {
      continue;
    }
    CurvatureEngine<T> e(g);
    auto cs = cspace_test(e);
    Json p;
    p["coords"] = Json::array();
    for (int i = 0; i < 5; ++i) p["coords"].push_back(rational_str(at[i]));
    std::string kind = cs.kind == CSpaceKind::None ? "none"
                       : cs.kind == CSpaceKind::Solution ? "solution"
                                                         : "degenerate";
    p["kind"] = kind;
    p["rank"] = cs.rank;
    p["rank_augmented"] = cs.rank_augmented;
    text << "  point " << done << ": " << kind << " (rank " << cs.rank
         << ", augmented " << cs.rank_augmented << ")";
    if (cs.kind == CSpaceKind::Solution) {
      p["nullity"] = cs.nullity;
      Json K = Json::array();
      std::string ks;
      for (const auto& v : cs.K) {
        K.push_back(to_bigfloat(v).str(8));
        ks += (ks.empty() ? "" : ", ") + to_bigfloat(v).str(8);
      }
      p["K"] = K;
      text << " K = [" << ks << "] nullity " << cs.nullity;
    }
    text << "\n";
    pts.push_back(std::move(p));
    ++done;
  }
  Json j;
  j["schema"] = 1;
  j["command"] = "cspace";
  j["input"] = input_label(cfg);
  j["mode"] = cfg.mode;
  j["points"] = std::move(pts);
  emit(cfg, j, text.str());
  return 0;
}

template <class T>
int cmd_holonomy(const Cfg& cfg) {
  Expr F;
  auto builder = make_builder<T>(cfg, F);
  std::mt19937_64 rng(cfg.seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Point5 at = random_point(rng);
    MetricJet<T> g;
    try {
      g = builder(at);
    } catch (const FieldError&) {
      continue;
    }
    CurvatureEngine<T> e(g);
    auto gc = graham_coefficients(e);
    AmbientMetric<T> amb = assemble_ambient(g, gc);
    MetricJet<T> a7 = amb.evaluate(1, 1, 2 + cfg.depth);
    auto span = holonomy_span(a7, cfg.depth,
                              is_exact_field<T> ? BigFloat(0)
                                                : BigFloat("1e-30"));
    Json j;
    j["schema"] = 1;
    j["command"] = "holonomy";
    j["input"] = input_label(cfg);
    j["mode"] = cfg.mode;
    j["dimension"] = span.dimension;
    j["depth"] = span.depth_used;
    j["coords"] = Json::array();
    for (int i = 0; i < 5; ++i) j["coords"].push_back(rational_str(at[i]));
    std::ostringstream text;
    text << "holonomy: " << input_label(cfg) << "\n  span dimension: "
         << span.dimension << " (derivative depth " << span.depth_used
         << ", bound 21)\n";
    emit(cfg, j, text.str());
    return span.dimension <= 21 ? 0 : 1;
  }
  throw FieldError("could not sample a nondegenerate point");
}

// --- selftest --------------------------------------------------------------

int cmd_selftest(const Cfg& cfg) {
  std::ostringstream text;
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    text << "  " << name << ": " << (ok ? "pass" : "fail") << "\n";
    if (!ok) ++failures;
  };

  {  // jet arithmetic basics
    Jet<Rational> x = Jet<Rational>::variable(1, 2, 0, 1);
    Jet<Rational> prod = x * x;
    check("jet product", prod.value() == 1 && prod.deriv(0).value() == 2);
    Jet<Rational> inv = jet_inv(Jet<Rational>::constant(1, 3, 2));
    check("jet inverse", inv.value() == Rational(1, 2));
  }
  {  // flat metric: all curvature vanishes
    MetricJet<Rational> flat;
    flat.dim = 5;
    flat.budget = 3;
    flat.g.assign(5, std::vector<Jet<Rational>>(5, Jet<Rational>(5, 3)));
    for (int i = 0; i < 5; ++i)
      flat.g[i][i] = Jet<Rational>::constant(5, 3, 1);
    CurvatureEngine<Rational> e(flat);
    check("flat Ricci", e.ricci().is_zero());
    auto cs = cspace_test(e);
    check("flat cspace degenerate", cs.kind == CSpaceKind::Degenerate);
  }
  {  // conformal-scale ODE spot values
    Expr q2 = parse_expr("q^2"), q3 = parse_expr("q^3");
    Rational r0 = upsilon_ode_residual<Rational>(q2, 0, 0, 1);
    Rational r1 = upsilon_ode_residual<Rational>(q3, 0, 0, 1);
    check("scale ODE F=q^2", r0 == 0);
    check("scale ODE F=q^3", r1 == -144);
  }
  {  // holonomy span oracles: flat 7-space and a round-sphere product
    auto flat7 = [&] {
      MetricJet<Rational> m;
      m.dim = 7;
      m.budget = 4;
      m.g.assign(7, std::vector<Jet<Rational>>(7, Jet<Rational>(7, 4)));
      for (int i = 0; i < 7; ++i)
        m.g[i][i] = Jet<Rational>::constant(7, 4, 1);
      return m;
    }();
    check("flat holonomy", holonomy_span(flat7, 2).dimension == 0);
    MetricJet<Rational> sph = flat7;
    Jet<Rational> jx = Jet<Rational>::variable(7, 4, 0, Rational(1, 3));
    Jet<Rational> jy = Jet<Rational>::variable(7, 4, 1, Rational(1, 5));
    Jet<Rational> one = Jet<Rational>::constant(7, 4, 1);
    Jet<Rational> den = one + jx * jx + jy * jy;
    Jet<Rational> conf = Rational(4) * jet_inv(den * den);
    sph.g[0][0] = conf;
    sph.g[1][1] = conf;
    check("sphere-product holonomy", holonomy_span(sph, 2).dimension == 1);
  }
  {  // metric builders: expected signatures
    Point5 at{{1, 1, 1, 2, 1}};
    Expr F = parse_expr("q^3");
    auto g = build_example1_metric<Rational>(F, at, 8);
    auto sig = signature_of(g);
    check("metric signature (3,2)",
          (sig.first == 3 && sig.second == 2) ||
              (sig.first == 2 && sig.second == 3));
  }

  Json j;
  j["schema"] = 1;
  j["command"] = "selftest";
  j["failures"] = failures;
  std::ostringstream full;
  full << "selftest:\n" << text.str()
       << "  overall: " << (failures == 0 ? "pass" : "fail") << "\n";
  emit(cfg, j, full.str());
  return failures == 0 ? 0 : 1;
}

template <class Fn>
int dispatch(const Cfg& cfg, Fn&& run) {
  try {
    if (cfg.mode != "exact" && cfg.mode != "float") {
      std::cerr << "--mode must be exact or float\n";
      return 2;
    }
    if (cfg.mode == "float") set_float_precision_bits(cfg.prec);
    return run();
  } catch (const ParseError& e) {
    std::cerr << "invalid expression: " << e.what() << "\n";
    return 2;
  } catch (const FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pointwise-exact tensor-calculus workbench"};
  app.require_subcommand(1);
  Cfg cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--f", cfg.f_text, "ODE defining function F");
    sub->add_flag("--example1", cfg.example1,
                  "use the F(q)-family polynomial representative");
    sub->add_flag("--example2", cfg.example2,
                  "use the polynomial family with parameters a0..a6, b");
    for (int i = 0; i < 7; ++i)
      sub->add_option("--a" + std::to_string(i), cfg.a[i],
                      "parameter a" + std::to_string(i));
    sub->add_option("--b", cfg.b, "parameter b");
    sub->add_option("--points", cfg.points, "number of sampled points");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--mode", cfg.mode, "exact|float");
    sub->add_option("--prec", cfg.prec, "float precision in bits");
    sub->add_option("--order", cfg.order, "jet order for the F-expansion");
    sub->add_option("--depth", cfg.depth, "holonomy derivative depth");
    sub->add_option("--tu-grid", cfg.tu_grid,
                    "semicolon-separated t,u pairs, e.g. \"1,0;1,1;2,1/3\"");
    sub->add_flag("--json", cfg.json, "emit JSON report");
    sub->add_option("--out", cfg.out, "also write the report to this file");
  };

  CLI::App* v1 = app.add_subcommand("verify-example1",
                                    "certify the F(q) family end to end");
  CLI::App* v2 = app.add_subcommand("verify-example2",
                                    "certify the polynomial family end to end");
  CLI::App* st = app.add_subcommand("strategy", "sampled-point certification");
  CLI::App* cs = app.add_subcommand("cspace", "C-space obstruction test");
  CLI::App* ho = app.add_subcommand("holonomy", "infinitesimal holonomy span");
  CLI::App* se = app.add_subcommand("selftest", "run built-in oracles");
  for (CLI::App* sub : {v1, v2, st, cs, ho, se}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bool exact = cfg.mode == "exact";
  auto pick = [&](auto rational_fn, auto float_fn) {
    return exact ? dispatch(cfg, rational_fn) : dispatch(cfg, float_fn);
  };

  if (v1->parsed()) {
    cfg.example1 = true;
    return pick([&] { return cmd_verify_example1<Rational>(cfg); },
                [&] { return cmd_verify_example1<BigFloat>(cfg); });
  }
  if (v2->parsed()) {
    cfg.example2 = true;
    return pick([&] { return cmd_verify_example2<Rational>(cfg); },
                [&] { return cmd_verify_example2<BigFloat>(cfg); });
  }
  if (st->parsed())
    return pick([&] { return cmd_strategy<Rational>(cfg); },
                [&] { return cmd_strategy<BigFloat>(cfg); });
  if (cs->parsed())
    return pick([&] { return cmd_cspace<Rational>(cfg); },
                [&] { return cmd_cspace<BigFloat>(cfg); });
  if (ho->parsed())
    return pick([&] { return cmd_holonomy<Rational>(cfg); },
                [&] { return cmd_holonomy<BigFloat>(cfg); });
  if (se->parsed()) return dispatch(cfg, [&] { return cmd_selftest(cfg); });
  return 2;
}
