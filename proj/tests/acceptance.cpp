// Acceptance gate: exercises the eight headline checks at full point counts
// and prints one pass/fail line per criterion.

#include <iostream>
#include <random>
#include <string>

#include "fga/ambient.hpp"
#include "fga/diagnostics.hpp"
#include "fga/sampling.hpp"

using namespace fga;
using JR = Jet<Rational>;

namespace {

bool g_all_ok = true;

void report(int criterion, bool ok, const std::string& note = "") {
  std::cout << "criterion " << criterion << ": " << (ok ? "pass" : "fail");
  if (!note.empty()) std::cout << "  (" << note << ")";
  std::cout << "\n" << std::flush;
  if (!ok) g_all_ok = false;
}

Example2Params generic_params() {
  Example2Params ps;
  ps.a = {1, 2, -1, Rational(1, 2), 1, -2, 1};
  ps.b = 0;
  return ps;
}

template <class T>
MetricJet<T> conformal_rep(const Expr& F, const Point5& at, int forder) {
  MetricJet<T> g = build_example1_metric<T>(F, at, forder);
  Expr F2e = diff_expr(diff_expr(F, CQ), CQ);
  Jet<T> f2 = eval_jet<T>(F2e, at, g.budget);
  if (f2.value() == 0) throw FieldError("degenerate ODE point");
  if (to_bigfloat(f2.value()) < 0) f2 = -f2;
  Jet<T> scale = jet_inv(T(-15) * jet_pow(f2, Rational(10, 3)));
  for (auto& row : g.g)
    for (auto& c : row) c = c * scale;
  return g;
}

// --- criterion 1: F = q^2 exact, 25 points --------------------------------

void criterion1() {
  Expr F = parse_expr("q^2");
  StrategyOptions opt;
  opt.points = 25;
  opt.seed = 1;
  bool coeffs_zero = true;
  auto rep = run_strategy<Rational>(
      [&](const Point5& at) {
        return build_example1_metric<Rational>(F, at, opt.forder);
      },
      opt,
      [&](const Point5&, const MetricJet<Rational>&,
          const GrahamCoefficients<Rational>& gc) {
        bool ok = gc.alpha.is_zero() && gc.beta.is_zero();
        coeffs_zero = coeffs_zero && ok;
        return ok;
      });
  report(1, rep.certified() && coeffs_zero,
         "F=q^2: exact gamma/beta/alpha/Ricci at 25 points");
}

// --- criterion 2: F = q^3, q^4 float --------------------------------------

void criterion2() {
  set_float_precision_bits(256);
  const BigFloat tol("1e-50");
  bool ok = true;
  for (const char* ftext : {"q^3", "q^4"}) {
    Expr F = parse_expr(ftext);
    Expr F2e = diff_expr(diff_expr(F, CQ), CQ);
    Expr F3e = diff_expr(F2e, CQ), F4e = diff_expr(F3e, CQ);
    StrategyOptions opt;
    opt.points = 10;
    opt.seed = 2;
    opt.exact = false;
    opt.tol = tol;
    auto rep = run_strategy<BigFloat>(
        [&](const Point5& at) {
          return conformal_rep<BigFloat>(F, at, opt.forder);
        },
        opt,
        [&](const Point5& at, const MetricJet<BigFloat>&,
            const GrahamCoefficients<BigFloat>& gc) {
          if (gc.beta.max_abs() > tol) return false;
          int bo = gc.alpha.budget();
          Jet<BigFloat> f2 = eval_jet<BigFloat>(F2e, at, bo);
          Jet<BigFloat> f3 = eval_jet<BigFloat>(F3e, at, bo);
          Jet<BigFloat> f4 = eval_jet<BigFloat>(F4e, at, bo);
          if (f2.value() < 0) f2 = -f2;
          Jet<BigFloat> P =
              (BigFloat(4) * f3 * f3 - BigFloat(3) * f2 * f4) *
              jet_inv(BigFloat(90) * jet_pow(f2, Rational(10, 3)));
          Jet<BigFloat> expect =
              BigFloat(2) * jet_pow(f2, Rational(4, 3)) * P;
          for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
              Jet<BigFloat> want =
                  (i == CQ && j == CQ) ? expect : Jet<BigFloat>(5, bo);
              if ((gc.alpha(i, j).truncated(bo) - want.truncated(bo))
                      .max_abs() > tol)
                return false;
            }
          return true;
        });
    ok = ok && rep.certified() && rep.extra_failures == 0;
  }
  // exact spot value: F = q^3 at q = 36 keeps the conformal representative
  // rational; its only Schouten entry is P_qq = 2/(45*36^2)
  Expr F = parse_expr("q^3");
  Point5 at36{{1, 1, 1, 36, 1}};
  MetricJet<Rational> g = conformal_rep<Rational>(F, at36, 10);
  CurvatureEngine<Rational> e(g);
  bool spot = e.schouten()(CQ, CQ).value() ==
              Rational(2) / (Rational(45) * 36 * 36);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if ((i != CQ || j != CQ) && e.schouten()(i, j).value() != 0) spot = false;
  report(2, ok && spot, "F=q^3,q^4 float 1e-50; exact Schouten spot value");
}

// --- criterion 3: polynomial family exact, 25 points, b in {0, 3} ---------

void criterion3() {
  bool ok = true;
  std::string note;
  for (Rational b : {Rational(0), Rational(3)}) {
    Example2Params ps = generic_params();
    ps.b = b;
    StrategyOptions opt;
    opt.points = 25;
    opt.seed = 3;
    const std::vector<std::string> pn = {"a0", "a1", "a2", "a3",
                                         "a4", "a5", "a6", "b"};
    std::vector<Rational> pv(ps.a.begin(), ps.a.end());
    pv.push_back(ps.b);
    Expr bxx = parse_expr("(a4-10*a5*p+60*a6*p^2)/100", pn);
    Expr bxy = parse_expr("(3/40)*(a5-12*a6*p)", pn);
    Expr byy = parse_expr("(27/20)*a6", pn);
    auto rep = run_strategy<Rational>(
        [&](const Point5& at) {
          return build_example2_metric<Rational>(ps, at, 6);
        },
        opt,
        [&](const Point5& at, const MetricJet<Rational>&,
            const GrahamCoefficients<Rational>& gc) {
          int bo = gc.beta.budget();
          for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j) {
              const Expr* want = nullptr;
              if (i == CX && j == CX) want = &bxx;
              if (i == CX && j == CY) want = &bxy;
              if (i == CY && j == CY) want = &byy;
              Jet<Rational> w = want ? eval_jet<Rational>(*want, at, bo, pv)
                                     : Jet<Rational>(5, bo);
              if (!(gc.beta(i, j).truncated(bo) - w.truncated(bo)).is_zero())
                return false;
            }
          return true;
        });
    ok = ok && rep.certified() && rep.extra_failures == 0;
  }
  // a6-only case: beta_yy = 27/20 at every point
  {
    Example2Params ps;
    ps.a = {0, 0, 0, 0, 0, 0, 1};
    std::mt19937_64 rng(33);
    for (int k = 0; k < 3; ++k) {
      Point5 at = random_point(rng);
      auto g = build_example2_metric<Rational>(ps, at, 6);
      CurvatureEngine<Rational> e(g);
      auto gc = graham_coefficients(e);
      if (gc.beta(CY, CY).value() != Rational(27, 20)) ok = false;
    }
  }
  report(3, ok, "polynomial family: exact at 25 points, b in {0,3}; "
                "beta matches closed forms");
}

// --- criterion 4: wrong conventions break the certificates ----------------

void criterion4() {
  Expr F = parse_expr("q^3");
  Point5 at{{1, -1, Rational(1, 2), 2, 1}};
  MetricJet<Rational> g = build_example1_metric<Rational>(F, at, 10);
  bool sign_breaks, weight_breaks;
  {
    CurvatureEngine<Rational> e(g, -1);
    auto gc = graham_coefficients(e);
    bool gamma_zero = gc.gamma.is_zero();
    bool ricci_zero =
        ambient_ricci<Rational>(assemble_ambient(g, gc).evaluate(1, 1), -1)
            .is_zero();
    sign_breaks = !(gamma_zero && ricci_zero);
  }
  {
    // both worked families make the weight-sensitive groups vanish, so show
    // on a generic exact metric that the weight changes the obstruction
    // candidate
    MetricJet<Rational> m;
    m.dim = 5;
    m.budget = 6;
    m.base = Point5{{Rational(1, 8), Rational(-1, 7), Rational(1, 9),
                     Rational(1, 6), Rational(-1, 11)}};
    m.g.assign(5, std::vector<Jet<Rational>>(5, Jet<Rational>(5, 6)));
    auto E = [&](const std::string& s) {
      return eval_jet<Rational>(parse_expr(s), m.base, 6);
    };
    m.g[0][0] = E("1 + (x*y+q^2)/10");
    m.g[1][1] = E("1");
    m.g[2][2] = E("1");
    m.g[3][3] = E("-1 + (p*z)/10");
    m.g[4][4] = E("-1");
    m.g[0][1] = m.g[1][0] = E("(x+q*z)/10");
    m.g[2][3] = m.g[3][2] = E("(y^2)/10");
    m.g[1][4] = m.g[4][1] = E("(p+x*q)/10");
    CurvatureEngine<Rational> e1(m), e2(m);
    auto ga = graham_coefficients(e1, Rational(1, 2));
    auto gb = graham_coefficients(e2, Rational(1));
    weight_breaks = false;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (!(ga.gamma(i, j).truncated(0) - gb.gamma(i, j).truncated(0))
                 .is_zero())
          weight_breaks = true;
  }
  report(4, sign_breaks && weight_breaks,
         "flipped Riemann sign and wrong symmetrization weight both fail");
}

// --- criterion 5: fixture suite -------------------------------------------

void criterion5() {
  set_float_precision_bits(320);
  std::mt19937_64 rng(5);
  bool ok = true;
  int done = 0;
  while (done < 5) {
    Point5 at = random_point(rng);
    if (at[CQ] == 0) continue;
    try {
      auto rep = example1_fixture_checks<BigFloat>(parse_expr("q^3"), at, 2, 1,
                                                   BigFloat("1e-40"));
      ok = ok && rep.all();
      ++done;
    } catch (const FieldError&) {
      continue;
    }
  }
  report(5, ok, "F=q^3 frame fixtures at 5 points, tolerance 1e-40");
}

// --- criterion 6: C-space obstruction --------------------------------------

void criterion6() {
  bool ok = true;
  {
    std::mt19937_64 rng(6);
    Example2Params ps;
    ps.a = {1, 0, 0, 1, 0, 0, 1};
    for (int k = 0; k < 5; ++k) {
      Point5 at = random_point(rng);
      auto g = build_example2_metric<Rational>(ps, at, 6);
      CurvatureEngine<Rational> e(g);
      auto cs = cspace_test(e);
      if (cs.kind != CSpaceKind::None || cs.rank_augmented != cs.rank + 1)
        ok = false;
    }
  }
  {
    Expr F = parse_expr("q^3");
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 5) {
      Point5 at = random_point(rng);
      if (at[CQ] == 0) continue;
      auto g = build_example1_metric<Rational>(F, at, 8);
      CurvatureEngine<Rational> e(g);
      if (cspace_test(e).kind != CSpaceKind::Solution) ok = false;
      ++done;
    }
  }
  report(6, ok, "generic family obstructed; F=q^3 admits a solution");
}

// --- criterion 7: exact property suites ------------------------------------

void criterion7() {
  bool ok = true;
  std::mt19937_64 rng(77);
  Example2Params ps = generic_params();
  int done = 0;
  while (done < 5 && ok) {
    Point5 at = random_point(rng);
    auto g = build_example2_metric<Rational>(ps, at, 6);
    CurvatureEngine<Rational> e(g);
    const auto& R = e.riemann_down();
    int o = R.budget();
    auto tr = [&](const JR& a) { return a.truncated(o); };
    for (int i = 0; i < 5 && ok; ++i)
      for (int j = 0; j < 5 && ok; ++j)
        for (int k = 0; k < 5 && ok; ++k)
          for (int l = 0; l < 5 && ok; ++l) {
            if (!(tr(R(i, j, k, l)) == tr(-R(j, i, k, l)))) ok = false;
            if (!(tr(R(i, j, k, l)) == tr(R(k, l, i, j)))) ok = false;
            if (!(tr(R(i, j, k, l)) + tr(R(i, k, l, j)) + tr(R(i, l, j, k)))
                     .is_zero())
              ok = false;
          }
    // nabla g = 0
    TensorJet<Rational> gt(5, {false, false}, 5, g.budget);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) gt(i, j) = g.g[i][j];
    if (!covariant_derivative(gt, e.christoffel()).is_zero()) ok = false;
    // contracted second Bianchi
    {
      const auto& gi = e.metric_inverse();
      auto nr = covariant_derivative(e.ricci(), e.christoffel());
      int ob = nr.budget();
      for (int j = 0; j < 5 && ok; ++j) {
        JR lhs(5, ob);
        for (int i = 0; i < 5; ++i)
          for (int k = 0; k < 5; ++k)
            lhs += gi[i][k].truncated(ob) * nr(i, j, k);
        if (!(lhs - e.scalar_curv().deriv(j).truncated(ob) * Rational(1, 2))
                 .is_zero())
          ok = false;
      }
    }
    // Weyl and Cotton traces
    {
      const auto& gi = e.metric_inverse();
      const auto& W = e.weyl();
      const auto& C = e.cotton();
      int ow = W.budget(), oc = C.budget();
      for (int j = 0; j < 5 && ok; ++j)
        for (int l = 0; l < 5 && ok; ++l) {
          JR t1(5, ow);
          for (int i = 0; i < 5; ++i)
            for (int k = 0; k < 5; ++k)
              t1 += gi[i][k].truncated(ow) * W(i, j, k, l);
          if (!t1.is_zero()) ok = false;
        }
      for (int k = 0; k < 5 && ok; ++k) {
        JR t1(5, oc);
        for (int i = 0; i < 5; ++i)
          for (int j = 0; j < 5; ++j)
            t1 += gi[i][j].truncated(oc) * C(i, j, k);
        if (!t1.is_zero()) ok = false;
      }
    }
    // scaling laws for the expansion coefficients
    for (Rational c : {Rational(4), Rational(9)}) {
      CurvatureEngine<Rational> e1(g);
      CurvatureEngine<Rational> e2(g.scaled(c));
      auto gc1 = graham_coefficients(e1);
      auto gc2 = graham_coefficients(e2);
      auto same = [&](const TensorJet<Rational>& a, const TensorJet<Rational>& b,
                      const Rational& f) {
        int oo = std::min(a.budget(), b.budget());
        bool good = true;
        a.for_each_index([&](const std::vector<int>& idx) {
          if (!(b.at(idx).truncated(oo) - a.at(idx).truncated(oo) * f)
                   .is_zero())
            good = false;
        });
        return good;
      };
      if (!same(gc1.alpha, gc2.alpha, 1)) ok = false;
      if (!same(gc1.beta, gc2.beta, Rational(1) / c)) ok = false;
      if (!same(gc1.gamma, gc2.gamma, Rational(1) / (c * c))) ok = false;
    }
    ++done;
  }
  report(7, ok, "symmetries, Bianchi, traces, nabla g, scaling laws at 5 points");
}

// --- criterion 8: oracle equivalence ----------------------------------------

void criterion8() {
  set_float_precision_bits(256);
  bool ok = true;
  // finite-difference spot checks on randomized smooth metrics
  std::mt19937_64 rng(88);
  const BigFloat h("1e-6"), rtol("1e-4");
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 3 && ok; ++trial) {
    std::vector<std::vector<Expr>> ee(5, std::vector<Expr>(5));
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) {
        std::string s = "(";
        const char* monos[] = {"x", "y", "p", "q", "z", "x*y", "p*q", "q*z"};
        bool first = true;
        for (const char* m : monos) {
          int c = coeff(rng);
          if (c == 0) continue;
          s += (first ? "" : " + ") + std::to_string(c) + "*" + std::string(m);
          first = false;
        }
        if (first) s += "0";
        s += ")/20";
        ee[i][j] = ee[j][i] = parse_expr(s);
      }
    for (int i = 0; i < 5; ++i)
      ee[i][i] = parse_expr(i < 3 ? "1" : "-1") + ee[i][i];
    Point5 base{{Rational(1, 8), Rational(-1, 7), Rational(1, 9),
                 Rational(1, 6), Rational(-1, 11)}};
    auto build = [&](const Point5& pt, int order) {
      MetricJet<BigFloat> m;
      m.dim = 5;
      m.base = pt;
      m.budget = order;
      m.g.assign(5, std::vector<Jet<BigFloat>>(5, Jet<BigFloat>(5, order)));
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          m.g[i][j] = eval_jet<BigFloat>(ee[i][j], pt, order);
      return m;
    };
    CurvatureEngine<BigFloat> e(build(base, 4));
    Rational hr(1, 1000000);
    std::vector<CurvatureEngine<BigFloat>> plus, minus;
    for (int k = 0; k < 5; ++k) {
      Point5 pp = base, pm = base;
      pp.c[k] += hr;
      pm.c[k] -= hr;
      plus.emplace_back(build(pp, 1));
      minus.emplace_back(build(pm, 1));
    }
    auto rel = [](const BigFloat& a, const BigFloat& b) -> BigFloat {
      BigFloat d = abs(b) > 1 ? abs(b) : BigFloat(1);
      return abs(a - b) / d;
    };
    // Christoffel vs finite differences of the metric
    auto gi0 = jet_matrix_inverse(build(base, 0).g);
    for (int i = 0; i < 5 && ok; ++i)
      for (int j = 0; j < 5 && ok; ++j)
        for (int k = 0; k < 5 && ok; ++k) {
          BigFloat want = 0;
          for (int l = 0; l < 5; ++l) {
            auto dg = [&](int a, int b, int c) {
              return (plus[c].metric().g[a][b].value() -
                      minus[c].metric().g[a][b].value()) /
                     (2 * h);
            };
            want += gi0[i][l].value() *
                    (dg(l, k, j) + dg(l, j, k) - dg(j, k, l)) / 2;
          }
          if (rel(e.christoffel()(i, j, k).value(), want) > rtol) ok = false;
        }
    // Ricci vs finite differences of Christoffel (direct formula)
    for (int j = 0; j < 5 && ok; ++j)
      for (int l = 0; l < 5 && ok; ++l) {
        BigFloat want = 0;
        for (int i = 0; i < 5; ++i) {
          want += (plus[i].christoffel()(i, j, l).value() -
                   minus[i].christoffel()(i, j, l).value()) /
                  (2 * h);
          want -= (plus[l].christoffel()(i, j, i).value() -
                   minus[l].christoffel()(i, j, i).value()) /
                  (2 * h);
          for (int m = 0; m < 5; ++m)
            want += e.christoffel()(i, i, m).value() *
                        e.christoffel()(m, j, l).value() -
                    e.christoffel()(i, l, m).value() *
                        e.christoffel()(m, j, i).value();
        }
        if (rel(e.ricci()(j, l).value(), want) > rtol) ok = false;
      }
  }
  if (!ok) {
    report(8, false, "finite-difference oracle mismatch");
    return;
  }
  // holonomy oracles
  MetricJet<Rational> flat;
  flat.dim = 7;
  flat.budget = 4;
  flat.g.assign(7, std::vector<JR>(7, JR(7, 4)));
  for (int i = 0; i < 7; ++i) flat.g[i][i] = JR::constant(7, 4, 1);
  if (holonomy_span(flat, 2).dimension != 0) ok = false;
  MetricJet<Rational> sph = flat;
  JR jx = JR::variable(7, 4, 0, Rational(1, 3));
  JR jy = JR::variable(7, 4, 1, Rational(1, 5));
  JR den = JR::constant(7, 4, 1) + jx * jx + jy * jy;
  JR conf = Rational(4) * jet_inv(den * den);
  sph.g[0][0] = conf;
  sph.g[1][1] = conf;
  if (holonomy_span(sph, 2).dimension != 1) ok = false;
  // 7D expansion span: reported, asserted <= 21 only
  int span_dim = -1;
  {
    Example2Params ps;
    ps.a = {1, 0, 0, 1, 0, 0, 1};
    Point5 at{{1, Rational(1, 2), -1, 2, Rational(1, 3)}};
    auto g = build_example2_metric<Rational>(ps, at, 6);
    CurvatureEngine<Rational> e(g);
    auto gc = graham_coefficients(e);
    auto a7 = assemble_ambient(g, gc).evaluate(1, 1, 3);
    span_dim = holonomy_span(a7, 1).dimension;
    if (span_dim > 21) ok = false;
  }
  report(8, ok, "FD oracle, holonomy 0/1, 7D span dimension " +
                    std::to_string(span_dim) + " (expected 14, bound 21)");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  return g_all_ok ? 0 : 1;
}
