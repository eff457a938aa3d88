#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fga/expr.hpp"
#include "fga/jet.hpp"
#include "fga/linalg.hpp"

namespace fga {

/// Symmetric bilinear form whose components are jets at a common base point.
/// The budget is the remaining derivative order carried by the component jets.
template <class T>
struct MetricJet {
  int dim = 0;
  JetMatrix<T> g;
  Point5 base;
  int budget = 0;

  const Jet<T>& operator()(int i, int j) const { return g[i][j]; }
  Jet<T>& operator()(int i, int j) { return g[i][j]; }

  std::vector<std::vector<T>> constant_term() const {
    std::vector<std::vector<T>> m(dim, std::vector<T>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m[i][j] = g[i][j].value();
    return m;
  }

  MetricJet scaled(const Rational& c) const {
    MetricJet out = *this;
    T s = scalar_from<T>(c);
    for (auto& row : out.g)
      for (auto& e : row) e *= s;
    return out;
  }
};

/// n one-forms, each stored by coordinate components (jets).
template <class T>
struct Coframe {
  std::vector<std::vector<Jet<T>>> theta;  // theta[a][i]
  int dim() const { return static_cast<int>(theta.size()); }
};

struct Example2Params {
  std::array<Rational, 7> a{};  // a0..a6
  Rational b = 0;
};

namespace detail {

/// Scalar ingredients of the general metric display: partials of F and their
// images under the total differential D.
enum Atom : int {
  aFq, aFp, aFy, aFz, aFqq, aFqqq, aFqqqq, aFpp, aFqp, aFqz, aFpz, aFzz,
  aFqqp, aFqqz, aFqy,
  aDFq, aDFp, aDFz, aDFqq, aDFqqq, aDFqp, aDFqz, aDDFq, aDDFqq,
  kNumAtoms
};

struct MetricTerm {
  int coeff;
  int slot_a, slot_b;  // 1..5, the omega-tilde slot
  std::vector<int> factors;
};

// Term-by-term transcription of the general metric display; auditable against
// the source line by line.
inline const std::vector<MetricTerm>& metric_terms() {
  static const std::vector<MetricTerm> terms = {
      {1, 1, 1, {aDFqq, aDFqq, aFqq, aFqq}},
      {6, 1, 1, {aDFq, aDFqqq, aFqq, aFqq}},
      {-6, 1, 1, {aDFqqq, aFp, aFqq, aFqq}},
      {-3, 1, 1, {aDDFqq, aFqq, aFqq, aFqq}},
      {9, 1, 1, {aDFqp, aFqq, aFqq, aFqq}},
      {-9, 1, 1, {aFpp, aFqq, aFqq, aFqq}},
      {9, 1, 1, {aDFqz, aFq, aFqq, aFqq, aFqq}},
      {-18, 1, 1, {aFpz, aFq, aFqq, aFqq, aFqq}},
      {3, 1, 1, {aDFz, aFqq, aFqq, aFqq, aFqq}},
      {-6, 1, 1, {aDFq, aFqq, aFqq, aFqqp}},
      {6, 1, 1, {aFp, aFqq, aFqq, aFqqp}},
      {-8, 1, 1, {aDFq, aDFqq, aFqq, aFqqq}},
      {8, 1, 1, {aDFqq, aFp, aFqq, aFqqq}},
      {3, 1, 1, {aDDFq, aFqq, aFqq, aFqqq}},
      {-3, 1, 1, {aDFp, aFqq, aFqq, aFqqq}},
      {-3, 1, 1, {aDFz, aFq, aFqq, aFqq, aFqqq}},
      {4, 1, 1, {aDFq, aDFq, aFqqq, aFqqq}},
      {-8, 1, 1, {aDFq, aFp, aFqqq, aFqqq}},
      {-3, 1, 1, {aDFq, aDFq, aFqq, aFqqqq}},
      {4, 1, 1, {aFp, aFp, aFqqq, aFqqq}},
      {6, 1, 1, {aDFq, aFp, aFqq, aFqqqq}},
      {-3, 1, 1, {aFp, aFp, aFqq, aFqqqq}},
      {-6, 1, 1, {aDFq, aFq, aFqq, aFqq, aFqqz}},
      {6, 1, 1, {aFp, aFq, aFqq, aFqq, aFqqz}},
      {-3, 1, 1, {aDFq, aFqq, aFqq, aFqq, aFqz}},
      {12, 1, 1, {aFp, aFqq, aFqq, aFqq, aFqz}},
      {3, 1, 1, {aFqq, aFqq, aFqqq, aFy}},
      {-6, 1, 1, {aDFqqq, aFq, aFqq, aFqq, aFz}},
      {4, 1, 1, {aDFqq, aFqq, aFqq, aFqq, aFz}},
      {6, 1, 1, {aFq, aFqq, aFqq, aFqqp, aFz}},
      {8, 1, 1, {aDFqq, aFq, aFqq, aFqqq, aFz}},
      {-4, 1, 1, {aDFq, aFqq, aFqq, aFqqq, aFz}},
      {-9, 1, 1, {aFqp, aFqq, aFqq, aFqq, aFz}},
      {1, 1, 1, {aFp, aFqq, aFqq, aFqqq, aFz}},
      {-8, 1, 1, {aDFq, aFq, aFqqq, aFqqq, aFz}},
      {8, 1, 1, {aFp, aFq, aFqqq, aFqqq, aFz}},
      {6, 1, 1, {aDFq, aFq, aFqq, aFqqqq, aFz}},
      {-6, 1, 1, {aFp, aFq, aFqq, aFqqqq, aFz}},
      {18, 1, 1, {aFqq, aFqq, aFqq, aFqy}},
      {6, 1, 1, {aFq, aFq, aFqq, aFqq, aFqqz, aFz}},
      {3, 1, 1, {aFq, aFqq, aFqq, aFqq, aFqz, aFz}},
      {-2, 1, 1, {aFqq, aFqq, aFqq, aFqq, aFz, aFz}},
      {1, 1, 1, {aFq, aFqq, aFqq, aFqqq, aFz, aFz}},
      {4, 1, 1, {aFq, aFq, aFqqq, aFqqq, aFz, aFz}},
      {-3, 1, 1, {aFq, aFq, aFqq, aFqqqq, aFz, aFz}},
      {-9, 1, 1, {aFq, aFq, aFqq, aFqq, aFqq, aFzz}},

      {6, 1, 2, {aDFqqq, aFqq, aFqq}},
      {-6, 1, 2, {aFqq, aFqq, aFqqp}},
      {-8, 1, 2, {aDFqq, aFqq, aFqqq}},
      {8, 1, 2, {aDFq, aFqqq, aFqqq}},
      {-8, 1, 2, {aFp, aFqqq, aFqqq}},
      {-6, 1, 2, {aDFq, aFqq, aFqqqq}},
      {6, 1, 2, {aFp, aFqq, aFqqqq}},
      {-6, 1, 2, {aFq, aFqq, aFqq, aFqqz}},
      {6, 1, 2, {aFqq, aFqq, aFqq, aFqz}},
      {2, 1, 2, {aFqq, aFqq, aFqqq, aFz}},
      {-8, 1, 2, {aFq, aFqqq, aFqqq, aFz}},
      {6, 1, 2, {aFq, aFqq, aFqqqq, aFz}},

      {10, 1, 3, {aDFqq, aFqq, aFqq, aFqq}},
      {-10, 1, 3, {aDFq, aFqq, aFqq, aFqqq}},
      {10, 1, 3, {aFp, aFqq, aFqq, aFqqq}},
      {-10, 1, 3, {aFqq, aFqq, aFqq, aFqq, aFz}},
      {10, 1, 3, {aFq, aFqq, aFqq, aFqqq, aFz}},

      {30, 1, 4, {aFqq, aFqq, aFqq, aFqq}},

      {30, 1, 5, {aDFq, aFqq, aFqq, aFqq}},
      {-30, 1, 5, {aFp, aFqq, aFqq, aFqq}},
      {-30, 1, 5, {aFq, aFqq, aFqq, aFqq, aFz}},

      {4, 2, 2, {aFqqq, aFqqq}},
      {-3, 2, 2, {aFqq, aFqqqq}},

      {-10, 2, 3, {aFqq, aFqq, aFqqq}},

      {30, 2, 5, {aFqq, aFqq, aFqq}},

      {-20, 3, 3, {aFqq, aFqq, aFqq, aFqq}},
  };
  return terms;
}

}  // namespace detail

/// Add c * (symmetric product of one-forms a and b) to the component matrix.
/// Off-diagonal slots of a term c da db receive c/2 each; diagonals receive c.
template <class T>
void add_sym_product(JetMatrix<T>& g, const std::vector<Jet<T>>& a,
                     const std::vector<Jet<T>>& b, const Jet<T>& c) {
  int n = static_cast<int>(g.size());
  T half = scalar_from<T>(Rational(1, 2));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Jet<T> v = c * (a[i] * b[j] + a[j] * b[i]) * half;
      g[i][j] += v;
      if (i != j) g[j][i] += v;
    }
}

/// The general five-dimensional metric attached to z' = F(x,y,p,q,z),
/// assembled term by term in the tilded coframe.  Budget is forder - 4.
template <class T>
MetricJet<T> build_nurowski_metric(const Expr& F, const Point5& at, int forder,
                                   const std::vector<Rational>& params = {}) {
  using namespace detail;
  if (forder < 4) throw FieldError("insufficient forder: need at least 4");
  int order = forder - 4;

  // symbolic atoms
  std::array<Expr, kNumAtoms> ax;
  Expr Fq = diff_expr(F, CQ), Fp = diff_expr(F, CP), Fy = diff_expr(F, CY),
       Fz = diff_expr(F, CZ);
  Expr Fqq = diff_expr(Fq, CQ), Fqqq = diff_expr(Fqq, CQ),
       Fqqqq = diff_expr(Fqqq, CQ);
  ax[aFq] = Fq; ax[aFp] = Fp; ax[aFy] = Fy; ax[aFz] = Fz;
  ax[aFqq] = Fqq; ax[aFqqq] = Fqqq; ax[aFqqqq] = Fqqqq;
  ax[aFpp] = diff_expr(Fp, CP);
  ax[aFqp] = diff_expr(Fq, CP);
  ax[aFqz] = diff_expr(Fq, CZ);
  ax[aFpz] = diff_expr(Fp, CZ);
  ax[aFzz] = diff_expr(Fz, CZ);
  ax[aFqqp] = diff_expr(Fqq, CP);
  ax[aFqqz] = diff_expr(Fqq, CZ);
  ax[aFqy] = diff_expr(Fq, CY);
  ax[aDFq] = total_diff(Fq, F);
  ax[aDFp] = total_diff(Fp, F);
  ax[aDFz] = total_diff(Fz, F);
  ax[aDFqq] = total_diff(Fqq, F);
  ax[aDFqqq] = total_diff(Fqqq, F);
  ax[aDFqp] = total_diff(ax[aFqp], F);
  ax[aDFqz] = total_diff(ax[aFqz], F);
  ax[aDDFq] = total_diff(ax[aDFq], F);
  ax[aDDFqq] = total_diff(ax[aDFqq], F);

  std::array<Jet<T>, kNumAtoms> aj;
  for (int i = 0; i < kNumAtoms; ++i)
    aj[i] = eval_jet<T>(ax[i], at, order, params);
  if (aj[aFqq].value() == 0)
    throw FieldError("degenerate ODE point: F_qq = 0 at base point");

  Jet<T> jF = eval_jet<T>(F, at, order, params);
  Jet<T> jFq = aj[aFq];
  Jet<T> jp = Jet<T>::variable(5, order, CP, scalar_from<T>(at[CP]));
  Jet<T> jq = Jet<T>::variable(5, order, CQ, scalar_from<T>(at[CQ]));
  Jet<T> one = Jet<T>::constant(5, order, T(1));
  Jet<T> zero(5, order);

  // tilded coframe, coordinate components over (x,y,p,q,z)
  std::array<std::vector<Jet<T>>, 6> w;  // w[1..5]
  w[1] = {-jp, one, zero, zero, zero};
  w[2] = {-jF + jFq * jq, zero, -jFq, zero, one};
  w[3] = {-jq, zero, one, zero, zero};
  w[4] = {zero, zero, zero, one, zero};
  w[5] = {one, zero, zero, zero, zero};

  MetricJet<T> out;
  out.dim = 5;
  out.base = at;
  out.budget = order;
  out.g.assign(5, std::vector<Jet<T>>(5, zero));
  for (const auto& t : metric_terms()) {
    Jet<T> c = Jet<T>::constant(5, order, T(t.coeff));
    for (int f : t.factors) c = c * aj[f];
    add_sym_product(out.g, w[t.slot_a], w[t.slot_b], c);
  }
  return out;
}

//// The polynomial representative of the conformal class of z' = F(q): the
/// bracketed display with the conformal factor absorbed.  Exact-rational for
/// polynomial F.
template <class T>
MetricJet<T> build_example1_metric(const Expr& Fq_only, const Point5& at, int forder) {
  if (forder < 4) throw FieldError("insufficient forder: need at least 4");
  int order = forder - 4;
  Expr F = Fq_only;
  Expr F1 = diff_expr(F, CQ), F2 = diff_expr(F1, CQ), F3 = diff_expr(F2, CQ),
       F4 = diff_expr(F3, CQ);
  Jet<T> f = eval_jet<T>(F, at, order);
  Jet<T> f1 = eval_jet<T>(F1, at, order);
  Jet<T> f2 = eval_jet<T>(F2, at, order);
  Jet<T> f3 = eval_jet<T>(F3, at, order);
  Jet<T> f4 = eval_jet<T>(F4, at, order);
  if (f2.value() == 0)
    throw FieldError("degenerate ODE point: F'' = 0 at base point");
  Jet<T> jp = Jet<T>::variable(5, order, CP, scalar_from<T>(at[CP]));
  Jet<T> jq = Jet<T>::variable(5, order, CQ, scalar_from<T>(at[CQ]));

  MetricJet<T> out;
  out.dim = 5;
  out.base = at;
  out.budget = order;
  out.g.assign(5, std::vector<Jet<T>>(5, Jet<T>(5, order)));
  auto add = [&](int i, int j, const Jet<T>& c) {
    if (i == j) {
      out.g[i][i] += c;
    } else {
      Jet<T> h = c * scalar_from<T>(Rational(1, 2));
      out.g[i][j] += h;
      out.g[j][i] += h;
    }
  };
  Jet<T> f2_2 = f2 * f2, f2_3 = f2_2 * f2, f2_4 = f2_3 * f2;
  Jet<T> f3_2 = f3 * f3;
  T c2 = T(2), c3 = T(3), c4 = T(4), c5 = T(5);
  Jet<T> A = c4 * f3_2 - c3 * f2 * f4;

  add(CQ, CY, T(30) * f2_4);
  add(CQ, CX, T(-30) * (jp * f2_4));
  add(CZ, CZ, A);
  add(CP, CZ, c2 * (T(-5) * f2_2 * f3 - c4 * f1 * f3_2 + c3 * f1 * f2 * f4));
  add(CX, CZ, c2 * (T(15) * f2_3 + c5 * jq * f2_2 * f3 - c4 * f * f3_2 +
                    c4 * jq * f1 * f3_2 + c3 * f * f2 * f4 - c3 * jq * f1 * f2 * f4));
  add(CP, CP, T(-20) * f2_4 + T(10) * f1 * f2_2 * f3 + c4 * f1 * f1 * f3_2 -
                  c3 * f1 * f1 * f2 * f4);
  add(CP, CX, c2 * (T(-15) * f1 * f2_3 + T(20) * jq * f2_4 + c5 * f * f2_2 * f3 -
                    T(10) * jq * f1 * f2_2 * f3 + c4 * f * f1 * f3_2 -
                    c4 * jq * f1 * f1 * f3_2 - c3 * f * f1 * f2 * f4 +
                    c3 * jq * f1 * f1 * f2 * f4));
  add(CX, CX, T(-30) * f * f2_3 + T(30) * jq * f1 * f2_3 - T(20) * jq * jq * f2_4 -
                  T(10) * jq * f * f2_2 * f3 + T(10) * jq * jq * f1 * f2_2 * f3 +
                  c4 * f * f * f3_2 - T(8) * jq * f * f1 * f3_2 +
                  c4 * jq * jq * f1 * f1 * f3_2 - c3 * f * f * f2 * f4 +
                  T(6) * jq * f * f1 * f2 * f4 - c3 * jq * jq * f1 * f1 * f2 * f4);
  return out;
}

/// The all-rational representative of the second example family.
template <class T>
MetricJet<T> build_example2_metric(const Example2Params& ps, const Point5& at,
                                   int order = 6) {
  auto C = [&](const Rational& r) { return scalar_from<T>(r); };
  Jet<T> jp = Jet<T>::variable(5, order, CP, C(at[CP]));
  Jet<T> jq = Jet<T>::variable(5, order, CQ, C(at[CQ]));
  Jet<T> jz = Jet<T>::variable(5, order, CZ, C(at[CZ]));
  T a0 = C(ps.a[0]), a1 = C(ps.a[1]), a2 = C(ps.a[2]), a3 = C(ps.a[3]),
    a4 = C(ps.a[4]), a5 = C(ps.a[5]), a6 = C(ps.a[6]), b = C(ps.b);

  MetricJet<T> out;
  out.dim = 5;
  out.base = at;
  out.budget = order;
  out.g.assign(5, std::vector<Jet<T>>(5, Jet<T>(5, order)));
  auto add = [&](int i, int j, const Jet<T>& c) {
    if (i == j) {
      out.g[i][i] += c;
    } else {
      Jet<T> h = c * scalar_from<T>(Rational(1, 2));
      out.g[i][j] += h;
      out.g[j][i] += h;
    }
  };
  Jet<T> p2 = jp * jp, p3 = p2 * jp, p4 = p3 * jp, p5 = p4 * jp, p6 = p5 * jp;
  Jet<T> one = Jet<T>::constant(5, order, T(1));

  add(CY, CY, one * (T(9) * a2 + T(2) * b * b) + T(27) * a3 * jp + T(54) * a4 * p2 +
                  T(90) * a5 * p3 + T(135) * a6 * p4);
  add(CX, CX, one * (T(15) * a0) + T(2) * (b * b - T(3) * a2) * p2 - T(3) * a3 * p3 +
                  T(9) * a4 * p4 + T(30) * a5 * p5 + T(60) * a6 * p6 -
                  T(20) * b * (jp * jq) + T(5) * (jq * jq) + T(15) * b * jz);
  add(CX, CY, one * (T(15) * a1) + T(4) * (T(3) * a2 - b * b) * jp - T(9) * a3 * p2 -
                  T(48) * a4 * p3 - T(105) * a5 * p4 - T(180) * a6 * p5 +
                  T(20) * b * jq);
  add(CP, CP, one * T(20));
  add(CP, CX, T(-10) * (b * jp + jq));
  add(CP, CY, one * (T(10) * b));
  add(CQ, CY, one * T(-30));
  add(CX, CZ, one * T(-15));
  add(CQ, CX, T(30) * jp);
  return out;
}

/// Eigenvalue sign counts of the constant-term matrix.
template <class T>
std::pair<int, int> signature_of(const MetricJet<T>& g) {
  return signature(g.constant_term());
}

/// Residual of g against
///   scale * (s15 (th1 th5 + th5 th1) + s24 (th2 th4 + th4 th2)
///            + s33 th3 (x) th3),
/// max-norm over jet coefficients.  The defaults (1, -1, 1) give the
/// combination 2 th1 th5 - 2 th2 th4 + (th3)^2; rationalized coframe
/// fixtures use their own weights.
template <class T>
BigFloat coframe_check(const MetricJet<T>& g, const Coframe<T>& th,
                       const Jet<T>& scale,
                       const Rational& s15 = Rational(1),
                       const Rational& s24 = Rational(-1),
                       const Rational& s33 = Rational(1)) {
  const auto& t = th.theta;
  int n = g.dim;
  T c15 = scalar_from<T>(s15), c24 = scalar_from<T>(s24),
    c33 = scalar_from<T>(s33);
  BigFloat worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Jet<T> k = (t[0][i] * t[4][j] + t[0][j] * t[4][i]) * c15 +
                 (t[1][i] * t[3][j] + t[1][j] * t[3][i]) * c24 +
                 t[2][i] * t[2][j] * c33;
      Jet<T> r = g.g[i][j] - scale * k;
      BigFloat m = r.max_abs();
      if (m > worst) worst = m;
    }
  return worst;
}

template <class T>
struct Proportionality {
  bool ok = false;
  Jet<T> lambda;
  int witness_i = -1, witness_j = -1;  // mismatching component when !ok
};

/// Find lambda with g1 = lambda * g2 componentwise, if one exists.
template <class T>
Proportionality<T> proportionality_check(const MetricJet<T>& g1,
                                         const MetricJet<T>& g2,
                                         const BigFloat& tol = BigFloat(0)) {
  Proportionality<T> out;
  int n = g1.dim;
  int ri = -1, rj = -1;
  for (int i = 0; i < n && ri < 0; ++i)
    for (int j = 0; j < n && ri < 0; ++j)
      if (g2.g[i][j].value() != 0) { ri = i; rj = j; }
  if (ri < 0) {
    out.ok = true;  // g2 == 0 (constant terms): only sensible if g1 == 0 too
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!g1.g[i][j].is_zero()) { out.ok = false; out.witness_i = i; out.witness_j = j; }
    return out;
  }
  out.lambda = g1.g[ri][rj] * jet_inv(g2.g[ri][rj]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Jet<T> r = g1.g[i][j] - out.lambda * g2.g[i][j];
      if (r.max_abs() > tol) {
        out.witness_i = i;
        out.witness_j = j;
        return out;
      }
    }
  out.ok = true;
  return out;
}

}  // namespace fga
