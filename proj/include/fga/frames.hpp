#pragma once

#include <vector>

#include "fga/curvature.hpp"
#include "fga/linalg.hpp"
#include "fga/metric.hpp"

namespace fga {

/// One-form in frame components: f[a] is the coefficient of theta^a.
template <class T>
using FrameForm1 = std::vector<Jet<T>>;

/// Two-form as its antisymmetric value matrix on frame vector pairs,
/// w[a][b] = Omega(e_a, e_b), with the convention
/// (alpha ^ beta)(u, v) = alpha(u) beta(v) - alpha(v) beta(u).
template <class T>
using FrameForm2 = std::vector<std::vector<Jet<T>>>;

/// Connection one-forms omega^i_j in a frame: omega[i][j] is a FrameForm1.
template <class T>
using ConnectionMatrix = std::vector<std::vector<FrameForm1<T>>>;

/// A coframe (rows theta[a][i] of coordinate components), its dual frame
/// vectors, frame metric, and everything needed for frame calculus.
template <class T>
struct FrameBundle {
  int n = 0;
  JetMatrix<T> theta;  // theta[a][i]
  JetMatrix<T> E;      // E[i][a]: frame vectors, sum_i theta[a][i] E[i][b] = delta^a_b
  JetMatrix<T> G;      // frame metric G_ab = g(e_a, e_b)
  JetMatrix<T> Ginv;

  /// Directional derivative along frame vector a.
  Jet<T> dir(const Jet<T>& f, int a) const {
    int order = f.order() > 0 ? f.order() - 1 : 0;
    Jet<T> out(f.nvars(), order);
    for (int i = 0; i < n; ++i) out += E[i][a].truncated(order) * f.deriv(i);
    return out;
  }

  /// Exterior derivative of a frame one-form, returned in frame components.
  FrameForm2<T> d(const FrameForm1<T>& w) const {
    int nv = theta[0][0].nvars();
    int order = w[0].order();
    // coordinate components mu_i = sum_a w_a theta^a_i
    std::vector<Jet<T>> mu(n, Jet<T>(nv, order));
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < n; ++a) mu[i] += w[a] * theta[a][i].truncated(order);
    int dord = order > 0 ? order - 1 : 0;
    FrameForm2<T> out(n, std::vector<Jet<T>>(n, Jet<T>(nv, dord)));
    // dmu(d_i, d_j) = d_i mu_j - d_j mu_i, then push to the frame
    std::vector<std::vector<Jet<T>>> om(n, std::vector<Jet<T>>(n, Jet<T>(nv, dord)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        om[i][j] = mu[j].deriv(i).truncated(dord) - mu[i].deriv(j).truncated(dord);
        om[j][i] = -om[i][j];
      }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Jet<T> v(nv, dord);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            v += om[i][j] * E[i][a].truncated(dord) * E[j][b].truncated(dord);
        out[a][b] = v;
        out[b][a] = -v;
      }
    return out;
  }
};

template <class T>
FrameBundle<T> make_frame_bundle(const MetricJet<T>& g, const Coframe<T>& th) {
  FrameBundle<T> fb;
  fb.n = g.dim;
  fb.theta = th.theta;
  fb.E = jet_matrix_inverse(fb.theta);
  fb.G.assign(fb.n, std::vector<Jet<T>>(fb.n, Jet<T>()));
  int order = g.budget;
  for (int a = 0; a < fb.n; ++a)
    for (int b = 0; b < fb.n; ++b) {
      Jet<T> v(g.g[0][0].nvars(), order);
      for (int i = 0; i < fb.n; ++i)
        for (int j = 0; j < fb.n; ++j)
          v += g.g[i][j] * fb.E[i][a].truncated(order) * fb.E[j][b].truncated(order);
      fb.G[a][b] = v;
    }
  fb.Ginv = jet_matrix_inverse(fb.G);
  return fb;
}

/// Levi-Civita connection one-forms in an anholonomic coframe via the frame
/// Koszul formula with structure functions; torsion-free and
/// metric-compatible by construction.
template <class T>
ConnectionMatrix<T> frame_connection(const MetricJet<T>& g,
                                     const FrameBundle<T>& fb) {
  int n = fb.n;
  if (g.budget < 1) throw FieldError("frame_connection: budget exhausted");
  int nv = g.g[0][0].nvars();
  int order = g.budget - 1;
  auto tr = [&](const Jet<T>& a) { return a.truncated(order); };

  // commutators [e_a, e_b]^i
  std::vector<std::vector<std::vector<Jet<T>>>> comm(
      n, std::vector<std::vector<Jet<T>>>(n, std::vector<Jet<T>>(n, Jet<T>(nv, order))));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int i = 0; i < n; ++i) {
        Jet<T> v(nv, order);
        for (int j = 0; j < n; ++j)
          v += tr(fb.E[j][a]) * fb.E[i][b].deriv(j).truncated(order) -
               tr(fb.E[j][b]) * fb.E[i][a].deriv(j).truncated(order);
        comm[a][b][i] = v;
        comm[b][a][i] = -v;
      }
  // glow[a][b][c] = g([e_a, e_b], e_c)
  std::vector<std::vector<std::vector<Jet<T>>>> glow(
      n, std::vector<std::vector<Jet<T>>>(n, std::vector<Jet<T>>(n, Jet<T>(nv, order))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      for (int c = 0; c < n; ++c) {
        Jet<T> v(nv, order);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            v += g.g[i][j].truncated(order) * comm[a][b][i] * tr(fb.E[j][c]);
        glow[a][b][c] = v;
      }
    }

  T half = scalar_from<T>(Rational(1, 2));
  ConnectionMatrix<T> w(n, std::vector<FrameForm1<T>>(
                               n, FrameForm1<T>(n, Jet<T>(nv, order))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<Jet<T>> gam(n, Jet<T>(nv, order));
      for (int c = 0; c < n; ++c)
        gam[c] = (fb.dir(fb.G[b][c], a).truncated(order) +
                  fb.dir(fb.G[a][c], b).truncated(order) -
                  fb.dir(fb.G[a][b], c).truncated(order) + glow[a][b][c] -
                  glow[b][c][a] + glow[c][a][b]) *
                 half;
      for (int d = 0; d < n; ++d) {
        Jet<T> v(nv, order);
        for (int c = 0; c < n; ++c) v += tr(fb.Ginv[d][c]) * gam[c];
        w[d][b][a] = v;  // coefficient of theta^a in omega^d_b
      }
    }
  return w;
}

/// Curvature two-forms d omega + omega ^ omega of a connection matrix.
template <class T>
std::vector<std::vector<FrameForm2<T>>> connection_curvature(
    const ConnectionMatrix<T>& w, const FrameBundle<T>& fb) {
  int n = fb.n;
  int nv = w[0][0][0].nvars();
  int order = w[0][0][0].order() > 0 ? w[0][0][0].order() - 1 : 0;
  std::vector<std::vector<FrameForm2<T>>> F(
      n, std::vector<FrameForm2<T>>(
             n, FrameForm2<T>(n, std::vector<Jet<T>>(n, Jet<T>(nv, order)))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FrameForm2<T> dw = fb.d(w[i][j]);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          Jet<T> v = dw[a][b].truncated(order);
          for (int k = 0; k < n; ++k)
            v += w[i][k][a].truncated(order) * w[k][j][b].truncated(order) -
                 w[i][k][b].truncated(order) * w[k][j][a].truncated(order);
          F[i][j][a][b] = v;
          F[i][j][b][a] = -v;
        }
    }
  return F;
}

/// Torsion two-forms d theta^i + omega^i_j ^ theta^j of a connection in the
/// given coframe.
template <class T>
std::vector<FrameForm2<T>> connection_torsion(const ConnectionMatrix<T>& w,
                                              const FrameBundle<T>& fb) {
  int n = fb.n;
  int nv = w[0][0][0].nvars();
  int order = w[0][0][0].order() > 0 ? w[0][0][0].order() - 1 : 0;
  std::vector<FrameForm2<T>> Tor(
      n, FrameForm2<T>(n, std::vector<Jet<T>>(n, Jet<T>(nv, order))));
  for (int i = 0; i < n; ++i) {
    // theta^i in frame components is the constant unit vector e_i
    FrameForm1<T> unit(n, Jet<T>(nv, w[0][0][0].order()));
    unit[i] = Jet<T>::constant(nv, w[0][0][0].order(), T(1));
    FrameForm2<T> dth = fb.d(unit);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Jet<T> v = dth[a][b].truncated(order) + w[i][b][a].truncated(order) -
                   w[i][a][b].truncated(order);
        Tor[i][a][b] = v;
        Tor[i][b][a] = -v;
      }
  }
  return Tor;
}

}  // namespace fga
