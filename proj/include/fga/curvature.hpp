#pragma once

#include <optional>
#include <vector>

#include "fga/linalg.hpp"
#include "fga/metric.hpp"

namespace fga {

/// Dense tensor with jet components; `up[s]` records whether slot s is
/// contravariant.  Budget is the jet order shared by the components.
template <class T>
class TensorJet {
 public:
  TensorJet() = default;
  TensorJet(int dim, std::vector<bool> up, int nvars, int order)
      : dim_(dim), up_(std::move(up)), budget_(order) {
    int n = 1;
    for (size_t s = 0; s < up_.size(); ++s) n *= dim;
    comp_.assign(n, Jet<T>(nvars, order));
  }

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(up_.size()); }
  int budget() const { return budget_; }
  const std::vector<bool>& variance() const { return up_; }
  const std::vector<Jet<T>>& components() const { return comp_; }

  int flat(const std::vector<int>& idx) const {
    int f = 0;
    for (int v : idx) f = f * dim_ + v;
    return f;
  }

  Jet<T>& at(const std::vector<int>& idx) { return comp_[flat(idx)]; }
  const Jet<T>& at(const std::vector<int>& idx) const { return comp_[flat(idx)]; }

  template <class... I>
  Jet<T>& operator()(I... is) { return comp_[flatv(is...)]; }
  template <class... I>
  const Jet<T>& operator()(I... is) const { return comp_[flatv(is...)]; }

  BigFloat max_abs() const {
    BigFloat m = 0;
    for (const auto& c : comp_) {
      BigFloat a = c.max_abs();
      if (a > m) m = a;
    }
    return m;
  }

  bool is_zero() const {
    for (const auto& c : comp_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Visit every multi-index.
  template <class Fn>
  void for_each_index(Fn&& fn) const {
    std::vector<int> idx(rank(), 0);
    int r = rank();
    if (r == 0) { fn(idx); return; }
    for (;;) {
      fn(idx);
      int s = r - 1;
      while (s >= 0 && ++idx[s] == dim_) { idx[s] = 0; --s; }
      if (s < 0) break;
    }
  }

 private:
  template <class... I>
  int flatv(I... is) const {
    int f = 0;
    ((f = f * dim_ + is), ...);
    return f;
  }

  int dim_ = 0;
  std::vector<bool> up_;
  std::vector<Jet<T>> comp_;
  int budget_ = 0;
};

/// Levi-Civita covariant derivative; the new covariant slot is appended LAST,
/// so (nabla T)(i..., k) = T_{i...;k}.  Costs one order of budget.
template <class T>
TensorJet<T> covariant_derivative(const TensorJet<T>& t,
                                  const TensorJet<T>& christoffel) {
  int dim = t.dim();
  if (t.budget() < 1)
    throw FieldError("covariant_derivative: derivative budget exhausted");
  std::vector<bool> up = t.variance();
  up.push_back(false);
  int order = std::min(t.budget(), christoffel.budget()) - 1;
  TensorJet<T> out(dim, up, dim, order);
  int r = t.rank();
  t.for_each_index([&](const std::vector<int>& idx) {
    for (int k = 0; k < dim; ++k) {
      std::vector<int> oidx = idx;
      oidx.push_back(k);
      Jet<T> v = t.at(idx).deriv(k).truncated(order);
      std::vector<int> m_idx = idx;
      for (int s = 0; s < r; ++s) {
        for (int m = 0; m < dim; ++m) {
          m_idx[s] = m;
          if (t.variance()[s])
            v += christoffel(idx[s], k, m) * t.at(m_idx);
          else
            v -= christoffel(m, k, idx[s]) * t.at(m_idx);
        }
        m_idx[s] = idx[s];
      }
      out.at(oidx) = v;
    }
  });
  return out;
}

/// All curvature objects derived from one metric jet, computed lazily and
/// cached.  `riemann_sign` = -1 flips the curvature sign convention (used by
/// the convention self-tests).
template <class T>
class CurvatureEngine {
 public:
  explicit CurvatureEngine(const MetricJet<T>& g, int riemann_sign = 1)
      : g_(g), sign_(riemann_sign) {}

  const MetricJet<T>& metric() const { return g_; }
  int dim() const { return g_.dim; }

  const JetMatrix<T>& metric_inverse() {
    if (ginv_.empty()) ginv_ = jet_matrix_inverse(g_.g);
    return ginv_;
  }

  /// Gamma^i_{jk}, variance (up, down, down).
  const TensorJet<T>& christoffel() {
    if (!gamma_) {
      int n = dim();
      require_budget(1, "christoffel");
      const auto& gi = metric_inverse();
      int order = g_.budget - 1;
      TensorJet<T> G(n, {true, false, false}, n, order);
      // precompute first partials of the metric
      std::vector<Jet<T>> dg(n * n * n);
      for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k)
          for (int j = 0; j < n; ++j)
            dg[(l * n + k) * n + j] = g_.g[l][k].deriv(j).truncated(order);
      T half = scalar_from<T>(Rational(1, 2));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = j; k < n; ++k) {
            Jet<T> s(n, order);
            for (int l = 0; l < n; ++l) {
              Jet<T> br = dg[(l * n + k) * n + j] + dg[(l * n + j) * n + k] -
                          dg[(j * n + k) * n + l];
              s += gi[i][l].truncated(order) * br;
            }
            G(i, j, k) = s * half;
            if (k != j) G(i, k, j) = G(i, j, k);
          }
      gamma_ = std::move(G);
    }
    return *gamma_;
  }

  /// R^i_{jkl} = d_k Gamma^i_{jl} - d_l Gamma^i_{jk} + Gamma Gamma terms.
  const TensorJet<T>& riemann_up() {
    if (!riem_up_) {
      int n = dim();
      require_budget(2, "riemann");
      const auto& G = christoffel();
      int order = g_.budget - 2;
      TensorJet<T> R(n, {true, false, false, false}, n, order);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
              Jet<T> v = G(i, j, l).deriv(k).truncated(order) -
                         G(i, j, k).deriv(l).truncated(order);
              for (int m = 0; m < n; ++m)
                v += G(i, k, m) * G(m, j, l) - G(i, l, m) * G(m, j, k);
              if (sign_ < 0) v = -v;
              R(i, j, k, l) = v;
              R(i, j, l, k) = -v;
            }
      riem_up_ = std::move(R);
    }
    return *riem_up_;
  }

  /// R_{ijkl} = g_{im} R^m_{jkl}.
  const TensorJet<T>& riemann_down() {
    if (!riem_dn_) {
      int n = dim();
      const auto& R = riemann_up();
      int order = R.budget();
      TensorJet<T> D(n, {false, false, false, false}, n, order);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
              Jet<T> v(n, order);
              for (int m = 0; m < n; ++m) v += g_.g[i][m].truncated(order) * R(m, j, k, l);
              D(i, j, k, l) = v;
              D(i, j, l, k) = -v;
            }
      riem_dn_ = std::move(D);
    }
    return *riem_dn_;
  }

  /// Ric_{jl} = R^i_{jil}.  When the full Riemann tensor has not been
  /// requested, the contracted formula is evaluated directly from the
  /// Christoffel symbols (identical by construction, much cheaper).
  const TensorJet<T>& ricci() {
    if (!ricci_) {
      int n = dim();
      if (riem_up_) {
        const auto& R = *riem_up_;
        TensorJet<T> Ric(n, {false, false}, n, R.budget());
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l) {
            Jet<T> v(n, R.budget());
            for (int i = 0; i < n; ++i) v += R(i, j, i, l);
            Ric(j, l) = v;
          }
        ricci_ = std::move(Ric);
      } else {
        require_budget(2, "ricci");
        const auto& G = christoffel();
        int order = g_.budget - 2;
        TensorJet<T> Ric(n, {false, false}, n, order);
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l) {
            // Ric_jl = d_i Gamma^i_jl - d_l Gamma^i_ji
            //          + Gamma^i_im Gamma^m_jl - Gamma^i_lm Gamma^m_ji
            Jet<T> v(n, order);
            for (int i = 0; i < n; ++i)
              v += G(i, j, l).deriv(i).truncated(order) -
                   G(i, j, i).deriv(l).truncated(order);
            for (int i = 0; i < n; ++i)
              for (int m = 0; m < n; ++m)
                v += G(i, i, m).truncated(order) * G(m, j, l).truncated(order) -
                     G(i, l, m).truncated(order) * G(m, j, i).truncated(order);
            if (sign_ < 0) v = -v;
            Ric(j, l) = v;
          }
        ricci_ = std::move(Ric);
      }
    }
    return *ricci_;
  }

  /// Scalar curvature R = g^{jl} Ric_{jl}.
  const Jet<T>& scalar_curv() {
    if (!scal_) {
      int n = dim();
      const auto& Ric = ricci();
      const auto& gi = metric_inverse();
      Jet<T> s(n, Ric.budget());
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) s += gi[j][l].truncated(Ric.budget()) * Ric(j, l);
      scal_ = std::move(s);
    }
    return *scal_;
  }

  /// Schouten P = (Ric - R g / (2(n-1))) / (n-2).
  const TensorJet<T>& schouten() {
    if (!schouten_) {
      int n = dim();
      if (n < 3) throw FieldError("schouten needs dimension >= 3");
      const auto& Ric = ricci();
      const auto& R = scalar_curv();
      int order = Ric.budget();
      TensorJet<T> P(n, {false, false}, n, order);
      T inv_nm2 = T(1) / T(n - 2);
      T inv_2nm1 = T(1) / T(2 * (n - 1));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          P(i, j) = (Ric(i, j) - R * g_.g[i][j].truncated(order) * inv_2nm1) * inv_nm2;
      schouten_ = std::move(P);
    }
    return *schouten_;
  }

  /// W_{ijkl} = R_{ijkl} - (P_{ik} g_{lj} - P_{il} g_{kj} - P_{jk} g_{li}
  ///            + P_{jl} g_{ki}).
  const TensorJet<T>& weyl() {
    if (!weyl_) {
      int n = dim();
      const auto& D = riemann_down();
      const auto& P = schouten();
      int order = D.budget();
      TensorJet<T> W(n, {false, false, false, false}, n, order);
      auto gg = [&](int i, int j) { return g_.g[i][j].truncated(order); };
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
              W(i, j, k, l) = D(i, j, k, l) -
                              (P(i, k) * gg(l, j) - P(i, l) * gg(k, j) -
                               P(j, k) * gg(l, i) + P(j, l) * gg(k, i));
      weyl_ = std::move(W);
    }
    return *weyl_;
  }

  /// C_{ijk} = P_{ij;k} - P_{ik;j}.
  const TensorJet<T>& cotton() {
    if (!cotton_) {
      int n = dim();
      const auto& dP = schouten_deriv();
      TensorJet<T> C(n, {false, false, false}, n, dP.budget());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) C(i, j, k) = dP(i, j, k) - dP(i, k, j);
      cotton_ = std::move(C);
    }
    return *cotton_;
  }

  /// B_{ij} = g^{kl} C_{ijk;l} - P^{kl} W_{kijl}.
  const TensorJet<T>& bach() {
    if (!bach_) {
      int n = dim();
      const auto& dC = covariant_derivative(cotton(), christoffel());
      const auto& W = weyl();
      const auto& gi = metric_inverse();
      int order = dC.budget();
      TensorJet<T> B(n, {false, false}, n, order);
      // P^{kl} = g^{ka} g^{lb} P_{ab}
      const auto& P = schouten();
      TensorJet<T> Pup(n, {true, true}, n, order);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Jet<T> v(n, order);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              v += gi[k][a].truncated(order) * gi[l][b].truncated(order) * P(a, b);
          Pup(k, l) = v;
        }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Jet<T> v(n, order);
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
              v += gi[k][l].truncated(order) * dC(i, j, k, l) -
                   Pup(k, l) * W(k, i, j, l);
          B(i, j) = v;
        }
      bach_ = std::move(B);
    }
    return *bach_;
  }

  /// Cached P_{ij;k}.
  const TensorJet<T>& schouten_deriv() {
    if (!dP_) dP_ = covariant_derivative(schouten(), christoffel());
    return *dP_;
  }

 private:
  void require_budget(int need, const char* what) const {
    if (g_.budget < need)
      throw FieldError(std::string(what) + ": derivative budget exhausted (have " +
                       std::to_string(g_.budget) + ", need " + std::to_string(need) + ")");
  }

  MetricJet<T> g_;
  int sign_;
  JetMatrix<T> ginv_;
  std::optional<TensorJet<T>> gamma_, riem_up_, riem_dn_, ricci_, schouten_,
      weyl_, cotton_, bach_, dP_;
  std::optional<Jet<T>> scal_;
};

}  // namespace fga
