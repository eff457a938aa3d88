#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fga/jet.hpp"

namespace fga {

template <class T>
using JetMatrix = std::vector<std::vector<Jet<T>>>;

template <class T>
JetMatrix<T> jet_identity(int n, int nvars, int order) {
  JetMatrix<T> m(n, std::vector<Jet<T>>(n, Jet<T>(nvars, order)));
  for (int i = 0; i < n; ++i) m[i][i] = Jet<T>::constant(nvars, order, T(1));
  return m;
}

/// Inverse of a matrix of jets by Gauss-Jordan elimination; pivots are chosen
/// by the largest constant term.  Throws if the constant-term matrix is
/// singular.
template <class T>
JetMatrix<T> jet_matrix_inverse(JetMatrix<T> a) {
  int n = static_cast<int>(a.size());
  int nvars = a[0][0].nvars(), order = a[0][0].order();
  JetMatrix<T> inv = jet_identity<T>(n, nvars, order);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    BigFloat best = 0;
    for (int r = col; r < n; ++r) {
      BigFloat mag = abs(to_bigfloat(a[r][col].value()));
      if (a[r][col].value() != 0 && (piv < 0 || mag > best)) { piv = r; best = mag; }
    }
    if (piv < 0) throw FieldError("jet_matrix_inverse: degenerate constant term");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Jet<T> d = jet_inv(a[col][col]);
    for (int j = 0; j < n; ++j) {
      a[col][j] = a[col][j] * d;
      inv[col][j] = inv[col][j] * d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Jet<T> f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

namespace detail {
template <class T>
bool negligible(const T& v) {
  if constexpr (is_exact_field<T>) return v == 0;
  else return abs(v) < BigFloat(1e-40);
}
}  // namespace detail

/// Eigenvalue sign counts (positive, negative) of a symmetric matrix by
/// congruence diagonalization (Sylvester's law); exact in rational mode.
/// Throws on a degenerate matrix.
template <class T>
std::pair<int, int> signature(std::vector<std::vector<T>> m) {
  int n = static_cast<int>(m.size());
  int pos = 0, neg = 0;
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;
  while (!live.empty()) {
    // best diagonal pivot
    int pi = -1;
    BigFloat best = 0;
    for (int i : live) {
      BigFloat mag = abs(to_bigfloat(m[i][i]));
      if (!detail::negligible(m[i][i]) && (pi < 0 || mag > best)) { pi = i; best = mag; }
    }
    if (pi < 0) {
      // all diagonal entries vanish: pull an off-diagonal entry onto the
      // diagonal via the congruence row_i += row_j, col_i += col_j
      int bi = -1, bj = -1;
      for (int i : live)
        for (int j : live)
          if (i < j && !detail::negligible(m[i][j])) { bi = i; bj = j; }
      if (bi < 0) throw FieldError("signature: degenerate matrix");
      for (int k = 0; k < n; ++k) m[bi][k] += m[bj][k];
      for (int k = 0; k < n; ++k) m[k][bi] += m[k][bj];
      continue;
    }
    if (m[pi][pi] > 0) ++pos; else ++neg;
    T d = m[pi][pi];
    std::vector<int> rest;
    for (int i : live)
      if (i != pi) rest.push_back(i);
    for (int r : rest) {
      T f = m[r][pi] / d;
      if (f == 0) continue;
      for (int k : rest) m[r][k] -= f * m[pi][k];
      m[r][pi] = T(0);
      m[pi][r] = T(0);
    }
    live = rest;
  }
  return {pos, neg};
}

/// Row reduction result for A k = b (least structure we need: ranks, one
/// particular solution when consistent, and the solution-space dimension).
template <class T>
struct LinearSolve {
  int rank = 0;
  int rank_augmented = 0;
  bool consistent = false;
  std::vector<T> particular;  // one solution when consistent
  int nullity = 0;
};

template <class T>
LinearSolve<T> solve_linear(std::vector<std::vector<T>> a, std::vector<T> b) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    BigFloat best = 0;
    for (int i = r; i < rows; ++i) {
      BigFloat mag = abs(to_bigfloat(a[i][c]));
      if (!detail::negligible(a[i][c]) && (piv < 0 || mag > best)) { piv = i; best = mag; }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    T d = a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] /= d;
    b[r] /= d;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      T f = a[i][c];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearSolve<T> out;
  out.rank = r;
  out.rank_augmented = r;
  for (int i = r; i < rows; ++i)
    if (!detail::negligible(b[i])) { out.rank_augmented = r + 1; break; }
  out.consistent = (out.rank_augmented == out.rank);
  out.nullity = cols - out.rank;
  if (out.consistent) {
    out.particular.assign(cols, T(0));
    for (int i = 0; i < r; ++i) out.particular[pivot_col[i]] = b[i];
  }
  return out;
}

/// Rank of a set of vectors (rows), exact in rational mode.
template <class T>
int row_rank(std::vector<std::vector<T>> a) {
  if (a.empty()) return 0;
  std::vector<T> b(a.size(), T(0));
  return solve_linear(std::move(a), std::move(b)).rank;
}

}  // namespace fga
