#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "fga/scalar.hpp"

namespace fga {

/// Monomial bookkeeping for dense truncated multivariate polynomials.
/// Positions enumerate exponent multi-indices in graded order, so the table
/// for a lower truncation order is a prefix of the table for a higher one.
class JetBasis {
 public:
  static constexpr int kMaxOrder = 16;
  static constexpr int kMaxVars = 8;

  static const JetBasis& get(int nvars);

  int nvars() const { return nvars_; }
  /// Number of multi-indices of total degree <= order.
  int size(int order) const { return offsets_[order + 1]; }
  int degree(int pos) const { return degree_[pos]; }
  const std::array<std::uint8_t, kMaxVars>& exps(int pos) const { return exps_[pos]; }

  int position(const std::array<std::uint8_t, kMaxVars>& e) const {
    return pos_.at(key(e));
  }
  /// Position of the product monomial; exponents are simply added.
  int product(int a, int b) const { return pos_.at(keys_[a] + keys_[b]); }
  /// Position after removing one power of variable v (requires exps[pos][v] > 0).
  int shift_down(int pos, int v) const {
    return pos_.at(keys_[pos] - (std::uint64_t(1) << (8 * v)));
  }

 private:
  explicit JetBasis(int nvars);
  static std::uint64_t key(const std::array<std::uint8_t, kMaxVars>& e) {
    std::uint64_t k = 0;
    for (int i = 0; i < kMaxVars; ++i) k |= std::uint64_t(e[i]) << (8 * i);
    return k;
  }

  int nvars_;
  std::vector<std::array<std::uint8_t, kMaxVars>> exps_;
  std::vector<std::uint64_t> keys_;
  std::vector<int> degree_;
  std::array<int, kMaxOrder + 2> offsets_{};
  std::unordered_map<std::uint64_t, int> pos_;
};

inline JetBasis::JetBasis(int nvars) : nvars_(nvars) {
  std::array<std::uint8_t, kMaxVars> e{};
  for (int deg = 0; deg <= kMaxOrder; ++deg) {
    offsets_[deg] = static_cast<int>(exps_.size());
    // enumerate multi-indices of total degree == deg, lexicographic
    std::function<void(int, int)> rec = [&](int var, int left) {
      if (var == nvars - 1) {
        e[var] = static_cast<std::uint8_t>(left);
        exps_.push_back(e);
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[var] = static_cast<std::uint8_t>(k);
        rec(var + 1, left - k);
      }
      e[var] = 0;
    };
    rec(0, deg);
    while (static_cast<int>(degree_.size()) < static_cast<int>(exps_.size()))
      degree_.push_back(deg);
  }
  offsets_[kMaxOrder + 1] = static_cast<int>(exps_.size());
  keys_.reserve(exps_.size());
  for (int i = 0; i < static_cast<int>(exps_.size()); ++i) {
    keys_.push_back(key(exps_[i]));
    pos_.emplace(keys_[i], i);
  }
}

inline const JetBasis& JetBasis::get(int nvars) {
  static std::mutex mu;
  static std::array<std::unique_ptr<JetBasis>, kMaxVars + 1> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[nvars]) cache[nvars].reset(new JetBasis(nvars));
  return *cache[nvars];
}

/// Truncated multivariate Taylor expansion at a base point.  Coefficients are
/// Taylor coefficients (partial / multi-index factorial), not raw partials.
template <class T>
class Jet {
 public:
  Jet() : nvars_(0), order_(0) {}
  Jet(int nvars, int order)
      : nvars_(nvars), order_(order),
        c_(JetBasis::get(nvars).size(order), T(0)) {}

  static Jet constant(int nvars, int order, const T& v) {
    Jet j(nvars, order);
    j.c_[0] = v;
    return j;
  }
  /// base + delta_var
  static Jet variable(int nvars, int order, int var, const T& base) {
    Jet j(nvars, order);
    j.c_[0] = base;
    if (order >= 1) j.c_[1 + var] = T(1);
    return j;
  }

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(c_.size()); }
  const T& operator[](int pos) const { return c_[pos]; }
  T& operator[](int pos) { return c_[pos]; }
  const T& value() const { return c_[0]; }

  const JetBasis& basis() const { return JetBasis::get(nvars_); }

  bool compatible(const Jet& o) const { return nvars_ == o.nvars_; }

  Jet truncated(int order) const {
    if (order >= order_) return *this;
    Jet out(nvars_, order);
    std::copy(c_.begin(), c_.begin() + out.size(), out.c_.begin());
    return out;
  }

  /// Re-embed into a jet space with more variables; map[i] gives the new index
  /// of old variable i.
  Jet promoted(int new_nvars, const std::vector<int>& map, int order) const {
    const JetBasis& ob = basis();
    const JetBasis& nb = JetBasis::get(new_nvars);
    Jet out(new_nvars, order);
    for (int p = 0; p < size(); ++p) {
      if (ob.degree(p) > order) break;
      if (c_[p] == 0) continue;
      std::array<std::uint8_t, JetBasis::kMaxVars> e{};
      const auto& oe = ob.exps(p);
      for (int v = 0; v < nvars_; ++v) e[map[v]] = oe[v];
      out.c_[nb.position(e)] = c_[p];
    }
    return out;
  }

  Jet& operator+=(const Jet& o) {
    check(o);
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check(o);
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet operator-() const {
    Jet out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }
  Jet& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
  friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
  friend Jet operator*(Jet a, const T& s) { a *= s; return a; }
  friend Jet operator*(const T& s, Jet a) { a *= s; return a; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check(b);
    int order = std::min(a.order_, b.order_);
    const JetBasis& bs = a.basis();
    Jet out(a.nvars_, order);
    int na = bs.size(order);
    for (int ia = 0; ia < na; ++ia) {
      if (a.c_[ia] == 0) continue;
      int nb_ = bs.size(order - bs.degree(ia));
      for (int ib = 0; ib < nb_; ++ib) {
        if (b.c_[ib] == 0) continue;
        out.c_[bs.product(ia, ib)] += a.c_[ia] * b.c_[ib];
      }
    }
    return out;
  }

  friend bool operator==(const Jet& a, const Jet& b) {
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.c_ == b.c_;
  }

  /// Partial derivative with respect to variable v (order drops by one).
  Jet deriv(int v) const {
    const JetBasis& bs = basis();
    Jet out(nvars_, std::max(order_ - 1, 0));
    for (int p = 1; p < size(); ++p) {
      if (c_[p] == 0) continue;
      int ev = bs.exps(p)[v];
      if (ev == 0) continue;
      if (bs.degree(p) - 1 > out.order_) continue;
      out.c_[bs.shift_down(p, v)] += c_[p] * T(ev);
    }
    return out;
  }

  /// Raw partial derivative value at the base point: coefficient * factorial.
  T partial(const std::vector<int>& idx) const {
    const JetBasis& bs = basis();
    std::array<std::uint8_t, JetBasis::kMaxVars> e{};
    int deg = 0;
    for (int v = 0; v < nvars_; ++v) {
      e[v] = static_cast<std::uint8_t>(idx[v]);
      deg += idx[v];
    }
    if (deg > order_) throw FieldError("partial beyond truncation order");
    Int f = 1;
    for (int v = 0; v < nvars_; ++v) f *= factorial(idx[v]);
    return c_[bs.position(e)] * scalar_from<T>(Rational(f));
  }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  BigFloat max_abs() const {
    BigFloat m = 0;
    for (const auto& v : c_) {
      BigFloat a = abs(to_bigfloat(v));
      if (a > m) m = a;
    }
    return m;
  }

  /// f(this) where coeffs[m] = f^(m)(value())/m!, m = 0..order.
  Jet compose_series(const std::vector<T>& coeffs) const {
    Jet nil = *this;
    nil.c_[0] = T(0);
    Jet out = constant(nvars_, order_, coeffs[0]);
    Jet power = constant(nvars_, order_, T(1));
    for (int m = 1; m <= order_; ++m) {
      power = power * nil;
      out += power * coeffs[m];
    }
    return out;
  }

 private:
  void check(const Jet& o) const {
    if (nvars_ != o.nvars_)
      throw FieldError("jet operands have different variable counts");
  }

  int nvars_, order_;
  std::vector<T> c_;
};

template <class T>
Jet<T> jet_inv(const Jet<T>& a) {
  const T& c = a.value();
  if (c == 0) throw FieldError("jet_inv: zero constant term");
  std::vector<T> s(a.order() + 1);
  // (1/x)^(m)(c)/m! = (-1)^m / c^(m+1)
  T p = T(1) / c;
  for (int m = 0; m <= a.order(); ++m) {
    s[m] = p;
    p = -p / c;
  }
  return a.compose_series(s);
}

template <class T>
Jet<T> jet_pow(const Jet<T>& a, const Rational& r) {
  if (denominator(r) == 1 && numerator(r) >= 0) {
    Int e = numerator(r);
    Jet<T> out = Jet<T>::constant(a.nvars(), a.order(), T(1));
    Jet<T> p = a;
    while (e > 0) {
      if ((e & 1) != 0) out = out * p;
      p = p * p;
      e >>= 1;
    }
    return out;
  }
  const T& c = a.value();
  if (denominator(r) == 1) {
    // negative integer power
    return jet_pow(jet_inv(a), -r);
  }
  if (c <= 0) throw FieldError("jet_pow: fractional power needs positive constant term");
  // binomial series around c: coeff_m = binom(r, m) c^(r-m)
  std::vector<T> s(a.order() + 1);
  s[0] = pow_rat(c, r);
  Rational rm = r;
  for (int m = 1; m <= a.order(); ++m) {
    // s[m] = s[m-1] * (r - (m-1)) / (m * c)
    s[m] = s[m - 1] * scalar_from<T>(Rational(numerator(rm) - Int(m - 1) * denominator(rm),
                                              denominator(rm) * Int(m))) / c;
  }
  return a.compose_series(s);
}

namespace detail {
template <class T>
std::vector<T> require_float(const Jet<T>& a, const char* fn) {
  if constexpr (is_exact_field<T>)
    throw FieldError(std::string(fn) + " is not available in exact mode");
  return std::vector<T>(a.order() + 1);
}
}  // namespace detail

template <class T>
Jet<T> jet_exp(const Jet<T>& a) {
  auto s = detail::require_float(a, "exp");
  if constexpr (!is_exact_field<T>) {
    T e = exp(a.value());
    Rational f = 1;
    for (int m = 0; m <= a.order(); ++m) {
      s[m] = e * scalar_from<T>(f);
      f /= (m + 1);
    }
  }
  return a.compose_series(s);
}

template <class T>
Jet<T> jet_log(const Jet<T>& a) {
  auto s = detail::require_float(a, "log");
  if constexpr (!is_exact_field<T>) {
    const T& c = a.value();
    if (c <= 0) throw FieldError("log of nonpositive constant term");
    s[0] = log(c);
    T p = T(1) / c;
    for (int m = 1; m <= a.order(); ++m) {
      s[m] = p / T(m) * T(m % 2 == 1 ? 1 : -1);
      p /= c;
    }
  }
  return a.compose_series(s);
}

template <class T>
Jet<T> jet_sin(const Jet<T>& a) {
  auto s = detail::require_float(a, "sin");
  if constexpr (!is_exact_field<T>) {
    T sc = sin(a.value()), cc = cos(a.value());
    Rational f = 1;
    for (int m = 0; m <= a.order(); ++m) {
      T d = (m % 4 == 0) ? sc : (m % 4 == 1) ? cc : (m % 4 == 2) ? -sc : -cc;
      s[m] = d * scalar_from<T>(f);
      f /= (m + 1);
    }
  }
  return a.compose_series(s);
}

template <class T>
Jet<T> jet_cos(const Jet<T>& a) {
  auto s = detail::require_float(a, "cos");
  if constexpr (!is_exact_field<T>) {
    T sc = sin(a.value()), cc = cos(a.value());
    Rational f = 1;
    for (int m = 0; m <= a.order(); ++m) {
      T d = (m % 4 == 0) ? cc : (m % 4 == 1) ? -sc : (m % 4 == 2) ? -cc : sc;
      s[m] = d * scalar_from<T>(f);
      f /= (m + 1);
    }
  }
  return a.compose_series(s);
}

template <class T>
Jet<T> operator/(const Jet<T>& a, const Jet<T>& b) {
  return a * jet_inv(b);
}

}  // namespace fga
