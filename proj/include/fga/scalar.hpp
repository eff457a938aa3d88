#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <type_traits>

namespace fga {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float;

/// Raised when an operation leaves the coefficient field (irrational roots,
/// analytic functions in exact mode, division by a zero constant term, ...).
struct FieldError : std::runtime_error {
  explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

template <class T>
inline constexpr bool is_exact_field = std::is_same_v<T, Rational>;

inline void set_float_precision_bits(unsigned bits) {
  if (bits < 64) throw std::invalid_argument("float precision must be >= 64 bits");
  // digits10 ~ bits * log10(2)
  BigFloat::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
}

template <class T>
T scalar_from(const Rational& r);

template <>
inline Rational scalar_from<Rational>(const Rational& r) { return r; }

template <>
inline BigFloat scalar_from<BigFloat>(const Rational& r) { return BigFloat(r); }

template <class T>
inline T scalar_from_int(long v) { return T(v); }

inline BigFloat to_bigfloat(const Rational& r) { return BigFloat(r); }
inline BigFloat to_bigfloat(const BigFloat& f) { return f; }

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

/// Exact s-th root of a nonnegative integer; returns false if no exact root.
inline bool exact_root(const Int& a, unsigned long s, Int& out) {
  if (a < 0) return false;
  Int r;
  int exact = mpz_root(r.backend().data(), a.backend().data(), s);
  out = r;
  return exact != 0;
}

/// Exact s-th root of a positive rational; throws FieldError when irrational.
inline Rational rational_root(const Rational& c, unsigned long s) {
  if (c <= 0) throw FieldError("root of nonpositive rational");
  Int num = numerator(c), den = denominator(c), rn, rd;
  if (!exact_root(num, s, rn) || !exact_root(den, s, rd))
    throw FieldError("irrational root in exact mode");
  return Rational(rn, rd);
}

/// base^r for rational r.  Exact mode requires the root to exist in Q.
template <class T>
T pow_rat(const T& base, const Rational& r) {
  if constexpr (is_exact_field<T>) {
    Int num = numerator(r), den = denominator(r);
    Rational b = base;
    if (num < 0) {
      if (b == 0) throw FieldError("0 raised to negative power");
      b = 1 / b;
      num = -num;
    }
    Rational root = (den == 1) ? b : rational_root(b, den.convert_to<unsigned long>());
    Rational out = 1;
    Rational p = root;
    Int e = num;
    while (e > 0) {
      if ((e & 1) != 0) out *= p;
      p *= p;
      e >>= 1;
    }
    return out;
  } else {
    if (denominator(r) == 1) {
      long e = numerator(r).convert_to<long>();
      return pow(base, e);
    }
    if (base <= 0) throw FieldError("fractional power of nonpositive base");
    return exp(BigFloat(r) * log(base));
  }
}

}  // namespace fga
