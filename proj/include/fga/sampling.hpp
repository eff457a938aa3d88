#pragma once

#include <random>

#include "fga/expr.hpp"

namespace fga {

/// Deterministic rational sampling: numerators in [-20, 20], denominators in
/// [1, 20].  All randomness in the workbench flows through a seeded
/// mt19937_64, so runs are reproducible bit for bit.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 20);
  Rational r(num(rng), den(rng));
  return r;
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    Rational r = random_rational(rng);
    if (r != 0) return r;
  }
}

inline Point5 random_point(std::mt19937_64& rng) {
  Point5 p;
  for (int i = 0; i < 5; ++i) p[i] = random_rational(rng);
  return p;
}

}  // namespace fga
