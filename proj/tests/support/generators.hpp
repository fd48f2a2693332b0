#pragma once

// Fixed-seed generators for property tests.

#include <random>

#include "modinv/qseries.hpp"

namespace gen {

inline modinv::Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 6);
  modinv::Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// Random series with `order` slots, each nonzero with probability 2/3.
/// With `unit_constant` the constant term is forced to a nonzero value.
inline modinv::RationalQSeries series(std::mt19937_64& rng, int order, bool unit_constant = false) {
  modinv::RationalQSeries s({}, order);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int e = 0; e < order; ++e) {
    if (coin(rng) != 0) s.set(e, small_rational(rng));
  }
  if (unit_constant) {
    modinv::Rational c = small_rational(rng);
    s.set(0, c == 0 ? modinv::Rational(1) : c);
  }
  return s;
}

}  // namespace gen
