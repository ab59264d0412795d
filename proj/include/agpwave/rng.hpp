#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace agpwave {

// Stateless counter-based generator: each (seed, counter) pair maps to one
// value independently of evaluation order, so draws scheduled across threads
// reproduce bit-exactly.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(mix64(seed ^ mix64(counter)) >> 11) * 0x1.0p-53;
}

// Circular complex normal with E|z|^2 = 1 (real/imag parts N(0, 1/2)).
inline std::complex<double> complex_normal(std::uint64_t seed, std::uint64_t counter) {
  const double u = uniform01(seed, 2 * counter);
  const double v = uniform01(seed, 2 * counter + 1);
  const double r = std::sqrt(-std::log1p(-u));
  const double th = 2.0 * std::numbers::pi * v;
  return {r * std::cos(th), r * std::sin(th)};
}

}  // namespace agpwave
