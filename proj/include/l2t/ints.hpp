#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>

namespace l2t {

// Coefficients are arbitrary-precision; exponents and lattice coordinates fit
// comfortably in 64 bits at the scales this library targets.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sgn(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::size_t hash_mix(std::size_t h, std::size_t v) {
  // boost::hash_combine recipe
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// Deterministic 64-bit stream splitter for seeding sub-generators.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace l2t
