#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bogo/elliptic/elliptic.hpp"

namespace bogo::nt {

struct NTPair {
  std::string label;
  CurveQ curve;
  PointQ point;
};

/// Short model y^2 = x^3 - 27 c4 x - 54 c6 of [a1, a2, a3, a4, a6] and the image
/// of (x, y) under X = 36 x + 3 b2, Y = 108 (2y + a1 x + a3).
struct ShortImage {
  CurveQ curve;
  PointQ point;
};

ShortImage short_image(int a1, int a2, int a3, int a4, int a6, const BigInt& x, const BigInt& y);

/// Curves [a1, a2, a3, a4, a6] with small coefficients whose bad primes are all
/// >= 5 and split multiplicative, each with its first non-torsion integral point
/// of |x| <= 30, replaced by a seeded multiple n P with n in {1, 2, 3}.
std::vector<NTPair> split_multiplicative_corpus(std::size_t count, std::uint64_t seed);

}  // namespace bogo::nt
