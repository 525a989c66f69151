#include "bogo/nt/corpus.hpp"

#include "bogo/core/rng.hpp"
#include "bogo/nt/neron_tate.hpp"

namespace bogo::nt {

ShortImage short_image(int a1, int a2, int a3, int a4, int a6, const BigInt& x, const BigInt& y) {
  const BigInt b2 = a1 * a1 + 4 * a2, b4 = 2 * a4 + a1 * a3, b6 = a3 * a3 + 4 * a6;
  const BigInt c4 = b2 * b2 - 24 * b4, c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  CurveQ e{BigRational(-27 * c4), BigRational(-54 * c6)};
  return {e, PointQ::affine(BigRational(36 * x + 3 * b2), BigRational(108 * (2 * y + a1 * x + a3)))};
}

std::vector<NTPair> split_multiplicative_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<NTPair> out;
  Rng rng = substream(seed, 0);
  for (int a1 = 0; a1 <= 1; ++a1)
    for (int a3 = 0; a3 <= 1; ++a3)
      for (int a2 = -1; a2 <= 1; ++a2)
        for (int a4 = -4; a4 <= 4; ++a4)
          for (int a6 = -4; a6 <= 4; ++a6) {
            if (out.size() >= count) return out;
            const BigInt b2 = a1 * a1 + 4 * a2, b4 = 2 * a4 + a1 * a3, b6 = a3 * a3 + 4 * a6;
            const BigInt c4 = b2 * b2 - 24 * b4, c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
            if (c4 * c4 * c4 == c6 * c6) continue;
            for (int x = -30; x <= 30; ++x) {
              const BigInt r = BigInt(x) * x * x + a2 * x * x + a4 * x + a6, t = a1 * x + a3;
              const BigInt d = t * t + 4 * r;
              if (d < 0) continue;
              const BigInt s = sqrt(d);
              if (s * s != d || (s - t) % 2 != 0) continue;
              ShortImage im = short_image(a1, a2, a3, a4, a6, x, (s - t) / 2);
              if (nt_height_limit(im.curve, im.point, 1e-4).value < 1e-2) continue;
              try {
                nt_height_local(im.curve, im.point);
              } catch (const UnsupportedReductionType&) {
                break;
              }
              const long n = uniform_int(rng, 1, 3);
              const std::string label = "[" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) +
                                        "," + std::to_string(a4) + "," + std::to_string(a6) + "] " +
                                        std::to_string(n) + "P";
              out.push_back({label, im.curve, point_mul(im.curve, im.point, n)});
              break;
            }
          }
  return out;
}

}  // namespace bogo::nt
