#pragma once

#include <complex>
#include <vector>

#include "bogo/core/polynomial.hpp"

namespace bogo {

/// Disk {z : |z - center| <= radius} known to contain the represented root.
struct ComplexBall {
  std::complex<double> center;
  double radius = 0.0;

  bool contains(std::complex<double> z) const { return std::abs(z - center) <= radius; }
};

struct RootBall {
  ComplexBall ball;
  int multiplicity = 1;
};

/// Isolates all complex roots of f. Repeated roots are split off by square-free
/// decomposition; each square-free part is solved by Aberth iteration, polished
/// by multiprecision Aberth steps and certified with Smith's inclusion disks, which
/// must be pairwise disjoint and of radius at most eps * max(1, |center|)
/// (a double center cannot resolve large roots to an absolute eps). Precision escalates
/// through 50, 100 and 200 digits before giving up with PrecisionError.
std::vector<RootBall> complex_roots(const Polynomial& f, double eps = 1e-12);

}  // namespace bogo
