#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bogo/core/errors.hpp"

namespace bogo::gl2 {

/// 2x2 matrix over Z/NZ, entries reduced to [0, N).
struct Mat {
  std::uint32_t n = 1;
  std::uint32_t a = 0, b = 0, c = 0, d = 0;

  static Mat identity(std::uint32_t n) { return {n, 1 % n, 0, 0, 1 % n}; }
  static Mat make(std::uint32_t n, long long a, long long b, long long c, long long d);
  std::uint32_t det() const;
  bool invertible() const;
  Mat inverse() const;
  Mat operator*(const Mat& o) const;
  bool operator==(const Mat& o) const { return n == o.n && a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  /// Index in [0, N^4).
  std::uint32_t code() const { return ((a * n + b) * n + c) * n + d; }
  static Mat from_code(std::uint32_t n, std::uint32_t code);
  /// Reduction to a modulus dividing n.
  Mat reduce(std::uint32_t m) const { return {m, a % m, b % m, c % m, d % m}; }
};

inline constexpr std::size_t kMaterializeCap = 10000000;
inline constexpr std::uint32_t kMaxEnumPrime = 13;

/// A subgroup of GL2(Z/NZ) given by generators; the element set is computed
/// on first use (or supplied directly for GL2 itself).
class Subgroup {
 public:
  Subgroup(std::uint32_t n, std::vector<Mat> generators);
  static Subgroup full(std::uint32_t n);

  std::uint32_t modulus() const { return n_; }
  const std::vector<Mat>& generators() const { return gens_; }
  /// Throws GuardViolation past kMaterializeCap elements.
  const std::vector<Mat>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Mat& m) const;

 private:
  void materialize() const;
  std::uint32_t n_;
  std::vector<Mat> gens_;
  mutable std::vector<Mat> elems_;
  mutable std::vector<bool> member_;
  mutable bool ready_ = false;
};

/// |GL2(Z/NZ)| from the prime factorization of N.
std::uint64_t gl2_order(std::uint32_t n);

struct Cartan {
  std::uint32_t p = 0;
  /// Smallest positive quadratic non-residue.
  std::uint32_t eps = 0;
  /// x + y sqrt(eps) generating F_q^*, embedded as [[x, eps y], [y, x]].
  Mat generator;
  Subgroup group;
};

Mat cartan_embed(std::uint32_t p, std::uint32_t eps, std::uint32_t x, std::uint32_t y);

/// Non-split Cartan subgroup of GL2(F_p), 5 <= p <= 13.
Cartan nonsplit_cartan(std::uint32_t p);

/// |{g in GL2(F_p) : g G g^-1 = G}| by exhaustive test.
std::uint64_t normalizer_order(const Cartan& g);

struct ClosureReport {
  std::uint64_t size = 0;
  std::uint64_t conjugates = 0;
  std::uint64_t generated_order = 0;
  bool generates = false;
  /// Orders |G' ∩ G''| over all pairs of distinct conjugates.
  std::uint64_t min_intersection = 0;
  std::uint64_t max_intersection = 0;
};

/// Union of the conjugates h G h^-1 over GL2(F_p), and the subgroup it generates.
ClosureReport conjugate_closure(const Cartan& g);

/// L(M) = (M - 1) / p^{n-1} mod p for M = 1 mod p^{n-1} in GL2(Z/p^n).
Mat matrix_log(std::uint32_t p, int n, const Mat& m);

/// 1 + p^{n-1} A mod p^n for A over F_p.
Mat kernel_element(std::uint32_t p, int n, const Mat& a);

struct LogCheck {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
};

/// L(M1 M2) = L(M1) + L(M2) over all ordered pairs of the kernel.
LogCheck log_additivity_exhaustive(std::uint32_t p, int n);

/// L(s psi s^-1) = (s mod p) L(psi) (s mod p)^-1 on seeded (s, psi).
LogCheck log_equivariance_check(std::uint32_t p, int n, std::uint64_t samples, std::uint64_t seed);

struct OrbitReport {
  std::uint64_t gamma_order = 0;
  std::uint64_t kernel_order = 0;
  std::uint64_t centralizer_order = 0;
  std::uint64_t p4 = 0;
  bool passed = false;
};

/// For Gamma <= GL2(Z/N), p | N and psi = 1 mod N/p: checks #H <= p^4 for
/// H = Gamma ∩ ker(GL2(Z/N) -> GL2(Z/(N/p))) and #C_Gamma(psi) >= #Gamma / #H.
OrbitReport centralizer_orbit_check(const Subgroup& gamma, std::uint32_t p, const Mat& psi);

/// Seeded element of the mod-N/p kernel of GL2(Z/N).
Mat random_kernel_element(std::uint32_t n, std::uint32_t p, std::uint64_t seed);

}  // namespace bogo::gl2
