#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bogo/core/errors.hpp"
#include "bogo/elliptic/elliptic.hpp"

namespace bogo {

class NotFoundBelowBound : public Error {
 public:
  explicit NotFoundBelowBound(std::uint64_t bound)
      : Error("no admissible prime <= " + std::to_string(bound)), bound_(bound) {}
  std::uint64_t bound() const { return bound_; }

 private:
  std::uint64_t bound_;
};

struct P1Result {
  bool holds = false;
  std::string reason;
};

/// Good supersingular reduction at p with j~ not in {0, 1728}.
P1Result check_P1(const CurveQ& e, std::uint64_t p);

enum class P2Status { Verified, Inconclusive };

/// The maximal-subgroup classes of GL2(F_p) a Frobenius witness can exclude.
enum class SubgroupClass { Borel, SplitCartanNormalizer, NonsplitCartanNormalizer, Exceptional };

std::string to_string(P2Status s);
std::string to_string(SubgroupClass c);

struct FrobeniusWitness {
  std::uint64_t ell = 0;
  std::uint64_t a_mod_p = 0;
  SubgroupClass rules_out = SubgroupClass::Borel;
};

struct P2Result {
  P2Status status = P2Status::Inconclusive;
  /// The first witness found for each class, in class order.
  std::vector<FrobeniusWitness> evidence;
  std::vector<SubgroupClass> unresolved;
  std::uint64_t primes_sampled = 0;
};

inline constexpr std::uint64_t kDefaultEllMax = 10000;

/// One-sided surjectivity test for the mod-p representation from the
/// characteristic polynomials x^2 - a_l x + l mod p at good primes l <= ell_max.
P2Result check_P2(const CurveQ& e, std::uint64_t p, std::uint64_t ell_max = kDefaultEllMax);

struct PrimeCertificate {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  long long a_p = 0;
  long long a_q = 0;
  std::uint64_t j_tilde = 0;
  bool p1 = false;
  P2Status p2 = P2Status::Inconclusive;
  std::vector<FrobeniusWitness> evidence;
};

/// Smallest prime 5 <= p <= p_max satisfying P1 and with P2 verified.
PrimeCertificate find_admissible_prime(const CurveQ& e, std::uint64_t p_max, std::uint64_t ell_max = kDefaultEllMax);

struct GapConstants {
  std::uint64_t p = 0;
  /// log(p/2) / (p^2 + 1).
  double unramified = 0.0;
  /// log p / (2 p^8).
  double ramified = 0.0;
  /// Q(1) = (q - 1) q and Q(n) = q for n >= 2, q = p^2.
  std::uint64_t q_of_1 = 0;
  std::uint64_t q_of_n = 0;

  std::uint64_t Q(int n) const { return n <= 1 ? q_of_1 : q_of_n; }
};

GapConstants gap_constants(std::uint64_t p);

struct GapViolation {
  std::string element;
  double height = 0.0;
};

struct GapScanReport {
  int n = 1;
  std::uint64_t p = 0;
  int field_degree = 1;
  double bound = 0.0;
  std::size_t sampled = 0;
  std::size_t roots_of_unity_skipped = 0;
  /// Minimum over the non-root-of-unity samples; +inf when there are none.
  double min_height = 0.0;
  std::vector<GapViolation> violations;
};

/// Heights of seeded elements of Q(E[N]) (Q itself for N = 1) against the
/// unramified bound at the certified prime. Requires gcd(N, p) = 1.
GapScanReport empirical_gap_scan(const CurveQ& e, const PrimeCertificate& cert, int n, std::size_t count,
                                 std::uint64_t seed);

}  // namespace bogo
