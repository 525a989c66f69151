#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bogo/core/integer.hpp"

namespace bogo {

class Polynomial;

namespace modp {

using u64 = std::uint64_t;
/// Dense polynomial over F_p, ascending coefficients, no trailing zeros.
using PolyP = std::vector<u64>;

inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}
inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 pow(u64 a, u64 e, u64 p);
/// Inverse of a nonzero residue.
u64 inv(u64 a, u64 p);
/// Residue of an integer.
u64 reduce(const BigInt& n, u64 p);
/// Residue of a rational; throws DomainError if p divides the denominator.
u64 reduce(const BigRational& q, u64 p);
/// Legendre symbol in {-1, 0, 1}; p odd.
int legendre(u64 a, u64 p);
/// Square root of a quadratic residue (Tonelli-Shanks).
u64 sqrt(u64 a, u64 p);
u64 smallest_nonresidue(u64 p);

void trim(PolyP& f);
PolyP from_polynomial(const Polynomial& f, u64 p);
PolyP from_integers(const std::vector<BigInt>& c, u64 p);
inline int degree(const PolyP& f) { return static_cast<int>(f.size()) - 1; }

PolyP add(const PolyP& a, const PolyP& b, u64 p);
PolyP sub(const PolyP& a, const PolyP& b, u64 p);
PolyP mul(const PolyP& a, const PolyP& b, u64 p);
PolyP scale(const PolyP& a, u64 c, u64 p);
std::pair<PolyP, PolyP> divmod(const PolyP& a, const PolyP& b, u64 p);
PolyP rem(const PolyP& a, const PolyP& b, u64 p);
PolyP monic(const PolyP& a, u64 p);
PolyP derivative(const PolyP& a, u64 p);
PolyP gcd(const PolyP& a, const PolyP& b, u64 p);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct Xgcd {
  PolyP g, s, t;
};
Xgcd xgcd(const PolyP& a, const PolyP& b, u64 p);
/// base^e mod m.
PolyP powmod(const PolyP& base, const BigInt& e, const PolyP& m, u64 p);
u64 eval(const PolyP& f, u64 x, u64 p);

bool is_squarefree(const PolyP& f, u64 p);
bool is_irreducible(const PolyP& f, u64 p);

/// Distinct-degree factorization of a monic squarefree f: (d, product of the degree-d factors).
std::vector<std::pair<int, PolyP>> distinct_degree(const PolyP& f, u64 p);
/// Complete factorization of a monic squarefree f into monic irreducibles, sorted.
std::vector<PolyP> factor_squarefree(const PolyP& f, u64 p, std::mt19937_64& rng);

}  // namespace modp
}  // namespace bogo
