#include "bogo/core/charpoly.hpp"

#include <algorithm>

#include "bogo/core/errors.hpp"

namespace bogo {

using modp::u64;

modp::PolyP charpoly_mod(std::vector<std::vector<u64>> h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i > m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    u64 tinv = modp::inv(h[m][m - 1], p);
    for (std::size_t r = m + 1; r < n; ++r) {
      u64 u = modp::mul(h[r][m - 1], tinv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = modp::sub(h[r][c], modp::mul(u, h[m][c], p), p);
      for (std::size_t c = 0; c < n; ++c) h[c][m] = modp::add(h[c][m], modp::mul(u, h[c][r], p), p);
    }
  }
  std::vector<modp::PolyP> polys(n + 1);
  polys[0] = {1 % p};
  for (std::size_t m = 1; m <= n; ++m) {
    modp::PolyP lin{modp::sub(0, h[m - 1][m - 1], p), 1};
    modp::PolyP pm = modp::mul(lin, polys[m - 1], p);
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = modp::mul(t, h[m - i][m - i - 1], p);
      u64 c = modp::mul(t, h[m - i - 1][m - 1], p);
      if (c) pm = modp::sub(pm, modp::scale(polys[m - i - 1], c, p), p);
    }
    polys[m] = std::move(pm);
  }
  return polys[n];
}

Polynomial charpoly(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(1);
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("charpoly of a non-square matrix");
  BigInt den = 1;
  for (const auto& row : m) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), lcm_of_denominators(row).get_mpz_t());
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  BigInt rowmax = 0;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      BigRational v = m[i][j] * den;
      a[i][j] = v.get_num();
      s += abs(a[i][j]);
    }
    rowmax = std::max(rowmax, s);
  }
  // Every coefficient is a sum of at most 2^n principal minors, each bounded by rowmax^j.
  BigInt bound;
  mpz_pow_ui(bound.get_mpz_t(), BigInt(rowmax + 1).get_mpz_t(), n);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);

  std::vector<BigInt> coeffs(n + 1, 0);
  BigInt modulus = 1;
  u64 p = (1ULL << 62);
  while (modulus <= bound) {
    do --p;
    while (!is_prime_u64(p));
    std::vector<std::vector<u64>> am(n, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) am[i][j] = modp::reduce(a[i][j], p);
    modp::PolyP cp = charpoly_mod(std::move(am), p);
    cp.resize(n + 1, 0);
    BigInt bp(static_cast<unsigned long>(p));
    BigInt minv;
    mpz_invert(minv.get_mpz_t(), BigInt(modulus % bp).get_mpz_t(), bp.get_mpz_t());
    for (std::size_t k = 0; k <= n; ++k) {
      // x = coeffs[k] + modulus * ((r - coeffs[k]) * modulus^-1 mod p)
      BigInt r(static_cast<unsigned long>(cp[k]));
      BigInt d = (r - coeffs[k]) * minv;
      mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), bp.get_mpz_t());
      coeffs[k] += modulus * d;
    }
    modulus *= bp;
  }
  std::vector<BigRational> out(n + 1);
  BigInt dpow = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    BigInt c = coeffs[k];
    if (2 * c > modulus) c -= modulus;
    out[k] = make_rational(c, dpow);
    dpow *= den;
  }
  return Polynomial(std::move(out));
}

}  // namespace bogo
