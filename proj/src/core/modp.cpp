#include "bogo/core/modp.hpp"

#include <algorithm>

#include "bogo/core/errors.hpp"
#include "bogo/core/polynomial.hpp"

namespace bogo::modp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw DomainError("inverse of zero mod p");
  __int128 t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw DomainError("residue not invertible");
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

u64 reduce(const BigInt& n, u64 p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return mpz_get_ui(r.get_mpz_t());
}

u64 reduce(const BigRational& q, u64 p) {
  u64 d = reduce(BigInt(q.get_den()), p);
  if (d == 0) throw DomainError("denominator divisible by p");
  return mul(reduce(BigInt(q.get_num()), p), inv(d, p), p);
}

int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

u64 smallest_nonresidue(u64 p) {
  for (u64 z = 2;; ++z)
    if (legendre(z, p) == -1) return z;
}

u64 sqrt(u64 a, u64 p) {
  a %= p;
  if (a == 0 || p == 2) return a;
  if (legendre(a, p) != 1) throw DomainError("not a square mod p");
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = smallest_nonresidue(p);
  u64 m = static_cast<u64>(s), c = pow(z, q, p), t = pow(a, q, p), r = pow(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mul(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mul(b, b, p);
    m = i;
    c = mul(b, b, p);
    t = mul(t, c, p);
    r = mul(r, b, p);
  }
  return std::min(r, p - r);
}

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP from_polynomial(const Polynomial& f, u64 p) {
  PolyP r;
  r.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) r.push_back(reduce(c, p));
  trim(r);
  return r;
}

PolyP from_integers(const std::vector<BigInt>& c, u64 p) {
  PolyP r;
  r.reserve(c.size());
  for (const auto& x : c) r.push_back(reduce(x, p));
  trim(r);
  return r;
}

PolyP add(const PolyP& a, const PolyP& b, u64 p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i], p);
  trim(r);
  return r;
}

PolyP sub(const PolyP& a, const PolyP& b, u64 p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i], p);
  trim(r);
  return r;
}

PolyP mul(const PolyP& a, const PolyP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  // Residues below 2^31 give 62-bit products, so the 128-bit sums can wait.
  const bool small = p < (1ULL << 31);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
      if (!small) acc[i + j] %= p;
    }
  }
  PolyP r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u64>(acc[i] % p);
  trim(r);
  return r;
}

PolyP scale(const PolyP& a, u64 c, u64 p) {
  PolyP r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c, p);
  trim(r);
  return r;
}

std::pair<PolyP, PolyP> divmod(const PolyP& a, const PolyP& b, u64 p) {
  if (b.empty()) throw DomainError("division by zero polynomial mod p");
  if (a.size() < b.size()) return {{}, a};
  PolyP r = a, q(a.size() - b.size() + 1, 0);
  u64 li = inv(b.back(), p);
  const std::size_t bn = b.size();
  for (std::size_t k = q.size(); k-- > 0;) {
    u64 c = mul(r[k + bn - 1], li, p);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < bn; ++j) r[k + j] = sub(r[k + j], mul(c, b[j], p), p);
  }
  r.resize(bn - 1);
  trim(r);
  trim(q);
  return {q, r};
}

PolyP rem(const PolyP& a, const PolyP& b, u64 p) { return divmod(a, b, p).second; }

PolyP monic(const PolyP& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

PolyP derivative(const PolyP& a, u64 p) {
  PolyP r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], i % p, p));
  trim(r);
  return r;
}

PolyP gcd(const PolyP& a, const PolyP& b, u64 p) {
  PolyP x = a, y = b;
  while (!y.empty()) {
    PolyP r = rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x, p);
}

Xgcd xgcd(const PolyP& a, const PolyP& b, u64 p) {
  PolyP r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyP s2 = sub(s0, mul(q, s1, p), p);
    PolyP t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  u64 li = inv(r0.back(), p);
  return {scale(r0, li, p), scale(s0, li, p), scale(t0, li, p)};
}

PolyP powmod(const PolyP& base, const BigInt& e, const PolyP& m, u64 p) {
  PolyP result{1 % p};
  trim(result);
  result = rem(result, m, p);
  PolyP b = rem(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

u64 eval(const PolyP& f, u64 x, u64 p) {
  u64 acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = add(mul(acc, x, p), *it, p);
  return acc;
}

bool is_squarefree(const PolyP& f, u64 p) {
  if (degree(f) < 1) return true;
  PolyP d = derivative(f, p);
  if (d.empty()) return false;
  return degree(gcd(f, d, p)) == 0;
}

std::vector<std::pair<int, PolyP>> distinct_degree(const PolyP& f0, u64 p) {
  std::vector<std::pair<int, PolyP>> out;
  PolyP f = monic(f0, p);
  PolyP x{0, 1};
  PolyP h = rem(x, f, p);
  BigInt bp(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, bp, f, p);
    PolyP g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(d, g);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(degree(f), f);
  return out;
}

bool is_irreducible(const PolyP& f, u64 p) {
  if (degree(f) < 1) return false;
  if (!is_squarefree(f, p)) return false;
  auto dd = distinct_degree(f, p);
  return dd.size() == 1 && dd[0].first == degree(f);
}

namespace {

void equal_degree(const PolyP& f, int d, u64 p, std::mt19937_64& rng, std::vector<PolyP>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  const int n = degree(f);
  BigInt q = 1;
  for (int i = 0; i < d; ++i) q *= static_cast<unsigned long>(p);
  while (true) {
    PolyP a(static_cast<std::size_t>(n));
    for (auto& c : a) c = rng() % p;
    trim(a);
    if (degree(a) < 1) continue;
    PolyP g;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      PolyP t = a, s = a;
      for (int i = 1; i < d; ++i) {
        t = rem(mul(t, t, p), f, p);
        s = add(s, t, p);
      }
      g = gcd(f, s, p);
    } else {
      PolyP b = powmod(a, (q - 1) / 2, f, p);
      PolyP one{1};
      g = gcd(f, sub(b, one, p), p);
    }
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolyP> factor_squarefree(const PolyP& f, u64 p, std::mt19937_64& rng) {
  std::vector<PolyP> out;
  for (auto& [d, g] : distinct_degree(f, p)) equal_degree(monic(g, p), d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const PolyP& a, const PolyP& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace bogo::modp
