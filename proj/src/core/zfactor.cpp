#include "bogo/core/zfactor.hpp"

#include <algorithm>
#include <bitset>
#include <random>

#include "bogo/core/errors.hpp"
#include "bogo/core/modp.hpp"

namespace bogo {
namespace {

using IntPoly = std::vector<BigInt>;
using modp::PolyP;
using modp::u64;

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

BigInt mods(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt symmetric(const BigInt& a, const BigInt& m) {
  BigInt r = mods(a, m);
  if (2 * r > m) r -= m;
  return r;
}

IntPoly reduce(IntPoly f, const BigInt& m) {
  for (auto& c : f) c = mods(c, m);
  trim(f);
  return f;
}

IntPoly add(const IntPoly& a, const IntPoly& b, const BigInt& m) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(std::move(r), m);
}

IntPoly sub(const IntPoly& a, const IntPoly& b, const BigInt& m) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(std::move(r), m);
}

IntPoly mul(const IntPoly& a, const IntPoly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return reduce(std::move(r), m);
}

/// Division by a monic divisor modulo m.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b, const BigInt& m) {
  if (a.size() < b.size()) return {{}, a};
  IntPoly r = a, q(a.size() - b.size() + 1);
  const std::size_t bn = b.size();
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt c = mods(r[k + bn - 1], m);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < bn; ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  r.resize(bn - 1);
  return {reduce(std::move(q), m), reduce(std::move(r), m)};
}

IntPoly lift_poly(const PolyP& f) {
  IntPoly r;
  for (u64 c : f) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

/// One quadratic Hensel step for f = g h with g, h monic and s g + t h = 1,
/// from modulus m to m^2.
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const BigInt& m2) {
  IntPoly e = sub(f, mul(g, h, m2), m2);
  auto [q, r] = divmod_monic(mul(s, e, m2), h, m2);
  IntPoly g2 = add(g, add(mul(t, e, m2), mul(q, g, m2), m2), m2);
  IntPoly h2 = add(h, r, m2);
  IntPoly b = sub(add(mul(s, g2, m2), mul(t, h2, m2), m2), IntPoly{BigInt(1)}, m2);
  auto [c, d] = divmod_monic(mul(s, b, m2), h2, m2);
  s = sub(s, d, m2);
  t = sub(t, add(mul(t, b, m2), mul(c, g2, m2), m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

void lift_tree(const IntPoly& f, const std::vector<PolyP>& facs, u64 p, const BigInt& modulus,
               std::vector<IntPoly>& out) {
  if (facs.size() == 1) {
    out.push_back(f);
    return;
  }
  std::size_t half = facs.size() / 2;
  std::vector<PolyP> left(facs.begin(), facs.begin() + static_cast<long>(half));
  std::vector<PolyP> right(facs.begin() + static_cast<long>(half), facs.end());
  PolyP g0{1}, h0{1};
  for (const auto& u : left) g0 = modp::mul(g0, u, p);
  for (const auto& u : right) h0 = modp::mul(h0, u, p);
  auto x = modp::xgcd(g0, h0, p);
  if (modp::degree(x.g) != 0) throw Error("Hensel lifting: factors not coprime");
  IntPoly g = lift_poly(g0), h = lift_poly(h0), s = lift_poly(x.s), t = lift_poly(x.t);
  BigInt m(static_cast<unsigned long>(p));
  while (m < modulus) {
    m = m * m;
    hensel_step(reduce(f, m), g, h, s, t, m);
  }
  g = reduce(g, modulus);
  h = reduce(h, modulus);
  lift_tree(g, left, p, modulus, out);
  lift_tree(h, right, p, modulus, out);
}

/// Exact division over Z; returns false if b does not divide a.
bool divides_exact(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
  if (a.size() < b.size()) return false;
  IntPoly r = a, q(a.size() - b.size() + 1);
  const std::size_t bn = b.size();
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = r[k + bn - 1];
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < bn; ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t i = 0; i + 1 < bn; ++i)
    if (r[i] != 0) return false;
  quotient = std::move(q);
  return true;
}

IntPoly make_primitive(IntPoly f) {
  trim(f);
  BigInt g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (f.back() < 0) g = -g;
  for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return f;
}

bool eisenstein(const IntPoly& f) {
  const std::size_t n = f.size() - 1;
  BigInt g = 0;
  for (std::size_t i = 0; i < n; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f[i].get_mpz_t());
  if (g == 0 || g == 1) return false;
  for (u64 p : primes_up_to(10000)) {
    BigInt bp(static_cast<unsigned long>(p));
    if (!mpz_divisible_p(g.get_mpz_t(), bp.get_mpz_t())) continue;
    if (mpz_divisible_p(f[n].get_mpz_t(), bp.get_mpz_t())) continue;
    if (!mpz_divisible_p(f[0].get_mpz_t(), BigInt(bp * bp).get_mpz_t())) return true;
  }
  return false;
}

constexpr std::size_t kMaxDeg = 512;
using DegSet = std::bitset<kMaxDeg + 1>;

struct PrimeData {
  u64 p;
  std::vector<int> degrees;
};

/// Square-free, primitive, f(0) != 0, degree >= 2.
std::vector<IntPoly> factor_core(const IntPoly& f, int degree_cap) {
  const int n = static_cast<int>(f.size()) - 1;
  if (static_cast<std::size_t>(n) > kMaxDeg) throw DegreeCapExceeded(n, static_cast<std::int64_t>(kMaxDeg));
  if (eisenstein(f)) return {f};
  IntPoly rev(f.rbegin(), f.rend());
  if (eisenstein(rev)) return {f};

  DegSet possible;
  for (int i = 0; i <= n; ++i) possible.set(static_cast<std::size_t>(i));
  std::vector<PrimeData> data;
  u64 cand = 3;
  int tried = 0;
  while (data.size() < 8 && tried < 400) {
    ++tried;
    do cand += 2;
    while (!is_prime_u64(cand));
    if (modp::reduce(f.back(), cand) == 0) continue;
    PolyP fp = modp::from_integers(f, cand);
    if (!modp::is_squarefree(fp, cand)) continue;
    PrimeData pd{cand, {}};
    for (auto& [d, g] : modp::distinct_degree(fp, cand))
      for (int k = 0; k < modp::degree(g) / d; ++k) pd.degrees.push_back(d);
    DegSet sums;
    sums.set(0);
    for (int d : pd.degrees) sums |= sums << static_cast<std::size_t>(d);
    possible &= sums;
    data.push_back(std::move(pd));
    bool irreducible = true;
    for (int i = 1; i < n; ++i)
      if (possible.test(static_cast<std::size_t>(i))) irreducible = false;
    if (irreducible) return {f};
  }
  if (data.empty()) throw Error("no suitable prime for factorization");
  if (n > degree_cap) throw DegreeCapExceeded(n, degree_cap);

  const PrimeData* best = &data[0];
  for (const auto& d : data)
    if (d.degrees.size() < best->degrees.size()) best = &d;
  const u64 p = best->p;
  std::mt19937_64 rng(p * 7919 + static_cast<u64>(n));
  auto facs = modp::factor_squarefree(modp::from_integers(f, p), p, rng);

  BigInt norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  BigInt norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  BigInt lc = f.back();
  BigInt bound = 2 * abs(lc) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  BigInt modulus(static_cast<unsigned long>(p));
  while (modulus <= bound) modulus *= modulus;

  BigInt lcinv;
  mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  IntPoly monic_f = f;
  for (auto& c : monic_f) c = mods(c * lcinv, modulus);
  std::vector<IntPoly> lifted;
  lift_tree(monic_f, facs, p, modulus, lifted);

  std::vector<IntPoly> result;
  IntPoly current = f;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    const BigInt clc = current.back();
    while (true) {
      int deg = 0;
      for (std::size_t i : idx) deg += static_cast<int>(lifted[remaining[i]].size()) - 1;
      if (possible.test(static_cast<std::size_t>(deg))) {
        BigInt c0 = clc;
        for (std::size_t i : idx) c0 = mods(c0 * lifted[remaining[i]][0], modulus);
        c0 = symmetric(c0, modulus);
        if (c0 != 0 && mpz_divisible_p(BigInt(clc * current[0]).get_mpz_t(), c0.get_mpz_t())) {
          IntPoly g{clc};
          for (std::size_t i : idx) g = mul(g, lifted[remaining[i]], modulus);
          for (auto& c : g) c = symmetric(c, modulus);
          g = make_primitive(g);
          IntPoly q;
          if (divides_exact(current, g, q)) {
            result.push_back(g);
            current = q;
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < remaining.size(); ++i)
              if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(remaining[i]);
            remaining = std::move(rest);
            found = true;
            break;
          }
        }
      }
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == remaining.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (current.size() > 1) result.push_back(make_primitive(current));
  return result;
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

Factorization factor_over_z(const Polynomial& f, int degree_cap) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  Factorization out;
  for (auto& [g, mult] : squarefree_decomposition(f)) {
    IntPoly h = make_primitive(g.integer_coeffs());
    if (h[0] == 0) {
      out.factors.emplace_back(Polynomial{0, 1}, mult);
      h.erase(h.begin());
    }
    if (h.size() == 2) {
      out.factors.emplace_back(Polynomial(std::vector<BigRational>(h.begin(), h.end())), mult);
    } else if (h.size() > 2) {
      for (auto& piece : factor_core(h, degree_cap))
        out.factors.emplace_back(Polynomial(std::vector<BigRational>(piece.begin(), piece.end())), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  BigRational lead = 1;
  for (const auto& [g, mult] : out.factors)
    for (int i = 0; i < mult; ++i) lead *= g.leading();
  out.unit = f.leading() / lead;
  return out;
}

bool is_irreducible_over_q(const Polynomial& f, int degree_cap) {
  if (f.degree() < 1) return false;
  auto fac = factor_over_z(f, degree_cap);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace bogo
