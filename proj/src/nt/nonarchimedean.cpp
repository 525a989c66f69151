#include <algorithm>
#include <climits>
#include <cmath>

#include "bogo/nt/neron_tate.hpp"

namespace bogo::nt {

namespace {

constexpr int kInfVal = INT_MAX / 4;

int val(const BigRational& x, const BigInt& ell) { return x == 0 ? kInfVal : valuation(x, ell); }

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

BigRational rpow(std::uint64_t ell, int k) {
  BigInt m;
  mpz_ui_pow_ui(m.get_mpz_t(), ell, static_cast<unsigned long>(std::abs(k)));
  return k >= 0 ? BigRational(m) : BigRational(1, 1) / BigRational(m);
}

BigInt ipow(std::uint64_t ell, int k) {
  BigInt m;
  mpz_ui_pow_ui(m.get_mpz_t(), ell, static_cast<unsigned long>(k));
  return m;
}

/// x / ell^v(x) reduced mod m; x nonzero.
BigInt unit_mod(const BigRational& x, const BigInt& ell, const BigInt& m) {
  BigInt num = x.get_num(), den = x.get_den();
  while (mpz_divisible_p(num.get_mpz_t(), ell.get_mpz_t())) num /= ell;
  while (mpz_divisible_p(den.get_mpz_t(), ell.get_mpz_t())) den /= ell;
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) throw DomainError("denominator not invertible");
  BigInt r = num * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt mod(BigInt x, const BigInt& m) {
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return x;
}

struct General {
  BigRational a1, a2, a3, a4, a6;

  BigRational b2() const { return a1 * a1 + 4 * a2; }
  BigRational b4() const { return 2 * a4 + a1 * a3; }
  BigRational b6() const { return a3 * a3 + 4 * a6; }
  BigRational b8() const { return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
  BigRational c4() const { return b2() * b2() - 24 * b4(); }
  BigRational disc() const {
    const BigRational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
  }
};

/// Image of y^2 = x^3 + a x + b under x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
General transform(const BigRational& a, const BigRational& b, const BigRational& u, const BigRational& r,
                  const BigRational& s, const BigRational& t) {
  const BigRational u2 = u * u, u3 = u2 * u;
  General g;
  g.a1 = 2 * s / u;
  g.a2 = (3 * r - s * s) / u2;
  g.a3 = 2 * t / u3;
  g.a4 = (a + 3 * r * r - 2 * s * t) / (u2 * u2);
  g.a6 = (b + r * a + r * r * r - t * t) / (u3 * u3);
  return g;
}

bool integral_at(const General& g, const BigInt& ell) {
  for (const BigRational* c : {&g.a1, &g.a2, &g.a3, &g.a4, &g.a6})
    if (*c != 0 && valuation(*c, ell) < 0) return false;
  return true;
}

/// Truncated power series of J(q) = E4(q)^3 / prod (1 - q^n)^24 and of E4, E6.
struct ModularSeries {
  std::vector<BigInt> e4, e6, j;
};

ModularSeries modular_series(int deg) {
  ModularSeries s;
  s.e4.assign(deg + 1, 0);
  s.e6.assign(deg + 1, 0);
  s.e4[0] = 1;
  s.e6[0] = 1;
  for (int n = 1; n <= deg; ++n) {
    BigInt s3 = 0, s5 = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) {
        BigInt dd = d;
        s3 += dd * dd * dd;
        s5 += dd * dd * dd * dd * dd;
      }
    s.e4[n] = 240 * s3;
    s.e6[n] = -504 * s5;
  }
  auto mul = [deg](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
    std::vector<BigInt> z(deg + 1, 0);
    for (int i = 0; i <= deg; ++i)
      if (x[i] != 0)
        for (int k = 0; i + k <= deg; ++k) z[i + k] += x[i] * y[k];
    return z;
  };
  // 1 / prod (1 - q^n) is the partition generating function.
  std::vector<BigInt> part(deg + 1, 0);
  part[0] = 1;
  for (int n = 1; n <= deg; ++n)
    for (int k = n; k <= deg; ++k) part[k] += part[k - n];
  std::vector<BigInt> p24(deg + 1, 0);
  p24[0] = 1;
  for (int i = 0; i < 24; ++i) p24 = mul(p24, part);
  s.j = mul(mul(mul(s.e4, s.e4), s.e4), p24);
  return s;
}

BigInt eval_mod(const std::vector<BigInt>& c, const BigInt& q, const BigInt& m) {
  BigInt acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mod(acc * q + *it, m);
  return acc;
}

}  // namespace

LocalModel local_model(const CurveQ& e, std::uint64_t ell) {
  if (!is_prime_u64(ell)) throw DomainError("local_model needs a prime");
  const BigInt L(static_cast<unsigned long>(ell));
  const int va = val(e.a(), L), vb = val(e.b(), L);
  const int j = std::min(va == kInfVal ? kInfVal : floor_div(va, 4), vb == kInfVal ? kInfVal : floor_div(vb, 6));
  const BigRational sc = rpow(ell, j);
  const BigRational a = e.a() / (sc * sc * sc * sc), b = e.b() / (sc * sc * sc * sc * sc * sc);

  LocalModel m;
  m.ell = ell;
  General g = transform(a, b, 1, 0, 0, 0);
  BigRational u = 1, r = 0, s = 0, t = 0;
  int k = 0;
  if (ell < 5) {
    const int rmax = ell == 2 ? 16 : 27, smax = ell == 2 ? 2 : 1, tmax = ell == 2 ? 16 : 1;
    const BigRational uu(static_cast<unsigned long>(ell));
    bool found = false;
    for (int ri = 0; ri < rmax && !found; ++ri)
      for (int si = 0; si < smax && !found; ++si)
        for (int ti = 0; ti < tmax && !found; ++ti) {
          General cand = transform(a, b, uu, ri, si, ti);
          if (integral_at(cand, L)) {
            g = cand;
            u = uu;
            r = ri;
            s = si;
            t = ti;
            k = 1;
            found = true;
          }
        }
  }
  // Compose with the initial scaling x = ell^{2j} x1.
  m.k = j + k;
  m.r = r * sc * sc;
  m.s = s * sc;
  m.t = t * sc * sc * sc;
  m.a1 = g.a1;
  m.a2 = g.a2;
  m.a3 = g.a3;
  m.a4 = g.a4;
  m.a6 = g.a6;
  m.v_disc = valuation(g.disc(), L);
  m.good = m.v_disc == 0;
  m.multiplicative = !m.good && val(g.c4(), L) == 0;
  return m;
}

double lambda_good(const CurveQ& e, const PointQ& p, std::uint64_t ell) {
  if (p.infinity) throw DomainError("lambda at the origin");
  const LocalModel m = local_model(e, ell);
  if (!m.good) throw BadReduction(ell);
  const BigRational u2 = rpow(ell, 2 * m.k);
  const BigRational x = (p.x - m.r) / u2;
  const int v = x == 0 ? 0 : valuation(x, BigInt(static_cast<unsigned long>(ell)));
  return 0.5 * std::max(0, -v) * std::log(static_cast<double>(ell));
}

TateData tate_parameter(const CurveQ& e, std::uint64_t ell) {
  if (ell < 5) throw UnsupportedReductionType(ell, "Tate parameter needs ell >= 5");
  const BigInt L(static_cast<unsigned long>(ell));
  const BigRational& j = e.j_invariant();
  if (j == 0 || valuation(j, L) >= 0) throw NotSplitMultiplicative("v(j) >= 0: potentially good reduction");
  TateData td;
  td.ell = ell;
  td.v_q = -valuation(j, L);
  td.precision = 2 * td.v_q + 20;
  const BigInt M = ipow(ell, td.precision);
  const int deg = td.precision / td.v_q + 2;
  const ModularSeries ms = modular_series(deg);

  BigInt inv;
  BigInt num = j.get_num();
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), M.get_mpz_t()) == 0) throw DomainError("numerator of j not a unit");
  const BigInt s = mod(BigInt(j.get_den()) * inv, M);
  BigInt q = 0;
  for (int it = 0; it <= td.precision + 1; ++it) {
    BigInt next = mod(s * eval_mod(ms.j, q, M), M);
    if (next == q) break;
    q = next;
  }
  td.q = q;
  if (val(BigRational(q), L) != td.v_q) throw PrecisionError("Tate parameter has the wrong valuation");

  const BigInt c4 = eval_mod(ms.e4, q, M), c6 = mod(-eval_mod(ms.e6, q, M), M);
  if (e.a() == 0 || e.b() == 0) throw NotSplitMultiplicative("j in {0, 1728}");
  td.v_mu2 = valuation(e.b(), L) - valuation(e.a(), L);
  BigInt den = mod(2 * unit_mod(e.a(), L, M) * c6, M), dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t()) == 0) throw PrecisionError("c6(q) not a unit");
  td.mu2_unit = mod(unit_mod(e.b(), L, M) * c4 * dinv, M);

  // a = -27 c4 mu^4 must hold exactly at the working precision.
  if (valuation(e.a(), L) != 2 * td.v_mu2 ||
      mod(unit_mod(e.a(), L, M) + 27 * c4 * td.mu2_unit * td.mu2_unit, M) != 0)
    throw PrecisionError("Tate uniformization check failed");
  td.split = td.v_mu2 % 2 == 0 && mpz_legendre(td.mu2_unit.get_mpz_t(), L.get_mpz_t()) == 1;
  return td;
}

double lambda_split_mult(const CurveQ& e, const PointQ& p, std::uint64_t ell) {
  if (p.infinity) throw DomainError("lambda at the origin");
  const TateData td = tate_parameter(e, ell);
  if (!td.split) throw NotSplitMultiplicative("reduction at " + std::to_string(ell) + " is not split");
  const BigInt L(static_cast<unsigned long>(ell));
  const BigInt M = ipow(ell, td.precision);
  // v(x_T) for x_T = (x / mu^2 - 3) / 36, through D = x - 3 mu^2.
  const int vm = td.v_mu2;
  BigInt d;
  int m0;
  if (p.x == 0) {
    m0 = vm;
    d = mod(-3 * td.mu2_unit, M);
  } else {
    const int vx = valuation(p.x, L);
    m0 = std::min(vx, vm);
    const int sx = vx - m0, sm = vm - m0;
    const BigInt tx = sx < td.precision ? unit_mod(p.x, L, M) * ipow(ell, sx) : BigInt(0);
    const BigInt tm = sm < td.precision ? 3 * td.mu2_unit * ipow(ell, sm) : BigInt(0);
    d = mod(tx - tm, M);
  }
  if (d == 0) throw PrecisionError("x(P) - 3 mu^2 vanishes at the working precision");
  const int v_xt = valuation(d, L) + m0 - vm;
  const double log_l = std::log(static_cast<double>(ell));
  const int n = td.v_q;
  if (v_xt <= 0) return n * log_l / 12.0 + 0.5 * (-v_xt) * log_l;
  const double k = std::min(static_cast<double>(v_xt), n / 2.0);
  return 0.5 * b2(k / n) * n * log_l;
}

}  // namespace bogo::nt
