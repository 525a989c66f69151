#include <algorithm>
#include <cmath>
#include <set>

#include "bogo/nt/neron_tate.hpp"

namespace bogo::nt {

namespace {

double naive_height(const BigRational& x) {
  if (x == 0) return 0.0;
  return std::max(log_abs(x.get_num()), log_abs(x.get_den()));
}

struct IntegralModel {
  BigInt a, b, d;  // a = A d^4, b = B d^6, x = d^2 X
};

IntegralModel integral_model(const CurveQ& e) {
  IntegralModel m;
  mpz_lcm(m.d.get_mpz_t(), e.a().get_den_mpz_t(), e.b().get_den_mpz_t());
  const BigInt d2 = m.d * m.d, d4 = d2 * d2;
  m.a = BigRational(e.a() * d4).get_num();
  m.b = BigRational(e.b() * d4 * d2).get_num();
  return m;
}

bool is_torsion(const CurveQ& e, const PointQ& p) {
  PointQ q = p;
  for (int n = 1; n <= 12; ++n) {
    if (q.infinity) return true;
    q = e.add(q, p);
  }
  return false;
}

struct AdicState {
  std::uint64_t ell;
  BigInt L;
  int prec;
  BigInt x, z;
};

BigInt modp(BigInt v, const BigInt& m) {
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return v;
}

int adic_val(const BigInt& v, const BigInt& L, int cap) {
  if (v == 0) return cap;
  return std::min(cap, valuation(v, L));
}

std::set<std::uint64_t> relevant_primes(const CurveQ& e, const PointQ& p) {
  const IntegralModel m = integral_model(e);
  std::set<std::uint64_t> out{2, 3};
  auto add = [&out](const BigInt& n) {
    if (n == 0) return;
    for (const auto& [q, k] : factor_integer(abs(n))) {
      if (!q.fits_ulong_p()) throw GuardViolation("prime factor exceeds 64 bits");
      out.insert(q.get_ui());
    }
  };
  add(4 * m.a * m.a * m.a + 27 * m.b * m.b);
  add(m.d);
  if (!p.infinity) add(p.x.get_den());
  return out;
}

}  // namespace

LimitResult nt_height_limit(const CurveQ& e, const PointQ& p, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (!p.infinity && !e.on_curve(p)) throw DomainError("point is not on the curve");
  if (p.infinity || is_torsion(e, p)) return {0.0, 0.0, 0};

  const IntegralModel m = integral_model(e);
  const BigInt res = 4 * m.a * m.a * m.a + 27 * m.b * m.b;
  const BigRational disc = BigRational(-16 * res);
  const BigRational x0 = p.x * m.d * m.d;

  const double c = 2.0 * (naive_height(e.j_invariant()) / 8.0 + naive_height(disc) / 12.0 + 1.07) + 1.0;
  int steps = std::max(1, static_cast<int>(std::ceil(std::log(c / tol) / std::log(4.0))));
  if (steps > 40) throw GuardViolation("tolerance needs more than 40 doublings");

  std::vector<AdicState> adic;
  std::set<std::uint64_t> primes{2, 3};
  for (const auto& [q, k] : factor_integer(abs(res))) primes.insert(q.get_ui());
  for (std::uint64_t ell : primes) {
    AdicState s;
    s.ell = ell;
    s.L = BigInt(static_cast<unsigned long>(ell));
    const int vr = valuation(res, s.L);
    s.prec = 40 + steps * (2 * vr + 12);
    const BigInt mod = [&] {
      BigInt t;
      mpz_pow_ui(t.get_mpz_t(), s.L.get_mpz_t(), s.prec);
      return t;
    }();
    s.x = modp(x0.get_num(), mod);
    s.z = modp(x0.get_den(), mod);
    adic.push_back(s);
  }

  using ld = long double;
  const ld a = m.a.get_d(), b = m.b.get_d();
  ld h = naive_height(x0);
  ld xs = x0.get_d(), zs = 1.0L;
  if (std::fabs(xs) > 1) {
    zs = 1.0L / xs;
    xs = 1.0L;
  }
  for (int k = 0; k < steps; ++k) {
    const ld f = xs * xs * xs * xs - 2 * a * xs * xs * zs * zs - 8 * b * xs * zs * zs * zs + a * a * zs * zs * zs * zs;
    const ld g = 4 * zs * (xs * xs * xs + a * xs * zs * zs + b * zs * zs * zs);
    const ld big = std::max(std::fabs(f), std::fabs(g));
    if (!(big > 0) || !std::isfinite(big)) throw PrecisionError("doubling lost all significant digits");
    h = 4 * h + std::log(big);
    xs = f / big;
    zs = g / big;
    for (auto& s : adic) {
      BigInt mod;
      mpz_pow_ui(mod.get_mpz_t(), s.L.get_mpz_t(), s.prec);
      const BigInt x2 = s.x * s.x, z2 = s.z * s.z;
      const BigInt ma(m.a), mb(m.b);
      BigInt fx = modp(x2 * x2 - 2 * ma * x2 * z2 - 8 * mb * s.x * z2 * s.z + ma * ma * z2 * z2, mod);
      BigInt gx = modp(4 * s.z * (x2 * s.x + ma * s.x * z2 + mb * z2 * s.z), mod);
      const int v = std::min(adic_val(fx, s.L, s.prec), adic_val(gx, s.L, s.prec));
      if (v >= s.prec) throw PrecisionError("ell-adic precision exhausted in the doubling");
      BigInt lv;
      mpz_pow_ui(lv.get_mpz_t(), s.L.get_mpz_t(), v);
      s.prec -= v;
      mpz_pow_ui(mod.get_mpz_t(), s.L.get_mpz_t(), s.prec);
      s.x = modp(fx / lv, mod);
      s.z = modp(gx / lv, mod);
      h -= v * std::log(static_cast<ld>(s.ell));
    }
  }
  LimitResult out;
  out.doublings = steps;
  const ld scale = 2.0L * std::pow(4.0L, steps);
  out.value = static_cast<double>(h / scale);
  out.error_bound = c / std::pow(4.0, steps);
  return out;
}

double partial_height(const CurveQ& e, const PointQ& p, std::uint64_t ell) {
  if (ell == 0) return lambda_arch(e, p);
  const LocalModel m = local_model(e, ell);
  if (m.good) return lambda_good(e, p, ell);
  if (!m.multiplicative || ell < 5) throw UnsupportedReductionType(ell, m.multiplicative ? "multiplicative at 2 or 3" : "additive");
  try {
    return lambda_split_mult(e, p, ell);
  } catch (const NotSplitMultiplicative&) {
    throw UnsupportedReductionType(ell, "nonsplit multiplicative");
  }
}

NTReport nt_height_local(const CurveQ& e, const PointQ& p, bool allow_residual) {
  NTReport rep;
  rep.method = "local-sum";
  if (p.infinity) return rep;
  if (!e.on_curve(p)) throw DomainError("point is not on the curve");
  rep.terms.push_back({0, lambda_arch(e, p), "archimedean"});
  std::vector<std::uint64_t> skipped;
  for (std::uint64_t ell : relevant_primes(e, p)) {
    const LocalModel m = local_model(e, ell);
    try {
      if (m.good)
        rep.terms.push_back({ell, lambda_good(e, p, ell), "good"});
      else
        rep.terms.push_back({ell, partial_height(e, p, ell), "split-multiplicative"});
    } catch (const UnsupportedReductionType&) {
      if (!allow_residual) throw;
      skipped.push_back(ell);
    }
  }
  for (const auto& t : rep.terms) rep.total += t.lambda;
  if (!skipped.empty()) {
    const double limit = nt_height_limit(e, p).value;
    std::uint64_t place = 1;
    for (std::uint64_t ell : skipped) place = place > UINT64_MAX / ell ? UINT64_MAX : place * ell;
    rep.terms.push_back({place, limit - rep.total, "residual"});
    rep.total = limit;
    rep.method = "residual";
  }
  return rep;
}

}  // namespace bogo::nt
