#include "bogo/elliptic/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bogo/core/modp.hpp"

namespace bogo {

CurveQ::CurveQ(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {
  disc_ = -16 * (4 * a_ * a_ * a_ + 27 * b_ * b_);
  if (disc_ == 0) throw DomainError("singular curve: discriminant vanishes");
  BigRational four_a = 4 * a_;
  j_ = -1728 * four_a * four_a * four_a / disc_;
  law_ = Weierstrass<BigRational>{a_, b_};
}

CurveQ CurveQ::parse(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("curve must be given as a,b");
  return CurveQ(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
}

std::string CurveQ::to_string() const {
  return "y^2 = x^3 + (" + a_.get_str() + ")x + (" + b_.get_str() + ")";
}

PointQ point_mul(const CurveQ& e, const PointQ& p, long n) {
  if (!e.on_curve(p)) throw DomainError("point is not on the curve");
  return e.law().mul(p, n);
}

CurveFp reduce_mod(const CurveQ& e, std::uint64_t p, int f) {
  if (p < 5) throw PrimeTooSmall("reduction requires p >= 5, got " + std::to_string(p));
  if (!is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (mpz_divisible_ui_p(e.a().get_den_mpz_t(), p) || mpz_divisible_ui_p(e.b().get_den_mpz_t(), p))
    throw DomainError("p divides a coefficient denominator");
  if (modp::reduce(e.discriminant(), p) == 0) throw BadReduction(p);
  CurveFp c;
  c.p = p;
  c.f = f;
  FqElement a(p, f, modp::reduce(e.a(), p)), b(p, f, modp::reduce(e.b(), p));
  c.law = Weierstrass<FqElement>{a, b};
  FqElement four_a = field_int(a, 4) * a;
  FqElement disc = field_int(a, -16) * (field_int(a, 4) * a * a * a + field_int(a, 27) * b * b);
  c.j = field_int(a, -1728) * four_a * four_a * four_a / disc;
  return c;
}

PointFq point_mul(const CurveFp& e, const PointFq& p, long n) {
  if (!e.on_curve(p)) throw DomainError("point is not on the curve");
  return e.law.mul(p, n);
}

PointCount count_points(const CurveFp& e) {
  if (e.f != 1) throw DomainError("naive point count requires a prime field");
  const std::uint64_t p = e.p;
  if (p > kPointCountLimit) throw PrimeTooLarge("naive point count limited to p <= 10^6");
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t x = 1; x <= p / 2; ++x) chi[x * x % p] = 1;
  const std::uint64_t a = e.law.a.c0(), b = e.law.b.c0();
  long long sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = (modp::mul(modp::mul(x, x, p), x, p) + modp::mul(a, x, p) + b) % p;
    sum += chi[v];
  }
  PointCount r;
  r.a_p = -sum;
  r.count = p + 1 + static_cast<std::uint64_t>(sum);
  if (static_cast<double>(r.a_p * r.a_p) > 4.0 * static_cast<double>(p)) throw Error("Hasse bound violated");
  return r;
}

long long trace_q(long long a_p, std::uint64_t p) {
  if (p < 5 || !is_prime_u64(p)) throw DomainError("trace_q requires a prime p >= 5");
  if (static_cast<double>(a_p * a_p) > 4.0 * static_cast<double>(p)) throw DomainError("a_p violates the Hasse bound");
  long long aq = a_p * a_p - 2 * static_cast<long long>(p);
  if (a_p == 0 && aq != -2 * static_cast<long long>(p)) throw Error("supersingular trace mismatch");
  return aq;
}

namespace {

struct DivisionCache {
  Polynomial a, b, f2sq16;
  std::map<int, Polynomial> memo;

  explicit DivisionCache(const CurveQ& e) {
    a = Polynomial::constant(e.a());
    b = Polynomial::constant(e.b());
    Polynomial fx = Polynomial::monomial(1, 3) + a * Polynomial::x() + b;
    f2sq16 = fx * fx * BigRational(16);
  }

  const Polynomial& get(int n) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Polynomial r;
    const Polynomial x = Polynomial::x();
    if (n == 0) {
      r = Polynomial();
    } else if (n == 1 || n == 2) {
      r = Polynomial::constant(1);
    } else if (n == 3) {
      r = Polynomial::monomial(3, 4) + a * Polynomial::monomial(6, 2) + b * Polynomial::monomial(12, 1) - a * a;
    } else if (n == 4) {
      r = (Polynomial::monomial(1, 6) + a * Polynomial::monomial(5, 4) + b * Polynomial::monomial(20, 3) -
           a * a * Polynomial::monomial(5, 2) - a * b * Polynomial::monomial(4, 1) - b * b * BigRational(8) -
           a * a * a) *
          BigRational(2);
    } else if (n % 2 == 1) {
      int m = (n - 1) / 2;
      Polynomial t1 = get(m + 2) * get(m).pow(3);
      Polynomial t2 = get(m - 1) * get(m + 1).pow(3);
      if (m % 2 == 0)
        t1 *= f2sq16;
      else
        t2 *= f2sq16;
      r = t1 - t2;
    } else {
      int m = n / 2;
      r = get(m) * (get(m + 2) * get(m - 1).pow(2) - get(m - 2) * get(m + 1).pow(2));
    }
    return memo.emplace(n, std::move(r)).first->second;
  }
};

Polynomial full_division(const CurveQ& e, int n, DivisionCache& cache) {
  if (n % 2 == 1) return cache.get(n);
  Polynomial fx = Polynomial::monomial(1, 3) + Polynomial::constant(e.a()) * Polynomial::x() + Polynomial::constant(e.b());
  return fx * cache.get(n);
}

}  // namespace

Polynomial reduced_division_polynomial(const CurveQ& e, int n) {
  if (n < 0 || n > 16) throw DomainError("division polynomial index out of range");
  DivisionCache cache(e);
  return cache.get(n);
}

Polynomial division_polynomial(const CurveQ& e, int n, bool primitive) {
  if (n < 2 || n > 12) throw DomainError("division polynomial requires 2 <= N <= 12");
  DivisionCache cache(e);
  Polynomial g = full_division(e, n, cache);
  if (!primitive) return g;
  for (int d = 2; d < n; ++d) {
    if (n % d) continue;
    Polynomial c = gcd(g, full_division(e, d, cache));
    if (c.degree() > 0) g = g / c;
  }
  return g;
}

namespace {

/// Adjoins a root of the first (lowest-degree) irreducible factor of g over k.
std::pair<FieldPtr, NFElement> adjoin_root(const FieldPtr& k, const NFPoly& g, int cap, std::uint64_t seed) {
  auto factors = nfpoly::factor_squarefree(g, seed);
  const NFPoly& h = factors.front();
  if (nfpoly::degree(h) == 1) return {k, -(h[0] * h[1].inverse())};
  const long needed = static_cast<long>(k->degree()) * nfpoly::degree(h);
  if (needed > cap) throw DegreeCapExceeded(needed, cap);
  FieldPtr next = NumberField::extend(k, h, true);
  return {next, next->generator()};
}

NFPoly linear(const NFElement& root) { return NFPoly{-root, root.field()->one()}; }

}  // namespace

NFElement weil_pairing(const Weierstrass<NFElement>& law, const PointK& p, const PointK& q, int n) {
  auto miller = [&](const PointK& base, const PointK& at) {
    NFElement f = field_one(law.a);
    PointK t = base;
    for (int i = 1; i < n; ++i) {
      if (t.x == base.x) {
        // t = -base: the vertical line closes the divisor.
        if (i == n - 1) {
          f *= at.x - t.x;
          t = PointK::at_infinity();
          break;
        }
      }
      NFElement lambda = t.x == base.x ? (field_int(law.a, 3) * t.x * t.x + law.a) / (t.y + t.y)
                                       : (base.y - t.y) / (base.x - t.x);
      NFElement l = at.y - t.y - lambda * (at.x - t.x);
      PointK next = law.add(t, base);
      f *= l / (at.x - next.x);
      t = next;
    }
    if (!t.infinity) throw DomainError("Miller loop: point order does not divide N");
    return f;
  };
  NFElement e = miller(p, q) / miller(q, p);
  return n % 2 == 0 ? e : -e;
}

TorsionFieldHandle torsion_field(const CurveQ& e, int n, int cap) {
  if (n < 2 || n > 5) throw DomainError("torsion_field supports N in {2, 3, 4, 5}");
  TorsionFieldHandle out;
  out.n = n;
  FieldPtr k = NumberField::rationals();
  const Polynomial fprim = division_polynomial(e, n, true);
  const Polynomial fx = Polynomial::monomial(1, 3) + Polynomial::constant(e.a()) * Polynomial::x() +
                        Polynomial::constant(e.b());
  std::uint64_t seed = 17;

  auto adjoin_y = [&](const NFElement& x) {
    NFElement r = nfpoly::eval(fx, x);
    if (r.is_zero()) return r;
    NFPoly sq{-r, r.field()->zero(), r.field()->one()};
    auto [k2, y] = adjoin_root(k, sq, cap, ++seed);
    k = k2;
    return y;
  };

  auto [k1, x1] = adjoin_root(k, nfpoly::from_rational(k, fprim), cap, ++seed);
  k = k1;
  out.steps.push_back("x1");
  NFElement y1 = adjoin_y(x1);
  out.steps.push_back("y1");
  x1 = k->embed(x1);
  Weierstrass<NFElement> law{k->from_rational(e.a()), k->from_rational(e.b())};
  PointK p1 = PointK::affine(x1, y1);

  NFPoly rem = nfpoly::from_rational(k, fprim);
  PointK t = p1;
  std::vector<NFElement> seen;
  for (int i = 1; i < n; ++i, t = law.add(t, p1)) {
    if (t.infinity) throw Error("generator has order smaller than N");
    NFElement xi = k->embed(t.x);
    if (std::find(seen.begin(), seen.end(), xi) != seen.end()) continue;
    seen.push_back(xi);
    if (!nfpoly::eval(rem, xi).is_zero()) continue;
    rem = nfpoly::divmod(rem, linear(xi)).first;
  }
  if (n == 4) {
    // Exclude x with x(2P) = x(2 P1): those P differ from +-P1 by 2-torsion.
    NFElement c = k->embed(law.dbl(p1).x);
    NFPoly num = nfpoly::from_rational(
        k, Polynomial::monomial(1, 4) - Polynomial::monomial(2 * e.a(), 2) - Polynomial::monomial(8 * e.b(), 1) +
               Polynomial::constant(e.a() * e.a()));
    NFPoly den = nfpoly::from_rational(k, fx * BigRational(4));
    NFPoly bad = nfpoly::gcd(rem, nfpoly::sub(num, nfpoly::scale(den, c)));
    if (nfpoly::degree(bad) > 0) rem = nfpoly::divmod(rem, bad).first;
  }
  if (nfpoly::degree(rem) < 1) throw Error("no independent torsion point left");
  auto [k3, x2] = adjoin_root(k, rem, cap, ++seed);
  k = k3;
  out.steps.push_back("x2");
  NFElement y2 = adjoin_y(x2);
  out.steps.push_back("y2");

  law = Weierstrass<NFElement>{k->from_rational(e.a()), k->from_rational(e.b())};
  out.p1 = PointK::affine(k->embed(p1.x), k->embed(p1.y));
  out.p2 = PointK::affine(k->embed(x2), k->embed(y2));
  out.field = k;

  if (!law.on_curve(out.p1) || !law.on_curve(out.p2)) throw Error("torsion generator not on the curve");
  if (!law.mul(out.p1, n).infinity || !law.mul(out.p2, n).infinity) throw Error("generator is not N-torsion");
  std::vector<PointK> all;
  PointK row = PointK::at_infinity();
  for (int i = 0; i < n; ++i, row = law.add(row, out.p1)) {
    PointK pt = row;
    for (int j = 0; j < n; ++j, pt = law.add(pt, out.p2)) {
      if (!law.on_curve(pt)) throw Error("torsion combination not on the curve");
      for (const auto& q : all)
        if (q == pt) throw Error("torsion generators are dependent");
      all.push_back(pt);
    }
  }
  out.zeta = weil_pairing(law, out.p1, out.p2, n);
  if (!nfpoly::eval(cyclotomic(n), out.zeta).is_zero()) throw Error("Weil pairing is not a primitive N-th root of unity");
  return out;
}

std::vector<NFElement> sample_field_elements(const FieldPtr& k, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NFElement> out;
  const int d = k->degree();
  while (out.size() < count) {
    int terms = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(std::min(d, 3))));
    std::vector<BigRational> c(static_cast<std::size_t>(d));
    for (int t = 0; t < terms; ++t) {
      auto pos = uniform_below(rng, static_cast<std::uint64_t>(d));
      c[pos] = uniform_int(rng, -3, 3);
    }
    auto div = uniform_below(rng, 8);
    if (div == 0) {
      for (auto& x : c) x /= 2;
    } else if (div == 1) {
      for (auto& x : c) x /= 3;
    }
    NFElement el = k->element(std::move(c));
    if (el.is_zero()) continue;
    out.push_back(std::move(el));
  }
  return out;
}

std::vector<NFElement> sample_field_elements(const TorsionFieldHandle& k, std::size_t count, std::uint64_t seed) {
  return sample_field_elements(k.field, count, seed);
}

}  // namespace bogo
