#include "bogo/core/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/mpfr.hpp>

#include "bogo/core/errors.hpp"

namespace bogo {
namespace {

using LComplex = std::complex<long double>;

std::vector<LComplex> aberth(const std::vector<BigInt>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<long double> a(c.size());
  // Scale by a power of two so the largest coefficient is near 1.
  long maxexp = std::numeric_limits<long>::min();
  for (const auto& x : c) {
    if (x == 0) continue;
    long e = 0;
    mpz_get_d_2exp(&e, x.get_mpz_t());
    maxexp = std::max(maxexp, e);
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    long e = 0;
    double m = mpz_get_d_2exp(&e, c[i].get_mpz_t());
    a[i] = std::ldexp(static_cast<long double>(m), static_cast<int>(e - maxexp));
  }
  // Initial circle from the geometric mean of the root moduli.
  long double radius = 1.0L;
  if (a[0] != 0) radius = std::pow(std::fabs(a[0] / a[n]), 1.0L / n);
  std::vector<LComplex> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    long double ang = 2.0L * M_PIl * (i + 0.25L) / n + 0.4L;
    z[static_cast<std::size_t>(i)] = std::polar(radius, ang);
  }
  auto ratio = [&](LComplex x) {
    // f(x)/f'(x), evaluated on the reversed polynomial outside the unit disk.
    if (std::abs(x) <= 1.0L) {
      LComplex p = a[n], dp = 0;
      for (int i = n - 1; i >= 0; --i) {
        dp = dp * x + p;
        p = p * x + a[i];
      }
      return std::pair<LComplex, LComplex>{p, dp};
    }
    LComplex w = 1.0L / x, r = a[0], dr = 0;
    for (int i = 1; i <= n; ++i) {
      dr = dr * w + r;
      r = r * w + a[i];
    }
    // f(x) = x^n r(w), f'(x) = x^(n-1) (n r(w) - w r'(w)).
    return std::pair<LComplex, LComplex>{r * x, static_cast<long double>(n) * r - w * dr};
  };
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int iter = 0; iter < 2000; ++iter) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      auto ui = static_cast<std::size_t>(i);
      if (done[ui]) continue;
      auto [p, dp] = ratio(z[ui]);
      if (p == LComplex(0)) {
        done[ui] = true;
        continue;
      }
      LComplex nr = p / dp;
      LComplex s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0L / (z[ui] - z[static_cast<std::size_t>(j)]);
      LComplex w = nr / (1.0L - nr * s);
      z[ui] -= w;
      if (std::abs(w) <= 1e-17L * std::max(1.0L, std::abs(z[ui])))
        done[ui] = true;
      else
        all = false;
    }
    if (all) break;
  }
  return z;
}

template <unsigned Digits>
struct Certifier {
  using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits>>;

  static Real from_int(const BigInt& x) {
    Real r;
    mpfr_set_z(r.backend().data(), x.get_mpz_t(), MPFR_RNDN);
    return r;
  }

  struct Cx {
    Real re, im;
  };

  const std::vector<BigInt>& c;
  std::vector<Real> coeffs;

  explicit Certifier(const std::vector<BigInt>& cc) : c(cc) {
    for (const auto& x : c) coeffs.push_back(from_int(x));
  }

  void eval(const Cx& z, Cx& p, Cx& dp) const {
    const int n = static_cast<int>(coeffs.size()) - 1;
    p = {coeffs[static_cast<std::size_t>(n)], Real(0)};
    dp = {Real(0), Real(0)};
    for (int i = n - 1; i >= 0; --i) {
      Real t = dp.re * z.re - dp.im * z.im + p.re;
      dp.im = dp.re * z.im + dp.im * z.re + p.im;
      dp.re = t;
      t = p.re * z.re - p.im * z.im + coeffs[static_cast<std::size_t>(i)];
      p.im = p.re * z.im + p.im * z.re;
      p.re = t;
    }
  }

  /// Polish the approximations and return certified balls, or an
  /// empty vector if certification failed at this precision.
  std::vector<ComplexBall> run(const std::vector<LComplex>& approx, double eps) const {
    const std::size_t n = approx.size();
    std::vector<Cx> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = {Real(approx[i].real()), Real(approx[i].imag())};
    const Real tiny = pow(Real(10), -static_cast<int>(Digits) + 8);
    // Simultaneous Aberth steps.
    std::vector<bool> done(n, false);
    for (int sweep = 0; sweep < 200; ++sweep) {
      bool all = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        Cx p, dp;
        eval(z[i], p, dp);
        Real den = dp.re * dp.re + dp.im * dp.im;
        if (den == 0) {
          done[i] = true;
          continue;
        }
        const Cx nr{(p.re * dp.re + p.im * dp.im) / den, (p.im * dp.re - p.re * dp.im) / den};
        Cx sum{Real(0), Real(0)};
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          Real dr = z[i].re - z[j].re, di = z[i].im - z[j].im;
          Real m = dr * dr + di * di;
          if (m == 0) continue;
          sum.re += dr / m;
          sum.im -= di / m;
        }
        // w = nr / (1 - nr * sum)
        const Real qr = 1 - (nr.re * sum.re - nr.im * sum.im), qi = -(nr.re * sum.im + nr.im * sum.re);
        const Real qm = qr * qr + qi * qi;
        if (qm == 0) continue;
        const Real wr = (nr.re * qr + nr.im * qi) / qm, wi = (nr.im * qr - nr.re * qi) / qm;
        z[i].re -= wr;
        z[i].im -= wi;
        if (abs(wr) + abs(wi) <= tiny * (abs(z[i].re) + abs(z[i].im) + 1))
          done[i] = true;
        else
          all = false;
      }
      if (all) break;
    }
    std::vector<ComplexBall> balls(n);
    const Real lc = abs(coeffs.back());
    for (std::size_t i = 0; i < n; ++i) {
      Cx p, dp;
      eval(z[i], p, dp);
      Real fabs = sqrt(p.re * p.re + p.im * p.im);
      Real prod = lc;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Real dr = z[i].re - z[j].re, di = z[i].im - z[j].im;
        prod *= sqrt(dr * dr + di * di);
      }
      if (prod == 0) return {};
      Real smith = Real(static_cast<unsigned>(n)) * fabs / prod;
      double cr = z[i].re.template convert_to<double>();
      double ci = z[i].im.template convert_to<double>();
      Real er = z[i].re - Real(cr), ei = z[i].im - Real(ci);
      Real total = (smith + sqrt(er * er + ei * ei)) * Real(1.000001) + Real(1e-300);
      double r = std::nextafter(total.template convert_to<double>(), std::numeric_limits<double>::infinity());
      if (!std::isfinite(r) || r > eps * std::max(1.0, std::hypot(cr, ci))) return {};
      balls[i] = {std::complex<double>(cr, ci), r};
    }
    return balls;
  }
};

bool disjoint(const std::vector<ComplexBall>& b) {
  std::vector<std::size_t> order(b.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return b[x].center.real() - b[x].radius < b[y].center.real() - b[y].radius;
  });
  for (std::size_t a = 0; a < order.size(); ++a) {
    const auto& A = b[order[a]];
    for (std::size_t c = a + 1; c < order.size(); ++c) {
      const auto& C = b[order[c]];
      if (C.center.real() - C.radius > A.center.real() + A.radius) break;
      if (std::abs(A.center - C.center) <= A.radius + C.radius) return false;
    }
  }
  return true;
}

std::vector<ComplexBall> solve_squarefree(const Polynomial& g, double eps) {
  auto c = g.integer_coeffs();
  if (c.size() == 2) {
    BigRational r = make_rational(-c[0], c[1]);
    double x = r.get_d();
    BigRational err = r - BigRational(x);
    double rad = std::nextafter(std::fabs(err.get_d()) * 1.000001 + 1e-300, INFINITY);
    return {{std::complex<double>(x, 0.0), rad}};
  }
  auto approx = aberth(c);
  std::vector<ComplexBall> balls = Certifier<50>(c).run(approx, eps);
  if (balls.empty() || !disjoint(balls)) balls = Certifier<100>(c).run(approx, eps);
  if (balls.empty() || !disjoint(balls)) balls = Certifier<200>(c).run(approx, eps);
  if (balls.empty() || !disjoint(balls))
    throw PrecisionError("root isolation failed for degree " + std::to_string(g.degree()));
  return balls;
}

}  // namespace

std::vector<RootBall> complex_roots(const Polynomial& f, double eps) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<RootBall> out;
  for (const auto& [g, mult] : squarefree_decomposition(f))
    for (const auto& b : solve_squarefree(g, eps)) out.push_back({b, mult});
  std::vector<ComplexBall> all;
  for (const auto& r : out) all.push_back(r.ball);
  if (!disjoint(all)) throw PrecisionError("root balls of distinct roots overlap");
  std::sort(out.begin(), out.end(), [](const RootBall& a, const RootBall& b) {
    if (a.ball.center.real() != b.ball.center.real()) return a.ball.center.real() < b.ball.center.real();
    return a.ball.center.imag() < b.ball.center.imag();
  });
  return out;
}

}  // namespace bogo
