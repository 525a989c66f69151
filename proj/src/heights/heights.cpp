#include "bogo/heights/heights.hpp"

#include <algorithm>
#include <cmath>

#include "bogo/core/charpoly.hpp"
#include "bogo/core/errors.hpp"
#include "bogo/core/number_field.hpp"
#include "bogo/core/zfactor.hpp"

namespace bogo {
namespace {

constexpr double kRootEps = 1e-13;

RationalMatrix companion(const Polynomial& f) {
  Polynomial m = f.monic();
  const int n = m.degree();
  RationalMatrix c(n, std::vector<BigRational>(n));
  for (int i = 1; i < n; ++i) c[i][i - 1] = 1;
  for (int i = 0; i < n; ++i) c[i][n - 1] = -m.coeff(i);
  return c;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  RationalMatrix k(n * m, std::vector<BigRational>(n * m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) k[i * m + r][j * m + s] = a[i][j] * b[r][s];
    }
  return k;
}

/// The irreducible factor of g (up to scaling) having a root nearest to z.
AlgebraicNumber select_factor(const Polynomial& g, std::complex<double> z) {
  auto fac = factor_over_z(g);
  const Polynomial* best = nullptr;
  double best_d = INFINITY, second = INFINITY;
  for (const auto& [h, mult] : fac.factors) {
    for (const auto& r : complex_roots(h, kRootEps)) {
      double d = std::abs(r.ball.center - z);
      if (d < best_d) {
        second = best_d;
        best_d = d;
        best = &h;
      } else if (d < second) {
        second = d;
      }
    }
  }
  if (!best) throw Error("no factor selected");
  if (!(best_d < 1e-6 * (1 + std::abs(z))) || !(second > 1e3 * best_d))
    throw PrecisionError("numerical value does not isolate a conjugate");
  return AlgebraicNumber::trusted(*best, z);
}

}  // namespace

AlgebraicNumber AlgebraicNumber::build(const Polynomial& f, std::complex<double> approx, bool check) {
  if (f.degree() < 1) throw DomainError("minimal polynomial must be nonconstant");
  if (check && !is_irreducible_over_q(f)) throw DomainError("reducible minimal polynomial: " + f.to_string());
  AlgebraicNumber a;
  a.poly_ = f.primitive();
  for (const auto& r : complex_roots(a.poly_, kRootEps)) {
    if (r.multiplicity != 1) throw DomainError("minimal polynomial has a repeated root");
    a.roots_.push_back(r.ball);
  }
  double best = INFINITY;
  for (std::size_t i = 0; i < a.roots_.size(); ++i) {
    double d = std::abs(a.roots_[i].center - approx);
    if (d < best) {
      best = d;
      a.index_ = i;
    }
  }
  return a;
}

AlgebraicNumber AlgebraicNumber::from_min_poly(const Polynomial& f, std::complex<double> approx) {
  return build(f, approx, true);
}

AlgebraicNumber AlgebraicNumber::trusted(const Polynomial& f, std::complex<double> approx) {
  return build(f, approx, false);
}

AlgebraicNumber AlgebraicNumber::rational(const BigRational& q) {
  return build(Polynomial(std::vector<BigRational>{-q, 1}), {q.get_d(), 0.0}, false);
}

AlgebraicNumber AlgebraicNumber::conjugate(std::size_t i) const {
  if (i >= roots_.size()) throw DomainError("conjugate index out of range");
  AlgebraicNumber a = *this;
  a.index_ = i;
  return a;
}

HeightProfile weil_height(const AlgebraicNumber& alpha) {
  const Polynomial& f = alpha.min_poly();
  auto ints = f.integer_coeffs();
  if (f.primitive() != f || ints.back() <= 0) throw DomainError("minimal polynomial is not primitive");
  HeightProfile h;
  h.degree = f.degree();
  const double d = h.degree;
  h.finite_aggregate = log_abs(ints.back()) / d;
  double sum = 0, err = 0;
  for (const auto& b : alpha.conjugates()) {
    double m = std::abs(b.center);
    double term = std::log(std::max(1.0, m));
    h.archimedean.push_back(term);
    sum += term;
    if (m + b.radius > 1.0) err += std::log((m + b.radius) / std::max(1.0, m - b.radius));
    if (std::abs(b.center.imag()) <= b.radius)
      ++h.real_places;
    else
      ++h.complex_places;
  }
  h.complex_places /= 2;
  h.total = h.finite_aggregate + sum / d;
  // Ball radii plus floating-point summation error.
  h.error_bound = err / d + 4e-16 * (h.degree + 2) * (std::fabs(h.total) + 1.0);
  if (h.degree == 1) {
    BigRational q = -f.coeff(0) / f.coeff(1);
    if (q != 0) {
      for (const auto& [p, e] : factor_integer(BigInt(q.get_den())))
        h.finite_places.emplace_back(p, e * log_abs(p));
    }
  }
  if (h.total < 0) h.total = 0;
  return h;
}

std::optional<int> is_root_of_unity(const AlgebraicNumber& alpha) {
  const Polynomial& f = alpha.min_poly();
  const int d = f.degree();
  if (f.leading() != 1 || (f.coeff(0) != 1 && f.coeff(0) != -1)) return std::nullopt;
  // phi(n) >= sqrt(n/2), so n <= 2 d^2.
  for (int n = 1; n <= 2 * d * d + 2; ++n) {
    if (static_cast<int>(euler_phi(static_cast<std::uint64_t>(n))) != d) continue;
    if (cyclotomic(n) == f) return n;
  }
  return std::nullopt;
}

AlgebraicNumber algebraic_product(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_zero() || b.is_zero()) return AlgebraicNumber::rational(0);
  Polynomial chi = charpoly(kronecker(companion(a.min_poly()), companion(b.min_poly())));
  return select_factor(chi, a.root().center * b.root().center);
}

AlgebraicNumber algebraic_inverse(const AlgebraicNumber& a) {
  if (a.is_zero()) throw DomainError("inverse of zero");
  return AlgebraicNumber::trusted(a.min_poly().reversed(), 1.0 / a.root().center);
}

AlgebraicNumber algebraic_power(const AlgebraicNumber& a, int k) {
  if (k < 0) return algebraic_power(algebraic_inverse(a), -k);
  if (k == 0) return AlgebraicNumber::rational(1);
  auto field = NumberField::simple(a.min_poly(), true);
  Polynomial m = nf_min_poly(field->generator().pow(k));
  return select_factor(m, std::pow(a.root().center, k));
}

AlgebraicNumber root_of_unity(int order) {
  return AlgebraicNumber::trusted(cyclotomic(order), std::polar(1.0, 2 * M_PI / order));
}

std::vector<IdentityCheck> height_identity_suite(const AlgebraicNumber& alpha, const AlgebraicNumber& beta, int k,
                                                 int zeta_order, double tol) {
  std::vector<IdentityCheck> out;
  auto eq = [&](std::string name, double lhs, double rhs, double extra) {
    double s = std::fabs(lhs - rhs);
    out.push_back({std::move(name), s <= tol + extra, lhs, rhs, s});
  };
  const HeightProfile ha = weil_height(alpha), hb = weil_height(beta);
  {
    HeightProfile hab = weil_height(algebraic_product(alpha, beta));
    double rhs = ha.total + hb.total;
    double slack = rhs - hab.total;
    double extra = hab.error_bound + ha.error_bound + hb.error_bound;
    out.push_back({"submultiplicativity", slack >= -(tol + extra), hab.total, rhs, slack});
  }
  if (!alpha.is_zero()) {
    HeightProfile hk = weil_height(algebraic_power(alpha, k));
    eq("homogeneity", hk.total, std::abs(k) * ha.total, hk.error_bound + std::abs(k) * ha.error_bound);
    HeightProfile hi = weil_height(algebraic_inverse(alpha));
    eq("inverse", hi.total, ha.total, hi.error_bound + ha.error_bound);
  }
  {
    HeightProfile hz = weil_height(algebraic_product(root_of_unity(zeta_order), alpha));
    eq("root_of_unity_invariance", hz.total, ha.total, hz.error_bound + ha.error_bound);
  }
  {
    double worst = 0;
    for (std::size_t i = 0; i < alpha.conjugates().size(); ++i)
      worst = std::max(worst, std::fabs(weil_height(alpha.conjugate(i)).total - ha.total));
    out.push_back({"conjugation_invariance", worst <= tol, ha.total, ha.total, worst});
  }
  return out;
}

}  // namespace bogo
