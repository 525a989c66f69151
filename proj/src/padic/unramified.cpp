#include "bogo/padic/unramified.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bogo/core/integer.hpp"
#include "bogo/core/rng.hpp"

namespace bogo::padic {

namespace {

using Coords = std::vector<std::uint64_t>;

Coords unit_coords(int f) {
  Coords c(static_cast<std::size_t>(f), 0);
  c[0] = 1;
  return c;
}

}  // namespace

std::uint64_t UnramifiedRing::from_int(long long v) const {
  const long long m = static_cast<long long>(pk_);
  long long r = v % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

Coords UnramifiedRing::mul(const Coords& a, const Coords& b) const {
  const std::size_t f = static_cast<std::size_t>(f_);
  std::vector<std::uint64_t> prod(2 * f - 1, 0);
  for (std::size_t i = 0; i < f; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < f; ++j) prod[i + j] = add(prod[i + j], mul(a[i], b[j]));
  }
  for (std::size_t d = 2 * f - 1; d-- > f;) {
    const std::uint64_t top = prod[d];
    if (!top) continue;
    for (std::size_t i = 0; i < f; ++i) prod[d - f + i] = sub(prod[d - f + i], mul(top, g_[i]));
    prod[d] = 0;
  }
  prod.resize(f);
  return prod;
}

RingPtr UnramifiedRing::make(std::uint64_t p, int f, int k) {
  if (!is_prime_u64(p)) throw DomainError("p must be prime");
  if (f < 1 || f > 8) throw DomainError("extension degree must be in [1, 8]");
  if (k < 1) throw DomainError("precision must be positive");
  auto r = std::make_shared<UnramifiedRing>();
  r->p_ = p;
  r->f_ = f;
  r->k_ = k;
  unsigned __int128 pk = 1;
  for (int i = 0; i < k; ++i) {
    pk *= p;
    if (pk >= (static_cast<unsigned __int128>(1) << 62)) throw GuardViolation("p^k must stay below 2^62");
  }
  r->pk_ = static_cast<std::uint64_t>(pk);

  std::uint64_t count = 1;
  for (int i = 0; i < f; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    modp::PolyP g(static_cast<std::size_t>(f) + 1, 0);
    g[static_cast<std::size_t>(f)] = 1;
    std::uint64_t rest = idx;
    for (int i = 0; i < f; ++i) {
      g[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    if (f == 1 || modp::is_irreducible(g, p)) {
      r->g_ = g;
      break;
    }
  }

  // tau = t^p mod p, refined by Newton on g.
  const RingPtr view = r;
  UElem t = UElem::generator(view);
  UElem tau = t.pow(p);
  auto eval_g = [&](const UElem& x) {
    UElem acc = UElem::from_int(view, 0);
    for (std::size_t i = r->g_.size(); i-- > 0;) acc = acc * x + UElem::from_int(view, static_cast<long long>(r->g_[i]));
    return acc;
  };
  auto eval_dg = [&](const UElem& x) {
    UElem acc = UElem::from_int(view, 0);
    for (std::size_t i = r->g_.size(); i-- > 1;)
      acc = acc * x + UElem::from_int(view, static_cast<long long>(r->g_[i] * i));
    return acc;
  };
  for (int it = 0; it < 2 * k + 2 && !eval_g(tau).is_zero(); ++it) tau = tau - eval_g(tau) * eval_dg(tau).inverse();
  if (!eval_g(tau).is_zero()) throw Error("Hensel lift of the Frobenius image failed");
  UElem pw = UElem::from_int(view, 1);
  for (int i = 0; i < f; ++i, pw = pw * tau) r->frob_.push_back(pw.coords());
  return r;
}

UElem::UElem(RingPtr r, std::vector<std::uint64_t> coords) : r_(std::move(r)), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != r_->f()) throw DomainError("coordinate vector has the wrong length");
  for (auto& v : c_) v %= r_->modulus();
}

UElem UElem::from_int(const RingPtr& r, long long v) {
  Coords c(static_cast<std::size_t>(r->f()), 0);
  c[0] = r->from_int(v);
  return UElem(r, c);
}

UElem UElem::generator(const RingPtr& r) {
  if (r->f() == 1) return UElem(r, {r->from_int(-static_cast<long long>(r->defining_poly()[0]))});
  Coords c(static_cast<std::size_t>(r->f()), 0);
  c[1] = 1;
  return UElem(r, c);
}

bool UElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint64_t v) { return v == 0; });
}

bool UElem::is_unit() const {
  return std::any_of(c_.begin(), c_.end(), [&](std::uint64_t v) { return v % r_->p() != 0; });
}

UElem UElem::operator+(const UElem& o) const {
  Coords c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r_->add(c_[i], o.c_[i]);
  return UElem(r_, c);
}

UElem UElem::operator-(const UElem& o) const {
  Coords c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r_->sub(c_[i], o.c_[i]);
  return UElem(r_, c);
}

UElem UElem::operator-() const { return UElem::from_int(r_, 0) - *this; }

UElem UElem::operator*(const UElem& o) const { return UElem(r_, r_->mul(c_, o.c_)); }

UElem UElem::pow(std::uint64_t e) const {
  UElem acc(r_, unit_coords(r_->f())), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

UElem UElem::inverse() const {
  if (!is_unit()) throw DomainError("inverse of a non-unit");
  std::uint64_t q = 1;
  for (int i = 0; i < r_->f(); ++i) q *= r_->p();
  // x^(q-2) inverts the residue; Newton doubles the precision.
  UElem y = pow(q - 2);
  const UElem two = UElem::from_int(r_, 2);
  for (int bits = 1; bits < 2 * r_->k(); bits *= 2) y = y * (two - *this * y);
  y = y * (two - *this * y);
  return y;
}

UElem UElem::shifted(int s) const {
  if (s < 0) throw DomainError("negative shift");
  if (s >= r_->k()) return UElem::from_int(r_, 0);
  std::uint64_t ps = 1;
  for (int i = 0; i < s; ++i) ps *= r_->p();
  Coords c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r_->mul(c_[i], ps);
  return UElem(r_, c);
}

std::vector<std::uint64_t> UElem::residue() const {
  Coords c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] % r_->p();
  return c;
}

std::string UElem::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << ") mod " << r_->p() << "^" << r_->k();
  return os.str();
}

int valuation(const UElem& x) {
  if (x.is_zero()) throw BelowPrecision("element vanishes modulo p^k");
  int best = x.ring()->k();
  for (std::uint64_t v : x.coords()) {
    if (!v) continue;
    int e = 0;
    while (v % x.ring()->p() == 0) v /= x.ring()->p(), ++e;
    best = std::min(best, e);
  }
  return best;
}

UElem frobenius(const UElem& x, int times) {
  const RingPtr& r = x.ring();
  UElem cur = x;
  for (int t = 0; t < times; ++t) {
    Coords out(static_cast<std::size_t>(r->f()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!cur.coords()[i]) continue;
      const Coords& img = r->frobenius_images()[i];
      for (std::size_t j = 0; j < out.size(); ++j) out[j] = r->add(out[j], r->mul(cur.coords()[i], img[j]));
    }
    cur = UElem(r, out);
  }
  return cur;
}

UElem teichmuller(const UElem& x) {
  if (!x.is_unit()) {
    if (x.residue() == Coords(x.coords().size(), 0)) return UElem::from_int(x.ring(), 0);
  }
  std::uint64_t q = 1;
  for (int i = 0; i < x.ring()->f(); ++i) q *= x.ring()->p();
  UElem y = x;
  for (int i = 0; i < x.ring()->k(); ++i) y = y.pow(q);
  return y;
}

UElem sqrt_lift(const UElem& x, const UElem& r0) {
  if ((r0 * r0 - x).is_unit()) throw DomainError("r0 is not a square root mod p");
  if (!r0.is_unit()) throw DomainError("square root lifting needs a unit root");
  UElem r = r0;
  const UElem two = UElem::from_int(x.ring(), 2);
  for (int i = 0; i < 2 * x.ring()->k() + 2 && !(r * r - x).is_zero(); ++i) r = r - (r * r - x) * (two * r).inverse();
  if (!(r * r - x).is_zero()) throw Error("square root lifting did not converge");
  return r;
}

PadicNumber sample_padic(const RingPtr& r, int e_min, int e_max, std::uint64_t seed, std::uint64_t index) {
  Rng rng = substream(seed, index);
  PadicNumber out;
  out.e = static_cast<int>(uniform_int(rng, e_min, e_max));
  Coords c(static_cast<std::size_t>(r->f()));
  do {
    for (auto& v : c) v = uniform_below(rng, r->modulus());
    out.unit = UElem(r, c);
  } while (!out.unit.is_unit());
  return out;
}

Metric2Result check_metric2(const PadicNumber& a, bool include_inverse_branch) {
  const RingPtr& r = a.unit.ring();
  if (!a.unit.is_unit()) throw DomainError("p-adic number must be p^e times a unit");
  const int q = static_cast<int>(r->p() * r->p());
  const int e = a.e, k = r->k();
  Metric2Result res;
  const int m = std::min(e, q * e);
  UElem diff = frobenius(a.unit, 2).shifted(e - m) - a.unit.pow(static_cast<std::uint64_t>(q)).shifted(q * e - m);
  if (diff.is_zero()) {
    res.lhs_exact = false;
    res.lhs_valuation = m + k;
  } else {
    res.lhs_valuation = m + valuation(diff);
  }
  res.rhs_valuation = 1 + std::min(0, e) + q * std::min(0, e);
  res.passed = res.lhs_valuation >= res.rhs_valuation;
  if (!res.lhs_exact && !res.passed) {
    res.passed = true;
    res.vacuous = true;
    res.note = "difference vanishes to working precision";
  } else if (!res.lhs_exact) {
    res.note = "difference vanishes to working precision; lower bound suffices";
  }
  if (e < 0 && include_inverse_branch) {
    res.inverse_branch_used = true;
    Metric2Result inv = check_metric2(PadicNumber{-e, a.unit.inverse()}, false);
    res.inverse_branch_ok = inv.passed && inv.rhs_valuation == 1;
    if (res.lhs_exact && inv.lhs_exact) res.inverse_branch_ok &= res.lhs_valuation == e + q * e + inv.lhs_valuation;
    res.passed = res.passed && res.inverse_branch_ok;
  }
  return res;
}

std::pair<long, long> cyclotomic_valuation(std::uint64_t p) {
  if (!is_prime_u64(p)) throw DomainError("p must be prime");
  // Phi_p(x + 1) = sum_{i < p} C(p, i + 1) x^i.
  std::vector<long> val;
  for (std::uint64_t i = 0; i < p; ++i) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), p, i + 1);
    val.push_back(bogo::valuation(c, BigInt(p)));
  }
  // Lower convex hull from (0, v_0); a single segment means every root has
  // valuation -slope.
  const long n = static_cast<long>(p) - 1;
  for (long i = 1; i < n; ++i)
    if (val[static_cast<std::size_t>(i)] * n < val[0] * (n - i)) throw Error("Newton polygon has several segments");
  long num = val[0] - val[static_cast<std::size_t>(n)], den = n;
  const long g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace bogo::padic
