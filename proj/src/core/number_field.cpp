#include "bogo/core/number_field.hpp"

#include <algorithm>
#include <random>

#include "bogo/core/errors.hpp"
#include "bogo/core/modp.hpp"
#include "bogo/core/zfactor.hpp"

namespace bogo {
namespace {

bool all_zero(const BigRational* a, int n) {
  for (int i = 0; i < n; ++i)
    if (a[i] != 0) return false;
  return true;
}

}  // namespace

FieldPtr NumberField::rationals() {
  static const FieldPtr q = [] {
    std::shared_ptr<NumberField> f(new NumberField());
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr NumberField::simple(const Polynomial& g, bool trusted) {
  if (g.degree() < 1) throw DomainError("defining polynomial must be nonconstant");
  if (!trusted && !is_irreducible_over_q(g)) throw DomainError("defining polynomial is reducible: " + g.to_string());
  return extend(rationals(), nfpoly::from_rational(rationals(), g.monic()), true);
}

FieldPtr NumberField::extend(const FieldPtr& base, const NFPoly& g, bool is_field) {
  if (nfpoly::degree(g) < 1) throw DomainError("relative polynomial must be nonconstant");
  std::shared_ptr<NumberField> f(new NumberField());
  f->base_ = base;
  f->rel_degree_ = nfpoly::degree(g);
  f->degree_ = base->degree() * f->rel_degree_;
  f->is_field_ = is_field;
  NFPoly m = nfpoly::monic(g);
  for (auto& c : m) c = base->embed(c);
  f->rel_poly_ = std::move(m);
  return f;
}

bool NumberField::contains_field(const NumberField& other) const {
  for (const NumberField* k = this; k; k = k->base_.get())
    if (k == &other) return true;
  return false;
}

NFElement NumberField::zero() const { return NFElement(shared_from_this(), std::vector<BigRational>(degree_)); }

NFElement NumberField::one() const { return from_rational(1); }

NFElement NumberField::from_rational(const BigRational& c) const {
  std::vector<BigRational> v(degree_);
  v[0] = c;
  return NFElement(shared_from_this(), std::move(v));
}

NFElement NumberField::generator() const {
  std::vector<BigRational> v(degree_);
  if (!base_) {
    v[0] = 1;
  } else if (rel_degree_ == 1) {
    // t satisfies t + g_0 = 0.
    for (int i = 0; i < base_->degree(); ++i) v[i] = -rel_poly_[0].coords()[i];
  } else {
    v[base_->degree()] = 1;
  }
  return NFElement(shared_from_this(), std::move(v));
}

NFElement NumberField::element(std::vector<BigRational> coords) const {
  if (static_cast<int>(coords.size()) != degree_) throw DomainError("coordinate vector has wrong length");
  return NFElement(shared_from_this(), std::move(coords));
}

NFElement NumberField::embed(const NFElement& x) const {
  if (!x.field_) throw DomainError("embedding an uninitialized element");
  if (x.field_.get() == this) return x;
  if (!contains_field(*x.field_)) throw DomainError("element does not belong to a subfield of this tower");
  std::vector<BigRational> v(degree_);
  std::copy(x.coords_.begin(), x.coords_.end(), v.begin());
  return NFElement(shared_from_this(), std::move(v));
}

void NumberField::mul_into(const BigRational* a, const BigRational* b, BigRational* out) const {
  if (!base_) {
    out[0] = a[0] * b[0];
    return;
  }
  const int d = rel_degree_, db = base_->degree();
  std::vector<BigRational> c(static_cast<std::size_t>((2 * d - 1) * db));
  std::vector<BigRational> tmp(static_cast<std::size_t>(db));
  std::vector<bool> a_nz(static_cast<std::size_t>(d)), b_nz(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    a_nz[i] = !all_zero(a + i * db, db);
    b_nz[i] = !all_zero(b + i * db, db);
  }
  std::vector<bool> c_nz(static_cast<std::size_t>(2 * d - 1), false);
  for (int i = 0; i < d; ++i) {
    if (!a_nz[i]) continue;
    for (int j = 0; j < d; ++j) {
      if (!b_nz[j]) continue;
      base_->mul_into(a + i * db, b + j * db, tmp.data());
      BigRational* dst = c.data() + (i + j) * db;
      for (int k = 0; k < db; ++k) dst[k] += tmp[k];
      c_nz[i + j] = true;
    }
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    if (!c_nz[k]) continue;
    const BigRational* ck = c.data() + k * db;
    if (all_zero(ck, db)) continue;
    for (int i = 0; i < d; ++i) {
      const auto& gi = rel_poly_[i].coords();
      if (all_zero(gi.data(), db)) continue;
      base_->mul_into(ck, gi.data(), tmp.data());
      BigRational* dst = c.data() + (k - d + i) * db;
      for (int t = 0; t < db; ++t) dst[t] -= tmp[t];
      c_nz[k - d + i] = true;
    }
  }
  for (int i = 0; i < d * db; ++i) out[i] = c[i];
}

std::vector<BigRational> NumberField::inverse_coords(const std::vector<BigRational>& a) const {
  if (all_zero(a.data(), degree_)) throw DomainError("inverse of zero");
  if (!base_) return {1 / a[0]};
  NFElement self(shared_from_this(), a);
  NFPoly r0 = rel_poly_, r1 = self.relative_coords();
  nfpoly::trim(r1);
  NFPoly s0{}, s1{base_->one()};
  while (nfpoly::degree(r1) > 0) {
    auto [q, r] = nfpoly::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    NFPoly s2 = nfpoly::sub(s0, nfpoly::mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw DomainError("zero divisor in algebra");
  NFElement c = r1[0].inverse();
  std::vector<BigRational> out(static_cast<std::size_t>(degree_));
  const int db = base_->degree();
  for (int i = 0; i < static_cast<int>(s1.size()); ++i) {
    NFElement v = s1[i] * c;
    for (int k = 0; k < db; ++k) out[i * db + k] = v.coords()[k];
  }
  return out;
}

RationalMatrix NumberField::multiplication_matrix(const NFElement& e) const {
  NFElement x = embed(e);
  RationalMatrix m(degree_, std::vector<BigRational>(degree_));
  std::vector<BigRational> basis(degree_), out(degree_);
  for (int j = 0; j < degree_; ++j) {
    std::fill(basis.begin(), basis.end(), BigRational(0));
    basis[j] = 1;
    mul_into(x.coords_.data(), basis.data(), out.data());
    for (int i = 0; i < degree_; ++i) m[i][j] = out[i];
  }
  return m;
}

bool NFElement::is_zero() const { return all_zero(coords_.data(), static_cast<int>(coords_.size())); }

bool NFElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

BigRational NFElement::rational_value() const {
  if (!is_rational()) throw DomainError("element is not rational");
  return coords_[0];
}

std::vector<NFElement> NFElement::relative_coords() const {
  const auto& base = field_->base();
  if (!base) return {*this};
  const int d = field_->relative_degree(), db = base->degree();
  std::vector<NFElement> out;
  for (int i = 0; i < d; ++i)
    out.push_back(base->element(std::vector<BigRational>(coords_.begin() + i * db, coords_.begin() + (i + 1) * db)));
  return out;
}

void NFElement::align(NFElement& o) {
  if (field_ == o.field_) return;
  if (!field_) throw DomainError("uninitialized number field element");
  if (field_->contains_field(*o.field_)) {
    o = field_->embed(o);
  } else if (o.field_->contains_field(*field_)) {
    *this = o.field_->embed(*this);
  } else {
    throw DomainError("elements of unrelated number fields");
  }
}

NFElement NFElement::operator-() const {
  NFElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

NFElement& NFElement::operator+=(const NFElement& o0) {
  NFElement o = o0;
  align(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

NFElement& NFElement::operator-=(const NFElement& o0) {
  NFElement o = o0;
  align(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

NFElement& NFElement::operator*=(const NFElement& o0) {
  NFElement o = o0;
  align(o);
  std::vector<BigRational> out(coords_.size());
  field_->mul_into(coords_.data(), o.coords_.data(), out.data());
  coords_ = std::move(out);
  return *this;
}

NFElement& NFElement::operator*=(const BigRational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

bool operator==(const NFElement& a0, const NFElement& b0) {
  NFElement a = a0, b = b0;
  a.align(b);
  return a.coords_ == b.coords_;
}

NFElement NFElement::inverse() const { return NFElement(field_, field_->inverse_coords(coords_)); }

NFElement NFElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  NFElement result = field_->one(), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial nf_charpoly(const NFElement& e) { return charpoly(e.field()->multiplication_matrix(e)); }

namespace {

/// Monic e-th root of a monic polynomial via the binomial series of its reversal.
Polynomial exact_root(const Polynomial& chi, int e) {
  const int dg = chi.degree(), k = dg / e;
  std::vector<BigRational> r(static_cast<std::size_t>(k) + 1), f(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) r[i] = chi.coeff(dg - i);
  const BigRational alpha1 = BigRational(1, e) + 1;
  f[0] = 1;
  for (int n = 1; n <= k; ++n) {
    BigRational s = 0;
    for (int i = 1; i <= n; ++i) s += (alpha1 * i - n) * r[i] * f[n - i];
    f[n] = s / n;
  }
  std::vector<BigRational> m(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) m[k - i] = f[i];
  return Polynomial(std::move(m));
}

}  // namespace

Polynomial nf_min_poly(const NFElement& e) {
  if (!e.field()->is_field()) throw DomainError("minimal polynomial requested in an algebra");
  if (e.is_rational()) return Polynomial(std::vector<BigRational>{-e.rational_value(), 1});
  Polynomial chi = nf_charpoly(e);
  const int dg = chi.degree();
  BigInt den = lcm_of_denominators(chi.coeffs());
  int kmax = 0;
  int tried = 0;
  for (modp::u64 p = 100003; tried < 6; p += 2) {
    if (!is_prime_u64(p) || mpz_divisible_ui_p(den.get_mpz_t(), p)) continue;
    ++tried;
    modp::PolyP cp = modp::from_polynomial(chi, p);
    int k = dg - modp::degree(modp::gcd(cp, modp::derivative(cp, p), p));
    if (k == dg) return chi;
    kmax = std::max(kmax, k);
  }
  if (kmax > 0 && dg % kmax == 0) {
    Polynomial m = exact_root(chi, dg / kmax);
    if (m.pow(static_cast<unsigned>(dg / kmax)) == chi) return m;
  }
  return squarefree_part(chi);
}

namespace nfpoly {

void trim(NFPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

NFPoly from_rational(const FieldPtr& k, const Polynomial& f) {
  NFPoly out;
  for (const auto& c : f.coeffs()) out.push_back(k->from_rational(c));
  return out;
}

NFPoly add(const NFPoly& a, const NFPoly& b) {
  NFPoly r = a.size() >= b.size() ? a : b;
  const NFPoly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  trim(r);
  return r;
}

NFPoly sub(const NFPoly& a, const NFPoly& b) {
  NFPoly r = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i < r.size())
      r[i] -= b[i];
    else
      r.push_back(-b[i]);
  }
  trim(r);
  return r;
}

NFPoly mul(const NFPoly& a, const NFPoly& b) {
  if (a.empty() || b.empty()) return {};
  NFPoly r(a.size() + b.size() - 1, a[0].field()->zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

NFPoly scale(const NFPoly& a, const NFElement& c) {
  NFPoly r;
  for (const auto& x : a) r.push_back(x * c);
  trim(r);
  return r;
}

std::pair<NFPoly, NFPoly> divmod(const NFPoly& a, const NFPoly& b) {
  if (b.empty()) throw DomainError("division by the zero polynomial");
  if (a.size() < b.size()) return {{}, a};
  NFElement li = b.back().inverse();
  NFPoly r = a, q(a.size() - b.size() + 1, b[0].field()->zero());
  const std::size_t bn = b.size();
  for (std::size_t k = q.size(); k-- > 0;) {
    NFElement c = r[k + bn - 1] * li;
    if (c.is_zero()) continue;
    q[k] = c;
    for (std::size_t j = 0; j < bn; ++j) r[k + j] -= c * b[j];
  }
  r.resize(bn - 1);
  trim(r);
  trim(q);
  return {q, r};
}

NFPoly monic(const NFPoly& a) {
  if (a.empty()) return a;
  return scale(a, a.back().inverse());
}

NFPoly gcd(const NFPoly& a, const NFPoly& b) {
  NFPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    NFPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

NFPoly derivative(const NFPoly& a) {
  NFPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * BigRational(static_cast<long>(i)));
  trim(r);
  return r;
}

NFElement eval(const NFPoly& f, const NFElement& x) {
  NFElement acc = x.field()->zero();
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

NFElement eval(const Polynomial& f, const NFElement& x) {
  NFElement acc = x.field()->zero();
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc *= x;
    acc += x.field()->from_rational(*it);
  }
  return acc;
}

std::vector<NFPoly> factor_squarefree(const NFPoly& f0, std::uint64_t seed) {
  NFPoly f = f0;
  trim(f);
  if (degree(f) < 1) throw DomainError("factoring a constant polynomial");
  f = monic(f);
  if (degree(f) == 1) return {f};
  const FieldPtr k = f[0].field();
  for (auto& c : f) c = k->embed(c);
  if (!k->base()) {
    Polynomial g;
    for (int i = 0; i <= degree(f); ++i) g += Polynomial::monomial(f[i].rational_value(), i);
    std::vector<NFPoly> out;
    for (auto& [h, mult] : factor_over_z(g).factors) out.push_back(from_rational(k, h.monic()));
    return out;
  }
  const long total = static_cast<long>(k->degree()) * degree(f);
  if (total > kFactorDegreeCap) throw DegreeCapExceeded(total, kFactorDegreeCap);
  FieldPtr a = NumberField::extend(k, f, false);
  std::vector<NFElement> gens;
  for (const NumberField* node = k.get(); node->base(); node = node->base().get())
    gens.push_back(a->embed(node->generator()));
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 40; ++attempt) {
    NFElement gamma = a->generator();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      long c = attempt == 0 ? static_cast<long>(i) + 1 : static_cast<long>(rng() % (2 * attempt + 3)) - attempt - 1;
      gamma += gens[i] * BigRational(c);
    }
    Polynomial chi = nf_charpoly(gamma);
    BigInt den = lcm_of_denominators(chi.coeffs());
    bool squarefree = false;
    int tried = 0;
    for (modp::u64 p = 1000003; tried < 3 && !squarefree; p += 2) {
      if (!is_prime_u64(p) || mpz_divisible_ui_p(den.get_mpz_t(), p)) continue;
      ++tried;
      squarefree = modp::is_squarefree(modp::from_polynomial(chi, p), p);
    }
    if (!squarefree) continue;
    auto fac = factor_over_z(chi);
    if (fac.factors.size() == 1) return {f};
    std::vector<NFPoly> out;
    int total = 0;
    for (auto& [h, mult] : fac.factors) {
      NFElement hv = eval(h, gamma);
      NFPoly hp = hv.relative_coords();
      trim(hp);
      NFPoly g = gcd(f, hp);
      total += degree(g);
      out.push_back(std::move(g));
    }
    if (total != degree(f)) throw Error("inconsistent factorization over number field");
    std::sort(out.begin(), out.end(), [](const NFPoly& x, const NFPoly& y) { return x.size() < y.size(); });
    return out;
  }
  throw Error("no primitive element found for factorization");
}

}  // namespace nfpoly
}  // namespace bogo
