#include "bogo/core/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bogo/core/errors.hpp"

namespace bogo {

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial(std::vector<BigRational>{c}); }

Polynomial Polynomial::monomial(const BigRational& c, int degree) {
  std::vector<BigRational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigRational Polynomial::leading() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

BigRational Polynomial::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial r = *this;
  BigRational inv = 1 / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

std::vector<BigInt> Polynomial::integer_coeffs() const {
  if (is_zero()) return {};
  BigInt den = lcm_of_denominators(coeffs_);
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    BigRational s = c * den;
    out.emplace_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

Polynomial Polynomial::primitive() const {
  auto ints = integer_coeffs();
  std::vector<BigRational> v(ints.begin(), ints.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::reversed() const {
  std::vector<BigRational> v(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const BigRational& c) const {
  Polynomial r = *this;
  BigRational pw = 1;
  for (auto& a : r.coeffs_) {
    a *= pw;
    pw *= c;
  }
  r.trim();
  return r;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  if (degree() < d.degree()) return {Polynomial(), *this};
  std::vector<BigRational> r = coeffs_;
  std::vector<BigRational> q(coeffs_.size() - d.coeffs_.size() + 1);
  BigRational inv = 1 / d.leading();
  const std::size_t dn = d.coeffs_.size();
  for (std::size_t k = q.size(); k-- > 0;) {
    BigRational c = r[k + dn - 1] * inv;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) r[k + j] -= c * d.coeffs_[j];
  }
  r.resize(dn - 1);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigRational c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || c != 1) {
      os << c.get_str();
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Polynomial Polynomial::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty polynomial literal");
  std::size_t i = 0;
  Polynomial result;
  auto fail = [&]() { throw DomainError("malformed polynomial literal: " + std::string(text)); };
  auto read_int = [&](std::string& out) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    BigRational coeff = 1;
    std::string num;
    read_int(num);
    if (!num.empty()) {
      if (i < s.size() && s[i] == '/') {
        ++i;
        std::string den;
        read_int(den);
        if (den.empty()) fail();
        coeff = make_rational(BigInt(num), BigInt(den));
      } else {
        coeff = BigRational(BigInt(num));
      }
      if (i < s.size() && s[i] == '*') ++i;
    }
    int deg = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        read_int(e);
        if (e.empty()) fail();
        deg = std::stoi(e);
      }
    } else if (num.empty()) {
      fail();
    }
    result += monomial(coeff * sign, deg);
  }
  return result;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
  std::vector<std::pair<Polynomial, int>> out;
  if (f.degree() < 1) return out;
  Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = f / a;
  Polynomial c = fp / a;
  Polynomial d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    Polynomial g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g.monic(), i);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  return out;
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.degree() < 1) return Polynomial::constant(1);
  return (f / gcd(f, f.derivative())).monic();
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

Polynomial cyclotomic(int n) {
  if (n < 1) throw DomainError("cyclotomic index must be positive");
  Polynomial num = Polynomial::monomial(1, n) - Polynomial::constant(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = num / cyclotomic(d);
  return num;
}

}  // namespace bogo
