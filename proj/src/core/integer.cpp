#include "bogo/core/integer.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bogo/core/errors.hpp"

namespace bogo {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }),
          s.end());
  if (s.empty()) throw DomainError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(s));
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational literal: " + s);
  }
}

std::string to_string(const BigInt& n) { return n.get_str(); }
std::string to_string(const BigRational& q) { return q.get_str(); }

double log_abs(const BigInt& n) {
  if (n == 0) throw DomainError("log of zero");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

int valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw DomainError("valuation of zero");
  BigInt m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const BigRational& q, const BigInt& p) {
  return valuation(BigInt(q.get_num()), p) - valuation(BigInt(q.get_den()), p);
}

BigInt lcm_of_denominators(const std::vector<BigRational>& values) {
  BigInt l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

bool is_probable_prime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  using u128 = unsigned __int128;
  auto mul = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
  };
  auto pw = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pw(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> sieve(limit + 1, true);
  sieve[0] = sieve[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!sieve[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
  }
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (sieve[i]) out.push_back(i);
  return out;
}

namespace {

BigInt pollard_brent(const BigInt& n, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (;;) {
    BigInt y = BigInt(static_cast<unsigned long>(rng() % 1000000007ULL)) % n;
    BigInt c = BigInt(static_cast<unsigned long>(rng() % 1000000007ULL + 1)) % n;
    const unsigned long m = 128;
    BigInt g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r.get_ui(); ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r.get_ui() && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r.get_ui() - k); ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::vector<BigInt>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  BigInt d = pollard_brent(n, rng);
  factor_into(d, out, rng);
  factor_into(BigInt(n / d), out, rng);
}

}  // namespace

std::vector<std::pair<BigInt, int>> factor_integer(BigInt n) {
  if (n == 0) throw DomainError("cannot factor zero");
  n = abs(n);
  std::vector<BigInt> primes;
  for (unsigned long p = 2; p < 10000 && n > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  std::mt19937_64 rng(0x5eed);
  factor_into(n, primes, rng);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<BigInt, int>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

}  // namespace bogo
