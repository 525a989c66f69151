#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bogo {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// num/den in lowest terms with positive denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Parses "a", "-a" or "a/b".
BigRational parse_rational(std::string_view text);

std::string to_string(const BigInt& n);
std::string to_string(const BigRational& q);

/// Natural logarithm of |n| for arbitrarily large n != 0.
double log_abs(const BigInt& n);

/// p-adic valuation; n must be nonzero.
int valuation(const BigInt& n, const BigInt& p);
int valuation(const BigRational& q, const BigInt& p);

BigInt lcm_of_denominators(const std::vector<BigRational>& values);

/// Trial division plus Pollard-Brent; returns (prime, exponent) ascending.
std::vector<std::pair<BigInt, int>> factor_integer(BigInt n);

bool is_probable_prime(const BigInt& n);
bool is_prime_u64(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace bogo
