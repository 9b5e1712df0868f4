#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace frobenian {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n" or "n/d" (optional sign, surrounding blanks ignored).
Rational parse_rational(const std::string& text);

/// Canonical string form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Reduces q modulo a prime p. Throws BadPrimeError if p divides the
/// denominator.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);
std::uint64_t reduce_mod(const Integer& z, std::uint64_t p);

inline bool divides(std::uint64_t p, const Integer& z) {
  return mpz_divisible_ui_p(z.get_mpz_t(), p) != 0;
}

/// Modular helpers on 64-bit residues.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

bool is_prime(std::uint64_t n);
bool is_prime(const Integer& n);

/// All primes p with lo <= p <= hi.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t hi) { return primes_between(2, hi); }

/// Distinct prime divisors of |n|, ascending. n = 0 is rejected.
std::vector<Integer> prime_divisors(const Integer& n);

}  // namespace frobenian
