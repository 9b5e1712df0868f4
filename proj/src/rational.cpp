#include "frobenian/rational.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "frobenian/errors.hpp"

namespace frobenian {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(const std::string& s) {
  if (!is_integer_literal(s)) throw InputError("not an integer: '" + s + "'");
  Integer z;
  z.set_str(s[0] == '+' ? s.substr(1) : s, 10);
  return z;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = trim(text);
  auto slash = s.find('/');
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(parse_integer(s));
  } else {
    Integer num = parse_integer(trim(s.substr(0, slash)));
    std::string den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && den_text[0] == '-') throw InputError("negative denominator in '" + s + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    q = Rational(num, den);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& raw) {
  Rational q = raw;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::uint64_t reduce_mod(const Integer& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  std::uint64_t den = reduce_mod(q.get_den(), p);
  if (den == 0) throw BadPrimeError("prime " + std::to_string(p) + " divides denominator of " + to_string(q));
  return mul_mod(reduce_mod(q.get_num(), p), inv_mod(den, p), p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 128-bit to stay exact for 64-bit moduli
  __int128 r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw BadPrimeError("residue " + std::to_string(a) + " not invertible mod " + std::to_string(p));
  if (s0 < 0) s0 += p;
  return static_cast<std::uint64_t>(s0);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // these witnesses are deterministic for all 64-bit n
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

namespace {

// Brent's variant of Pollard rho. Returns a non-trivial factor of composite n.
Integer pollard_brent(const Integer& n, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (;;) {
    Integer y = Integer(static_cast<unsigned long>(rng() % 1000000007ULL)) % n;
    Integer c = Integer(static_cast<unsigned long>(rng() % 1000000007ULL + 1)) % n;
    Integer g = 1, r = 1, q = 1, x, ys;
    const unsigned long m = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r.get_ui(); ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r.get_ui() && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r.get_ui() - k); ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_prime_factors(const Integer& n, std::vector<Integer>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n, rng);
  collect_prime_factors(d, out, rng);
  collect_prime_factors(n / d, out, rng);
}

}  // namespace

std::vector<Integer> prime_divisors(const Integer& n) {
  if (n == 0) throw InputError("prime_divisors of zero");
  Integer m = abs(n);
  std::vector<Integer> out;
  for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
    }
  }
  std::mt19937_64 rng(0x5eed);
  collect_prime_factors(m, out, rng);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace frobenian
