#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobenian/poly_q.hpp"

namespace frobenian {

/// Dense polynomial over F_p, coefficients lowest degree first, residues in
/// [0, p). The zero polynomial has no coefficients.
class PolyFp {
 public:
  PolyFp() = default;
  PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  /// Reduction of a rational polynomial. Throws BadPrimeError if p divides a
  /// coefficient denominator.
  static PolyFp reduce(const PolyQ& f, std::uint64_t p);
  static PolyFp constant(std::uint64_t p, std::uint64_t c);
  static PolyFp monomial(std::uint64_t p, std::uint64_t c, int degree);
  static PolyFp x(std::uint64_t p) { return monomial(p, 1, 1); }

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(int i) const { return (i < 0 || i > degree()) ? 0 : c_[static_cast<std::size_t>(i)]; }
  std::uint64_t leading() const { return c_.back(); }

  PolyFp& operator+=(const PolyFp& o);
  PolyFp& operator-=(const PolyFp& o);
  friend PolyFp operator+(PolyFp a, const PolyFp& b) { return a += b; }
  friend PolyFp operator-(PolyFp a, const PolyFp& b) { return a -= b; }
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  PolyFp scaled(std::uint64_t c) const;

  std::pair<PolyFp, PolyFp> divmod(const PolyFp& divisor) const;
  friend PolyFp operator/(const PolyFp& a, const PolyFp& b) { return a.divmod(b).first; }
  friend PolyFp operator%(const PolyFp& a, const PolyFp& b) { return a.divmod(b).second; }

  PolyFp derivative() const;
  PolyFp monic() const;
  std::uint64_t operator()(std::uint64_t x) const;

  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const PolyFp&, const PolyFp&) = default;

 private:
  void normalize();
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

/// Degree first, then coefficients lowest degree first.
bool canonical_less(const PolyFp& a, const PolyFp& b);

PolyFp gcd(PolyFp a, PolyFp b);
/// base^exp mod modulus
PolyFp pow_mod(const PolyFp& base, const Integer& exp, const PolyFp& modulus);
PolyFp mul_mod(const PolyFp& a, const PolyFp& b, const PolyFp& modulus);
bool is_squarefree(const PolyFp& f);

struct FpFactor {
  PolyFp factor;
  int multiplicity;
  friend bool operator==(const FpFactor&, const FpFactor&) = default;
};

/// Default seed for the randomized splitting. The output is canonical, so
/// the seed affects running time only.
std::uint64_t factoring_seed();
void set_factoring_seed(std::uint64_t seed);

/// Complete factorization into monic irreducibles with multiplicities,
/// canonically sorted. Squarefree decomposition, distinct-degree splitting,
/// then Cantor-Zassenhaus equal-degree splitting with a PRNG seeded by `seed`.
/// Throws InputError for the zero polynomial and for a composite modulus.
std::vector<FpFactor> factor_mod_p(const PolyFp& f, std::uint64_t seed = factoring_seed());

/// Number of distinct roots of f in F_p (f non-zero).
int count_roots_mod_p(const PolyFp& f);

}  // namespace frobenian
