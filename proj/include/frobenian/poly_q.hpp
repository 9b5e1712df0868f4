#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "frobenian/rational.hpp"

namespace frobenian {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient list.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  PolyQ(std::initializer_list<Rational> coeffs) : PolyQ(std::vector<Rational>(coeffs)) {}

  static PolyQ constant(const Rational& c);
  static PolyQ monomial(const Rational& c, int degree);
  static PolyQ x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const Rational& c);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  PolyQ operator-() const;

  /// Euclidean division; divisor must be non-zero.
  std::pair<PolyQ, PolyQ> divmod(const PolyQ& divisor) const;
  friend PolyQ operator/(const PolyQ& a, const PolyQ& b) { return a.divmod(b).first; }
  friend PolyQ operator%(const PolyQ& a, const PolyQ& b) { return a.divmod(b).second; }

  PolyQ derivative() const;
  PolyQ monic() const;
  Rational operator()(const Rational& x) const;
  /// p(q(x))
  PolyQ compose(const PolyQ& inner) const;

  /// Least common multiple of coefficient denominators.
  Integer denominator_lcm() const;

  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const PolyQ&, const PolyQ&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Canonical total order used to sort factors: by degree, then coefficients
/// lowest degree first.
bool canonical_less(const PolyQ& a, const PolyQ& b);

/// Monic gcd; gcd(0, 0) = 0.
PolyQ gcd(PolyQ a, PolyQ b);
PolyQ lcm(const PolyQ& a, const PolyQ& b);
/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
struct ExtendedGcd {
  PolyQ g, s, t;
};
ExtendedGcd extended_gcd(const PolyQ& a, const PolyQ& b);

/// f / gcd(f, f'), made monic. f must be non-zero.
PolyQ squarefree_part(const PolyQ& f);

/// Discriminant of a polynomial of degree >= 1 (with the usual leading
/// coefficient normalization).
Rational discriminant(const PolyQ& f);
/// Resultant via the Euclidean remainder sequence.
Rational resultant(const PolyQ& a, const PolyQ& b);

/// Parses expressions like "x^3-2", "x^2 - x - 1", "1/2*x^2+3x-1/3".
PolyQ parse_poly(const std::string& text, char var = 'x');

/// Integer coefficients of the primitive integer multiple of f with positive
/// leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const PolyQ& f);

}  // namespace frobenian
