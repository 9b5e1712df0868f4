#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobenian/finite_group.hpp"
#include "frobenian/matrix.hpp"
#include "frobenian/poly_fp.hpp"
#include "frobenian/poly_q.hpp"

namespace frobenian {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Default cap on the degree of constructed splitting fields. Overridable
/// through the FROBENIAN_DEGREE_CAP environment variable.
constexpr int kDefaultDegreeCap = 24;
int degree_cap();

/// Q(theta) = Q[x]/(min_poly) for a monic irreducible min_poly.
class NumberField {
 public:
  /// Checks irreducibility unless `trusted` is set (callers that built the
  /// polynomial as a minimal polynomial).
  static FieldPtr create(const PolyQ& min_poly, bool trusted = false);
  /// The field Q, presented as Q[x]/(x).
  static FieldPtr rationals();

  const PolyQ& min_poly() const { return min_poly_; }
  int degree() const { return degree_; }
  const Rational& discriminant() const { return discriminant_; }

  /// Coordinates of theta^k for n <= k <= 2n-2.
  const std::vector<Rational>& power_reduction(int k) const {
    return reductions_[static_cast<std::size_t>(k - degree_)];
  }

 private:
  NumberField() = default;
  PolyQ min_poly_;
  int degree_ = 0;
  Rational discriminant_;
  std::vector<std::vector<Rational>> reductions_;
};

/// Element of a number field as coordinates in 1, theta, ..., theta^{n-1}.
class NFElement {
 public:
  NFElement() = default;
  NFElement(FieldPtr field, std::vector<Rational> coords);
  static NFElement from_rational(FieldPtr field, const Rational& q);
  static NFElement from_poly(FieldPtr field, const PolyQ& p);
  static NFElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& coord(std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;
  PolyQ to_poly() const { return PolyQ(coords_); }

  NFElement& operator+=(const NFElement& o);
  NFElement& operator-=(const NFElement& o);
  NFElement& operator*=(const NFElement& o);
  NFElement& operator*=(const Rational& c);
  friend NFElement operator+(NFElement a, const NFElement& b) { return a += b; }
  friend NFElement operator-(NFElement a, const NFElement& b) { return a -= b; }
  friend NFElement operator*(NFElement a, const NFElement& b) { return a *= b; }
  friend NFElement operator*(NFElement a, const Rational& c) { return a *= c; }
  NFElement operator-() const;
  NFElement inverse() const;
  NFElement pow(long e) const;
  friend bool operator==(const NFElement& a, const NFElement& b) { return a.coords_ == b.coords_; }

  /// Evaluates this element's polynomial at `theta_image`, an element of
  /// some (possibly different) field. This is how automorphisms and field
  /// embeddings act.
  NFElement substitute(const NFElement& theta_image) const;

  /// Matrix of multiplication by this element in the power basis.
  MatQ multiplication_matrix() const;
  Rational norm() const;
  Rational trace() const;
  /// Monic minimal polynomial over Q.
  PolyQ min_poly() const;
  /// LCM of coordinate denominators.
  Integer denominator_lcm() const;

  /// Reduction into F_p[x]/(factor); p must not divide a denominator.
  PolyFp reduce_mod(std::uint64_t p, const PolyFp& factor) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

/// Polynomial with number-field coefficients, lowest degree first.
class PolyNF {
 public:
  PolyNF() = default;
  PolyNF(FieldPtr field, std::vector<NFElement> coeffs);
  /// Rational polynomial viewed over `field`.
  static PolyNF lift(FieldPtr field, const PolyQ& p);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<NFElement>& coeffs() const { return c_; }
  const NFElement& leading() const { return c_.back(); }

  friend PolyNF operator+(const PolyNF& a, const PolyNF& b);
  friend PolyNF operator-(const PolyNF& a, const PolyNF& b);
  friend PolyNF operator*(const PolyNF& a, const PolyNF& b);
  std::pair<PolyNF, PolyNF> divmod(const PolyNF& d) const;
  PolyNF monic() const;
  PolyNF derivative() const;
  NFElement operator()(const NFElement& x) const;
  /// Maps all coefficients through NFElement::substitute.
  PolyNF substitute(const NFElement& theta_image) const;
  friend bool operator==(const PolyNF& a, const PolyNF& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x", const std::string& theta = "t") const;

 private:
  void normalize();
  FieldPtr field_;
  std::vector<NFElement> c_;
};

PolyNF gcd(PolyNF a, PolyNF b);

struct NFFactor {
  PolyNF factor;
  int multiplicity;
};

/// Factorization over K into monic irreducibles (Trager: squarefree norm,
/// factor over Q, recover factors by gcd). Linear factors come first.
std::vector<NFFactor> factor_over_field(const PolyNF& f);
std::vector<NFFactor> factor_over_field(const PolyQ& f, const FieldPtr& field);

/// Roots of f lying in the field, without multiplicity.
std::vector<NFElement> roots_in_field(const PolyQ& f, const FieldPtr& field);

struct SplittingField {
  FieldPtr field;
  /// Distinct roots of the squarefree part, in the order they were found.
  std::vector<NFElement> roots;
};

/// Splitting field of the squarefree part of f, by iterated adjunction of a
/// root of a non-linear factor. Throws ScaleLimitError past `cap`.
SplittingField splitting_field(const PolyQ& f, int cap = degree_cap());

/// Adjoins a root of an irreducible factor h over K. Returns the new field
/// together with the images of the old generator and of the new root.
struct Extension {
  FieldPtr field;
  NFElement old_generator;
  NFElement new_root;
};
Extension adjoin_root(const PolyNF& h);

struct Automorphism {
  /// sigma(theta)
  NFElement image;
  NFElement operator()(const NFElement& x) const { return x.substitute(image); }
};

/// Gal(L/Q) for a normal field L: automorphisms (identity first), the
/// composition table, conjugacy classes and centralizers.
class GaloisGroup {
 public:
  /// Throws InvariantViolation if L is not normal over Q.
  static std::shared_ptr<const GaloisGroup> compute(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Automorphism>& elements() const { return elements_; }
  const Automorphism& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  NFElement apply(int i, const NFElement& x) const { return element(i)(x); }
  const FiniteGroupTable& table() const { return table_; }
  /// Index of the automorphism with the given image of theta, or -1.
  int index_of_image(const NFElement& image) const;

 private:
  GaloisGroup(FieldPtr field, std::vector<Automorphism> elements, FiniteGroupTable table)
      : field_(std::move(field)), elements_(std::move(elements)), table_(std::move(table)) {}
  FieldPtr field_;
  std::vector<Automorphism> elements_;
  FiniteGroupTable table_;
};
using GroupPtr = std::shared_ptr<const GaloisGroup>;

/// Splitting data of a rational prime in L, relative to the power basis.
struct PrimeLocalData {
  std::uint64_t p = 0;
  bool ramified = false;
  /// The irreducible factor of min_poly mod p used as the residue field.
  PolyFp chosen_factor;
  int residue_degree = 0;
  /// Frobenius automorphism for chosen_factor; -1 when ramified.
  int frobenius_index = -1;
  /// All irreducible factors of min_poly mod p (canonically sorted).
  std::vector<PolyFp> factors;
};

/// Ramified means min_poly mod p is not squarefree. `factor_choice` selects
/// among the canonically sorted irreducible factors (0 = least).
/// Throws BadPrimeError if p divides a min_poly denominator.
PrimeLocalData prime_local_data(const GaloisGroup& group, std::uint64_t p, std::size_t factor_choice = 0);

/// Conjugacy class of Frobenius at p. Throws BadPrimeError when ramified.
int frobenius_class(const GaloisGroup& group, std::uint64_t p);

/// Element whose Galois orbit is a Q-basis of L. Throws ScaleLimitError
/// after `budget` candidates.
NFElement normal_basis_generator(const GaloisGroup& group, int budget = 4096);

}  // namespace frobenian
