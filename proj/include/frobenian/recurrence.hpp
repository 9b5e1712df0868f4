#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobenian/class_function.hpp"
#include "frobenian/matrix.hpp"
#include "frobenian/number_field.hpp"

namespace frobenian {

/// a_{n+k} = c_1 a_{n+k-1} + ... + c_k a_n with rational data and c_k != 0.
class Recurrence {
 public:
  /// Throws InputError on an empty or mismatched input or c_k = 0.
  Recurrence(std::vector<Rational> coeffs, std::vector<Rational> initial);
  /// "c1,..,ck;a0,..,a(k-1)", rationals as p/q.
  static Recurrence parse(const std::string& text);

  int order() const { return static_cast<int>(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const std::vector<Rational>& initial() const { return a_; }

  /// Ones on the superdiagonal, last row (c_k, ..., c_1), so that
  /// a_n = u^T M^n v with u = e_1 and v = initial values.
  MatQ companion() const;
  std::vector<Rational> u() const;
  std::vector<Rational> v() const { return a_; }
  /// x^k - c_1 x^{k-1} - ... - c_k
  PolyQ characteristic_polynomial() const;
  Integer denominator_lcm() const;
  Recurrence scaled(const Rational& c) const;
  std::string to_string() const;

 private:
  std::vector<Rational> c_, a_;
};

/// Exact a_n; negative n runs the recurrence backwards.
Rational term_at(const Recurrence& r, long n);
std::vector<Rational> terms(const Recurrence& r, std::size_t count);
/// a_n mod p via the companion matrix; BadPrimeError when p divides a
/// denominator of r.
std::uint64_t term_mod_p(const Recurrence& r, const Integer& n, std::uint64_t p);
/// a_p mod p
std::uint64_t term_mod_p(const Recurrence& r, std::uint64_t p);

/// Multiplicative decomposition M = M_ss M_u.
struct JordanChevalley {
  MatQ ss;
  MatQ u;
};
/// Newton iteration on the squarefree part of the characteristic
/// polynomial. Throws InputError for singular M.
JordanChevalley jordan_chevalley(const MatQ& m);

struct SpectralPair {
  NFElement b;
  NFElement lambda;
};

struct SpectralData {
  GroupPtr group;
  JordanChevalley jc;
  /// Pairs with b != 0, so that a_n = sum b_i lambda_i^n for the
  /// semisimple part.
  std::vector<SpectralPair> pairs;
  /// action[s][i]: index of the pair (s(b_i), s(lambda_i)).
  std::vector<std::vector<int>> action;
  const FieldPtr& field() const { return group->field(); }
};

SpectralData spectral_data(const Recurrence& r);
/// sum b_i lambda_i^p in F_p[x]/(chosen factor); nullopt when some b_i or
/// lambda_i does not reduce at p. Throws InvariantViolation if the sum
/// leaves the prime field.
std::optional<std::uint64_t> spectral_sum_mod_p(const SpectralData& s, const PrimeLocalData& local);

/// g(s) = sum b_i s(lambda_i)
ClassFunction to_class_function(const SpectralData& s);
ClassFunction to_class_function(const Recurrence& r);

}  // namespace frobenian
