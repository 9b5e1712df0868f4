#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobenian/number_field.hpp"

namespace frobenian {

class Recurrence;

/// A Galois-equivariant function g: Gal(L/Q) -> L, i.e.
/// g(s t s^-1) = s(g(t)), stored by its values on class representatives.
class ClassFunction {
 public:
  ClassFunction() = default;
  /// One value per conjugacy class (in the group's class order). Each value
  /// must be fixed by the centralizer of its representative; throws
  /// InputError otherwise.
  ClassFunction(GroupPtr group, std::vector<NFElement> class_values);
  /// From a value per group element; throws InputError if not equivariant.
  static ClassFunction from_elements(GroupPtr group, const std::vector<NFElement>& values);
  static ClassFunction constant(GroupPtr group, const Rational& c);
  /// 1 on the listed classes, 0 elsewhere.
  static ClassFunction indicator(GroupPtr group, const std::vector<int>& classes);

  const GroupPtr& group() const { return group_; }
  const FieldPtr& field() const { return group_->field(); }
  const std::vector<NFElement>& class_values() const { return values_; }
  const NFElement& class_value(int cls) const { return values_[static_cast<std::size_t>(cls)]; }
  /// g at an arbitrary element, extended from its class representative.
  NFElement at(int element) const;
  std::vector<NFElement> all_values() const;
  /// Classes where g vanishes.
  std::vector<int> zero_classes() const;
  /// LCM of coordinate denominators over all class values.
  Integer denominator_lcm() const;

 private:
  GroupPtr group_;
  std::vector<NFElement> values_;
};

ClassFunction cf_add(const ClassFunction& g, const ClassFunction& h);
ClassFunction cf_mul(const ClassFunction& g, const ClassFunction& h);
ClassFunction cf_scale(const ClassFunction& g, const Rational& c);
inline ClassFunction operator+(const ClassFunction& g, const ClassFunction& h) { return cf_add(g, h); }
inline ClassFunction operator*(const ClassFunction& g, const ClassFunction& h) { return cf_mul(g, h); }

/// g(Frob_P) mod P for the prime P given by `local`. Nullopt when the
/// prime is ramified or divides a denominator of g.
std::optional<std::uint64_t> eval_at_frobenius(const ClassFunction& g, const PrimeLocalData& local);
std::optional<std::uint64_t> eval_at_frobenius(const ClassFunction& g, std::uint64_t p, std::size_t factor_choice = 0);

/// Minimal monic f in Q[x] with f(g(s)) = 0 for all s.
PolyQ annihilator(const ClassFunction& g);

/// A rational recurrence of order |G| whose residues a_p mod p equal
/// g(Frob_p) mod p at good primes. Built on a normal basis {t(theta0)}.
Recurrence to_recurrence(const ClassFunction& g);

}  // namespace frobenian
