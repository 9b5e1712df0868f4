#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobenian/recurrence.hpp"

namespace frobenian {

/// One reason the exceptional bound is at least `value`.
struct BoundContribution {
  std::string source;
  Integer value;
};

struct ExceptionalPrime {
  std::uint64_t p;
  /// a_p = 0 mod p; false also when a_p is undefined mod p.
  bool in_zero_set;
  /// a_p mod p is undefined (p divides a denominator of the recurrence).
  bool undefined;
};

/// {p : a_p = 0 mod p} described as {p : Frob_p in C} for every p > B, with
/// the primes up to B decided directly.
struct FrobenianCertificate {
  GroupPtr group;
  ClassFunction g;
  std::vector<int> zero_classes;
  Rational density;
  Integer bound;
  std::vector<BoundContribution> provenance;
  /// Primes decided by direct computation: every p <= B when B is at most
  /// kDirectSweepLimit, otherwise the primes named in the provenance and
  /// those up to kDirectSweepLimit.
  std::vector<ExceptionalPrime> exceptional_primes;

  /// Predicted membership of p in the zero set.
  bool predicts_zero(std::uint64_t p) const;
};

constexpr std::uint64_t kDirectSweepLimit = 100000;

/// B with per-source provenance, from the hypotheses needed for
/// a_p = g(Frob_p) mod p and g(Frob_p) = 0 mod P <=> g(Frob_p) = 0.
std::pair<Integer, std::vector<BoundContribution>> bad_prime_bound(const Recurrence& r, const SpectralData& s,
                                                                   const ClassFunction& g);

FrobenianCertificate certify(const Recurrence& r);

/// Recurrence whose zero set is {p : Frob_p in C} up to finitely many primes.
Recurrence from_conjugacy_data(const GroupPtr& group, const std::vector<int>& classes);

struct EmpiricalReport {
  std::uint64_t limit = 0;
  std::size_t primes_checked = 0;
  std::size_t zero_count = 0;
  std::vector<std::uint64_t> mismatches_below_bound;
  std::vector<std::uint64_t> mismatches_above_bound;
  Rational empirical_density;
  Rational certificate_density;
};

/// Sweeps p <= limit. Throws InvariantViolation on a mismatch above B.
EmpiricalReport verify_empirical(const FrobenianCertificate& cert, const Recurrence& r, std::uint64_t limit);

nlohmann::ordered_json to_json(const FrobenianCertificate& cert);
nlohmann::ordered_json to_json(const EmpiricalReport& report);

/// JSON string for an element's coordinate vector.
nlohmann::ordered_json coords_json(const NFElement& x);
nlohmann::ordered_json poly_json(const PolyQ& f);

}  // namespace frobenian
