#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobenian/class_function.hpp"

namespace frobenian {

/// Stab(alpha_i) for each root, as sorted element indices.
std::vector<std::vector<int>> root_stabilizers(const GaloisGroup& group, const std::vector<NFElement>& roots);

/// Union of the designated subgroups.
std::vector<int> s1_set(const FiniteGroupTable& table, const std::vector<std::vector<int>>& subgroups);
/// Elements whose centralizer lies in some designated subgroup.
std::vector<int> s2_set(const FiniteGroupTable& table, const std::vector<std::vector<int>>& subgroups);
std::vector<int> s1_set(const GaloisGroup& group, const std::vector<NFElement>& roots);
std::vector<int> s2_set(const GaloisGroup& group, const std::vector<NFElement>& roots);

/// g(s_j) = alpha_i for the least i with C(s_j) inside Stab(alpha_i), and 0
/// on classes with no such i.
ClassFunction extremal_class_function(const GroupPtr& group, const std::vector<NFElement>& roots);

struct DensityReport {
  PolyQ f;
  GroupPtr group;
  std::vector<NFElement> roots;
  std::vector<int> s1, s2;
  Rational s1_density, s2_density;
  ClassFunction extremal;
  std::uint64_t limit = 0;
  std::size_t primes_counted = 0;
  std::size_t root_primes = 0;
  std::size_t zero_primes = 0;
  Rational empirical_root_density, empirical_zero_density;
  /// Element of S1 \ S2, present when f has no rational root.
  std::optional<int> strict_gap_witness;
};

/// Exact S1/S2 densities and empirical counts over p <= limit. Primes
/// dividing a denominator of f are not counted.
DensityReport density_report(const PolyQ& f, std::uint64_t limit);

/// Brute-force budget on |A^G x G|, overridable by FROBENIAN_BRUTE_FORCE_BUDGET.
constexpr std::uint64_t kDefaultBruteForceBudget = 1000000;
std::uint64_t brute_force_budget();

struct WreathReport {
  std::size_t gamma_order = 0;
  int r = 0;
  std::uint64_t size = 0;  // |G'|
  std::uint64_t count = 0;
  std::uint64_t failures = 0;
  Rational bound;            // (1 - |G|^2/|A|) |G'|
  Integer failure_bound;     // |G|^2 |A|^(|G|-1)
  bool pass = false;
  /// "multiplication" when every pair of G' was tested by multiplying,
  /// "coboundary" for the faster exact enumeration on larger groups.
  std::string method;
  /// Cross-checks: commuting-pair criterion against multiplication (sampled
  /// pairs) and the closed-form sum criterion against the enumeration.
  std::uint64_t pair_checks = 0;
  std::uint64_t pair_mismatches = 0;
  std::uint64_t sum_checks = 0;
  std::uint64_t sum_mismatches = 0;
};

/// Counts xi in A^G x G, A = (Z/2)^r, with pi(C(xi)) inside <pi(xi)>.
/// Throws ScaleLimitError past the budget.
WreathReport wreath_check(const FiniteGroupTable& gamma, int r, std::uint64_t budget = brute_force_budget());

nlohmann::ordered_json to_json(const DensityReport& report);
nlohmann::ordered_json to_json(const WreathReport& report);

}  // namespace frobenian
