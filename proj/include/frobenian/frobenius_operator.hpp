#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobenian/class_function.hpp"

namespace frobenian {

/// The p-power map on F_p[x]/(min_poly mod p) in the basis 1, t, ..., t^{n-1}.
/// Column j holds the coordinates of t^{jp}.
struct FrobeniusMatrix {
  FieldPtr field;
  std::uint64_t p = 0;
  MatFp m;

  std::uint64_t entry(std::size_t i, std::size_t j) const { return m(i, j); }
  /// Image of a residue vector under the p-power map.
  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const;
  /// Least k >= 1 with M^k = I, or 0 if none up to `limit`.
  int order(int limit = 64) const;
};

/// BadPrimeError if p divides a denominator of the minimal polynomial.
FrobeniusMatrix frobenius_matrix(const FieldPtr& field, std::uint64_t p);

/// Entry (i, j), 0-based, at each prime.
std::vector<std::uint64_t> entry_sequence(const FieldPtr& field, std::size_t i, std::size_t j,
                                          const std::vector<std::uint64_t>& primes);

/// s -> sum_t t(x) * s(t(y)): the image of the symmetrization of x (x) y.
ClassFunction trace_form_class_function(const GroupPtr& group, const NFElement& x, const NFElement& y);

/// d_i with Tr(d_i t^k) = [i = k], from the inverse trace Gram matrix.
std::vector<NFElement> trace_dual_basis(const FieldPtr& field);

struct SpanReport {
  std::size_t primes_checked = 0;
  std::vector<std::uint64_t> skipped;
  /// Coefficients c_ij with g = sum c_ij T_ij, T_ij = trace form class
  /// function of (d_i, t^j); row-major n x n.
  std::vector<Rational> coefficients;
  /// Primes where g(Frob_p) differs from sum c_ij M_ij(p).
  std::vector<std::uint64_t> combination_disagreements;
  /// (p, i, j) where M_ij(p) differs from T_ij(Frob_p).
  std::vector<std::array<std::uint64_t, 3>> entry_disagreements;
  bool ok() const { return combination_disagreements.empty() && entry_disagreements.empty(); }
};

/// Checks both directions of the correspondence between Frobenius-matrix
/// entries and class functions at the given primes. Primes that are
/// ramified or divide a relevant denominator are skipped. Throws
/// InvariantViolation on any disagreement.
SpanReport span_check(const ClassFunction& g, const std::vector<std::uint64_t>& primes);

nlohmann::ordered_json to_json(const FrobeniusMatrix& m);
nlohmann::ordered_json to_json(const SpanReport& report);

}  // namespace frobenian
