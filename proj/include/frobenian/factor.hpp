#pragma once

#include <vector>

#include "frobenian/poly_q.hpp"

namespace frobenian {

struct QFactor {
  PolyQ factor;
  int multiplicity;
  friend bool operator==(const QFactor&, const QFactor&) = default;
};

/// Factorization of a non-zero f into monic irreducibles over Q, sorted by
/// canonical_less. Squarefree decomposition, a rational-root pass, then
/// modular factorization, Hensel lifting and subset recombination.
std::vector<QFactor> factor_over_Q(const PolyQ& f);

/// Rational roots of a non-zero f, ascending, without multiplicity.
std::vector<Rational> rational_roots(const PolyQ& f);

/// True iff f (degree >= 1) is irreducible over Q.
bool is_irreducible_over_Q(const PolyQ& f);

}  // namespace frobenian
