#pragma once

#include <vector>

#include "catalog.hpp"

namespace chv {

// Number of points over the field with q^ext elements:
//   q^{ext*dim} * prod_j (1 - eps_j^ext * q^{-ext*d_j}),
// evaluated exactly in the cyclotomic field. Twisted entries must satisfy
// validate_field for q itself. Integrality and positivity are asserted at
// runtime (NonIntegral on failure, NotRational if an omega part survives).
BigInt group_order(const GroupDatum& d, const PrimePowerQ& q, int ext = 1);

// Groupoid count of the classifying stack: 1 / group_order.
Rational bg_count(const GroupDatum& d, const PrimePowerQ& q, int ext = 1);

struct PartialSumResult {
  Rational value;       // truncated multi-sum, every index capped at cutoff
  Rational tail_bound;  // exact bound on |bg_count - value|, eigenvalue-free
  bool nested_checked = false;  // tuple enumeration ran and agreed
  long long tuples = 0;         // (cutoff+1)^rank when nested_checked
};

// Truncated expansion of bg_count as a geometric multi-sum: terms
// prod_j eps_j^{ext*i_j} * q^{-ext*(sum_j i_j d_j + dim)} over 0 <= i_j <= cutoff.
// Computed in factorized form (product of geometric partial sums) and, when
// (cutoff+1)^rank <= nested_budget, re-computed by direct tuple enumeration;
// the two must agree exactly (InternalCheckFailure otherwise). The tail bound
// drops the eigenvalues (they have modulus one):
//   q^{-D} * (prod_j (1 - q^{-d_j})^{-1} - prod_j sum_{i<=cutoff} q^{-i*d_j})
// with everything evaluated at q^ext.
PartialSumResult bg_partial_sum(const GroupDatum& d, const PrimePowerQ& q, int ext,
                                long cutoff, long long nested_budget = 10'000'000);

// Even-degree Betti numbers b_0, b_2, ..., b_{2*max_half} of the classifying
// space: b_{2m} counts monomials of weight m in generators of weights
// d_1..d_r (odd-degree Betti numbers vanish).
std::vector<BigInt> betti_numbers(const GroupDatum& d, int max_half);

}  // namespace chv
