#pragma once

#include <functional>
#include <vector>

#include "counting.hpp"

namespace chv {

// Truncated power series with exact rational coefficients, indexed 0..order.
class PowerSeries {
 public:
  explicit PowerSeries(int order) : c_(static_cast<size_t>(order) + 1) {}
  PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int m) const { return c_[static_cast<size_t>(m)]; }
  Rational& operator[](int m) { return c_[static_cast<size_t>(m)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  // Truncated convolution up to min(order_a, order_b).
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

  PowerSeries scaled(const Rational& c) const;
  // Substitution t -> c*t.
  PowerSeries with_scaled_variable(const Rational& c) const;

 private:
  std::vector<Rational> c_;
};

// exp(sum_{i>=1} c_i t^i / i) up to t^M via the derivative recurrence
// n*a_n = sum_{i=1}^{n} c_i a_{n-i}, with c_i = bg_count over the degree-i
// extension. Twisted entries must satisfy validate_field for q.
PowerSeries zeta_series(const GroupDatum& d, const PrimePowerQ& q, int M);

// Inverse of the recurrence above: the counts c_1..c_M from a series with
// constant term 1. Exact; used to cross-check exp/log round trips.
std::vector<Rational> series_log_counts(const PowerSeries& a);

struct EulerProductResult {
  PowerSeries series;
  long long factor_count = 0;
};

// Truncation of the product over index tuples (k_1..k_r), k_j >= 1, of
//   (1 - S(k) q^{-w(k)} t)^{-1},
//   w(k) = sum_j k_j d_j + (dim - sum_j d_j),  S(k) = prod_j eps_j^{k_j - 1},
// keeping the factors with w(k) <= weight_cutoff. The sign S(k) carries the
// shift k_j = i_j + 1 from re-indexing the geometric multi-sum, which is
// what reproduces the published twisted factor tables. Any weight_cutoff
// >= 0 is accepted; below the minimal weight the product is empty.
// Throws BudgetExceeded past factor_budget factors.
EulerProductResult euler_product_truncated(const GroupDatum& d, const PrimePowerQ& q, int M,
                                           long long weight_cutoff,
                                           long long factor_budget = 1'000'000);

// dim - sum_j d_j, the constant part of the Euler factor weight.
long euler_weight_shift(const GroupDatum& d);

// Visits every factor tuple (k_1..k_r), k_j >= 1, with w(k) <= weight_cutoff
// in lexicographic order: the tuple, its sign S(k) and its weight.
void visit_euler_factors(
    const GroupDatum& d, long long weight_cutoff,
    const std::function<void(const std::vector<long long>&, const RootOfUnity&, long long)>&
        visit);

struct DiscrepancyResult {
  std::vector<Rational> diffs;      // |a_m(product) - a_m(exp)|, m = 0..M
  std::vector<Rational> majorants;  // documented exact bound, same indexing
  long long factor_count = 0;
};

// Compares the truncated Euler product against the exp form coefficient by
// coefficient. The bound: a_m differs from its limit by the sum over
// m-element weight multisets containing some weight > W of prod q^{-w};
// every such multiset appears at least once, with a positive term, in the
// expansion of R(W) * S^{m-1}, where S = sum over ALL factors of q^{-w}
// (closed form: the untwisted bg count with eigenvalues dropped) and
// R(W) = S minus the enumerated factors of weight <= W. So
//   majorant_0 = 0,  majorant_m = R(W) * S^{m-1}  (m >= 1).
DiscrepancyResult euler_exp_discrepancy(const GroupDatum& d, const PrimePowerQ& q, int M,
                                        long long weight_cutoff);

// The multiplicative-group zeta function satisfies z(q t) = z(t) / (1 - t);
// checks the identity coefficientwise through t^M for the rank-1 torus.
bool gm_functional_equation_holds(const PrimePowerQ& q, int M);

}  // namespace chv
