#include "series.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"

namespace chv {

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (int m = 0; m <= out.order(); ++m) out[m] = a[m] + b[m];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (int m = 0; m <= out.order(); ++m) out[m] = a[m] - b[m];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (int m = 0; m <= out.order(); ++m)
    for (int i = 0; i <= m; ++i) out[m] += a[i] * b[m - i];
  return out;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
  PowerSeries out(order());
  for (int m = 0; m <= order(); ++m) out[m] = c_[static_cast<size_t>(m)] * c;
  return out;
}

PowerSeries PowerSeries::with_scaled_variable(const Rational& c) const {
  PowerSeries out(order());
  Rational p(1);
  for (int m = 0; m <= order(); ++m) {
    out[m] = c_[static_cast<size_t>(m)] * p;
    p *= c;
  }
  return out;
}

PowerSeries zeta_series(const GroupDatum& d, const PrimePowerQ& q, int M) {
  if (M < 0) throw BadArgument("series order must be >= 0");
  std::vector<Rational> c(static_cast<size_t>(M) + 1);
  for (int i = 1; i <= M; ++i) c[static_cast<size_t>(i)] = bg_count(d, q, i);
  PowerSeries a(M);
  a[0] = Rational(1);
  for (int n = 1; n <= M; ++n) {
    Rational s(0);
    for (int i = 1; i <= n; ++i) s += c[static_cast<size_t>(i)] * a[n - i];
    a[n] = s / Rational(n);
  }
  return a;
}

std::vector<Rational> series_log_counts(const PowerSeries& a) {
  if (a.order() < 0 || a[0] != Rational(1))
    throw BadArgument("series must have constant term 1");
  const int M = a.order();
  std::vector<Rational> c(static_cast<size_t>(M) + 1);
  for (int n = 1; n <= M; ++n) {
    Rational s = Rational(static_cast<long>(n)) * a[n];
    for (int i = 1; i < n; ++i) s -= c[static_cast<size_t>(i)] * a[n - i];
    c[static_cast<size_t>(n)] = s;
  }
  return c;
}

long euler_weight_shift(const GroupDatum& d) { return d.dim - d.degree_sum(); }

void visit_euler_factors(
    const GroupDatum& d, long long weight_cutoff,
    const std::function<void(const std::vector<long long>&, const RootOfUnity&, long long)>&
        visit) {
  const int r = d.rank();
  const long shift = euler_weight_shift(d);
  // Remaining minimum: choosing k_j = 1 from position j on adds
  // sum_{l >= j} d_l to the weight.
  std::vector<long long> min_rest(static_cast<size_t>(r) + 1, 0);
  for (int j = r - 1; j >= 0; --j)
    min_rest[static_cast<size_t>(j)] =
        min_rest[static_cast<size_t>(j) + 1] + d.degrees[static_cast<size_t>(j)];

  std::vector<long long> k(static_cast<size_t>(r), 0);
  std::vector<RootOfUnity> signs(static_cast<size_t>(r) + 1, RootOfUnity::one());
  std::function<void(int, long long)> rec = [&](int j, long long weight) {
    if (j == r) {
      visit(k, signs[static_cast<size_t>(r)], weight);
      return;
    }
    size_t ju = static_cast<size_t>(j);
    const int deg = d.degrees[ju];
    for (long long kj = 1;; ++kj) {
      long long w = weight + kj * deg;
      if (w + min_rest[ju + 1] > weight_cutoff) break;
      // S(k) factor eps_j^{k_j - 1}.
      k[ju] = kj;
      signs[ju + 1] = signs[ju] * d.eigenvalues[ju].pow(kj - 1);
      rec(j + 1, w);
    }
  };
  if (shift + min_rest[0] <= weight_cutoff) rec(0, shift);
}

EulerProductResult euler_product_truncated(const GroupDatum& d, const PrimePowerQ& q, int M,
                                           long long weight_cutoff, long long factor_budget) {
  if (M < 0) throw BadArgument("series order must be >= 0");
  if (weight_cutoff < 0) throw BadArgument("weight cutoff must be >= 0");
  validate_field(d.spec, q);

  std::vector<Cyclotomic3> a(static_cast<size_t>(M) + 1);
  a[0] = Cyclotomic3::one();
  long long count = 0;
  visit_euler_factors(d, weight_cutoff,
                      [&](const std::vector<long long>&, const RootOfUnity& s, long long w) {
                        if (++count > factor_budget)
                          throw BudgetExceeded("factor budget exceeded at weight " +
                                               std::to_string(w));
                        // Multiply by (1 - u t)^{-1}, u = S(k) q^{-w}:
                        // b_m = a_m + u b_{m-1}.
                        Cyclotomic3 u = embed_root(s) *
                                        Cyclotomic3(int_pow(to_bigint(q.q), -static_cast<long>(w)));
                        for (int m = 1; m <= M; ++m)
                          a[static_cast<size_t>(m)] += u * a[static_cast<size_t>(m) - 1];
                      });

  PowerSeries out(M);
  for (int m = 0; m <= M; ++m) out[m] = a[static_cast<size_t>(m)].rational_part();
  return EulerProductResult{std::move(out), count};
}

DiscrepancyResult euler_exp_discrepancy(const GroupDatum& d, const PrimePowerQ& q, int M,
                                        long long weight_cutoff) {
  PowerSeries expform = zeta_series(d, q, M);
  EulerProductResult prod = euler_product_truncated(d, q, M, weight_cutoff);

  // S = sum over all factors of q^{-w} (eigenvalues dropped): the untwisted
  // closed form q^{-dim} prod_j (1 - q^{-d_j})^{-1}.
  Rational s_all = int_pow(to_bigint(q.q), -d.dim);
  for (int deg : d.degrees)
    s_all *= (Rational(1) - int_pow(to_bigint(q.q), -deg)).inverse();
  Rational s_below(0);
  visit_euler_factors(d, weight_cutoff,
                      [&](const std::vector<long long>&, const RootOfUnity&, long long w) {
                        s_below += int_pow(to_bigint(q.q), -static_cast<long>(w));
                      });
  Rational r_tail = s_all - s_below;

  DiscrepancyResult res;
  res.factor_count = prod.factor_count;
  Rational maj = r_tail;
  for (int m = 0; m <= M; ++m) {
    res.diffs.push_back((prod.series[m] - expform[m]).abs());
    if (m == 0) {
      res.majorants.push_back(Rational(0));
    } else {
      res.majorants.push_back(maj);
      maj *= s_all;
    }
  }
  return res;
}

bool gm_functional_equation_holds(const PrimePowerQ& q, int M) {
  GroupDatum t1 = lookup(GroupSpec{Family::Torus, 1, Twist::None});
  PowerSeries z = zeta_series(t1, q, M);
  PowerSeries lhs = z.with_scaled_variable(Rational(to_bigint(q.q)));
  // 1/(1-t) has all coefficients 1; the product's m-th coefficient is the
  // prefix sum of z.
  Rational prefix(0);
  for (int m = 0; m <= M; ++m) {
    prefix += z[m];
    if (lhs[m] != prefix) return false;
  }
  return true;
}

}  // namespace chv
