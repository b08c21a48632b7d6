#include "counting.hpp"

#include "errors.hpp"

namespace chv {

namespace {

void check_args(const GroupDatum& d, const PrimePowerQ& q, int ext) {
  if (ext < 1) throw BadArgument("extension degree must be >= 1");
  validate_field(d.spec, q);
}

Rational q_pow(const PrimePowerQ& q, long exp) { return int_pow(to_bigint(q.q), exp); }

}  // namespace

BigInt group_order(const GroupDatum& d, const PrimePowerQ& q, int ext) {
  check_args(d, q, ext);
  Cyclotomic3 prod = Cyclotomic3::one();
  for (size_t j = 0; j < d.degrees.size(); ++j) {
    Cyclotomic3 eps = embed_root(d.eigenvalues[j].pow(ext));
    Rational x = q_pow(q, -static_cast<long>(ext) * d.degrees[j]);
    prod *= Cyclotomic3::one() - eps * Cyclotomic3(x);
  }
  Rational r = prod.rational_part() * q_pow(q, static_cast<long>(ext) * d.dim);
  if (!r.is_integer()) throw NonIntegral("order came out " + r.to_string());
  if (r.sign() <= 0) throw NonIntegral("order came out nonpositive: " + r.to_string());
  return r.numerator();
}

Rational bg_count(const GroupDatum& d, const PrimePowerQ& q, int ext) {
  return Rational(BigInt(1), group_order(d, q, ext));
}

PartialSumResult bg_partial_sum(const GroupDatum& d, const PrimePowerQ& q, int ext,
                                long cutoff, long long nested_budget) {
  check_args(d, q, ext);
  if (cutoff < 0) throw BadArgument("cutoff must be >= 0");
  if (cutoff > 1'000'000) throw BadArgument("cutoff above 10^6");
  const int r = d.rank();
  const long e = ext;

  // Factorized form: q^{-e*D} * prod_j sum_{i=0}^{N} (eps_j^e q^{-e*d_j})^i,
  // each geometric factor in closed form (1 - x^{N+1}) / (1 - x).
  Cyclotomic3 acc{q_pow(q, -e * d.dim)};
  for (int j = 0; j < r; ++j) {
    Cyclotomic3 x = embed_root(d.eigenvalues[static_cast<size_t>(j)].pow(e)) *
                    Cyclotomic3(q_pow(q, -e * d.degrees[static_cast<size_t>(j)]));
    Cyclotomic3 top = Cyclotomic3::one() - cyc_pow(x, static_cast<unsigned long>(cutoff) + 1);
    acc *= top / (Cyclotomic3::one() - x);
  }

  PartialSumResult res;
  res.value = acc.rational_part();

  // Tail bound: replace every eigenvalue by 1 and compare the full geometric
  // series against the truncated one.
  Rational full(1), part(1);
  for (int j = 0; j < r; ++j) {
    Rational x = q_pow(q, -e * d.degrees[static_cast<size_t>(j)]);
    full *= (Rational(1) - x).inverse();
    part *= (Rational(1) - pow(x, cutoff + 1)) / (Rational(1) - x);
  }
  res.tail_bound = q_pow(q, -e * d.dim) * (full - part);

  // Nested enumeration cross-check when it fits the budget.
  double est = 1;
  for (int j = 0; j < r; ++j) {
    est *= static_cast<double>(cutoff) + 1;
    if (est > static_cast<double>(nested_budget)) break;
  }
  if (est <= static_cast<double>(nested_budget)) {
    Cyclotomic3 sum;
    std::vector<Cyclotomic3> stack(static_cast<size_t>(r) + 1);
    stack[0] = Cyclotomic3{q_pow(q, -e * d.dim)};
    std::vector<long> idx(static_cast<size_t>(r), 0);
    long long tuples = 0;
    // Depth-first odometer; stack[j] carries the partial product of the
    // first j factors.
    int j = 0;
    while (true) {
      if (j == r) {
        sum += stack[static_cast<size_t>(r)];
        ++tuples;
        --j;
        while (j >= 0 && idx[static_cast<size_t>(j)] == cutoff) --j;
        if (j < 0) break;
        ++idx[static_cast<size_t>(j)];
      } else {
        size_t ju = static_cast<size_t>(j);
        Cyclotomic3 x = embed_root(d.eigenvalues[ju].pow(e * idx[ju])) *
                        Cyclotomic3(q_pow(q, -e * idx[ju] * d.degrees[ju]));
        stack[ju + 1] = stack[ju] * x;
        ++j;
        if (j <= r - 1) idx[static_cast<size_t>(j)] = 0;
      }
    }
    if (sum.rational_part() != res.value)
      throw InternalCheckFailure("nested and factorized partial sums disagree");
    res.nested_checked = true;
    res.tuples = tuples;
  }
  return res;
}

std::vector<BigInt> betti_numbers(const GroupDatum& d, int max_half) {
  if (max_half < 0) throw BadArgument("max_half must be >= 0");
  std::vector<BigInt> b(static_cast<size_t>(max_half) + 1, BigInt(0));
  b[0] = 1;
  // One pass per generator: unbounded powers of a weight-d generator.
  for (int deg : d.degrees)
    for (int m = deg; m <= max_half; ++m)
      b[static_cast<size_t>(m)] += b[static_cast<size_t>(m - deg)];
  return b;
}

}  // namespace chv
