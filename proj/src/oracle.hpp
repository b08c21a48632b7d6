#pragma once

#include <cstdint>
#include <vector>

namespace chv {

// F_{p^k} for k <= 2 with fixed defining polynomials: x^2+x+1 over F_2,
// x^2+1 over F_3, x^2+2 over F_5 (re-verified irreducible on construction).
// Elements are indexed 0..q-1 as c0 + c1*x with index c0 + c1*p; all
// arithmetic goes through dense tables.
class SmallField {
 public:
  // k = 1 needs p prime; k = 2 additionally needs p in {2, 3, 5}.
  SmallField(int p, int k);

  // Field for a given size q, if supported (prime, or 4, 9, 25).
  static SmallField for_size(long long q);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  uint8_t zero() const { return 0; }
  uint8_t one() const { return 1; }
  uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
  // Multiplicative inverse, a != 0 (found by scan; table-backed).
  uint8_t inv(uint8_t a) const;

 private:
  size_t idx(uint8_t a, uint8_t b) const {
    return static_cast<size_t>(a) * static_cast<size_t>(q_) + b;
  }
  int p_, k_, q_;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

// Exhaustive matrix-group orders over small fields. All counts enumerate
// concrete matrices; no character-theoretic shortcuts. The work estimate
// q^{n^2} must stay within budget (BudgetExceeded otherwise). threads > 1
// partitions the outermost enumeration range; the count is a plain sum over
// chunks, so it cannot depend on the partition.

// Determinant-one n x n matrices, n in {2, 3}.
long long sl_order_bruteforce(int n, long long q, int threads = 1,
                              long long budget = 100'000'000);

// Matrices preserving the standard block alternating form, n in {2, 4}.
long long sp_order_bruteforce(int n, long long q, int threads = 1,
                              long long budget = 100'000'000);

// Orthogonal matrices of determinant one for the identity form, n = 3,
// odd q only (EvenCharacteristic otherwise).
long long so_order_bruteforce(int n, long long q, int threads = 1,
                              long long budget = 100'000'000);

}  // namespace chv
