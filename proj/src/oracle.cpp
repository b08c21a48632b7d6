#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <thread>

#include "errors.hpp"

namespace chv {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int c = 2; c * c <= n; ++c)
    if (n % c == 0) return false;
  return true;
}

// x^2 + A x + B, the fixed defining polynomial for the quadratic extension.
void quadratic_poly(int p, int& A, int& B) {
  switch (p) {
    case 2: A = 1; B = 1; break;
    case 3: A = 0; B = 1; break;
    case 5: A = 0; B = 2; break;
    default: throw BadArgument("no defining polynomial for p = " + std::to_string(p));
  }
}

}  // namespace

SmallField::SmallField(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw BadArgument(std::to_string(p) + " is not prime");
  if (k != 1 && k != 2) throw BadArgument("only k <= 2 supported");
  if (p > 251) throw BadArgument("field too large for table arithmetic");
  int A = 0, B = 0;
  if (k == 2) {
    quadratic_poly(p, A, B);
    for (int t = 0; t < p; ++t)
      if ((t * t + A * t + B) % p == 0)
        throw InternalCheckFailure("defining polynomial has a root mod " + std::to_string(p));
    if (p * p > 255) throw BadArgument("field too large for table arithmetic");
  }
  q_ = k == 1 ? p : p * p;

  add_.resize(static_cast<size_t>(q_) * static_cast<size_t>(q_));
  mul_.resize(add_.size());
  neg_.resize(static_cast<size_t>(q_));
  auto c0 = [&](int a) { return a % p_; };
  auto c1 = [&](int a) { return a / p_; };
  auto enc = [&](int x0, int x1) { return x0 + x1 * p_; };
  for (int a = 0; a < q_; ++a) {
    neg_[static_cast<size_t>(a)] =
        static_cast<uint8_t>(enc((p_ - c0(a)) % p_, (p_ - c1(a)) % p_));
    for (int b = 0; b < q_; ++b) {
      int s0 = (c0(a) + c0(b)) % p_;
      int s1 = (c1(a) + c1(b)) % p_;
      add_[idx(static_cast<uint8_t>(a), static_cast<uint8_t>(b))] =
          static_cast<uint8_t>(enc(s0, s1));
      // (a0 + a1 x)(b0 + b1 x) with x^2 = -A x - B.
      int m0 = c0(a) * c0(b);
      int m1 = c0(a) * c1(b) + c1(a) * c0(b);
      int m2 = c1(a) * c1(b);
      int r0 = (m0 + m2 * ((p_ - B) % p_)) % p_;
      int r1 = (m1 + m2 * ((p_ - A) % p_)) % p_;
      mul_[idx(static_cast<uint8_t>(a), static_cast<uint8_t>(b))] =
          static_cast<uint8_t>(enc(r0, r1));
    }
  }
  inv_.assign(static_cast<size_t>(q_), 0);
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(static_cast<uint8_t>(a), static_cast<uint8_t>(b)) == one())
        inv_[static_cast<size_t>(a)] = static_cast<uint8_t>(b);
}

SmallField SmallField::for_size(long long q) {
  if (q == 4 || q == 9 || q == 25)
    return SmallField(static_cast<int>(q == 4 ? 2 : q == 9 ? 3 : 5), 2);
  if (q >= 2 && q <= 251 && is_prime(static_cast<int>(q)))
    return SmallField(static_cast<int>(q), 1);
  throw BadArgument("unsupported field size " + std::to_string(q));
}

uint8_t SmallField::inv(uint8_t a) const {
  if (a == 0) throw BadArgument("inverse of zero");
  return inv_[a];
}

namespace {

void check_budget(long long q, int n, long long budget) {
  double est = 1;
  for (int i = 0; i < n * n; ++i) est *= static_cast<double>(q);
  if (est > static_cast<double>(budget))
    throw BudgetExceeded("q^(n^2) = " + std::to_string(est) + " above budget " +
                         std::to_string(budget));
}

int clamp_threads(int threads) {
  if (threads < 1) throw BadArgument("threads must be >= 1");
  return threads > 64 ? 64 : threads;
}

// Splits [0, size) into chunks, runs fn(lo, hi) on each, returns the sum of
// the per-chunk counts. The sum is independent of the chunking.
long long partitioned_sum(int size, int threads,
                          const std::function<long long(int, int)>& fn) {
  threads = clamp_threads(threads);
  if (threads == 1) return fn(0, size);
  if (threads > size) threads = size;
  std::vector<long long> part(static_cast<size_t>(threads), 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    int lo = size * t / threads;
    int hi = size * (t + 1) / threads;
    pool.emplace_back([&part, t, lo, hi, &fn] { part[static_cast<size_t>(t)] = fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
  long long total = 0;
  for (long long c : part) total += c;
  return total;
}

uint8_t det2(const SmallField& F, const uint8_t* m) {
  return F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]));
}

uint8_t det3(const SmallField& F, const uint8_t* m) {
  uint8_t t1 = F.sub(F.mul(m[4], m[8]), F.mul(m[5], m[7]));
  uint8_t t2 = F.sub(F.mul(m[3], m[8]), F.mul(m[5], m[6]));
  uint8_t t3 = F.sub(F.mul(m[3], m[7]), F.mul(m[4], m[6]));
  return F.sub(F.add(F.mul(m[0], t1), F.mul(m[2], t3)), F.mul(m[1], t2));
}

// All q^n column vectors in index order.
std::vector<std::array<uint8_t, 4>> all_columns(const SmallField& F, int n) {
  std::vector<std::array<uint8_t, 4>> cols;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= F.q();
  cols.reserve(static_cast<size_t>(total));
  for (int v = 0; v < total; ++v) {
    std::array<uint8_t, 4> c{0, 0, 0, 0};
    int rest = v;
    for (int i = 0; i < n; ++i) {
      c[static_cast<size_t>(i)] = static_cast<uint8_t>(rest % F.q());
      rest /= F.q();
    }
    cols.push_back(c);
  }
  return cols;
}

uint8_t symplectic_dot(const SmallField& F, int n, const std::array<uint8_t, 4>& u,
                       const std::array<uint8_t, 4>& v) {
  // Block form: sum over 2x2 blocks of u_{2i} v_{2i+1} - u_{2i+1} v_{2i}.
  uint8_t acc = 0;
  for (int i = 0; i + 1 < n; i += 2) {
    size_t a = static_cast<size_t>(i), b = a + 1;
    acc = F.add(acc, F.sub(F.mul(u[a], v[b]), F.mul(u[b], v[a])));
  }
  return acc;
}

uint8_t euclidean_dot(const SmallField& F, int n, const std::array<uint8_t, 4>& u,
                      const std::array<uint8_t, 4>& v) {
  uint8_t acc = 0;
  for (int i = 0; i < n; ++i)
    acc = F.add(acc, F.mul(u[static_cast<size_t>(i)], v[static_cast<size_t>(i)]));
  return acc;
}

}  // namespace

long long sl_order_bruteforce(int n, long long q, int threads, long long budget) {
  if (n != 2 && n != 3) throw BadArgument("determinant enumeration supports n in {2, 3}");
  check_budget(q, n, budget);
  SmallField F = SmallField::for_size(q);
  const int cells = n * n;
  return partitioned_sum(F.q(), threads, [&](int lo, int hi) {
    std::vector<uint8_t> m(static_cast<size_t>(cells), 0);
    long long cnt = 0;
    for (int v0 = lo; v0 < hi; ++v0) {
      m[0] = static_cast<uint8_t>(v0);
      std::fill(m.begin() + 1, m.end(), 0);
      while (true) {
        uint8_t det = n == 2 ? det2(F, m.data()) : det3(F, m.data());
        if (det == F.one()) ++cnt;
        int j = cells - 1;
        while (j >= 1 && m[static_cast<size_t>(j)] == F.q() - 1) {
          m[static_cast<size_t>(j)] = 0;
          --j;
        }
        if (j < 1) break;
        ++m[static_cast<size_t>(j)];
      }
    }
    return cnt;
  });
}

namespace {

// Column-by-column enumeration with Gram-condition pruning. gram(s, t) gives
// the required pairing of columns s <= t; check_diagonal controls whether
// the (t, t) condition applies (the alternating form vanishes on the
// diagonal identically, so the symplectic count skips it); leaf_det1
// additionally requires determinant one of the full matrix (n = 3 only).
long long count_isometries(const SmallField& F, int n,
                           const std::function<uint8_t(const std::array<uint8_t, 4>&,
                                                       const std::array<uint8_t, 4>&)>& dot,
                           const std::function<uint8_t(int, int)>& gram, bool check_diagonal,
                           bool leaf_det1, int threads) {
  if (leaf_det1 && n != 3) throw BadArgument("determinant leaf check wired for n = 3");
  const auto cols = all_columns(F, n);
  const int ncols = static_cast<int>(cols.size());
  return partitioned_sum(ncols, threads, [&](int lo, int hi) {
    std::vector<std::array<uint8_t, 4>> chosen(static_cast<size_t>(n));
    long long cnt = 0;
    // chosen[0] ranges over the chunk; deeper columns over everything.
    std::function<void(int)> rec = [&](int t) {
      int clo = t == 0 ? lo : 0;
      int chi = t == 0 ? hi : ncols;
      for (int v = clo; v < chi; ++v) {
        const auto& cand = cols[static_cast<size_t>(v)];
        bool ok = !check_diagonal || dot(cand, cand) == gram(t, t);
        for (int s = 0; s < t && ok; ++s)
          ok = dot(chosen[static_cast<size_t>(s)], cand) == gram(s, t);
        if (!ok) continue;
        chosen[static_cast<size_t>(t)] = cand;
        if (t + 1 == n) {
          if (leaf_det1) {
            std::array<uint8_t, 9> m;
            for (int col = 0; col < n; ++col)
              for (int row = 0; row < n; ++row)
                m[static_cast<size_t>(row * n + col)] =
                    chosen[static_cast<size_t>(col)][static_cast<size_t>(row)];
            if (det3(F, m.data()) == F.one()) ++cnt;
          } else {
            ++cnt;
          }
        } else {
          rec(t + 1);
        }
      }
    };
    rec(0);
    return cnt;
  });
}

}  // namespace

long long sp_order_bruteforce(int n, long long q, int threads, long long budget) {
  if (n != 2 && n != 4) throw BadArgument("symplectic enumeration supports n in {2, 4}");
  check_budget(q, n, budget);
  SmallField F = SmallField::for_size(q);
  auto dot = [&F, n](const std::array<uint8_t, 4>& u, const std::array<uint8_t, 4>& v) {
    return symplectic_dot(F, n, u, v);
  };
  // J_{st} for the block form: 1 on (0,1) and (2,3), 0 on other s < t pairs.
  auto gram = [&F](int s, int t) {
    return (t == s + 1 && s % 2 == 0) ? F.one() : F.zero();
  };
  return count_isometries(F, n, dot, gram, /*check_diagonal=*/false, /*leaf_det1=*/false,
                          threads);
}

long long so_order_bruteforce(int n, long long q, int threads, long long budget) {
  if (n != 3) throw BadArgument("orthogonal enumeration supports n = 3");
  if (q % 2 == 0) throw EvenCharacteristic("identity-form enumeration needs odd q");
  check_budget(q, n, budget);
  SmallField F = SmallField::for_size(q);
  auto dot = [&F, n](const std::array<uint8_t, 4>& u, const std::array<uint8_t, 4>& v) {
    return euclidean_dot(F, n, u, v);
  };
  auto gram = [&F](int s, int t) { return s == t ? F.one() : F.zero(); };
  return count_isometries(F, n, dot, gram, /*check_diagonal=*/true, /*leaf_det1=*/true,
                          threads);
}

}  // namespace chv
