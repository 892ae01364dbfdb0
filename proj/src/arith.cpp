#include "legdet/arith.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "legdet/error.hpp"

namespace legdet {

namespace {

void require_odd_prime(u64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw Error(Errc::kNotPrime, std::to_string(p) + " is not an odd prime");
  }
}

bool miller_rabin_round(u64 n, u64 a, u64 d, int r) {
  u64 x = pow_mod(a % n, d, n);
  if (x == 0 || x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 reduce_mod(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  // -(a + 1) avoids overflow at INT64_MIN.
  u64 r = static_cast<u64>(-(a + 1)) % m;
  return m - 1 - r;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw Error(Errc::kZeroInput, "no inverse of 0");
  return pow_mod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kSmall) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // The first twelve primes are a deterministic base set below 3.3e24.
  for (u64 a : kSmall) {
    if (!miller_rabin_round(n, a, d, r)) return false;
  }
  return true;
}

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 n = std::max<u64>(lo, 2); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == UINT64_MAX) break;
  }
  return out;
}

int jacobi(i64 a_signed, u64 n) {
  if (n == 0 || n % 2 == 0) {
    throw Error(Errc::kInvalidArgument, "Jacobi symbol needs odd n > 0");
  }
  u64 a = reduce_mod(a_signed, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      u64 r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int legendre(i64 a, u64 p) {
  require_odd_prime(p);
  return jacobi(a, p);
}

u64 primitive_root(u64 p) {
  require_odd_prime(p);
  const auto factors = distinct_prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool generator = true;
    for (u64 q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  return p - 1;  // p = 3
}

u64 sqrt_mod(i64 a_signed, u64 p) {
  require_odd_prime(p);
  const u64 a = reduce_mod(a_signed, p);
  if (a == 0) throw Error(Errc::kZeroInput, "p divides the radicand");
  if (jacobi(static_cast<i64>(a), p) != 1) {
    throw Error(Errc::kNonResidue,
                std::to_string(a) + " is a non-residue mod " + std::to_string(p));
  }

  u64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (jacobi(static_cast<i64>(z), p) != -1) ++z;

  u64 m = static_cast<u64>(s);
  u64 c = pow_mod(z, q, p);
  u64 t = pow_mod(a, q, p);
  u64 r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return std::min(r, p - r);
}

int zolotarev_sign(i64 a, i64 b, u64 p) {
  require_odd_prime(p);
  const u64 ar = reduce_mod(a, p);
  const u64 br = reduce_mod(b, p);
  if (ar == 0 || br == 0) {
    throw Error(Errc::kZeroInput, "p divides a*b");
  }
  const u64 k = mul_mod(ar, inv_mod(br, p), p);
  std::vector<bool> seen(p, false);
  u64 cycles = 0;
  for (u64 start = 0; start < p; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (u64 j = start; !seen[j]; j = mul_mod(j, k, p)) seen[j] = true;
  }
  // A permutation of N points with c cycles has parity N - c.
  return (p - cycles) % 2 == 0 ? 1 : -1;
}

PrimeContext::PrimeContext(u64 p) : p_(p) {
  require_odd_prime(p);
  if (p > kMaxPrime) {
    throw Error(Errc::kSizeCap, "index tables limited to p <= " +
                                    std::to_string(kMaxPrime));
  }
  xi_ = legdet::primitive_root(p);
  index_.assign(p, 0);
  powers_.assign(p - 1, 0);
  quadratic_.assign(p, 0);
  u64 x = 1;
  for (u64 t = 0; t + 1 < p; ++t) {
    powers_[t] = static_cast<std::uint32_t>(x);
    index_[x] = static_cast<std::uint32_t>(t);
    quadratic_[x] = (t % 2 == 0) ? 1 : -1;
    x = x * xi_ % p;
  }
}

u64 PrimeContext::index(i64 j) const {
  const u64 r = reduce(j);
  if (r == 0) throw Error(Errc::kZeroInput, "index of 0 is undefined");
  return index_[r];
}

}  // namespace legdet
