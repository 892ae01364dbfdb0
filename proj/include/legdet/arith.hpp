#pragma once

// Word-size modular arithmetic: primality, quadratic characters, primitive
// roots, square roots and multiplication-permutation signs.

#include <cstdint>
#include <vector>

namespace legdet {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Least nonnegative residue of a modulo m (m > 0).
u64 reduce_mod(i64 a, u64 m);

/// Inverse of a modulo the prime p; a must be coprime to p.
u64 inv_mod(u64 a, u64 p);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Distinct prime factors of n by trial division, ascending.
std::vector<u64> distinct_prime_factors(u64 n);

/// All primes in [lo, hi], ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// Jacobi symbol (a|n) for odd n > 0.
int jacobi(i64 a, u64 n);

/// Legendre symbol (a|p). Throws kNotPrime unless p is an odd prime.
int legendre(i64 a, u64 p);

/// Least g >= 2 of multiplicative order p - 1.
u64 primitive_root(u64 p);

/// Smaller of the two square roots of a modulo p (Tonelli-Shanks).
/// Throws kZeroInput if p | a and kNonResidue if a is a non-residue.
u64 sqrt_mod(i64 a, u64 p);

/// Sign of the permutation j -> j*a/b of {0, ..., p-1}, by cycle count.
int zolotarev_sign(i64 a, i64 b, u64 p);

// An odd prime together with its least primitive root and the discrete
// logarithm tables derived from it. Immutable after construction.
class PrimeContext {
 public:
  static constexpr u64 kMaxPrime = 10'000'019;

  explicit PrimeContext(u64 p);

  u64 p() const { return p_; }
  u64 half() const { return (p_ - 1) / 2; }
  u64 primitive_root() const { return xi_; }

  /// ind(j) with xi^ind(j) = j, for j not divisible by p.
  u64 index(i64 j) const;

  /// xi^t mod p.
  u64 power(u64 t) const { return powers_[t % (p_ - 1)]; }

  /// Table-driven Legendre symbol.
  int chi2(i64 a) const { return quadratic_[reduce_mod(a, p_)]; }

  u64 reduce(i64 a) const { return reduce_mod(a, p_); }

 private:
  u64 p_;
  u64 xi_;
  std::vector<std::uint32_t> index_;
  std::vector<std::uint32_t> powers_;
  std::vector<std::int8_t> quadratic_;
};

}  // namespace legdet
