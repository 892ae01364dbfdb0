#pragma once

// Representations p = x^2 + m y^2 with fixed sign conventions, fundamental
// units of Q(sqrt p), and the unit powers encoded by Chapman's determinants.

#include <optional>
#include <string_view>

#include "legdet/arith.hpp"
#include "legdet/bigmat.hpp"

namespace legdet {

enum class Normalization {
  kX1Mod4,          // x = 1 mod 4 (m = 2 or 4)
  kX1Mod3,          // x = 1 mod 3 (m = 3)
  kXResidueMod7,    // (x|7) = 1 (m = 7)
  kXEqTwoSymbol,    // x = (2|p) mod 4 (m = 4)
};

std::string_view to_string(Normalization rule);

struct QuadraticRep {
  u64 p = 0;
  int m = 0;
  i64 x = 0;
  i64 y = 0;  // y >= 0
  Normalization rule = Normalization::kX1Mod4;
};

/// Cornacchia descent from a square root of -m mod p, cross-checked against
/// exhaustive search for p < 100. Throws kNoRepresentation when p is outside
/// the class (m=4: 1 mod 4; m=2: 1 mod 8; m=3: 1 mod 3; m=7: 1, 9, 25 mod 28)
/// and kInvalidArgument for a rule that does not apply to m.
QuadraticRep represent(u64 p, int m, Normalization rule);

/// Exhaustive search over 0 <= y <= sqrt(p/m); nullopt if no representation.
std::optional<QuadraticRep> represent_by_search(u64 p, int m, Normalization rule);

// (two_a + two_b sqrt p) / 2, an element of the maximal order of Q(sqrt p)
// for p = 1 mod 4.
struct QuadraticInteger {
  BigInt two_a;
  BigInt two_b;

  /// (2a)^2 - p (2b)^2, i.e. four times the norm.
  BigInt norm4(u64 p) const { return two_a * two_a - BigInt(static_cast<unsigned long>(p)) * two_b * two_b; }
  bool operator==(const QuadraticInteger&) const = default;
};

QuadraticInteger multiply(const QuadraticInteger& u, const QuadraticInteger& v, u64 p);

/// Least unit > 1 of Q(sqrt p), p = 1 mod 4 prime, from the continued
/// fraction of (sqrt(p) - 1) / 2.
QuadraticInteger fundamental_unit(u64 p);

struct UnitPower {
  u64 p = 0;
  BigInt two_a;
  BigInt two_b;
  u64 h = 0;
  int norm = 0;
};

/// Recovers a + b sqrt p = eps^h from the determinants C1, C2.
/// Throws kNotAUnit on a non-integral quotient or norm != +-1, and
/// kNotAPower when no h <= max_exponent matches.
UnitPower recover_chapman_unit(u64 p, const BigInt& c1, const BigInt& c2,
                               u64 max_exponent = 1'000'000);

/// Predicted value of C3 = det[(j-i | p)], 1 <= i,j <= (p+1)/2. For p = 1
/// mod 4 this is -a' where a' + b' sqrt p = eps^((2 - (2|p)) h).
BigInt evil_value(const PrimeContext& ctx);
BigInt evil_value(const UnitPower& unit);

}  // namespace legdet
