#pragma once

// Point counts on y^2 = x(d x^2 + c x + 1) over F_p, supersingularity tests
// and the supersingular-prime search.

#include <vector>

#include "legdet/arith.hpp"
#include "legdet/curve_params.hpp"

namespace legdet {

struct CurveCount {
  u64 p = 0;
  i64 npoints = 0;  // includes the point at infinity
  i64 trace = 0;    // npoints = p + 1 - trace
  bool is_supersingular = false;
  bool is_singular_curve = false;
};

/// Direct summation of 1 + (f(x)|p) over F_p. Singular curves are counted
/// and flagged, never rejected.
CurveCount count_points(const CurveParams& params, const PrimeContext& ctx);

/// p | A_{c,d}(p). Throws kSingularCurve unless the curve is elliptic mod p.
bool is_supersingular_via_trinomial(const CurveParams& params, const PrimeContext& ctx);

enum class Certification { kNotAttempted, kCertified, kFailed };

struct SupersingularPrime {
  u64 p = 0;
  Certification certification = Certification::kNotAttempted;
};

struct SearchOptions {
  unsigned workers = 1;
  u64 certify_max_p = 512;  // exact [c,d]_p determinant for p up to this
};

/// Primes in [pmin, pmax] with p not dividing d(c^2 - 4d) and zero trace,
/// ascending. Throws kDegenerateFamily for d = 0 or c^2 = 4d and
/// kInvalidArgument unless 3 < pmin <= pmax.
std::vector<SupersingularPrime> search_supersingular(const CurveParams& params, u64 pmin,
                                                     u64 pmax, const SearchOptions& options = {});

}  // namespace legdet
