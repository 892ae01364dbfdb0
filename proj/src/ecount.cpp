#include "legdet/ecount.hpp"

#include <optional>
#include <string>

#include "legdet/bigmat.hpp"
#include "legdet/charsum.hpp"
#include "legdet/error.hpp"
#include "legdet/legmat.hpp"
#include "legdet/parallel.hpp"

namespace legdet {

CurveCount count_points(const CurveParams& params, const PrimeContext& ctx) {
  const u64 p = ctx.p();
  const u64 c = ctx.reduce(params.c);
  const u64 d = ctx.reduce(params.d);
  i64 sum = 0;
  for (u64 x = 0; x < p; ++x) {
    const u64 inner = (mul_mod(mul_mod(d, x, p), x, p) + mul_mod(c, x, p) + 1) % p;
    sum += ctx.chi2(static_cast<i64>(mul_mod(x, inner, p)));
  }
  CurveCount out;
  out.p = p;
  out.npoints = static_cast<i64>(p) + 1 + sum;
  out.trace = -sum;
  out.is_singular_curve = !params.is_elliptic_mod(p);
  out.is_supersingular = !out.is_singular_curve && out.trace == 0;
  return out;
}

bool is_supersingular_via_trinomial(const CurveParams& params, const PrimeContext& ctx) {
  if (!params.is_elliptic_mod(ctx.p())) {
    throw Error(Errc::kSingularCurve, "y^2 = x(" + std::to_string(params.d) + "x^2 + " +
                                          std::to_string(params.c) + "x + 1) is singular mod " +
                                          std::to_string(ctx.p()));
  }
  return trinomial_coeff_mod(params.c, params.d, ctx) == 0;
}

std::vector<SupersingularPrime> search_supersingular(const CurveParams& params, u64 pmin,
                                                     u64 pmax, const SearchOptions& options) {
  if (params.d_vanishes() || params.discriminant_vanishes()) {
    throw Error(Errc::kDegenerateFamily, "need d != 0 and c^2 != 4d");
  }
  if (pmin <= 3 || pmin > pmax) {
    throw Error(Errc::kInvalidArgument, "need 3 < pmin <= pmax");
  }
  const auto primes = primes_in_range(pmin, pmax);
  std::vector<std::optional<SupersingularPrime>> found(primes.size());
  parallel_for(primes.size(), options.workers, [&](std::size_t i) {
    const u64 p = primes[i];
    if (!params.is_elliptic_mod(p)) return;
    const PrimeContext ctx(p);
    if (count_points(params, ctx).trace != 0) return;
    SupersingularPrime hit{p, Certification::kNotAttempted};
    if (p <= options.certify_max_p) {
      const auto m = build(MatrixKind::sun_cd_full(params.c, params.d), ctx, p);
      hit.certification = sgn(det_exact(m)) == 0 ? Certification::kCertified : Certification::kFailed;
    }
    found[i] = hit;
  });
  std::vector<SupersingularPrime> out;
  for (const auto& f : found) {
    if (f) out.push_back(*f);
  }
  return out;
}

}  // namespace legdet
