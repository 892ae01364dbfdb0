#include "legdet/ecount.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "legdet/bigmat.hpp"
#include "legdet/error.hpp"
#include "legdet/legmat.hpp"
#include "oracles.hpp"

namespace legdet {
namespace {

TEST(CountPoints, Examples) {
  const auto e = count_points({6, 1}, PrimeContext(7));
  EXPECT_EQ(e.trace, 0);
  EXPECT_TRUE(e.is_supersingular);
  EXPECT_FALSE(e.is_singular_curve);

  const auto flat = count_points({0, 0}, PrimeContext(5));
  EXPECT_EQ(flat.npoints, 6);
  EXPECT_EQ(flat.trace, 0);
  EXPECT_TRUE(flat.is_singular_curve);
  EXPECT_FALSE(flat.is_supersingular);
}

// (3,2) at p = 41 rescales to (g, 1) with f^2 = 2, g = 3/f; its trace is
// 2 * 5 * (f|41) where 41 = 5^2 + 4 * 2^2.
TEST(CountPoints, ScaledFamilyAt41) {
  const u64 p = 41;
  const u64 f = sqrt_mod(2, p);
  const u64 g = mul_mod(3, inv_mod(f, p), p);
  const auto e = count_points({static_cast<i64>(g), 1}, PrimeContext(p));
  EXPECT_EQ(e.trace, 2 * 5 * legendre(static_cast<i64>(f), p));
}

TEST(CountPoints, MatchesNaiveCountAndHasse) {
  for (u64 p : primes_in_range(3, 400)) {
    const PrimeContext ctx(p);
    for (i64 c = -6; c <= 6; ++c) {
      for (i64 d = -6; d <= 6; ++d) {
        const auto e = count_points({c, d}, ctx);
        ASSERT_EQ(e.npoints, oracle::point_count(c, d, p)) << c << "," << d << " p=" << p;
        ASSERT_EQ(e.npoints, static_cast<i64>(p) + 1 - e.trace);
        if (!e.is_singular_curve) {
          ASSERT_LE(static_cast<double>(e.trace * e.trace), 4.0 * static_cast<double>(p));
        }
      }
    }
  }
}

TEST(CountPoints, HasseBoundUpTo10000) {
  for (u64 p : primes_in_range(401, 10000)) {
    const PrimeContext ctx(p);
    for (i64 c = -6; c <= 6; c += 3) {
      for (i64 d = -6; d <= 6; d += 4) {
        const auto e = count_points({c, d}, ctx);
        if (!e.is_singular_curve) ASSERT_LE(e.trace * e.trace, 4 * static_cast<i64>(p)) << p;
      }
    }
  }
}

TEST(Trinomial, SupersingularExamples) {
  EXPECT_TRUE(is_supersingular_via_trinomial({6, 1}, PrimeContext(11)));
  EXPECT_FALSE(is_supersingular_via_trinomial({6, 1}, PrimeContext(13)));
  try {
    is_supersingular_via_trinomial({2, 1}, PrimeContext(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSingularCurve);
  }
}

TEST(Trinomial, CriterionAgreesWithTrace) {
  for (u64 p : primes_in_range(5, 1000)) {
    const PrimeContext ctx(p);
    for (i64 c = -6; c <= 6; ++c) {
      for (i64 d = -6; d <= 6; ++d) {
        const CurveParams cd{c, d};
        if (!cd.is_elliptic_mod(p)) continue;
        ASSERT_EQ(is_supersingular_via_trinomial(cd, ctx), count_points(cd, ctx).is_supersingular)
            << c << "," << d << " p=" << p;
      }
    }
  }
}

// (0, (1|p), ..., (p-1|p)) is an eigenvector of [c,d]_p with eigenvalue -a.
TEST(Eigenvector, FullMatrixHasTraceEigenvalue) {
  for (u64 p : primes_in_range(3, 60)) {
    const PrimeContext ctx(p);
    std::vector<BigInt> v(p);
    for (u64 j = 0; j < p; ++j) v[j] = legendre(static_cast<i64>(j), p);
    for (i64 c = -4; c <= 4; ++c) {
      for (i64 d = -4; d <= 4; ++d) {
        if (d == 0) continue;
        const IntMatrix m = build(MatrixKind::sun_cd_full(c, d), ctx);
        const auto mv = m.multiply(v);
        const i64 mu = -count_points({c, d}, ctx).trace;
        for (u64 j = 0; j < p; ++j) ASSERT_EQ(mv[j], mu * v[j]) << c << "," << d << " p=" << p;
      }
    }
  }
}

std::vector<u64> primes_of(const std::vector<SupersingularPrime>& hits) {
  std::vector<u64> out;
  for (const auto& h : hits) out.push_back(h.p);
  return out;
}

TEST(Search, CmFamilyUpTo50) {
  const auto hits = search_supersingular({6, 1}, 5, 50);
  EXPECT_EQ(primes_of(hits), (std::vector<u64>{7, 11, 19, 23, 31, 43, 47}));
  for (const auto& h : hits) EXPECT_EQ(h.certification, Certification::kCertified);
}

TEST(Search, MatchesTraceScan) {
  for (CurveParams cd : {CurveParams{1, 1}, CurveParams{3, 2}, CurveParams{-1, 3}}) {
    std::vector<u64> want;
    for (u64 p : primes_in_range(5, 300)) {
      if (!cd.is_elliptic_mod(p)) continue;
      if (oracle::point_count(cd.c, cd.d, p) == static_cast<i64>(p) + 1) want.push_back(p);
    }
    SearchOptions opt;
    opt.workers = 3;
    opt.certify_max_p = 100;
    const auto hits = search_supersingular(cd, 5, 300, opt);
    EXPECT_EQ(primes_of(hits), want);
    for (const auto& h : hits) {
      EXPECT_EQ(h.certification, h.p <= 100 ? Certification::kCertified : Certification::kNotAttempted);
    }
  }
  EXPECT_FALSE(search_supersingular({1, 1}, 5, 30).empty());
}

TEST(Search, Rejections) {
  auto code = [](CurveParams cd, u64 lo, u64 hi) {
    try {
      search_supersingular(cd, lo, hi);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kInvalidArgument;
  };
  EXPECT_EQ(code({2, 1}, 5, 50), Errc::kDegenerateFamily);
  EXPECT_EQ(code({1, 0}, 5, 50), Errc::kDegenerateFamily);
  try {
    search_supersingular({1, 1}, 3, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidArgument);
  }
}

}  // namespace
}  // namespace legdet
