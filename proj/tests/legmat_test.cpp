#include "legdet/legmat.hpp"

#include <gtest/gtest.h>

#include "legdet/error.hpp"
#include "oracles.hpp"

namespace legdet {
namespace {

using oracle::legendre_grid;

IntMatrix from_grid(const oracle::Grid& g) {
  IntMatrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = g[i][j];
  }
  return m;
}

BigInt det_of(const MatrixKind& kind, u64 p) { return det_exact(build(kind, PrimeContext(p))); }
BigInt det_of(MatrixTag tag, u64 p) { return det_of(MatrixKind::simple(tag), p); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no legdet::Error thrown";
  return Errc::kInvalidArgument;
}

TEST(Build, MatchesDefinitionEntryByEntry) {
  for (u64 p : primes_in_range(3, 60)) {
    const PrimeContext ctx(p);
    const i64 h = static_cast<i64>((p - 1) / 2);
    const i64 q = static_cast<i64>(p);
    EXPECT_EQ(build(MatrixKind::simple(MatrixTag::kCarlitz), ctx),
              from_grid(legendre_grid(1, q - 1, p, [](i64 i, i64 j) { return i - j; })));
    EXPECT_EQ(build(MatrixKind::simple(MatrixTag::kChapmanC1), ctx),
              from_grid(legendre_grid(1, h, p, [](i64 i, i64 j) { return i + j - 1; })));
    EXPECT_EQ(build(MatrixKind::simple(MatrixTag::kChapmanC2), ctx),
              from_grid(legendre_grid(1, h + 1, p, [](i64 i, i64 j) { return i + j - 1; })));
    EXPECT_EQ(build(MatrixKind::simple(MatrixTag::kChapmanC3), ctx),
              from_grid(legendre_grid(1, h + 1, p, [](i64 i, i64 j) { return j - i; })));
    EXPECT_EQ(build(MatrixKind::simple(MatrixTag::kSunS1), ctx),
              from_grid(legendre_grid(1, h, p, [](i64 i, i64 j) { return i * i + j * j; })));
    EXPECT_EQ(build(MatrixKind::simple(MatrixTag::kSunTp), ctx),
              from_grid(legendre_grid(1, h, p, [](i64 i, i64 j) { return i * (i + 1) + j * (j + 1); })));
    for (i64 c : {-3, 0, 6}) {
      for (i64 d : {-2, 1, 2}) {
        auto form = [c, d](i64 i, i64 j) { return i * i + c * i * j + d * j * j; };
        EXPECT_EQ(build(MatrixKind::sun_cd(c, d), ctx), from_grid(legendre_grid(1, q - 1, p, form)));
        EXPECT_EQ(build(MatrixKind::sun_cd_full(c, d), ctx), from_grid(legendre_grid(0, q - 1, p, form)));
      }
    }
  }
}

TEST(Build, GoldenDeterminants) {
  EXPECT_EQ(det_of(MatrixTag::kSunTp, 5), -2);
  EXPECT_EQ(det_of(MatrixTag::kSunTp, 11), 4);
  EXPECT_EQ(det_of(MatrixTag::kSunTp, 13), -8);
  EXPECT_EQ(det_of(MatrixTag::kSunTp, 19), 928);
  EXPECT_EQ(det_of(MatrixTag::kSunTp, 23), -6656);
  EXPECT_EQ(det_of(MatrixKind::sun_cd_full(6, 1), 7), 0);
  EXPECT_EQ(det_of(MatrixTag::kCarlitz, 5), 5);
  EXPECT_EQ(det_of(MatrixTag::kBiquadraticW, 13), 4);
  EXPECT_EQ(det_of(MatrixTag::kBiquadraticW, 17), -3);
  EXPECT_EQ(det_of(MatrixTag::kSexticY, 31), 16);
  EXPECT_EQ(det_of(MatrixTag::kSexticY, 13), 1);
  EXPECT_EQ(build(MatrixKind::simple(MatrixTag::kSunTp), PrimeContext(5)).size(), 2u);
  EXPECT_EQ(build(MatrixKind::sun_cd_full(6, 1), PrimeContext(7)).size(), 7u);
}

TEST(Residues, Examples) {
  EXPECT_EQ(quartic_residues(PrimeContext(13)), (std::vector<u64>{1, 3, 9}));
  EXPECT_EQ(quartic_residues(PrimeContext(17)), (std::vector<u64>{1, 4, 13, 16}));
  EXPECT_EQ(quartic_residues(PrimeContext(5)), (std::vector<u64>{1}));
  EXPECT_EQ(sextic_residues(PrimeContext(13)), (std::vector<u64>{1, 12}));
  EXPECT_EQ(sextic_residues(PrimeContext(31)), (std::vector<u64>{1, 2, 4, 8, 16}));
  EXPECT_EQ(sextic_residues(PrimeContext(7)), (std::vector<u64>{1}));
}

TEST(Residues, MatchBruteForcePowering) {
  for (u64 p : primes_in_range(5, 400)) {
    for (u64 k : {4ULL, 6ULL}) {
      if (p % k != 1) continue;
      std::vector<bool> hit(p, false);
      for (u64 x = 1; x < p; ++x) hit[oracle::slow_pow(x, k, p)] = true;
      std::vector<u64> want;
      for (u64 r = 1; r < p; ++r) {
        if (hit[r]) want.push_back(r);
      }
      const PrimeContext ctx(p);
      EXPECT_EQ(k == 4 ? quartic_residues(ctx) : sextic_residues(ctx), want) << p;
    }
  }
}

TEST(Build, CongruenceAndParameterErrors) {
  EXPECT_EQ(code_of([] { quartic_residues(PrimeContext(7)); }), Errc::kCongruenceMismatch);
  EXPECT_EQ(code_of([] { build(MatrixKind::simple(MatrixTag::kBiquadraticW), PrimeContext(11)); }),
            Errc::kCongruenceMismatch);
  EXPECT_EQ(code_of([] { build(MatrixKind::simple(MatrixTag::kSexticY), PrimeContext(11)); }),
            Errc::kCongruenceMismatch);
  EXPECT_EQ(code_of([] { build(MatrixKind::simple(MatrixTag::kSunCD), PrimeContext(11)); }),
            Errc::kInvalidArgument);
  EXPECT_EQ(code_of([] { build(MatrixKind::simple(MatrixTag::kCarlitz), PrimeContext(601)); }),
            Errc::kSizeCap);
  EXPECT_EQ(build(MatrixKind::simple(MatrixTag::kCarlitz), PrimeContext(601), 600).size(), 600u);
}

TEST(Build, EntriesAndSymmetry) {
  for (u64 p : primes_in_range(3, 80)) {
    const PrimeContext ctx(p);
    std::vector<MatrixKind> kinds{
        MatrixKind::simple(MatrixTag::kCarlitz),   MatrixKind::simple(MatrixTag::kChapmanC1),
        MatrixKind::simple(MatrixTag::kChapmanC2), MatrixKind::simple(MatrixTag::kChapmanC3),
        MatrixKind::simple(MatrixTag::kSunS1),     MatrixKind::simple(MatrixTag::kSunTp),
        MatrixKind::sun_cd(0, 3),                  MatrixKind::sun_cd(2, 5),
        MatrixKind::sun_cd_full(3, 2),             MatrixKind::sun_cd(3, 1),
        MatrixKind::sun_cd_full(-2, 1)};
    if (p % 4 == 1) kinds.push_back(MatrixKind::simple(MatrixTag::kBiquadraticW));
    if (p % 6 == 1) kinds.push_back(MatrixKind::simple(MatrixTag::kSexticY));
    for (const auto& kind : kinds) {
      const IntMatrix m = build(kind, ctx);
      EXPECT_EQ(m.size(), dimension(kind.tag, p));
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          ASSERT_TRUE(m(i, j) == 0 || m(i, j) == 1 || m(i, j) == -1);
        }
      }
      const bool symmetric_family =
          kind.tag == MatrixTag::kSunTp || kind.tag == MatrixTag::kSunS1 ||
          kind.tag == MatrixTag::kBiquadraticW || kind.tag == MatrixTag::kSexticY ||
          (kind.params && kind.params->d == 1);
      if (symmetric_family) EXPECT_TRUE(m.is_symmetric()) << to_string(kind.tag) << " p=" << p;
    }
  }
}

TEST(Build, ChapmanReflectionIdentity) {
  for (u64 p : primes_in_range(3, 50)) {
    const i64 h = static_cast<i64>((p - 1) / 2);
    const BigInt shifted = oracle::rational_det(legendre_grid(1, h, p, [](i64 i, i64 j) { return i + j; }));
    EXPECT_EQ(det_of(MatrixTag::kChapmanC1, p), legendre(-1, p) * shifted) << p;
  }
}

TEST(Build, NonResidueDKillsDeterminant) {
  for (u64 p : primes_in_range(3, 50)) {
    for (i64 c = -5; c <= 5; ++c) {
      for (i64 d = -5; d <= 5; ++d) {
        if (legendre(d, p) != -1) continue;
        ASSERT_EQ(det_of(MatrixKind::sun_cd(c, d), p), 0) << c << "," << d << " p=" << p;
      }
    }
  }
}

TEST(MatrixTagNames, RoundTrip) {
  for (const char* name : {"carlitz", "c1", "c2", "c3", "s1", "tp", "cd", "cdfull", "w", "y"}) {
    const auto tag = parse_matrix_tag(name);
    ASSERT_TRUE(tag.has_value()) << name;
    EXPECT_EQ(to_string(*tag), name);
  }
  EXPECT_FALSE(parse_matrix_tag("nope").has_value());
}

}  // namespace
}  // namespace legdet
