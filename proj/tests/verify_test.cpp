#include "legdet/verify.hpp"

#include <gtest/gtest.h>

#include <set>

#include "legdet/legmat.hpp"
#include "oracles.hpp"

namespace legdet {
namespace {

BigInt big_witness(const VerificationReport& r, std::string_view name) {
  const WitnessValue* w = r.find(name);
  if (w == nullptr) {
    ADD_FAILURE() << "missing witness " << name;
    return 0;
  }
  if (const auto* b = std::get_if<BigInt>(w)) return *b;
  ADD_FAILURE() << name << " is not an integer witness";
  return 0;
}

VerificationReport check(TheoremId id, u64 p, std::optional<CurveParams> cd = std::nullopt) {
  return verify(id, PrimeContext(p), cd ? cd : default_params(id));
}

TEST(Verify, TriangularAt19) {
  const auto r = check(TheoremId::kTriangular, 19);
  ASSERT_TRUE(r.passed()) << r.detail;
  EXPECT_EQ(big_witness(r, "T"), 928);
  EXPECT_FALSE(r.params.has_value());
}

// T witnesses agree with an independent rational elimination.
TEST(Verify, TriangularWitnessMatchesOracle) {
  for (u64 p : primes_in_range(5, 60)) {
    const auto r = check(TheoremId::kTriangular, p);
    ASSERT_TRUE(r.passed()) << p << ": " << r.detail;
    const i64 h = static_cast<i64>((p - 1) / 2);
    const BigInt want = oracle::rational_det(
        oracle::legendre_grid(1, h, p, [](i64 i, i64 j) { return i * (i + 1) + j * (j + 1); }));
    EXPECT_EQ(big_witness(r, "T"), want) << p;
  }
}

TEST(Verify, CorSquaresAt41) {
  const auto r = check(TheoremId::kCorSquares, 41, CurveParams{3, 2});
  ASSERT_TRUE(r.passed()) << r.detail;
  EXPECT_EQ(big_witness(r, "x"), 5);
  EXPECT_EQ(big_witness(r, "v"), BigInt("17951494350240"));
  const BigInt det = big_witness(r, "det_3_2");
  EXPECT_EQ(det, 5 * BigInt("17951494350240") * BigInt("17951494350240"));
  EXPECT_EQ(det, det_exact(build(MatrixKind::sun_cd(3, 2), PrimeContext(41))));
}

TEST(Verify, CorSquaresAllFamilies) {
  // 113 = 1 mod 4, 1 mod 8, 113 = 1 mod 28 -> families m = 4, 2, 7.
  const auto r = verify(TheoremId::kCorSquares, PrimeContext(113));
  ASSERT_TRUE(r.passed()) << r.detail;
  EXPECT_NE(r.find("v"), nullptr);
  EXPECT_NE(r.find("w"), nullptr);
  EXPECT_NE(r.find("z7"), nullptr);
  EXPECT_EQ(r.find("z3"), nullptr);
  EXPECT_EQ(big_witness(r, "det_4_2"), big_witness(r, "det_8_8"));
}

TEST(Verify, WAt17) {
  const auto r = check(TheoremId::kBiquadraticW, 17);
  ASSERT_TRUE(r.passed()) << r.detail;
  EXPECT_EQ(big_witness(r, "W"), -3);
  EXPECT_EQ(big_witness(r, "x1"), 1);
  EXPECT_EQ(big_witness(r, "x2"), -3);
}

TEST(Verify, YAt13UsesThirdDelta) {
  const auto r = check(TheoremId::kSexticY, 13);
  ASSERT_TRUE(r.passed()) << r.detail;
  EXPECT_EQ(big_witness(r, "Y"), 1);
  const auto* delta = std::get_if<BigRational>(r.find("delta"));
  ASSERT_NE(delta, nullptr);
  EXPECT_EQ(*delta, BigRational(1, 3));
}

TEST(Verify, YCoversBothDeltaBranches) {
  std::set<std::string> seen;
  for (u64 p : primes_in_range(13, 997)) {
    if (p % 12 != 1) continue;
    const auto r = check(TheoremId::kSexticY, p);
    ASSERT_TRUE(r.passed()) << p << ": " << r.detail;
    const auto* delta = std::get_if<BigRational>(r.find("delta"));
    ASSERT_NE(delta, nullptr);
    const i64 x4 = static_cast<i64>(big_witness(r, "x4").get_si());
    EXPECT_EQ(*delta, x4 % 3 == 0 ? BigRational(1, 3) : BigRational(-1)) << p;
    seen.insert(delta->get_str());
  }
  EXPECT_EQ(seen, (std::set<std::string>{"1/3", "-1"}));
}

TEST(Verify, SkipReasons) {
  auto reason = [](TheoremId id, u64 p, std::optional<CurveParams> cd) {
    const auto r = verify(id, PrimeContext(p), cd);
    EXPECT_TRUE(r.skipped()) << to_string(id) << " p=" << p << ": " << to_string(r.verdict) << " " << r.detail;
    return r.skip_reason;
  };
  EXPECT_EQ(reason(TheoremId::kBiquadraticW, 7, std::nullopt), SkipReason::kCongruence);
  EXPECT_EQ(reason(TheoremId::kSexticY, 11, std::nullopt), SkipReason::kCongruence);
  EXPECT_EQ(reason(TheoremId::kKrachunZero, 5, std::nullopt), SkipReason::kCongruence);
  EXPECT_EQ(reason(TheoremId::kCarlitz, 601, std::nullopt), SkipReason::kSize);
  EXPECT_EQ(reason(TheoremId::kCdFullDegenerate, 7, CurveParams{1, 1}), SkipReason::kParameters);
  EXPECT_EQ(reason(TheoremId::kCdFullSupersingular, 7, CurveParams{2, 1}), SkipReason::kParameters);
  EXPECT_EQ(reason(TheoremId::kC1p, 7, CurveParams{1, 2}), SkipReason::kParameters);
  EXPECT_EQ(reason(TheoremId::kC1p, 7, CurveParams{2, 1}), SkipReason::kPremise);
  EXPECT_EQ(reason(TheoremId::kChapmanC1C2, 3, std::nullopt), SkipReason::kPremise);
  EXPECT_EQ(reason(TheoremId::kCorSquares, 41, CurveParams{1, 1}), SkipReason::kParameters);
  EXPECT_EQ(reason(TheoremId::kEigenProduct, 83, CurveParams{1, 1}), SkipReason::kSize);
  // (1,1) at 13 has trace 2 != 0 mod 13.
  EXPECT_EQ(reason(TheoremId::kCdFullSupersingular, 13, CurveParams{1, 1}), SkipReason::kPremise);
}

TEST(Verify, SizeCapsAreConfigurable) {
  VerifyOptions opt;
  opt.caps.full_max_p = 11;
  EXPECT_EQ(verify(TheoremId::kCarlitz, PrimeContext(13), std::nullopt, opt).skip_reason, SkipReason::kSize);
  EXPECT_TRUE(verify(TheoremId::kCarlitz, PrimeContext(11), std::nullopt, opt).passed());
  EXPECT_TRUE(verify(TheoremId::kTriangular, PrimeContext(13), std::nullopt, opt).passed());
}

TEST(Verify, WitnessFormattingRoundTrips) {
  const auto r = check(TheoremId::kCorSquares, 41, CurveParams{3, 2});
  for (const auto& w : r.computed) {
    const std::string s = format_witness(w.value);
    if (const auto* b = std::get_if<BigInt>(&w.value)) EXPECT_EQ(BigInt(s), *b) << w.name;
    if (const auto* q = std::get_if<BigRational>(&w.value)) EXPECT_EQ(BigRational(s), *q) << w.name;
  }
  EXPECT_EQ(format_witness(BigRational(-1, 3)), "-1/3");
  EXPECT_EQ(format_witness(BigInt("-123456789012345678901234567890")), "-123456789012345678901234567890");
}

// For p = 3 mod 4 the computed C2 is +2^((p-1)/2), the opposite sign of
// the closed form the check encodes, so chapman-c1c2 fails there.
TEST(Verify, ChapmanC2SignForP3Mod4) {
  for (u64 p : primes_in_range(5, 150)) {
    const auto r = check(TheoremId::kChapmanC1C2, p);
    if (p % 4 == 1) {
      EXPECT_TRUE(r.passed()) << p << ": " << r.detail;
      continue;
    }
    const i64 h = static_cast<i64>((p - 1) / 2);
    const BigInt c2 = oracle::rational_det(oracle::legendre_grid(1, h + 1, p, [](i64 i, i64 j) { return i + j - 1; }));
    BigInt pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(h));
    EXPECT_EQ(c2, pow2) << p;
    EXPECT_EQ(big_witness(r, "C2"), c2) << p;
    EXPECT_EQ(big_witness(r, "C1"), 0) << p;
    EXPECT_TRUE(r.failed()) << p;
    EXPECT_EQ(r.detail, "C2 = " + pow2.get_str() + ", expected -" + pow2.get_str());
  }
}

// Nothing else fails anywhere in range; full-size checks are confined to
// p <= 150 to bound the runtime.
TEST(Verify, NoFailuresUpTo200) {
  SweepOptions opt;
  opt.caps.full_max_p = 150;
  for (TheoremId id : all_theorems()) {
    if (id == TheoremId::kChapmanC1C2) continue;  // see ChapmanC2SignForP3Mod4
    const auto res = sweep(id, 3, 200, default_params(id), opt);
    EXPECT_EQ(res.summary.failed, 0u) << to_string(id);
    for (const auto& r : res.reports) {
      if (r.failed()) ADD_FAILURE() << to_string(id) << " p=" << r.p << ": " << r.detail;
    }
    EXPECT_EQ(res.summary.passed + res.summary.failed + res.summary.skipped, res.reports.size());
  }
}

TEST(Verify, CorSquaresEachFamilyUpTo400) {
  for (CurveParams cd : {CurveParams{3, 2}, CurveParams{4, 2}, CurveParams{3, 3}, CurveParams{21, 112}}) {
    const auto res = sweep(TheoremId::kCorSquares, 5, 400, cd);
    EXPECT_EQ(res.summary.failed, 0u) << cd.c << "," << cd.d;
    EXPECT_GT(res.summary.passed, 0u);
  }
}

TEST(Sweep, KrachunAndCarlitz) {
  const auto k = sweep(TheoremId::kKrachunZero, 5, 100);
  EXPECT_EQ(k.summary.failed, 0u);
  std::size_t want_pass = 0;
  for (u64 p : primes_in_range(5, 100)) want_pass += p % 4 == 3 ? 1 : 0;
  EXPECT_EQ(k.summary.passed, want_pass);

  const auto c = sweep(TheoremId::kCarlitz, 3, 50);
  EXPECT_EQ(c.summary.failed, 0u);
  ASSERT_EQ(c.reports.size(), primes_in_range(3, 50).size());
  for (std::size_t i = 1; i < c.reports.size(); ++i) EXPECT_LT(c.reports[i - 1].p, c.reports[i].p);
  EXPECT_EQ(sweep(TheoremId::kCarlitz, 1, 10).reports.front().p, 3u);
}

TEST(Sweep, CdFullSupersingularMatchesTraceScan) {
  const auto res = sweep(TheoremId::kCdFullSupersingular, 5, 50, CurveParams{1, 1});
  EXPECT_EQ(res.summary.failed, 0u);
  for (const auto& r : res.reports) {
    const bool ss = oracle::point_count(1, 1, r.p) == static_cast<i64>(r.p) + 1;
    EXPECT_EQ(r.passed(), ss) << r.p;
    if (!ss) EXPECT_EQ(r.skip_reason, SkipReason::kPremise) << r.p;
  }
}

TEST(Sweep, WorkersDoNotChangeResults) {
  SweepOptions one, many;
  many.workers = 4;
  const auto a = sweep(TheoremId::kS1p, 3, 150, std::nullopt, one);
  const auto b = sweep(TheoremId::kS1p, 3, 150, std::nullopt, many);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    EXPECT_EQ(a.reports[i].p, b.reports[i].p);
    EXPECT_EQ(a.reports[i].verdict, b.reports[i].verdict);
    EXPECT_EQ(a.reports[i].computed.size(), b.reports[i].computed.size());
  }
}

TEST(TheoremNames, RoundTrip) {
  for (TheoremId id : all_theorems()) EXPECT_EQ(parse_theorem_id(to_string(id)), id);
  EXPECT_FALSE(parse_theorem_id("thm-nope").has_value());
}

}  // namespace
}  // namespace legdet
