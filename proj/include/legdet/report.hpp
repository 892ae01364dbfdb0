#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "legdet/arith.hpp"
#include "legdet/bigmat.hpp"
#include "legdet/curve_params.hpp"

namespace legdet {

enum class TheoremId {
  kCarlitz,
  kChapmanC1C2,
  kChapmanC3,
  kTriangular,
  kCdFullDegenerate,
  kCdFullSupersingular,
  kC1pDegenerate,
  kC1p,
  kScaling,
  kNonresidueZero,
  kKrachunZero,
  kS1p,
  kCorSquares,
  kBiquadraticW,
  kSexticY,
  kEigenProduct,
  kSymfuncCongruence,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);
std::span<const TheoremId> all_theorems();

enum class Verdict { kPass, kFail, kSkipped };

enum class SkipReason {
  kNone,
  kCongruence,  // p is outside the residue class the statement covers
  kSize,        // above the configured size cap
  kParameters,  // (c, d) outside the statement's hypotheses
  kPremise,     // hypothesis depending on p is false (e.g. p does not divide A)
};

std::string_view to_string(Verdict v);
std::string_view to_string(SkipReason r);

using WitnessValue = std::variant<BigInt, BigRational, double>;

struct Witness {
  std::string name;
  WitnessValue value;
};

std::string format_witness(const WitnessValue& value);

struct VerificationReport {
  TheoremId theorem = TheoremId::kCarlitz;
  u64 p = 0;
  std::optional<CurveParams> params;
  std::vector<Witness> computed;
  Verdict verdict = Verdict::kPass;
  SkipReason skip_reason = SkipReason::kNone;
  std::string detail;
  std::chrono::duration<double> elapsed{0};

  void add(std::string name, WitnessValue value) {
    computed.push_back({std::move(name), std::move(value)});
  }
  const WitnessValue* find(std::string_view name) const;

  /// Marks the report failed; the first failure's detail is kept.
  void fail(std::string why);
  void skip(SkipReason reason, std::string why);

  bool passed() const { return verdict == Verdict::kPass; }
  bool failed() const { return verdict == Verdict::kFail; }
  bool skipped() const { return verdict == Verdict::kSkipped; }
};

}  // namespace legdet
