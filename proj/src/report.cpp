#include "legdet/report.hpp"

#include <array>
#include <cstdio>
#include <utility>

namespace legdet {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 17> kTheoremNames{{
    {TheoremId::kCarlitz, "carlitz"},
    {TheoremId::kChapmanC1C2, "chapman-c1c2"},
    {TheoremId::kChapmanC3, "chapman-c3"},
    {TheoremId::kTriangular, "thm-triangular"},
    {TheoremId::kCdFullDegenerate, "thm-cdfull-degenerate"},
    {TheoremId::kCdFullSupersingular, "thm-cdfull-ss"},
    {TheoremId::kC1pDegenerate, "thm-c1p-degenerate"},
    {TheoremId::kC1p, "thm-c1p"},
    {TheoremId::kScaling, "scaling"},
    {TheoremId::kNonresidueZero, "nonresidue-zero"},
    {TheoremId::kKrachunZero, "krachun-zero"},
    {TheoremId::kS1p, "s1p"},
    {TheoremId::kCorSquares, "cor-squares"},
    {TheoremId::kBiquadraticW, "thm-w"},
    {TheoremId::kSexticY, "thm-y"},
    {TheoremId::kEigenProduct, "eigen-product"},
    {TheoremId::kSymfuncCongruence, "lemma-symfunc"},
}};

constexpr std::array<TheoremId, 17> kAll = [] {
  std::array<TheoremId, 17> out{};
  for (std::size_t i = 0; i < kTheoremNames.size(); ++i) out[i] = kTheoremNames[i].first;
  return out;
}();

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& [t, name] : kTheoremNames) {
    if (t == id) return name;
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  for (const auto& [t, n] : kTheoremNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

std::span<const TheoremId> all_theorems() { return kAll; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kSkipped: return "skipped";
  }
  return "?";
}

std::string_view to_string(SkipReason r) {
  switch (r) {
    case SkipReason::kNone: return "";
    case SkipReason::kCongruence: return "congruence";
    case SkipReason::kSize: return "size";
    case SkipReason::kParameters: return "parameters";
    case SkipReason::kPremise: return "premise";
  }
  return "?";
}

std::string format_witness(const WitnessValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.12g", v);
          return buf;
        } else {
          return v.get_str();
        }
      },
      value);
}

const WitnessValue* VerificationReport::find(std::string_view name) const {
  for (const auto& w : computed) {
    if (w.name == name) return &w.value;
  }
  return nullptr;
}

void VerificationReport::fail(std::string why) {
  if (verdict != Verdict::kFail) detail = std::move(why);
  verdict = Verdict::kFail;
}

void VerificationReport::skip(SkipReason reason, std::string why) {
  verdict = Verdict::kSkipped;
  skip_reason = reason;
  detail = std::move(why);
}

}  // namespace legdet
