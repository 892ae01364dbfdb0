#include "legdet/legmat.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "legdet/error.hpp"

namespace legdet {

namespace {

constexpr std::array<std::pair<MatrixTag, std::string_view>, 10> kTagNames{{
    {MatrixTag::kCarlitz, "carlitz"},
    {MatrixTag::kChapmanC1, "c1"},
    {MatrixTag::kChapmanC2, "c2"},
    {MatrixTag::kChapmanC3, "c3"},
    {MatrixTag::kSunS1, "s1"},
    {MatrixTag::kSunTp, "tp"},
    {MatrixTag::kSunCD, "cd"},
    {MatrixTag::kSunCDFull, "cdfull"},
    {MatrixTag::kBiquadraticW, "w"},
    {MatrixTag::kSexticY, "y"},
}};

void require_class(u64 p, u64 modulus, u64 residue, MatrixTag tag) {
  if (p % modulus != residue) {
    throw Error(Errc::kCongruenceMismatch,
                std::string(to_string(tag)) + " needs p = " + std::to_string(residue) +
                    " mod " + std::to_string(modulus) + ", got p = " + std::to_string(p));
  }
}

std::vector<u64> power_residues(const PrimeContext& ctx, u64 k) {
  const u64 count = (ctx.p() - 1) / k;
  std::vector<u64> out;
  out.reserve(count);
  for (u64 t = 0; t < count; ++t) out.push_back(ctx.power(k * t));
  std::sort(out.begin(), out.end());
  return out;
}

// Fills n x n with chi2(f(i0 + i, i0 + j)).
template <class Form>
IntMatrix fill(std::size_t n, u64 offset, const PrimeContext& ctx, Form form) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = ctx.chi2(static_cast<i64>(form(offset + i, offset + j)));
    }
  }
  return m;
}

IntMatrix residue_sum_matrix(const std::vector<u64>& residues, const PrimeContext& ctx) {
  const std::size_t n = residues.size();
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = ctx.chi2(static_cast<i64>(residues[i] + residues[j]));
    }
  }
  return m;
}

}  // namespace

std::string_view to_string(MatrixTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "?";
}

std::optional<MatrixTag> parse_matrix_tag(std::string_view name) {
  for (const auto& [t, n] : kTagNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

bool is_full_size(MatrixTag tag) {
  return tag == MatrixTag::kCarlitz || tag == MatrixTag::kSunCD ||
         tag == MatrixTag::kSunCDFull;
}

std::size_t dimension(MatrixTag tag, u64 p) {
  switch (tag) {
    case MatrixTag::kCarlitz:
    case MatrixTag::kSunCD:
      return p - 1;
    case MatrixTag::kSunCDFull:
      return p;
    case MatrixTag::kChapmanC1:
    case MatrixTag::kSunS1:
    case MatrixTag::kSunTp:
      return (p - 1) / 2;
    case MatrixTag::kChapmanC2:
    case MatrixTag::kChapmanC3:
      return (p + 1) / 2;
    case MatrixTag::kBiquadraticW:
      require_class(p, 4, 1, tag);
      return (p - 1) / 4;
    case MatrixTag::kSexticY:
      require_class(p, 6, 1, tag);
      return (p - 1) / 6;
  }
  return 0;
}

IntMatrix build(const MatrixKind& kind, const PrimeContext& ctx, std::size_t max_dimension) {
  const u64 p = ctx.p();
  const std::size_t n = dimension(kind.tag, p);
  if (n > max_dimension) {
    throw Error(Errc::kSizeCap, std::string(to_string(kind.tag)) + " at p = " +
                                    std::to_string(p) + " has dimension " +
                                    std::to_string(n) + " > " + std::to_string(max_dimension));
  }

  switch (kind.tag) {
    case MatrixTag::kCarlitz:
      return fill(n, 1, ctx, [p](u64 i, u64 j) { return i + p - j; });
    case MatrixTag::kChapmanC1:
    case MatrixTag::kChapmanC2:
      return fill(n, 1, ctx, [](u64 i, u64 j) { return i + j - 1; });
    case MatrixTag::kChapmanC3:
      return fill(n, 1, ctx, [p](u64 i, u64 j) { return j + p - i; });
    case MatrixTag::kSunS1:
      return fill(n, 1, ctx, [p](u64 i, u64 j) { return (i * i + j * j) % p; });
    case MatrixTag::kSunTp:
      return fill(n, 1, ctx, [p](u64 i, u64 j) { return (i * (i + 1) + j * (j + 1)) % p; });
    case MatrixTag::kSunCD:
    case MatrixTag::kSunCDFull: {
      if (!kind.params) {
        throw Error(Errc::kInvalidArgument,
                    std::string(to_string(kind.tag)) + " needs (c, d) parameters");
      }
      const u64 c = ctx.reduce(kind.params->c);
      const u64 d = ctx.reduce(kind.params->d);
      auto form = [p, c, d](u64 i, u64 j) {
        return (mul_mod(i, i, p) + mul_mod(mul_mod(c, i, p), j, p) +
                mul_mod(mul_mod(d, j, p), j, p)) % p;
      };
      const u64 offset = kind.tag == MatrixTag::kSunCD ? 1 : 0;
      return fill(n, offset, ctx, form);
    }
    case MatrixTag::kBiquadraticW:
      return residue_sum_matrix(quartic_residues(ctx), ctx);
    case MatrixTag::kSexticY:
      return residue_sum_matrix(sextic_residues(ctx), ctx);
  }
  throw Error(Errc::kInvalidArgument, "unknown matrix kind");
}

std::vector<u64> quartic_residues(const PrimeContext& ctx) {
  require_class(ctx.p(), 4, 1, MatrixTag::kBiquadraticW);
  return power_residues(ctx, 4);
}

std::vector<u64> sextic_residues(const PrimeContext& ctx) {
  require_class(ctx.p(), 6, 1, MatrixTag::kSexticY);
  return power_residues(ctx, 6);
}

}  // namespace legdet
