#pragma once

// Builders for the Legendre-symbol matrix families.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "legdet/arith.hpp"
#include "legdet/bigmat.hpp"
#include "legdet/curve_params.hpp"

namespace legdet {

enum class MatrixTag {
  kCarlitz,       // [(i-j | p)], 1 <= i,j <= p-1
  kChapmanC1,     // [(i+j-1 | p)], 1 <= i,j <= (p-1)/2
  kChapmanC2,     // [(i+j-1 | p)], 1 <= i,j <= (p+1)/2
  kChapmanC3,     // [(j-i | p)], 1 <= i,j <= (p+1)/2
  kSunS1,         // [(i^2+j^2 | p)], 1 <= i,j <= (p-1)/2
  kSunTp,         // [(i(i+1)+j(j+1) | p)], 1 <= i,j <= (p-1)/2
  kSunCD,         // [(i^2+cij+dj^2 | p)], 1 <= i,j <= p-1
  kSunCDFull,     // same form, 0 <= i,j <= p-1
  kBiquadraticW,  // [(a_i+a_j | p)] over the quartic residues
  kSexticY,       // [(c_i+c_j | p)] over the sextic residues
};

struct MatrixKind {
  MatrixTag tag = MatrixTag::kCarlitz;
  std::optional<CurveParams> params;

  static MatrixKind simple(MatrixTag tag) { return {tag, std::nullopt}; }
  static MatrixKind sun_cd(i64 c, i64 d) { return {MatrixTag::kSunCD, CurveParams{c, d}}; }
  static MatrixKind sun_cd_full(i64 c, i64 d) {
    return {MatrixTag::kSunCDFull, CurveParams{c, d}};
  }
};

inline constexpr std::size_t kDefaultMaxDimension = 512;

std::string_view to_string(MatrixTag tag);
std::optional<MatrixTag> parse_matrix_tag(std::string_view name);

/// True for the families whose dimension is about p (rather than p/2 or less).
bool is_full_size(MatrixTag tag);

/// Dimension of the family at p, or kCongruenceMismatch if p is outside the
/// residue class the family is defined on.
std::size_t dimension(MatrixTag tag, u64 p);

/// Throws kCongruenceMismatch for the wrong residue class, kInvalidArgument
/// when (c, d) is missing for the Sun (c,d) families, and kSizeCap above
/// max_dimension.
IntMatrix build(const MatrixKind& kind, const PrimeContext& ctx,
                std::size_t max_dimension = kDefaultMaxDimension);

/// Fourth-power residues in (0, p), ascending. Requires p = 1 mod 4.
std::vector<u64> quartic_residues(const PrimeContext& ctx);

/// Sixth-power residues in (0, p), ascending. Requires p = 1 mod 6.
std::vector<u64> sextic_residues(const PrimeContext& ctx);

}  // namespace legdet
