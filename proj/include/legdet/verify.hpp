#pragma once

// Per-theorem checks: each builds the exact determinant(s), derives the
// predicted counterpart, and records the outcome with witnesses.

#include <optional>
#include <vector>

#include "legdet/arith.hpp"
#include "legdet/curve_params.hpp"
#include "legdet/report.hpp"

namespace legdet {

struct SizeCaps {
  u64 full_max_p = 512;     // matrices of dimension about p
  u64 reduced_max_p = 997;  // half, quarter and sixth size
  u64 spectrum_max_p = 80;  // eigenvalue products in double precision
};

struct VerifyOptions {
  SizeCaps caps;
};

/// Parameters used when the caller gives none; nullopt for theorems that
/// take none (or, for cor-squares, to mean "every family that applies").
std::optional<CurveParams> default_params(TheoremId id);

VerificationReport verify(TheoremId id, const PrimeContext& ctx,
                          std::optional<CurveParams> params = std::nullopt,
                          const VerifyOptions& options = {});

struct SweepOptions {
  unsigned workers = 1;
  SizeCaps caps;
};

struct SweepSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct SweepResult {
  std::vector<VerificationReport> reports;  // ascending p
  SweepSummary summary;
};

/// One report per odd prime in [pmin, pmax].
SweepResult sweep(TheoremId id, u64 pmin, u64 pmax,
                  std::optional<CurveParams> params = std::nullopt,
                  const SweepOptions& options = {});

}  // namespace legdet
