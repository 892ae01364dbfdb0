#pragma once

// Character sums attached to the Legendre matrices: Jacobsthal sums,
// eigenvalue spectra built from a generator of the character group, the
// generalized central trinomial coefficient, and the symmetric-function
// congruences for the triangular-number determinant.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "legdet/arith.hpp"
#include "legdet/bigmat.hpp"
#include "legdet/report.hpp"

namespace legdet {

/// phi_k(1) = sum_{x=1}^{p-1} (x|p) ((x^k + 1)|p).
i64 jacobsthal_phi(u64 k, const PrimeContext& ctx);

/// psi_k(1) = sum_{x=1}^{p-1} ((x^k + 1)|p).
i64 jacobsthal_psi(u64 k, const PrimeContext& ctx);

enum class SpectrumFamily {
  kFullMultiplicative,  // lambda_k, k = 1..p-1, matrix (c,1)_p
  kQuartic,             // theta_k, k = 1..(p-1)/4, matrix W_p
  kSextic,              // gamma_k, k = 1..(p-1)/6, matrix Y_p
};

// Eigenvalues of a Legendre matrix indexed by a multiplicative subgroup,
// with chi(xi^t) = exp(2 pi i t / (p - 1)) for the least primitive root xi.
struct EigenSpectrum {
  u64 p = 0;
  SpectrumFamily family = SpectrumFamily::kFullMultiplicative;
  std::vector<std::complex<double>> values;  // values[k - 1] is the k-th

  // The k = N and k = N/2 entries (N = number of values) are rational
  // integers; they are kept exactly here and copied into values.
  i64 top_exact = 0;
  std::optional<i64> half_exact;

  std::size_t size() const { return values.size(); }
  const std::complex<double>& at(std::size_t k) const { return values.at(k - 1); }
};

/// `c` is used by the full family only. Throws kCongruenceMismatch when p is
/// outside the quartic/sextic residue class.
EigenSpectrum spectrum(SpectrumFamily family, const PrimeContext& ctx, i64 c = 0);

/// Complex number with a separate binary exponent, for products that leave
/// the double range.
class ExtendedComplex {
 public:
  ExtendedComplex() = default;
  explicit ExtendedComplex(std::complex<double> z) : mantissa_(z) { normalize(); }

  ExtendedComplex& operator*=(std::complex<double> z);

  std::complex<double> mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }
  bool is_zero() const { return mantissa_ == std::complex<double>(0.0, 0.0); }
  double log2_abs() const;

 private:
  void normalize();

  std::complex<double> mantissa_{1.0, 0.0};
  long exponent_ = 0;
};

struct SpectrumProduct {
  ExtendedComplex product;
  ExtendedComplex scale;  // prod max(1, |value|), the size a zero is judged against
};

SpectrumProduct spectrum_product(const EigenSpectrum& s);

/// Relative agreement of a spectrum product with an exact determinant. A zero
/// determinant matches when |product| <= rel_tol * scale.
bool product_matches(const SpectrumProduct& prod, const BigInt& det, double rel_tol);

/// Relative difference |product / det - 1| (infinite for det = 0).
double product_relative_error(const SpectrumProduct& prod, const BigInt& det);

/// Coefficient of x^((p-1)/2) in (d x^2 + c x + 1)^((p-1)/2), reduced mod p.
u64 trinomial_coeff_mod(i64 c, i64 d, const PrimeContext& ctx);

/// Checks sigma_k(1^2+1, ..., n^2+n) mod p against the closed forms and the
/// product identity prod (X - r^2 - r) = ((4X+1)^n - 1)(4X+1)/(4X) mod p.
VerificationReport symfunc_congruence_check(const PrimeContext& ctx);

}  // namespace legdet
