#include "legdet/charsum.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "legdet/error.hpp"
#include "legdet/legmat.hpp"

namespace legdet {

namespace {

// exp(2 pi i t / order), t = 0..order-1
std::vector<std::complex<double>> roots_of_unity(u64 order) {
  std::vector<std::complex<double>> w(order);
  for (u64 t = 0; t < order; ++t) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(order);
    w[t] = {std::cos(angle), std::sin(angle)};
  }
  return w;
}

// k-th value = sum_t weight[t] exp(2 pi i k t / n), k = 1..n, with the k = n
// and k = n/2 entries replaced by their exact integer sums.
void fill_from_weights(EigenSpectrum& s, const std::vector<int>& weight) {
  const u64 n = weight.size();
  const auto w = roots_of_unity(n);
  s.values.assign(n, {0.0, 0.0});
  for (u64 k = 1; k <= n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (u64 t = 0; t < n; ++t) {
      if (weight[t] != 0) acc += static_cast<double>(weight[t]) * w[(k * t) % n];
    }
    s.values[k - 1] = acc;
  }
  i64 top = 0;
  i64 half = 0;
  for (u64 t = 0; t < n; ++t) {
    top += weight[t];
    half += (t % 2 == 0) ? weight[t] : -weight[t];
  }
  s.top_exact = top;
  s.values[n - 1] = static_cast<double>(top);
  if (n % 2 == 0) {
    s.half_exact = half;
    s.values[n / 2 - 1] = static_cast<double>(half);
  }
}

// Eigenvalues of [(s_i + s_j | p)] over the subgroup {xi^(step*t)}, t < n:
// chi^k(xi^(step t)) = exp(2 pi i k t / n).
void fill_subgroup_spectrum(EigenSpectrum& s, const PrimeContext& ctx, u64 step) {
  const u64 n = (ctx.p() - 1) / step;
  std::vector<int> weight(n);
  for (u64 t = 0; t < n; ++t) weight[t] = ctx.chi2(static_cast<i64>(1 + ctx.power(step * t)));
  fill_from_weights(s, weight);
}

// poly *= (a0 + a1 x + a2 x^2) mod p, truncated to poly.size() coefficients.
void multiply_quadratic(std::vector<u64>& poly, u64 a0, u64 a1, u64 a2, u64 p) {
  for (std::size_t i = poly.size(); i-- > 0;) {
    u64 v = mul_mod(poly[i], a0, p);
    if (i >= 1) v = (v + mul_mod(poly[i - 1], a1, p)) % p;
    if (i >= 2) v = (v + mul_mod(poly[i - 2], a2, p)) % p;
    poly[i] = v;
  }
}

}  // namespace

i64 jacobsthal_phi(u64 k, const PrimeContext& ctx) {
  if (k == 0) throw Error(Errc::kInvalidArgument, "k must be positive");
  const u64 p = ctx.p();
  i64 sum = 0;
  for (u64 x = 1; x < p; ++x) {
    sum += ctx.chi2(static_cast<i64>(x)) * ctx.chi2(static_cast<i64>(pow_mod(x, k, p) + 1));
  }
  return sum;
}

i64 jacobsthal_psi(u64 k, const PrimeContext& ctx) {
  if (k == 0) throw Error(Errc::kInvalidArgument, "k must be positive");
  const u64 p = ctx.p();
  i64 sum = 0;
  for (u64 x = 1; x < p; ++x) sum += ctx.chi2(static_cast<i64>(pow_mod(x, k, p) + 1));
  return sum;
}

EigenSpectrum spectrum(SpectrumFamily family, const PrimeContext& ctx, i64 c) {
  EigenSpectrum s;
  s.p = ctx.p();
  s.family = family;
  switch (family) {
    case SpectrumFamily::kQuartic:
      quartic_residues(ctx);  // residue-class check
      fill_subgroup_spectrum(s, ctx, 4);
      return s;
    case SpectrumFamily::kSextic:
      sextic_residues(ctx);
      fill_subgroup_spectrum(s, ctx, 6);
      return s;
    case SpectrumFamily::kFullMultiplicative:
      break;
  }

  // lambda_k = sum_j ((1 + c j + j^2)|p) chi^k(j); reindexing j = xi^t turns
  // this into the same subgroup sum over all of F_p^* with weight
  // ((1 + c xi^t + xi^(2t))|p).
  const u64 p = ctx.p();
  const u64 n = p - 1;
  const u64 cr = ctx.reduce(c);
  std::vector<int> weight(n);
  for (u64 t = 0; t < n; ++t) {
    const u64 j = ctx.power(t);
    weight[t] = ctx.chi2(static_cast<i64>((1 + mul_mod(cr, j, p) + mul_mod(j, j, p)) % p));
  }
  fill_from_weights(s, weight);
  return s;
}

ExtendedComplex& ExtendedComplex::operator*=(std::complex<double> z) {
  mantissa_ *= z;
  normalize();
  return *this;
}

void ExtendedComplex::normalize() {
  const double m = std::max(std::abs(mantissa_.real()), std::abs(mantissa_.imag()));
  if (m == 0.0) {
    mantissa_ = {0.0, 0.0};
    exponent_ = 0;
    return;
  }
  int e = 0;
  std::frexp(m, &e);
  mantissa_ = {std::ldexp(mantissa_.real(), -e), std::ldexp(mantissa_.imag(), -e)};
  exponent_ += e;
}

double ExtendedComplex::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return std::log2(std::abs(mantissa_)) + static_cast<double>(exponent_);
}

SpectrumProduct spectrum_product(const EigenSpectrum& s) {
  SpectrumProduct out;
  for (const auto& v : s.values) {
    out.product *= v;
    out.scale *= std::max(1.0, std::abs(v));
  }
  return out;
}

double product_relative_error(const SpectrumProduct& prod, const BigInt& det) {
  if (sgn(det) == 0) return std::numeric_limits<double>::infinity();
  long det_exp = 0;
  const double det_mant = mpz_get_d_2exp(&det_exp, det.get_mpz_t());
  const long shift = prod.product.exponent() - det_exp;
  if (prod.product.is_zero() || shift > 60 || shift < -60) return std::numeric_limits<double>::infinity();
  const std::complex<double> ratio = std::ldexp(1.0, static_cast<int>(shift)) * prod.product.mantissa() / det_mant;
  return std::abs(ratio - 1.0);
}

bool product_matches(const SpectrumProduct& prod, const BigInt& det, double rel_tol) {
  if (sgn(det) == 0) {
    if (prod.product.is_zero()) return true;
    return prod.product.log2_abs() <= std::log2(rel_tol) + prod.scale.log2_abs();
  }
  return product_relative_error(prod, det) <= rel_tol;
}

u64 trinomial_coeff_mod(i64 c, i64 d, const PrimeContext& ctx) {
  const u64 p = ctx.p();
  const u64 n = ctx.half();
  std::vector<u64> poly(n + 1, 0);
  poly[0] = 1;
  const u64 cr = ctx.reduce(c);
  const u64 dr = ctx.reduce(d);
  for (u64 k = 0; k < n; ++k) multiply_quadratic(poly, 1, cr, dr, p);
  return poly[n];
}

VerificationReport symfunc_congruence_check(const PrimeContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem = TheoremId::kSymfuncCongruence;
  report.p = ctx.p();

  const u64 p = ctx.p();
  const u64 n = ctx.half();

  // sigma_k via prod (1 + e_r t).
  std::vector<u64> sigma(n + 1, 0);
  sigma[0] = 1;
  for (u64 r = 1; r <= n; ++r) {
    const u64 e = (r * r + r) % p;
    for (u64 k = r; k >= 1; --k) sigma[k] = (sigma[k] + mul_mod(sigma[k - 1], e, p)) % p;
  }

  // C(n+1, k) mod p, n + 1 < p.
  std::vector<u64> binom(n + 2, 0);
  binom[0] = 1;
  for (u64 k = 1; k <= n + 1; ++k) {
    binom[k] = mul_mod(mul_mod(binom[k - 1], (n + 2 - k) % p, p), inv_mod(k, p), p);
  }

  const u64 expected_top = (n % 2 == 0) ? n % p : (p - n % p) % p;
  if (sigma[n] != expected_top) {
    report.fail("sigma_n = " + std::to_string(sigma[n]) + ", expected " +
                std::to_string(expected_top));
  }
  for (u64 k = 0; k < n; ++k) {
    u64 expected = mul_mod(pow_mod(4, n - k, p), binom[k], p);
    if (k % 2 == 1) expected = (p - expected) % p;
    if (sigma[k] != expected) {
      report.fail("sigma_" + std::to_string(k) + " = " + std::to_string(sigma[k]) +
                  ", expected " + std::to_string(expected));
    }
  }

  // F(X) = prod (X - e_r), coefficients low to high.
  std::vector<u64> f(n + 1, 0);
  f[0] = 1;
  for (u64 r = 1; r <= n; ++r) {
    const u64 neg_e = (p - (r * r + r) % p) % p;
    for (u64 i = r; i >= 1; --i) f[i] = (f[i - 1] + mul_mod(f[i], neg_e, p)) % p;
    f[0] = mul_mod(f[0], neg_e, p);
  }
  // G(X) = ((4X+1)^(n+1) - (4X+1)) / (4X).
  std::vector<u64> power(n + 2, 0);
  power[0] = 1;
  for (u64 e = 1; e <= n + 1; ++e) {
    for (u64 i = e; i >= 1; --i) power[i] = (power[i] + mul_mod(power[i - 1], 4, p)) % p;
  }
  power[0] = (power[0] + p - 1) % p;
  power[1] = (power[1] + p - 4 % p) % p;
  const u64 inv4 = inv_mod(4 % p, p);
  std::size_t mismatches = 0;
  if (power[0] != 0) ++mismatches;
  for (u64 i = 0; i <= n; ++i) {
    if (mul_mod(power[i + 1], inv4, p) != f[i]) ++mismatches;
  }
  if (mismatches != 0) {
    report.fail("product identity differs in " + std::to_string(mismatches) + " coefficients");
  }

  report.add("n", BigInt(static_cast<unsigned long>(n)));
  report.add("sigma_n", BigInt(static_cast<unsigned long>(sigma[n])));
  report.add("coefficients_checked", BigInt(static_cast<unsigned long>(2 * (n + 1))));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace legdet
