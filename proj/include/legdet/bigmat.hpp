#pragma once

// Exact linear algebra over arbitrary-precision integers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace legdet {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Dense square matrix of big integers, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t size() const { return n_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  bool is_symmetric() const;
  std::vector<BigInt> multiply(std::span<const BigInt> v) const;

  bool operator==(const IntMatrix& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }

 private:
  std::size_t n_;
  std::vector<BigInt> entries_;
};

/// Exact determinant by Bareiss fraction-free elimination. Pivots are the
/// first nonzero entry down the current column.
BigInt det_exact(IntMatrix m);

struct SquareTest {
  bool is_square = false;
  std::optional<BigInt> root;
};

SquareTest is_perfect_square(const BigInt& z);

/// (i, j) entry a[(i - j) mod m].
IntMatrix circulant(std::span<const BigInt> a);

// det C(a) = row_sum * alt_sum * square_part^2   (m even)
// det C(a) = row_sum * square_part^2             (m odd)
// square_part is absent when row_sum (or alt_sum) vanishes, in which case
// the determinant is zero and carries no square information.
struct SymmetricCirculantFactorization {
  std::size_t m = 0;
  BigInt row_sum;
  std::optional<BigInt> alt_sum;
  std::optional<BigInt> square_part;
  BigInt det;
};

/// Requires a[i] == a[m - i] for 1 <= i < m (kSymmetryViolation otherwise).
/// Throws kNotASquare if the cofactor of the two linear factors is not a
/// perfect square.
SymmetricCirculantFactorization factor_symmetric_circulant(std::span<const BigInt> a);

/// det[(x_i + y_j)^m] through the closed product/symmetric-function form.
BigInt gsz_det(std::span<const BigInt> x, std::span<const BigInt> y);

/// Elementary symmetric polynomials sigma_0..sigma_m of the values.
std::vector<BigInt> elementary_symmetric(std::span<const BigInt> values);

BigInt binomial(unsigned long n, unsigned long k);

}  // namespace legdet
