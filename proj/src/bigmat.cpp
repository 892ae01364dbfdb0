#include "legdet/bigmat.hpp"

#include <string>
#include <utility>

#include "legdet/error.hpp"

namespace legdet {

IntMatrix::IntMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0) throw Error(Errc::kInvalidArgument, "matrix dimension must be >= 1");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(Errc::kInvalidArgument, "matrix must be square");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::vector<BigInt> IntMatrix::multiply(std::span<const BigInt> v) const {
  if (v.size() != n_) throw Error(Errc::kInvalidArgument, "vector length mismatch");
  std::vector<BigInt> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    mpz_ptr acc = out[i].get_mpz_t();
    for (std::size_t j = 0; j < n_; ++j) {
      mpz_addmul(acc, (*this)(i, j).get_mpz_t(), v[j].get_mpz_t());
    }
  }
  return out;
}

BigInt det_exact(IntMatrix m) {
  const std::size_t n = m.size();
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    mpz_srcptr akk = m(k, k).get_mpz_t();
    const bool divide = mpz_cmpabs_ui(prev.get_mpz_t(), 1) != 0;
    for (std::size_t i = k + 1; i < n; ++i) {
      mpz_srcptr aik = m(i, k).get_mpz_t();
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_ptr x = m(i, j).get_mpz_t();
        mpz_mul(x, x, akk);
        mpz_submul(x, aik, m(k, j).get_mpz_t());
        if (divide) mpz_divexact(x, x, prev.get_mpz_t());
      }
      // A previous pivot of -1 still flips the sign of the whole step.
      if (!divide && sgn(prev) < 0) {
        for (std::size_t j = k + 1; j < n; ++j) {
          mpz_neg(m(i, j).get_mpz_t(), m(i, j).get_mpz_t());
        }
      }
    }
    prev = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

SquareTest is_perfect_square(const BigInt& z) {
  if (sgn(z) < 0) return {};
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
  if (root * root != z) return {};
  return {true, std::move(root)};
}

IntMatrix circulant(std::span<const BigInt> a) {
  const std::size_t m = a.size();
  IntMatrix c(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) c(i, j) = a[(i + m - j) % m];
  }
  return c;
}

SymmetricCirculantFactorization factor_symmetric_circulant(std::span<const BigInt> a) {
  const std::size_t m = a.size();
  if (m == 0) throw Error(Errc::kInvalidArgument, "empty tuple");
  for (std::size_t i = 1; i < m; ++i) {
    if (a[i] != a[m - i]) {
      throw Error(Errc::kSymmetryViolation,
                  "a[" + std::to_string(i) + "] != a[" + std::to_string(m - i) + "]");
    }
  }

  SymmetricCirculantFactorization f;
  f.m = m;
  f.det = det_exact(circulant(a));
  BigInt linear = 0;
  for (const auto& v : a) f.row_sum += v;
  linear = f.row_sum;
  if (m % 2 == 0) {
    BigInt alt = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i % 2 == 0) alt += a[i];
      else alt -= a[i];
    }
    linear *= alt;
    f.alt_sum = std::move(alt);
  }

  if (sgn(linear) == 0) {
    if (sgn(f.det) != 0) {
      throw Error(Errc::kNotASquare, "vanishing linear factor but det = " + f.det.get_str());
    }
    return f;
  }
  if (!mpz_divisible_p(f.det.get_mpz_t(), linear.get_mpz_t())) {
    throw Error(Errc::kNotASquare, "linear factors do not divide det = " + f.det.get_str());
  }
  BigInt quotient;
  mpz_divexact(quotient.get_mpz_t(), f.det.get_mpz_t(), linear.get_mpz_t());
  auto sq = is_perfect_square(quotient);
  if (!sq.is_square) {
    throw Error(Errc::kNotASquare, "det / linear factors = " + quotient.get_str());
  }
  f.square_part = std::move(sq.root);
  return f;
}

std::vector<BigInt> elementary_symmetric(std::span<const BigInt> values) {
  // Coefficients of prod (1 + v t), built one factor at a time.
  std::vector<BigInt> sigma(values.size() + 1, 0);
  sigma[0] = 1;
  for (std::size_t r = 0; r < values.size(); ++r) {
    for (std::size_t k = r + 1; k >= 1; --k) sigma[k] += sigma[k - 1] * values[r];
  }
  return sigma;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt gsz_det(std::span<const BigInt> x, std::span<const BigInt> y) {
  const std::size_t m = x.size();
  if (m == 0 || y.size() != m) {
    throw Error(Errc::kInvalidArgument, "x and y must be nonempty and of equal length");
  }

  BigInt vandermonde = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) vandermonde *= (x[j] - x[i]) * (y[j] - y[i]);
  }
  BigInt binomials = 1;
  for (std::size_t r = 0; r <= m; ++r) binomials *= binomial(m, r);

  const auto sx = elementary_symmetric(x);
  const auto sy = elementary_symmetric(y);
  BigRational s = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    BigRational term(sx[k] * sy[m - k], binomial(m, k));
    term.canonicalize();
    s += term;
  }

  BigRational g = s * BigRational(vandermonde * binomials);
  if ((m * (m - 1) / 2) % 2 == 1) g = -g;
  g.canonicalize();
  if (g.get_den() != 1) {
    throw Error(Errc::kNonIntegral, "closed form produced " + g.get_str());
  }
  return g.get_num();
}

}  // namespace legdet
