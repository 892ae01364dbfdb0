#include "legdet/quadrep.hpp"

#include <stdexcept>
#include <string>

#include "legdet/error.hpp"
#include "legdet/legmat.hpp"

namespace legdet {

namespace {

u64 isqrt(u64 n) {
  BigInt r;
  BigInt z(std::to_string(n));
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return std::stoull(r.get_str());
}

void require_rule(int m, Normalization rule) {
  bool ok = false;
  switch (rule) {
    case Normalization::kX1Mod4: ok = (m == 2 || m == 4); break;
    case Normalization::kX1Mod3: ok = (m == 3); break;
    case Normalization::kXResidueMod7: ok = (m == 7); break;
    case Normalization::kXEqTwoSymbol: ok = (m == 4); break;
  }
  if (!ok) {
    throw Error(Errc::kInvalidArgument, "rule " + std::string(to_string(rule)) +
                                            " does not apply to m = " + std::to_string(m));
  }
}

bool in_class(u64 p, int m) {
  switch (m) {
    case 4: return p % 4 == 1;
    case 2: return p % 8 == 1;
    case 3: return p % 3 == 1;
    case 7: return p % 28 == 1 || p % 28 == 9 || p % 28 == 25;
    default: return false;
  }
}

// Picks the sign of |x| demanded by the rule.
i64 normalize_x(i64 x_abs, u64 p, Normalization rule) {
  auto accepts = [&](i64 x) {
    switch (rule) {
      case Normalization::kX1Mod4: return reduce_mod(x, 4) == 1;
      case Normalization::kX1Mod3: return reduce_mod(x, 3) == 1;
      case Normalization::kXResidueMod7: return jacobi(x, 7) == 1;
      case Normalization::kXEqTwoSymbol:
        return reduce_mod(x, 4) == reduce_mod(legendre(2, p), 4);
    }
    return false;
  };
  if (accepts(x_abs)) return x_abs;
  if (accepts(-x_abs)) return -x_abs;
  throw Error(Errc::kNoRepresentation, "no sign of x = " + std::to_string(x_abs) +
                                           " satisfies " + std::string(to_string(rule)));
}

std::optional<QuadraticRep> cornacchia(u64 p, int m, Normalization rule) {
  const u64 root = sqrt_mod(-static_cast<i64>(m), p);
  u64 a = p;
  u64 b = p - root;  // the root above p/2
  const u64 bound = isqrt(p);
  while (b > bound) {
    const u64 r = a % b;
    a = b;
    b = r;
  }
  const u64 x = b;
  const u64 rest = p - x * x;
  if (rest % static_cast<u64>(m) != 0) return std::nullopt;
  const u64 y2 = rest / static_cast<u64>(m);
  const u64 y = isqrt(y2);
  if (y * y != y2) return std::nullopt;
  return QuadraticRep{p, m, normalize_x(static_cast<i64>(x), p, rule), static_cast<i64>(y), rule};
}

}  // namespace

std::string_view to_string(Normalization rule) {
  switch (rule) {
    case Normalization::kX1Mod4: return "x1mod4";
    case Normalization::kX1Mod3: return "x1mod3";
    case Normalization::kXResidueMod7: return "xqr7";
    case Normalization::kXEqTwoSymbol: return "xeq2symbol";
  }
  return "?";
}

std::optional<QuadraticRep> represent_by_search(u64 p, int m, Normalization rule) {
  require_rule(m, rule);
  const u64 mu = static_cast<u64>(m);
  for (u64 y = 0; mu * y * y <= p; ++y) {
    const u64 rest = p - mu * y * y;
    const u64 x = isqrt(rest);
    if (x * x == rest) {
      return QuadraticRep{p, m, normalize_x(static_cast<i64>(x), p, rule), static_cast<i64>(y), rule};
    }
  }
  return std::nullopt;
}

QuadraticRep represent(u64 p, int m, Normalization rule) {
  require_rule(m, rule);
  if (p < 3 || !is_prime(p)) throw Error(Errc::kNotPrime, std::to_string(p) + " is not an odd prime");
  if (!in_class(p, m)) {
    throw Error(Errc::kNoRepresentation,
                std::to_string(p) + " is outside the class represented by x^2 + " +
                    std::to_string(m) + "y^2");
  }
  auto rep = cornacchia(p, m, rule);
  if (!rep) {
    throw Error(Errc::kNoRepresentation, "descent failed for p = " + std::to_string(p));
  }
  if (p < 100) {
    auto check = represent_by_search(p, m, rule);
    if (!check || check->x != rep->x || check->y != rep->y) {
      throw std::logic_error("descent and search disagree at p = " + std::to_string(p));
    }
  }
  return *rep;
}

QuadraticInteger multiply(const QuadraticInteger& u, const QuadraticInteger& v, u64 p) {
  const BigInt pp(static_cast<unsigned long>(p));
  QuadraticInteger out;
  out.two_a = (u.two_a * v.two_a + pp * u.two_b * v.two_b) / 2;
  out.two_b = (u.two_a * v.two_b + u.two_b * v.two_a) / 2;
  return out;
}

QuadraticInteger fundamental_unit(u64 p) {
  if (p % 4 != 1 || !is_prime(p)) {
    throw Error(Errc::kCongruenceMismatch, "fundamental unit needs a prime p = 1 mod 4");
  }
  // Units are X + Y w, w = (1 + sqrt p)/2, of norm X^2 + XY - (p-1)/4 Y^2 = +-1;
  // X/Y runs through the convergents of (sqrt(p) - 1)/2 = (P + sqrt p)/Q.
  const i64 s = static_cast<i64>(isqrt(p));
  const i64 d = static_cast<i64>(p);
  const BigInt quarter(static_cast<long>((p - 1) / 4));
  i64 big_p = -1;
  i64 big_q = 2;
  BigInt h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (u64 iter = 0; iter < 4 * p + 16; ++iter) {
    if (big_q <= 0) throw std::logic_error("continued fraction left the reduced range");
    const i64 a = (big_p + s) / big_q;
    BigInt h = a * h1 + h2;
    BigInt k = a * k1 + k2;
    const BigInt norm = h * h + h * k - quarter * k * k;
    if (sgn(k) > 0 && (norm == 1 || norm == -1)) {
      return {2 * h + k, k};
    }
    h2 = std::move(h1);
    h1 = std::move(h);
    k2 = std::move(k1);
    k1 = std::move(k);
    big_p = a * big_q - big_p;
    big_q = (d - big_p * big_p) / big_q;
  }
  throw std::logic_error("no unit found for p = " + std::to_string(p));
}

UnitPower recover_chapman_unit(u64 p, const BigInt& c1, const BigInt& c2, u64 max_exponent) {
  if (p % 4 != 1 || !is_prime(p)) {
    throw Error(Errc::kCongruenceMismatch, "Chapman unit recovery needs a prime p = 1 mod 4");
  }
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, (p - 1) / 2);
  const BigInt scale1 = ((p - 1) / 4) % 2 == 0 ? scale : BigInt(-scale);
  const BigInt scale2 = ((p + 3) / 4) % 2 == 0 ? scale : BigInt(-scale);

  auto halve = [](const BigInt& c, const BigInt& s, const char* which) {
    const BigInt twice = 2 * c;
    if (!mpz_divisible_p(twice.get_mpz_t(), s.get_mpz_t())) {
      throw Error(Errc::kNotAUnit, std::string(which) + " = " + c.get_str() +
                                       " is not a half-integer multiple of " + s.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), twice.get_mpz_t(), s.get_mpz_t());
    return q;
  };

  UnitPower out;
  out.p = p;
  out.two_b = halve(c1, scale1, "C1");
  out.two_a = halve(c2, scale2, "C2");
  if (mpz_odd_p(out.two_a.get_mpz_t()) != mpz_odd_p(out.two_b.get_mpz_t())) {
    throw Error(Errc::kNotAUnit, "2a and 2b have different parity");
  }
  const QuadraticInteger target{out.two_a, out.two_b};
  const BigInt n4 = target.norm4(p);
  if (n4 == 4) out.norm = 1;
  else if (n4 == -4) out.norm = -1;
  else throw Error(Errc::kNotAUnit, "(2a)^2 - p(2b)^2 = " + n4.get_str());

  if (sgn(out.two_a) <= 0 || sgn(out.two_b) <= 0) {
    throw Error(Errc::kNotAPower, "a + b sqrt p is not > 1");
  }
  const QuadraticInteger eps = fundamental_unit(p);
  QuadraticInteger power = eps;
  u64 h = 1;
  // 2a grows strictly with h; 2b can stall (p = 5).
  while (power.two_a < target.two_a && h < max_exponent) {
    power = multiply(power, eps, p);
    ++h;
  }
  if (!(power == target)) {
    throw Error(Errc::kNotAPower, "a + b sqrt p is not a power of the fundamental unit");
  }
  out.h = h;
  return out;
}

BigInt evil_value(const UnitPower& unit) {
  const QuadraticInteger u{unit.two_a, unit.two_b};
  QuadraticInteger v = u;
  if (legendre(2, unit.p) == -1) v = multiply(multiply(u, u, unit.p), u, unit.p);
  if (mpz_odd_p(v.two_a.get_mpz_t())) {
    throw Error(Errc::kNonIntegral, "a' = " + v.two_a.get_str() + "/2 is not an integer");
  }
  return -(v.two_a / 2);
}

BigInt evil_value(const PrimeContext& ctx) {
  if (ctx.p() % 4 == 3) return 1;
  const BigInt c1 = det_exact(build(MatrixKind::simple(MatrixTag::kChapmanC1), ctx));
  const BigInt c2 = det_exact(build(MatrixKind::simple(MatrixTag::kChapmanC2), ctx));
  return evil_value(recover_chapman_unit(ctx.p(), c1, c2));
}

}  // namespace legdet
