#pragma once

#include <cstdint>

#include "legdet/arith.hpp"

namespace legdet {

// Coefficients of the binary form i^2 + c*i*j + d*j^2, equivalently of the
// curve y^2 = x(d x^2 + c x + 1).
struct CurveParams {
  i64 c = 0;
  i64 d = 1;

  /// c^2 - 4d, which is where the cubic acquires a repeated root.
  __int128 discriminant() const {
    return static_cast<__int128>(c) * c - 4 * static_cast<__int128>(d);
  }

  bool d_vanishes() const { return d == 0; }
  bool discriminant_vanishes() const { return discriminant() == 0; }

  bool d_vanishes_mod(u64 p) const { return reduce_mod(d, p) == 0; }
  bool discriminant_vanishes_mod(u64 p) const {
    __int128 r = discriminant() % static_cast<__int128>(p);
    return r == 0;
  }

  /// x(dx^2 + cx + 1) is squarefree mod p.
  bool is_elliptic_mod(u64 p) const {
    return !d_vanishes_mod(p) && !discriminant_vanishes_mod(p);
  }

  bool operator==(const CurveParams&) const = default;
};

}  // namespace legdet
