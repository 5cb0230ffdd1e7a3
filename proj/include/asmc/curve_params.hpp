#pragma once

#include <cstdint>

#include "asmc/ff.hpp"
#include "asmc/multipoly.hpp"

namespace asmc {

/// One instance (X^q + X)(Y^q + Y) = c over the tower.
struct CurveParams {
  TowerField field;
  int p = 0;
  int e = 0;
  std::uint64_t q = 0;
  Fe c;
  /// gamma^q = c
  Fe gamma;

  /// Throws ConfigError when c is zero.
  static CurveParams make(const TowerField& field, Fe c);
  static CurveParams make(const TowerField& field) { return make(field, field.one()); }

  /// (X^q + X)(Y^q + Y) - c in variables X, Y.
  MultiPoly affine_equation() const;
  /// (X1^q + X1 X3^{q-1})(X2^q + X2 X3^{q-1}) - c X3^{2q} in X1, X2, X3.
  MultiPoly projective_equation() const;
};

}  // namespace asmc
