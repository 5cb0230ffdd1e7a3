#pragma once

// Conics against the curve: the z-representation of its equation, the
// hyperosculating conic at an affine point and its intersection
// multiplicity, the Frobenius image checks, and conic order sequences.

#include <array>
#include <vector>

#include "asmc/curve.hpp"
#include "asmc/multipoly.hpp"

namespace asmc {

/// F = z0^q + z1^q X + z2^q Y + z3^q X^2 + z4^q XY + z5^q Y^2
struct ZRepresentation {
  std::vector<MultiPoly> z;
  /// Left side minus the curve polynomial.
  MultiPoly residual;
};

/// (XY - gamma, Y, X, 0, 1, 0); throws VerificationError if the identity
/// does not hold exactly.
ZRepresentation z_representation(const CurveParams& params);
/// Same shape with z0 = 1 + XY. The residual is returned, not checked.
ZRepresentation z_representation_literal(const CurveParams& params);

struct Conic {
  /// Coefficients of 1, X, Y, X^2, XY, Y^2.
  std::array<Fe, 6> coeffs;
  Fe evaluate(Fe x, Fe y) const;
  MultiPoly poly(const TowerField& field) const;
};

/// (uv - gamma)^q + v^q X + u^q Y + XY
Conic hyperosculating_conic(const CurveParams& params, const AffinePoint& P);

/// c^{-1} Tr(u)^2 lies in F_q.
bool is_special(const CurveParams& params, const AffinePoint& P);

struct OsculationRecord {
  AffinePoint point;
  Conic conic;
  int multiplicity = 0;
  bool special = false;
  int precision_used = 0;
};

/// Valuation of the hyperosculating conic along the branch at P. Starts at
/// precision max(N, q+3) and doubles up to 8q before throwing PrecisionError.
OsculationRecord osculation_order(const CurveParams& params, const AffinePoint& P, int precision);

struct FrobeniusRecord {
  bool on_curve_image = false;
  bool on_conic_image = false;
};

/// Image (u^{q^2}, v^{q^2}) against the curve and the conic at P. Throws
/// std::invalid_argument when the conic test is requested with c not in F_q.
FrobeniusRecord frobenius_checks(const CurveParams& params, const AffinePoint& P, bool conic_test = true);

/// Orders of the conic system at P: pivots of 1, x, y, x^2, xy, y^2 along
/// the branch. Starts at max(N, 3q) and doubles on pivot deficiency.
std::vector<int> conic_order_sequence(const CurveParams& params, const AffinePoint& P, int precision);

}  // namespace asmc
