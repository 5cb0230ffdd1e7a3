#include "asmc/classic.hpp"

#include <algorithm>
#include <stdexcept>

#include "asmc/errors.hpp"
#include "asmc/symbolic.hpp"

namespace asmc {

namespace {

const std::vector<std::string> kXY{"X", "Y"};

ZRepresentation build(const CurveParams& params, const MultiPoly& z0) {
  const TowerField& f = params.field;
  const MultiPoly X = MultiPoly::variable(f, kXY, 0), Y = MultiPoly::variable(f, kXY, 1);
  const MultiPoly zero(f, kXY), one = MultiPoly::constant(f, kXY, f.one());
  ZRepresentation out{{z0, Y, X, zero, one, zero}, zero};
  const MultiPoly mult[6] = {one, X, Y, X * X, X * Y, Y * Y};
  MultiPoly lhs(f, kXY);
  for (int i = 0; i < 6; ++i) lhs += out.z[i].pow(params.q) * mult[i];
  out.residual = lhs - params.affine_equation();
  return out;
}

}  // namespace

ZRepresentation z_representation(const CurveParams& params) {
  const TowerField& f = params.field;
  const MultiPoly XY = MultiPoly::monomial(f, kXY, {1, 1}, f.one());
  auto out = build(params, XY - MultiPoly::constant(f, kXY, params.gamma));
  if (!out.residual.is_zero()) throw VerificationError("z-representation identity fails: " + out.residual.to_string());
  return out;
}

ZRepresentation z_representation_literal(const CurveParams& params) {
  const TowerField& f = params.field;
  const MultiPoly XY = MultiPoly::monomial(f, kXY, {1, 1}, f.one());
  return build(params, XY + MultiPoly::constant(f, kXY, f.one()));
}

Fe Conic::evaluate(Fe x, Fe y) const {
  return coeffs[0] + coeffs[1] * x + coeffs[2] * y + coeffs[3] * x * x + coeffs[4] * x * y + coeffs[5] * y * y;
}

MultiPoly Conic::poly(const TowerField& field) const {
  static const Exponents mons[6] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  MultiPoly p(field, kXY);
  for (int i = 0; i < 6; ++i) p.add_term(mons[i], coeffs[i]);
  return p;
}

Conic hyperosculating_conic(const CurveParams& params, const AffinePoint& P) {
  const auto q = params.q;
  const Fe zero = params.field.zero();
  return Conic{{(P.u * P.v - params.gamma).pow(q), P.v.pow(q), P.u.pow(q), zero, params.field.one(), zero}};
}

bool is_special(const CurveParams& params, const AffinePoint& P) {
  const Fe tu = P.u.trace();
  return params.field.subfield_member(tu * tu / params.c, Level::Fq);
}

OsculationRecord osculation_order(const CurveParams& params, const AffinePoint& P, int precision) {
  OsculationRecord out;
  out.point = P;
  out.conic = hyperosculating_conic(params, P);
  out.special = is_special(params, P);
  const int q = static_cast<int>(params.q);
  const MultiPoly C = out.conic.poly(params.field);
  for (int n = std::max(precision, q + 3);; n *= 2) {
    const auto br = affine_branch(params, P, n);
    const Series xy[2] = {br.x, br.y};
    if (auto v = substitute_branch(C, xy).valuation()) {
      out.multiplicity = *v;
      out.precision_used = n;
      return out;
    }
    if (n >= 8 * q) break;
  }
  throw PrecisionError("conic vanishes to the highest precision tried; raise precision");
}

FrobeniusRecord frobenius_checks(const CurveParams& params, const AffinePoint& P, bool conic_test) {
  const TowerField& f = params.field;
  if (conic_test && !f.subfield_member(params.c, Level::Fq))
    throw std::invalid_argument("conic image test needs c in F_q");
  const AffinePoint img{f.frobenius(P.u, 2), f.frobenius(P.v, 2)};
  FrobeniusRecord out;
  out.on_curve_image = on_curve(params, img);
  if (conic_test) out.on_conic_image = hyperosculating_conic(params, P).evaluate(img.u, img.v).is_zero();
  return out;
}

std::vector<int> conic_order_sequence(const CurveParams& params, const AffinePoint& P, int precision) {
  const int q = static_cast<int>(params.q);
  for (int n = std::max(precision, 3 * q);; n *= 2) {
    const auto br = affine_branch(params, P, n);
    const Series& x = br.x;
    const Series& y = br.y;
    const Series one = Series::constant(params.field.one(), n);
    const std::vector<Series> six{one, x, y, x * x, x * y, y * y};
    try {
      return pivot_order_sequence(six);
    } catch (const PrecisionError&) {
      if (n > 16 * q) throw;
    }
  }
}

}  // namespace asmc
