#pragma once

// Local data of plane curves at projective points, and the degree-q
// adjoints of the curve together with the divisor bookkeeping of the
// series they cut out.

#include <vector>

#include "asmc/curve.hpp"
#include "asmc/multipoly.hpp"

namespace asmc {

/// A homogeneous polynomial in X1, X2, X3.
class HomogeneousPlaneCurve {
 public:
  /// Throws std::invalid_argument unless poly is homogeneous in three
  /// variables; the zero polynomial is accepted with degree -1.
  explicit HomogeneousPlaneCurve(MultiPoly poly);
  const MultiPoly& poly() const noexcept { return poly_; }
  int degree() const noexcept { return degree_; }

 private:
  MultiPoly poly_;
  int degree_;
};

/// The curve moved so that the point sits at the origin of an affine chart:
/// dehomogenize at the last nonzero coordinate of the point, then translate.
/// The two local variables are the remaining coordinates in order.
MultiPoly local_equation(const MultiPoly& form, const ProjPoint& point);

/// Lowest total degree in the local equation. Throws std::domain_error on
/// the zero polynomial or the zero point.
int multiplicity_at(const HomogeneousPlaneCurve& curve, const ProjPoint& point);

/// Lowest homogeneous part of the local equation.
MultiPoly tangent_cone(const HomogeneousPlaneCurve& curve, const ProjPoint& point);

struct TangentLines {
  /// Roots d of cone(d, 1), ascending.
  std::vector<Fe> slopes;
  /// cone(1, 0) = 0
  bool vertical = false;
  int count() const { return static_cast<int>(slopes.size()) + (vertical ? 1 : 0); }
};

/// Distinct tangent lines defined over the ambient field. The cone splits
/// into distinct linear factors exactly when count() equals its degree.
TangentLines tangent_lines(const HomogeneousPlaneCurve& curve, const ProjPoint& point);

struct AdjointSystem {
  /// Reduced basis of the kernel of the condition matrix.
  std::vector<HomogeneousPlaneCurve> basis;
  std::size_t condition_rank = 0;
  int vector_dimension = 0;
  int projective_dimension = 0;
  int ell_G = 0;
  int series_degree = 0;
  /// The kernel is spanned by X3^q, X1 X3^{q-1}, X2 X3^{q-1}, X1 X2 X3^{q-2}.
  bool basis_is_expected = false;
};

/// Degree-q forms with multiplicity >= q-1 at X_inf and Y_inf, by exact
/// linear algebra on the coefficients.
AdjointSystem adjoint_system(const CurveParams& params);

struct AdjointSplit {
  int line_power = 0;
  /// Quadratic form in X1, X2, X3.
  MultiPoly conic;
  bool conic_through_X_inf = false;
  bool conic_through_Y_inf = false;
};

/// adj = X3^{q-2} * conic. Throws std::domain_error when X3^{q-2} does not
/// divide adj.
AdjointSplit decompose_adjoint(const HomogeneousPlaneCurve& adj, std::uint64_t q);

struct DivisorData {
  std::vector<InfinitePlace> G_support;
  std::vector<InfinitePlace> P_part;
  std::vector<InfinitePlace> Q_part;
  /// Order of X3 along each place of G_support.
  std::vector<int> x3_orders;
  int deg_G = 0;
  int deg_D = 0;
  int deg_B = 0;
  int series_degree = 0;
};

/// Throws VerificationError when X3 does not vanish simply along some
/// infinite branch.
DivisorData divisor_check(const CurveParams& params, int precision);

}  // namespace asmc
