#include "asmc/adjoint.hpp"

#include <algorithm>
#include <stdexcept>

#include "asmc/errors.hpp"
#include "asmc/linalg.hpp"
#include "asmc/symbolic.hpp"

namespace asmc {

namespace {

const std::vector<std::string> kProjVars{"X1", "X2", "X3"};

std::size_t chart_index(const ProjPoint& point) {
  for (std::size_t k = 3; k-- > 0;)
    if (!point[k].is_zero()) return k;
  throw std::domain_error("the zero vector is not a projective point");
}

}  // namespace

HomogeneousPlaneCurve::HomogeneousPlaneCurve(MultiPoly poly) : poly_(std::move(poly)) {
  if (poly_.nvars() != 3) throw std::invalid_argument("plane curve needs three variables");
  if (!poly_.is_homogeneous()) throw std::invalid_argument("plane curve polynomial is not homogeneous");
  degree_ = poly_.total_degree();
}

MultiPoly local_equation(const MultiPoly& form, const ProjPoint& point) {
  const std::size_t k = chart_index(point);
  const Fe scale = point[k].inv();
  std::vector<std::string> local;
  for (std::size_t j = 0; j < 3; ++j)
    if (j != k) local.push_back(form.variables()[j]);
  const TowerField& f = form.field();
  std::vector<MultiPoly> images;
  std::size_t next = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == k) {
      images.push_back(MultiPoly::constant(f, local, f.one()));
    } else {
      images.push_back(MultiPoly::variable(f, local, next++) + MultiPoly::constant(f, local, point[j] * scale));
    }
  }
  return form.substitute(images);
}

int multiplicity_at(const HomogeneousPlaneCurve& curve, const ProjPoint& point) {
  if (curve.poly().is_zero()) throw std::domain_error("multiplicity of the zero polynomial");
  return local_equation(curve.poly(), point).min_degree();
}

MultiPoly tangent_cone(const HomogeneousPlaneCurve& curve, const ProjPoint& point) {
  if (curve.poly().is_zero()) throw std::domain_error("tangent cone of the zero polynomial");
  const MultiPoly loc = local_equation(curve.poly(), point);
  return loc.homogeneous_part(loc.min_degree());
}

TangentLines tangent_lines(const HomogeneousPlaneCurve& curve, const ProjPoint& point) {
  const MultiPoly cone = tangent_cone(curve, point);
  const TowerField& f = cone.field();
  TangentLines out;
  if (cone.total_degree() == 0) return out;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const Fe at[2] = {f.element(static_cast<std::uint32_t>(i)), f.one()};
    if (cone.evaluate(at).is_zero()) out.slopes.push_back(at[0]);
  }
  const Fe inf[2] = {f.one(), f.zero()};
  out.vertical = cone.evaluate(inf).is_zero();
  return out;
}

AdjointSystem adjoint_system(const CurveParams& params) {
  const TowerField& f = params.field;
  const int q = static_cast<int>(params.q);
  const auto forms = monomials_of_degree(3, q);
  const ProjPoint points[2] = {ProjPoint{f.one(), f.zero(), f.zero()}, ProjPoint{f.zero(), f.one(), f.zero()}};

  // One row per (point, local monomial of degree < q-1).
  std::vector<std::vector<Exponents>> local_rows(2);
  for (auto& rows : local_rows)
    for (int d = 0; d < q - 1; ++d)
      for (auto& m : monomials_of_degree(2, d)) rows.push_back(m);
  const std::size_t nrows = local_rows[0].size() + local_rows[1].size();
  Matrix cond(f, nrows, forms.size());
  for (std::size_t col = 0; col < forms.size(); ++col) {
    const MultiPoly mono = MultiPoly::monomial(f, kProjVars, forms[col], f.one());
    std::size_t row = 0;
    for (int pt = 0; pt < 2; ++pt) {
      const MultiPoly loc = local_equation(mono, points[pt]);
      for (const auto& m : local_rows[pt]) cond.at(row++, col) = loc.coefficient(m);
    }
  }

  AdjointSystem out;
  out.condition_rank = rank(cond);
  auto ker = kernel(cond);
  out.vector_dimension = static_cast<int>(ker.size());
  out.projective_dimension = out.vector_dimension - 1;
  out.ell_G = out.projective_dimension + 1;

  // Reduce the kernel basis so that it is canonical.
  Matrix kb(f, ker.size(), forms.size());
  for (std::size_t r = 0; r < ker.size(); ++r)
    for (std::size_t c = 0; c < forms.size(); ++c) kb.at(r, c) = ker[r][c];
  const RowEchelon red = rref(kb);
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    MultiPoly poly(f, kProjVars);
    for (std::size_t c = 0; c < forms.size(); ++c) poly.add_term(forms[c], red.reduced.at(r, c));
    out.basis.emplace_back(std::move(poly));
  }

  const std::vector<Exponents> expected{{0, 0, q}, {1, 0, q - 1}, {0, 1, q - 1}, {1, 1, q - 2}};
  if (ker.size() == expected.size()) {
    Matrix both(f, 2 * expected.size(), forms.size());
    for (std::size_t r = 0; r < ker.size(); ++r)
      for (std::size_t c = 0; c < forms.size(); ++c) both.at(r, c) = ker[r][c];
    for (std::size_t r = 0; r < expected.size(); ++r) {
      const auto it = std::find(forms.begin(), forms.end(), expected[r]);
      both.at(ker.size() + r, static_cast<std::size_t>(it - forms.begin())) = f.one();
    }
    out.basis_is_expected = rank(both) == expected.size();
  }

  // Bezout count 2q * q minus the fixed part D = (q-1)G.
  out.series_degree = 2 * q * q - 2 * q * (q - 1);
  return out;
}

AdjointSplit decompose_adjoint(const HomogeneousPlaneCurve& adj, std::uint64_t q) {
  const int k = static_cast<int>(q) - 2;
  AdjointSplit out{k, adj.poly().divide_by_power(2, k)};
  const TowerField& f = adj.poly().field();
  const Fe xi[3] = {f.one(), f.zero(), f.zero()};
  const Fe yi[3] = {f.zero(), f.one(), f.zero()};
  out.conic_through_X_inf = out.conic.evaluate(xi).is_zero();
  out.conic_through_Y_inf = out.conic.evaluate(yi).is_zero();
  return out;
}

DivisorData divisor_check(const CurveParams& params, int precision) {
  DivisorData out;
  out.G_support = infinite_places(params);
  for (const auto& pl : out.G_support) {
    (pl.center == Center::X_inf ? out.P_part : out.Q_part).push_back(pl);
    const auto br = infinite_branch(params, pl, precision);
    const auto ord = br[2].valuation();
    if (!ord || *ord != 1) throw VerificationError("X3 does not vanish simply along an infinite branch");
    out.x3_orders.push_back(*ord);
  }
  const int q = static_cast<int>(params.q);
  out.deg_G = static_cast<int>(out.G_support.size());
  out.deg_D = (q - 1) * out.deg_G;
  // The line X3 = 0 taken q times cuts sum q * ord(X3) = D + G + B.
  int cut = 0;
  for (int o : out.x3_orders) cut += q * o;
  out.deg_B = cut - out.deg_D - out.deg_G;
  out.series_degree = 2 * q * q - out.deg_D;
  return out;
}

}  // namespace asmc
