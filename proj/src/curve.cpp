#include "asmc/curve.hpp"

#include <algorithm>
#include <stdexcept>

#include "asmc/adjoint.hpp"
#include "asmc/errors.hpp"
#include "asmc/symbolic.hpp"

namespace asmc {

bool on_curve(const CurveParams& params, const AffinePoint& P) {
  return P.u.trace() * P.v.trace() == params.c;
}

TraceFibers::TraceFibers(const TowerField& field, Level level) : domain_(field.subfield(level)) {
  for (Fe x : domain_) fibres_[x.trace()].push_back(x);
}

const std::vector<Fe>& TraceFibers::fibre(Fe value) const {
  auto it = fibres_.find(value);
  return it == fibres_.end() ? empty_ : it->second;
}

std::vector<AffinePoint> enumerate_points(const CurveParams& params, Level level) {
  const TraceFibers fibres(params.field, level);
  std::vector<AffinePoint> out;
  for (Fe u : fibres.domain()) {
    const Fe tu = u.trace();
    if (tu.is_zero()) continue;
    for (Fe v : fibres.fibre(params.c / tu)) out.push_back({u, v});
  }
  return out;
}

std::vector<AffinePoint> sample_points(const CurveParams& params, std::size_t count, std::mt19937_64& rng,
                                       Level level) {
  const TraceFibers fibres(params.field, level);
  const auto& dom = fibres.domain();
  std::vector<AffinePoint> out;
  out.reserve(count);
  while (out.size() < count) {
    const Fe u = dom[rng() % dom.size()];
    const Fe tu = u.trace();
    if (tu.is_zero()) continue;
    const auto& vs = fibres.fibre(params.c / tu);
    if (vs.empty()) continue;
    out.push_back({u, vs[rng() % vs.size()]});
  }
  return out;
}

std::vector<InfinitePlace> infinite_places(const CurveParams& params) {
  std::vector<InfinitePlace> out;
  const auto slopes = params.field.trace_zero_set(Level::Fq2);
  for (Center c : {Center::X_inf, Center::Y_inf})
    for (Fe d : slopes) out.push_back({c, d});
  return out;
}

CurveReport singularity_and_genus(const CurveParams& params) {
  const TowerField& f = params.field;
  const HomogeneousPlaneCurve curve(params.projective_equation());
  const auto tz = f.trace_zero_set(Level::Fq2);
  CurveReport out;
  const int deg = curve.degree();
  int genus2 = (deg - 1) * (deg - 2);
  for (const ProjPoint& pt : {ProjPoint{f.one(), f.zero(), f.zero()}, ProjPoint{f.zero(), f.one(), f.zero()}}) {
    SingularPoint sp;
    sp.point = pt;
    sp.multiplicity = multiplicity_at(curve, pt);
    const TangentLines lines = tangent_lines(curve, pt);
    sp.tangents = lines.count();
    sp.tangent_slopes = lines.slopes;
    sp.slopes_are_trace_zero_set = !lines.vertical && lines.slopes == tz;
    genus2 -= sp.multiplicity * (sp.multiplicity - 1);
    out.place_count_infinity += static_cast<std::uint64_t>(sp.tangents);
    out.singular_points.push_back(std::move(sp));
  }
  out.genus = genus2 / 2;

  const MultiPoly F = params.affine_equation();
  const MultiPoly Fx = F.derivative(0), Fy = F.derivative(1);
  out.affine_points_smooth = true;
  for (const auto& P : enumerate_points(params, Level::Fq4)) {
    const Fe at[2] = {P.u, P.v};
    ++out.affine_points_checked;
    if (Fx.evaluate(at).is_zero() && Fy.evaluate(at).is_zero()) out.affine_points_smooth = false;
  }
  if (f.subfield_member(params.c, Level::Fq2)) out.affine_count_Fq2 = enumerate_points(params, Level::Fq2).size();
  return out;
}

BranchExpansion affine_branch(const CurveParams& params, const AffinePoint& P, int precision) {
  const int q = static_cast<int>(params.q);
  const int n = std::max(precision, q + 1);
  const Series y = hensel_branch(params, P.u, P.v, n);
  BranchExpansion out;
  out.point = P;
  out.x = Series::constant(P.u, precision) + Series::t(params.field, precision);
  out.y = y.truncate(precision);

  const Fe tu = P.u.trace(), tv = P.v.trace();
  const Fe v1 = y[1];
  Fe sign = params.field.one();
  for (int i = 1; i <= q + 1; ++i) {
    sign = -sign;
    Fe closed = sign * tv / tu.pow(static_cast<std::uint64_t>(i));
    if (i == q) closed = closed - v1.trace();
    out.closed_form.push_back(y[i] == closed);
  }
  out.residual_q = tv + y[q] * tu + v1.frob() * tu + y[q - 1];
  out.residual_q1 = v1 + v1.frob() + y[q] + y[q + 1] * tu;
  return out;
}

std::array<Series, 3> infinite_branch(const CurveParams& params, const InfinitePlace& place, int precision) {
  const TowerField& f = params.field;
  if (!place.d.trace().is_zero()) throw std::invalid_argument("tangent slope must have trace zero");
  const int q = static_cast<int>(params.q);
  // In the chart of the centre put X3 = T and the other coordinate T*W,
  // then strip the factor T^q shared by all terms.
  const std::vector<std::string> tw{"T", "W"};
  const MultiPoly T = MultiPoly::variable(f, tw, 0), W = MultiPoly::variable(f, tw, 1);
  const MultiPoly one = MultiPoly::constant(f, tw, f.one());
  const bool at_x = place.center == Center::X_inf;
  const std::vector<MultiPoly> images = at_x ? std::vector<MultiPoly>{one, T * W, T} : std::vector<MultiPoly>{T * W, one, T};
  const MultiPoly G = params.projective_equation().substitute(images).divide_by_power(0, q);

  const Series t = Series::t(f, precision);
  const Series w = lift_root(G, t, place.d, precision);
  const Series moving = t * w;
  const Series unit = Series::constant(f.one(), precision);
  if (at_x) return {unit, moving, t};
  return {moving, unit, t};
}

}  // namespace asmc
