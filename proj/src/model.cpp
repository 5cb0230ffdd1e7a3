#include "asmc/model.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "asmc/errors.hpp"
#include "asmc/linalg.hpp"
#include "asmc/symbolic.hpp"

namespace asmc {

namespace {

std::size_t point_rank(const TowerField& f, const std::vector<SpacePoint>& pts) {
  Matrix m(f, pts.size(), 4);
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = pts[r].coords[c];
  return rank(m);
}

std::vector<int> orders_with_retry(const CurveParams& params, int precision,
                                   const std::function<std::array<Series, 3>(int)>& branch_at) {
  const int q = static_cast<int>(params.q);
  for (int n = std::max(precision, 3 * q);; n *= 2) {
    try {
      return space_order_sequence(tau(branch_at(n)));
    } catch (const PrecisionError&) {
      if (n > 16 * q) throw;
    }
  }
}

}  // namespace

SpacePoint SpacePoint::make(std::array<Fe, 4> v) {
  for (std::size_t k = 4; k-- > 0;) {
    if (v[k].is_zero()) continue;
    const Fe s = v[k].inv();
    for (auto& x : v) x = x * s;
    return SpacePoint{v};
  }
  throw std::domain_error("zero vector in PG(3)");
}

SpacePoint tau(const AffinePoint& P) {
  return SpacePoint::make({P.u, P.v, P.u * P.v, Fe(P.u.core(), 1)});
}

SpaceBranch tau(const std::array<Series, 3>& b) {
  std::array<Series, 4> y{b[0] * b[2], b[1] * b[2], b[0] * b[1], b[2] * b[2]};
  std::optional<int> low;
  for (const auto& s : y)
    if (auto v = s.valuation()) low = low ? std::min(*low, *v) : *v;
  if (!low) throw std::domain_error("branch image vanishes to the known precision");
  for (auto& s : y) s = s.shift_down(*low);
  return SpaceBranch{y, SpacePoint::make({y[0][0], y[1][0], y[2][0], y[3][0]})};
}

SpacePoint infinite_center(const InfinitePlace& place) {
  const Fe one(place.d.core(), 1), zero(place.d.core(), 0);
  if (place.center == Center::X_inf) return SpacePoint::make({one, zero, place.d, zero});
  return SpacePoint::make({zero, one, place.d, zero});
}

OmegaReport omega_prime_report(const CurveParams& params, int precision) {
  const TowerField& f = params.field;
  const int q = static_cast<int>(params.q);
  OmegaReport out;
  for (const auto& pl : infinite_places(params)) {
    (pl.center == Center::X_inf ? out.omega1p : out.omega2p).push_back(infinite_center(pl));
    const auto br = tau(infinite_branch(params, pl, std::max(precision, 2 * q + 1)));
    const auto ord = br.series[3].valuation();
    out.y4_orders.push_back(ord ? *ord : -1);
  }
  out.omega1_collinear = point_rank(f, out.omega1p) == 2;
  out.omega2_collinear = point_rank(f, out.omega2p) == 2;
  std::unordered_set<SpacePoint> all(out.omega1p.begin(), out.omega1p.end());
  all.insert(out.omega2p.begin(), out.omega2p.end());
  out.union_size = all.size();

  // a p1 + b p2 = c r1 + d r2 for the spanning pairs of the two lines.
  Matrix m(f, 4, 4);
  const SpacePoint* span[4] = {&out.omega1p[0], &out.omega1p[1], &out.omega2p[0], &out.omega2p[1]};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = c < 2 ? span[c]->coords[r] : -span[c]->coords[r];
  const auto ker = kernel(m);
  if (ker.size() == 1) {
    std::array<Fe, 4> v;
    for (std::size_t r = 0; r < 4; ++r) v[r] = ker[0][0] * span[0]->coords[r] + ker[0][1] * span[1]->coords[r];
    out.meet = SpacePoint::make(v);
    bool on_model = all.count(*out.meet) > 0;
    for (const auto& P : enumerate_points(params, Level::Fq2)) on_model = on_model || tau(P) == *out.meet;
    out.meet_off_model = !on_model;
  }
  return out;
}

std::vector<int> space_order_sequence(const SpaceBranch& branch) {
  return pivot_order_sequence(std::span<const Series>(branch.series.data(), 4));
}

std::vector<int> affine_space_orders(const CurveParams& params, const AffinePoint& P, int precision) {
  return orders_with_retry(params, precision, [&](int n) {
    const auto br = affine_branch(params, P, n);
    return std::array<Series, 3>{br.x, br.y, Series::constant(params.field.one(), n)};
  });
}

std::vector<int> infinite_space_orders(const CurveParams& params, const InfinitePlace& place, int precision) {
  // One extra term: tau divides by t and loses a coefficient.
  return orders_with_retry(params, precision, [&](int n) { return infinite_branch(params, place, n + 1); });
}

NonsingularityReport nonsingularity_check(const CurveParams& params, Level level, std::size_t limit,
                                          std::size_t samples, std::uint64_t seed) {
  NonsingularityReport out;
  std::vector<AffinePoint> pts;
  const std::uint64_t level_size = [&] {
    std::uint64_t s = 1;
    for (int k = 0; k < static_cast<int>(level); ++k) s *= params.q;
    return s;
  }();
  if (level_size <= limit) {
    pts = enumerate_points(params, level);
    out.exhaustive = true;
  } else {
    std::mt19937_64 rng(seed);
    pts = sample_points(params, samples, rng, level);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  }
  out.points = pts.size();
  std::unordered_set<SpacePoint> images;
  for (const auto& P : pts) images.insert(tau(P));
  out.injective = images.size() == pts.size();
  std::unordered_set<SpacePoint> centers;
  out.centers_disjoint = true;
  for (const auto& pl : infinite_places(params)) {
    const SpacePoint c = infinite_center(pl);
    centers.insert(c);
    if (images.count(c)) out.centers_disjoint = false;
  }
  out.centers_distinct = centers.size() == 2 * params.q;
  return out;
}

Matrix4 Matrix4::identity(const TowerField& field) {
  std::array<Fe, 16> e;
  e.fill(field.zero());
  for (int i = 0; i < 4; ++i) e[static_cast<std::size_t>(5 * i)] = field.one();
  return Matrix4(e);
}

SpacePoint Matrix4::apply(const SpacePoint& P) const {
  std::array<Fe, 4> v;
  for (int r = 0; r < 4; ++r) {
    Fe acc = at(r, 0) * P.coords[0];
    for (int c = 1; c < 4; ++c) acc += at(r, c) * P.coords[static_cast<std::size_t>(c)];
    v[static_cast<std::size_t>(r)] = acc;
  }
  return SpacePoint::make(v);
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  std::array<Fe, 16> e;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Fe acc = a.at(r, 0) * b.at(0, c);
      for (int k = 1; k < 4; ++k) acc += a.at(r, k) * b.at(k, c);
      e[static_cast<std::size_t>(4 * r + c)] = acc;
    }
  return Matrix4(e);
}

Fe Matrix4::determinant(const TowerField& field) const {
  Matrix m(field, 4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = at(r, c);
  return asmc::determinant(m);
}

bool Matrix4::projectively_equal(const Matrix4& other) const {
  std::size_t k = 0;
  while (k < 16 && m_[k].is_zero()) ++k;
  if (k == 16 || other.m_[k].is_zero()) return false;
  const Fe s = other.m_[k] / m_[k];
  for (std::size_t i = 0; i < 16; ++i)
    if (!(m_[i] * s == other.m_[i])) return false;
  return true;
}

Matrix4 induced_space_matrix(const CurveParams& params, const PlaneAut& g) {
  const Fe z = params.field.zero(), one = params.field.one();
  const Fe l = g.lambda, li = g.lambda.inv(), a = g.alpha, b = g.beta;
  std::array<Fe, 16> rows{l, z, z, a,  //
                          z, li, z, b,  //
                          l * b, li * a, one, a * b,  //
                          z, z, z, one};
  if (g.swap)
    for (int c = 0; c < 4; ++c) std::swap(rows[static_cast<std::size_t>(c)], rows[static_cast<std::size_t>(4 + c)]);
  return Matrix4(rows);
}

bool zero_pattern_holds(const Matrix4& M, bool swap) {
  // Column j is the image of the j-th coordinate point.
  const bool fixes_z = M.at(0, 2).is_zero() && M.at(1, 2).is_zero() && M.at(3, 2).is_zero() && !M.at(2, 2).is_zero();
  // e1 spans l1 with Z_inf, e2 spans l2 with Z_inf.
  auto on_l1 = [&](int col) { return M.at(1, col).is_zero() && M.at(3, col).is_zero(); };
  auto on_l2 = [&](int col) { return M.at(0, col).is_zero() && M.at(3, col).is_zero(); };
  if (swap) return fixes_z && on_l2(0) && on_l1(1);
  return fixes_z && on_l1(0) && on_l2(1);
}

}  // namespace asmc
