#pragma once

// The space model: image of the curve under
// (X1, X2, X3) -> (X1 X3, X2 X3, X1 X2, X3^2) in PG(3).

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "asmc/aut.hpp"
#include "asmc/curve.hpp"
#include "asmc/series.hpp"

namespace asmc {

/// Projective point scaled so that its last nonzero coordinate is 1.
struct SpacePoint {
  std::array<Fe, 4> coords;

  /// Throws std::domain_error on the zero vector.
  static SpacePoint make(std::array<Fe, 4> v);
  friend bool operator==(const SpacePoint&, const SpacePoint&) = default;
};

struct SpaceBranch {
  std::array<Series, 4> series;
  SpacePoint center;
};

SpacePoint tau(const AffinePoint& P);
/// Coordinatewise products, divided by the smallest power of t.
SpaceBranch tau(const std::array<Series, 3>& branch);

SpacePoint infinite_center(const InfinitePlace& place);

struct OmegaReport {
  std::vector<SpacePoint> omega1p;
  std::vector<SpacePoint> omega2p;
  bool omega1_collinear = false;
  bool omega2_collinear = false;
  std::size_t union_size = 0;
  std::optional<SpacePoint> meet;
  /// The meet is not among the F_{q^2} points of the model.
  bool meet_off_model = false;
  /// Order of Y4 along each infinite branch; all 1 means the plane at
  /// infinity meets the model simply at each of these points.
  std::vector<int> y4_orders;
};

OmegaReport omega_prime_report(const CurveParams& params, int precision = 0);

/// Pivot orders of the four coordinate series. Throws PrecisionError on
/// pivot deficiency.
std::vector<int> space_order_sequence(const SpaceBranch& branch);
/// Same, building the branch and doubling the precision (from max(N, 3q))
/// until four orders are visible.
std::vector<int> affine_space_orders(const CurveParams& params, const AffinePoint& P, int precision);
std::vector<int> infinite_space_orders(const CurveParams& params, const InfinitePlace& place, int precision);

struct NonsingularityReport {
  std::size_t points = 0;
  bool injective = false;
  bool centers_distinct = false;
  bool centers_disjoint = false;
  bool exhaustive = false;
};

/// tau is injective on the affine points of the level and keeps the 2q
/// centres at infinity apart from them. Levels with more than `limit`
/// elements fall back to `samples` seeded points.
NonsingularityReport nonsingularity_check(const CurveParams& params, Level level, std::size_t limit = 1u << 16,
                                          std::size_t samples = 10000, std::uint64_t seed = 42);

class Matrix4 {
 public:
  explicit Matrix4(std::array<Fe, 16> entries) : m_(entries) {}
  static Matrix4 identity(const TowerField& field);

  Fe at(int r, int c) const { return m_[static_cast<std::size_t>(4 * r + c)]; }
  SpacePoint apply(const SpacePoint& P) const;
  friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);
  Fe determinant(const TowerField& field) const;
  /// Equal up to a nonzero scalar.
  bool projectively_equal(const Matrix4& other) const;

 private:
  std::array<Fe, 16> m_;
};

/// The matrix M with tau o g = M o tau.
Matrix4 induced_space_matrix(const CurveParams& params, const PlaneAut& g);

/// M fixes Z_inf = (0,0,1,0) and maps each of the lines Y2 = Y4 = 0 and
/// Y1 = Y4 = 0 to itself, or swaps them when `swap` is set.
bool zero_pattern_holds(const Matrix4& M, bool swap);

}  // namespace asmc

template <>
struct std::hash<asmc::SpacePoint> {
  std::size_t operator()(const asmc::SpacePoint& P) const noexcept {
    std::uint64_t h = 0;
    for (auto x : P.coords) h = h * 1000003u + x.index();
    return static_cast<std::size_t>(h);
  }
};
