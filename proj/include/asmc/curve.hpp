#pragma once

// The plane curve (X^q + X)(Y^q + Y) = c: points, places at infinity,
// singularity data and local branch expansions.

#include <array>
#include <compare>
#include <random>
#include <unordered_map>
#include <vector>

#include "asmc/curve_params.hpp"
#include "asmc/series.hpp"

namespace asmc {

struct AffinePoint {
  Fe u;
  Fe v;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
  friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

enum class Center { X_inf, Y_inf };

/// A branch centred at X_inf = (1:0:0) or Y_inf = (0:1:0), labelled by the
/// slope d of its tangent line (Y = d at X_inf, X = d at Y_inf).
struct InfinitePlace {
  Center center;
  Fe d;
  friend bool operator==(const InfinitePlace&, const InfinitePlace&) = default;
};

using ProjPoint = std::array<Fe, 3>;

struct SingularPoint {
  ProjPoint point;
  int multiplicity = 0;
  /// Number of distinct tangent lines.
  int tangents = 0;
  std::vector<Fe> tangent_slopes;
  bool slopes_are_trace_zero_set = false;
};

struct CurveReport {
  int genus = 0;
  std::vector<SingularPoint> singular_points;
  std::uint64_t affine_count_Fq2 = 0;
  std::uint64_t place_count_infinity = 0;
  /// Number of F_{q^4} affine points checked for singularity, and whether
  /// all of them were smooth.
  std::uint64_t affine_points_checked = 0;
  bool affine_points_smooth = false;
};

struct BranchExpansion {
  AffinePoint point;
  Series x;
  Series y;
  /// closed_form[i - 1] compares v_i with the closed form, i = 1..q+1.
  std::vector<bool> closed_form;
  /// v^q + v + v_q Tr(u) + v_1^q Tr(u) + v_{q-1}
  Fe residual_q;
  /// v_1 + v_1^q + v_q + v_{q+1} Tr(u)
  Fe residual_q1;
};

bool on_curve(const CurveParams& params, const AffinePoint& P);

/// Fibres of x -> x^q + x over the given subfield, keyed by trace value.
class TraceFibers {
 public:
  TraceFibers(const TowerField& field, Level level);
  const std::vector<Fe>& fibre(Fe value) const;
  const std::vector<Fe>& domain() const noexcept { return domain_; }

 private:
  std::vector<Fe> domain_;
  std::unordered_map<Fe, std::vector<Fe>> fibres_;
  std::vector<Fe> empty_;
};

/// Every affine point with coordinates in the subfield, sorted by (u, v).
std::vector<AffinePoint> enumerate_points(const CurveParams& params, Level level);

/// Uniformly chosen u with Tr(u) != 0 and c / Tr(u) in the image of the
/// trace, then v uniform in the fibre. Repeats are possible.
std::vector<AffinePoint> sample_points(const CurveParams& params, std::size_t count, std::mt19937_64& rng,
                                       Level level = Level::Fq4);

/// The 2q places at infinity, X_inf first, slopes ascending.
std::vector<InfinitePlace> infinite_places(const CurveParams& params);

CurveReport singularity_and_genus(const CurveParams& params);

/// Branch X = u + t, Y = v + v_1 t + ... at P, known to precision N.
BranchExpansion affine_branch(const CurveParams& params, const AffinePoint& P, int precision);

/// Projective branch (X1, X2, X3) at an infinite place: (1, t w(t), t) at
/// X_inf and (t w(t), 1, t) at Y_inf, with w(0) = d.
std::array<Series, 3> infinite_branch(const CurveParams& params, const InfinitePlace& place, int precision);

}  // namespace asmc
