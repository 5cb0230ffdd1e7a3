#pragma once

// The group generated by (X, Y) -> (lambda X + alpha, lambda^{-1} Y + beta)
// with Tr(alpha) = Tr(beta) = 0, lambda^{q-1} = 1, and the swap (Y, X).

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "asmc/curve.hpp"

namespace asmc {

/// xi^swap o phi_{alpha, beta, lambda}; phi acts first.
struct PlaneAut {
  Fe alpha;
  Fe beta;
  Fe lambda;
  bool swap = false;

  AffinePoint apply(const AffinePoint& P) const;
  InfinitePlace apply(const InfinitePlace& place) const;
  bool is_identity() const { return alpha.is_zero() && beta.is_zero() && lambda.is_one() && !swap; }

  friend bool operator==(const PlaneAut&, const PlaneAut&) = default;
};

/// Throws std::invalid_argument unless Tr(alpha) = Tr(beta) = 0 and
/// lambda^{q-1} = 1.
PlaneAut make_aut(const CurveParams& params, Fe alpha, Fe beta, Fe lambda, bool swap);
PlaneAut identity_aut(const CurveParams& params);
/// outer o inner
PlaneAut compose(const PlaneAut& outer, const PlaneAut& inner);
PlaneAut inverse(const PlaneAut& g);

/// F(g(X, Y)) == F(X, Y) as polynomials.
bool symbolic_invariance(const CurveParams& params, const PlaneAut& g);

/// All elements reachable from the standard generators, in discovery order
/// starting with the identity. Throws ConfigError when q > max_q.
std::vector<PlaneAut> group_closure(const CurveParams& params, std::uint64_t max_q = 16);

struct GroupReport {
  std::size_t order = 0;
  std::size_t delta_order = 0;
  std::size_t delta1_order = 0;
  std::size_t delta2_order = 0;
  std::size_t c_order = 0;
  std::size_t dihedral_order = 0;
  bool delta_normal = false;
  bool delta_elementary_abelian = false;
  bool c_cyclic = false;
  bool dihedral_relations = false;
  bool semidirect_verified = false;
  bool all_invariant = false;
};

GroupReport closure_and_structure(const CurveParams& params);

using Place = std::variant<AffinePoint, InfinitePlace>;

struct OrbitReport {
  std::vector<std::size_t> orbit_sizes;
  bool sigma_sharply_transitive = false;
  bool sigma_exhaustive = false;
  std::size_t pairs_checked = 0;
  std::vector<AffinePoint> xi_fixed_points;
  /// xi fixes exactly the points (a, a) with Tr(a)^2 = c.
  bool xi_fixed_expected = false;
  bool faithful = false;
  /// The action on places at infinity agrees with the induced 4x4 action
  /// on the centres P_d, Q_d.
  bool infinite_action_matches_matrix = false;
};

/// Orbits on the F_{q^2} places. Pairs for the sharp transitivity test are
/// exhaustive for q <= 3 and `pairs` seeded draws otherwise.
OrbitReport orbit_analysis(const CurveParams& params, std::uint64_t seed = 42, std::size_t pairs = 1000);

/// u = a1 + i b1, v = a2 + i b2 in the basis {1, i} of F_{q^2} over F_q.
struct RationalPointForm {
  Fe a1, b1, a2, b2;
  QuadExtDescriptor quad;
  /// a2 = c / (4 a1) for odd p; b2 = c / b1 for p = 2.
  bool constraint_holds = false;
};

/// Throws std::invalid_argument when P is not F_{q^2}-rational or c is not
/// in F_q.
RationalPointForm rational_point_form(const CurveParams& params, const AffinePoint& P, const QuadExtDescriptor& quad);

struct LinearSearchReport {
  std::size_t candidates = 0;
  std::size_t found = 0;
  bool all_in_group = false;
};

/// Maps (aX + e, bY + f), optionally followed by the swap, with
/// a, b, e, f in F_{q^2}, that carry the curve polynomial to a scalar
/// multiple of itself. Throws ConfigError for q > 4.
LinearSearchReport linear_automorphism_search(const CurveParams& params);

}  // namespace asmc

template <>
struct std::hash<asmc::PlaneAut> {
  std::size_t operator()(const asmc::PlaneAut& g) const noexcept {
    std::uint64_t h = g.alpha.index();
    h = h * 1000003u + g.beta.index();
    h = h * 1000003u + g.lambda.index();
    return static_cast<std::size_t>(h * 2 + (g.swap ? 1 : 0));
  }
};
