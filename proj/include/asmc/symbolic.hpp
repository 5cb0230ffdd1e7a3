#pragma once

// Branch-level symbolic machinery: evaluation of polynomials along a
// parametrized branch, Newton (Hensel) lifting of simple roots, and the
// pivot computation turning a tuple of series into an order sequence.

#include <optional>
#include <span>
#include <vector>

#include "asmc/curve_params.hpp"
#include "asmc/multipoly.hpp"
#include "asmc/series.hpp"

namespace asmc {

/// poly(branch[0](t), branch[1](t), ...), exact to the shared precision.
Series substitute_branch(const MultiPoly& poly, std::span<const Series> branch);

/// The valuations attained by linear combinations of the given series,
/// read off as pivot columns of the row-reduced coefficient matrix. The
/// result is strictly increasing and has one entry per series.
/// Throws PrecisionError when fewer pivots than series appear.
std::vector<int> pivot_order_sequence(std::span<const Series> series, std::optional<int> precision = {});

/// Unique Z(t) with Z(0) = z0 and f(param(t), Z(t)) = O(t^{N+1}), for f in
/// two variables whose Z-derivative does not vanish at (param(0), z0).
Series lift_root(const MultiPoly& f, const Series& param, Fe z0, int precision);

/// Y(t) with Y(0) = v on the branch X = u + t of the curve at (u, v).
/// Throws std::invalid_argument when (u, v) is off the curve or Tr(u) = 0.
Series hensel_branch(const CurveParams& params, Fe u, Fe v, int precision);

}  // namespace asmc
