#include "asmc/symbolic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace asmc {

Series substitute_branch(const MultiPoly& poly, std::span<const Series> branch) {
  if (branch.size() != poly.nvars()) throw std::invalid_argument("branch arity does not match polynomial");
  if (branch.empty()) throw std::invalid_argument("empty branch");
  int n = branch.front().precision();
  for (const auto& s : branch) n = std::min(n, s.precision());
  if (n < 0) throw PrecisionError("branch has no known coefficients");

  std::vector<std::map<int, Series>> cache(branch.size());
  auto power = [&](std::size_t v, int k) -> const Series& {
    auto it = cache[v].find(k);
    if (it != cache[v].end()) return it->second;
    return cache[v].emplace(k, branch[v].truncate(n).pow(static_cast<std::uint64_t>(k))).first->second;
  };
  Series acc(poly.field(), n);
  for (const auto& [e, c] : poly.terms()) {
    Series m = Series::constant(c, n);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m = m * power(i, e[i]);
    acc += m;
  }
  return acc;
}

std::vector<int> pivot_order_sequence(std::span<const Series> series, std::optional<int> precision) {
  if (series.empty()) return {};
  int n = series.front().precision();
  for (const auto& s : series) n = std::min(n, s.precision());
  if (precision) {
    if (*precision > n) throw PrecisionError("requested precision exceeds the series precision");
    n = *precision;
  }
  // Row reduction with leftmost pivots, done in place on coefficient rows.
  std::vector<std::vector<Fe>> rows;
  rows.reserve(series.size());
  for (const auto& s : series) rows.emplace_back(s.coefficients().begin(), s.coefficients().begin() + n + 1);
  std::vector<int> orders;
  std::size_t next = 0;
  for (int col = 0; col <= n && next < rows.size(); ++col) {
    std::size_t sel = next;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[next]);
    const Fe inv = rows[next][col].inv();
    for (std::size_t r = next + 1; r < rows.size(); ++r) {
      const Fe f = rows[r][col] * inv;
      if (f.is_zero()) continue;
      for (int c = col; c <= n; ++c) rows[r][c] -= f * rows[next][c];
    }
    orders.push_back(col);
    ++next;
  }
  if (orders.size() < series.size())
    throw PrecisionError("only " + std::to_string(orders.size()) + " of " + std::to_string(series.size()) +
                         " orders visible at precision " + std::to_string(n) + "; raise precision");
  return orders;
}

Series lift_root(const MultiPoly& f, const Series& param, Fe z0, int precision) {
  if (f.nvars() != 2) throw std::invalid_argument("lift_root expects a polynomial in two variables");
  const Fe s0 = param[0];
  const MultiPoly fz = f.derivative(1);
  {
    const Fe at[2] = {s0, z0};
    if (!f.evaluate(at).is_zero()) throw std::invalid_argument("initial value is not a root");
    if (fz.evaluate(at).is_zero()) throw std::invalid_argument("root is not simple; Newton lift undefined");
  }
  const Series s = param.truncate(precision);
  Series z = Series::constant(z0, precision);
  // Newton doubles the number of correct coefficients each step.
  int max_steps = 2;
  for (int k = 1; k < precision + 1; k *= 2) ++max_steps;
  for (int step = 0; step <= max_steps; ++step) {
    const Series br[2] = {s, z};
    const Series residual = substitute_branch(f, br);
    if (residual.is_zero()) return z;
    const Series slope = substitute_branch(fz, br);
    z = z - residual * slope.inverse();
  }
  throw VerificationError("Newton lift did not converge");
}

Series hensel_branch(const CurveParams& params, Fe u, Fe v, int precision) {
  const MultiPoly f = params.affine_equation();
  const Fe pt[2] = {u, v};
  if (!f.evaluate(pt).is_zero()) throw std::invalid_argument("point is not on the curve");
  if (u.trace().is_zero()) throw std::invalid_argument("Tr(u) = 0: no affine branch");
  const Series x = Series::constant(u, precision) + Series::t(params.field, precision);
  return lift_root(f, x, v, precision);
}

}  // namespace asmc
