#include "asmc/curve_params.hpp"

namespace asmc {

CurveParams CurveParams::make(const TowerField& field, Fe c) {
  if (c.is_zero()) throw ConfigError("curve constant c must be nonzero");
  return CurveParams{field, field.p(), field.e(), field.q(), c, field.q_root(c)};
}

MultiPoly CurveParams::affine_equation() const {
  const std::vector<std::string> vars{"X", "Y"};
  const int qi = static_cast<int>(q);
  MultiPoly f(field, vars);
  f.add_term({qi, qi}, field.one());
  f.add_term({qi, 1}, field.one());
  f.add_term({1, qi}, field.one());
  f.add_term({1, 1}, field.one());
  f.add_term({0, 0}, -c);
  return f;
}

MultiPoly CurveParams::projective_equation() const {
  const std::vector<std::string> vars{"X1", "X2", "X3"};
  const int qi = static_cast<int>(q);
  MultiPoly f(field, vars);
  f.add_term({qi, qi, 0}, field.one());
  f.add_term({qi, 1, qi - 1}, field.one());
  f.add_term({1, qi, qi - 1}, field.one());
  f.add_term({1, 1, 2 * qi - 2}, field.one());
  f.add_term({0, 0, 2 * qi}, -c);
  return f;
}

}  // namespace asmc
