#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asmc/ff.hpp"

namespace asmc {

/// Univariate power series c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}).
/// Coefficients beyond the precision N are unknown, and arithmetic never
/// reports more precision than its least precise operand.
class Series {
 public:
  Series() = default;
  /// Zero series known to precision N.
  Series(const TowerField& field, int precision);
  Series(std::vector<Fe> coeffs, int precision);

  static Series constant(Fe value, int precision);
  /// coeff * t^k
  static Series monomial(Fe coeff, int k, int precision);
  /// The local parameter t itself.
  static Series t(const TowerField& field, int precision);

  int precision() const noexcept { return precision_; }
  const std::vector<Fe>& coefficients() const noexcept { return c_; }
  Fe operator[](int i) const;
  const detail::FieldCore* core() const noexcept { return core_; }

  /// Index of the first nonzero coefficient, or nullopt when all known
  /// coefficients vanish.
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Fe s, const Series& a);
  Series operator-() const;
  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator*=(const Series& b) { return *this = *this * b; }

  /// Multiplicative inverse; throws std::domain_error on zero constant term.
  Series inverse() const;
  /// this(inner(t)); inner must have zero constant term.
  Series compose(const Series& inner) const;
  Series pow(std::uint64_t k) const;
  /// Division by t^k; requires c_0..c_{k-1} = 0 and loses k of precision.
  Series shift_down(int k) const;
  Series truncate(int precision) const;

  std::string to_string() const;

 private:
  const detail::FieldCore* core_ = nullptr;
  std::vector<Fe> c_;
  int precision_ = -1;
};

}  // namespace asmc
