#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "asmc/ff.hpp"

namespace asmc {

using Exponents = std::vector<int>;

/// Graded lexicographic order, higher total degree first.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over the tower field. Zero coefficients
/// are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Fe, GradedLex>;

  MultiPoly(TowerField field, std::vector<std::string> variables);

  static MultiPoly constant(TowerField field, std::vector<std::string> variables, Fe value);
  static MultiPoly variable(TowerField field, std::vector<std::string> variables, std::size_t index);
  static MultiPoly monomial(TowerField field, std::vector<std::string> variables, Exponents exps, Fe coeff);

  const TowerField& field() const noexcept { return field_; }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Fe coefficient(const Exponents& exps) const;

  void add_term(const Exponents& exps, Fe coeff);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(Fe s, const MultiPoly& a);
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly pow(std::uint64_t k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Formal partial derivative (exponents reduced mod p in the coefficient).
  MultiPoly derivative(std::size_t var) const;
  Fe evaluate(std::span<const Fe> point) const;
  /// Replaces variable k by images[k]; all images share one variable list.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  /// Exact division by vars[var]^k; throws std::domain_error if some term
  /// has a smaller exponent.
  MultiPoly divide_by_power(std::size_t var, int k) const;
  /// Sum of the terms of the given total degree.
  MultiPoly homogeneous_part(int degree) const;
  /// Smallest total degree of a term; -1 for zero.
  int min_degree() const;

  std::string to_string() const;

 private:
  TowerField field_;
  std::vector<std::string> vars_;
  Terms terms_;
};

/// All exponent vectors of n variables with total degree d, in graded-lex order.
std::vector<Exponents> monomials_of_degree(std::size_t n, int d);

}  // namespace asmc
