#include "asmc/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace asmc {

Series::Series(const TowerField& field, int precision)
    : core_(field.core()), c_(static_cast<std::size_t>(precision + 1), field.zero()), precision_(precision) {
  if (precision < 0) throw std::invalid_argument("negative series precision");
}

Series::Series(std::vector<Fe> coeffs, int precision) : c_(std::move(coeffs)), precision_(precision) {
  if (precision < 0) throw std::invalid_argument("negative series precision");
  c_.resize(static_cast<std::size_t>(precision + 1));
  for (Fe x : c_)
    if (x.core()) core_ = x.core();
  for (Fe& x : c_)
    if (!x.core()) x = Fe(core_, 0);
}

Series Series::constant(Fe value, int precision) {
  std::vector<Fe> c(static_cast<std::size_t>(precision + 1), Fe(value.core(), 0));
  c[0] = value;
  return Series(std::move(c), precision);
}

Series Series::monomial(Fe coeff, int k, int precision) {
  std::vector<Fe> c(static_cast<std::size_t>(precision + 1), Fe(coeff.core(), 0));
  if (k <= precision) c[k] = coeff;
  return Series(std::move(c), precision);
}

Series Series::t(const TowerField& field, int precision) { return monomial(field.one(), 1, precision); }

Fe Series::operator[](int i) const {
  if (i < 0 || i > precision_) throw std::out_of_range("series coefficient beyond precision");
  return c_[static_cast<std::size_t>(i)];
}

std::optional<int> Series::valuation() const {
  for (int i = 0; i <= precision_; ++i)
    if (!c_[i].is_zero()) return i;
  return std::nullopt;
}

Series operator+(const Series& a, const Series& b) {
  const int n = std::min(a.precision_, b.precision_);
  std::vector<Fe> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) c[i] = a.c_[i] + b.c_[i];
  return Series(std::move(c), n);
}

Series operator-(const Series& a, const Series& b) {
  const int n = std::min(a.precision_, b.precision_);
  std::vector<Fe> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) c[i] = a.c_[i] - b.c_[i];
  return Series(std::move(c), n);
}

Series Series::operator-() const {
  std::vector<Fe> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Series(std::move(c), precision_);
}

Series operator*(const Series& a, const Series& b) {
  const int n = std::min(a.precision_, b.precision_);
  std::vector<Fe> c(static_cast<std::size_t>(n + 1), Fe(a.core_ ? a.core_ : b.core_, 0));
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Series(std::move(c), n);
}

Series operator*(Fe s, const Series& a) {
  std::vector<Fe> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
  return Series(std::move(c), a.precision_);
}

Series Series::inverse() const {
  if (c_.empty() || c_[0].is_zero()) throw std::domain_error("series inverse needs a nonzero constant term");
  const Fe lead_inv = c_[0].inv();
  std::vector<Fe> r(c_.size(), Fe(core_, 0));
  r[0] = lead_inv;
  for (int k = 1; k <= precision_; ++k) {
    Fe acc(core_, 0);
    for (int j = 1; j <= k; ++j) {
      if (c_[j].is_zero()) continue;
      acc += c_[j] * r[k - j];
    }
    r[k] = -(acc * lead_inv);
  }
  return Series(std::move(r), precision_);
}

Series Series::compose(const Series& inner) const {
  if (inner.c_.empty() || !inner.c_[0].is_zero())
    throw std::domain_error("composition needs an inner series with zero constant term");
  const int n = std::min(precision_, inner.precision_);
  Series acc = Series::constant(c_[static_cast<std::size_t>(n)], n);
  for (int k = n - 1; k >= 0; --k) acc = acc * inner.truncate(n) + Series::constant(c_[k], n);
  return acc;
}

Series Series::pow(std::uint64_t k) const {
  Series result = Series::constant(Fe(core_, 1), precision_);
  Series base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Series Series::shift_down(int k) const {
  if (k < 0 || k > precision_) throw PrecisionError("shift exceeds series precision");
  for (int i = 0; i < k; ++i)
    if (!c_[i].is_zero()) throw std::domain_error("series is not divisible by the requested power of t");
  return Series(std::vector<Fe>(c_.begin() + k, c_.end()), precision_ - k);
}

Series Series::truncate(int precision) const {
  if (precision > precision_) throw PrecisionError("cannot raise series precision by truncation");
  return Series(std::vector<Fe>(c_.begin(), c_.begin() + precision + 1), precision);
}

std::string Series::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= precision_; ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << asmc::to_string(c_[i]) << ')';
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
  }
  if (first) os << '0';
  os << " + O(t^" << precision_ + 1 << ')';
  return os.str();
}

}  // namespace asmc
