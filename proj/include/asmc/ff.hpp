#pragma once

// Exact arithmetic in the tower F_p ⊂ F_q ⊂ F_{q^2} ⊂ F_{q^4}, q = p^e.
//
// Every element lives in one ambient field F_{p^{4e}} = F_p[z]/(f), f the
// least monic irreducible of degree 4e in the order of its coefficient
// index. An element is stored as the integer sum c_i p^i of its coefficient
// vector, so index order is lexicographic order with the z^{4e-1}
// coefficient most significant. Subfields are the Frobenius-fixed subsets.
//
// Two arithmetic kernels share that representation:
//   - reference: schoolbook polynomial multiplication mod f, extended
//     Euclid for inversion, square-and-multiply for powers;
//   - table: exponent/logarithm/Zech tables over a primitive element.
// The table kernel is selected at runtime when the field is small enough;
// both are always available for cross-checking.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "asmc/errors.hpp"

namespace asmc {

/// Subfield selector: F_{q^k} for k in {1, 2, 4}.
enum class Level : int { Fq = 1, Fq2 = 2, Fq4 = 4 };

enum class Kernel { automatic, reference, table };

struct TowerOptions {
  /// Largest admissible p^{4e}.
  std::uint64_t size_budget = std::uint64_t{1} << 20;
  /// Largest field for which `automatic` builds lookup tables.
  std::uint64_t table_threshold = std::uint64_t{1} << 20;
  Kernel kernel = Kernel::automatic;
};

bool is_prime(std::uint64_t n);

namespace detail {

class FieldCore {
 public:
  FieldCore(int p, int e, const TowerOptions& opts);

  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int degree() const noexcept { return n_; }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t size() const noexcept { return size_; }
  bool has_tables() const noexcept { return !exp_.empty(); }
  const std::vector<std::uint32_t>& poly() const noexcept { return poly_; }
  std::uint32_t primitive_index() const noexcept { return primitive_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (!has_tables()) return ref_add(a, b);
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t la = log_[a], lb = log_[b];
    std::uint32_t k = lb >= la ? lb - la : lb + order_ - la;
    std::uint32_t z = zech_[k];
    if (z == kNoLog) return 0;
    return exp_[la + z];
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (p_ == 2 || a == 0) return a;
    if (!has_tables()) return ref_neg(a);
    return exp_[log_[a] + order_ / 2];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!has_tables()) return ref_mul(a, b);
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;

  // Reference kernel; always available.
  std::uint32_t ref_add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t ref_neg(std::uint32_t a) const;
  std::uint32_t ref_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t ref_inv(std::uint32_t a) const;
  std::uint32_t ref_pow(std::uint32_t a, std::uint64_t k) const;

  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t from_digits(std::span<const std::uint32_t> d) const;

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  void build_tables();

  int p_, e_, n_;
  std::uint64_t q_, size_;
  std::vector<std::uint32_t> poly_;  // monic, low degree first, n_+1 entries
  std::vector<std::uint32_t> exp_;   // 2 * order_ entries
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;  // odd p only
  std::uint32_t order_ = 0;
  std::uint32_t primitive_ = 0;
};

}  // namespace detail

/// A field element: coefficient-vector index plus the field it belongs to.
/// A default-constructed Fe is the zero of whatever field it meets.
class Fe {
 public:
  Fe() = default;
  Fe(const detail::FieldCore* core, std::uint32_t index) : core_(core), v_(index) {}

  std::uint32_t index() const noexcept { return v_; }
  const detail::FieldCore* core() const noexcept { return core_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  Fe operator-() const { return core_ ? Fe(core_, core_->neg(v_)) : *this; }
  Fe inv() const;
  Fe pow(std::uint64_t k) const;
  /// x^q
  Fe frob() const;
  /// x^q + x
  Fe trace() const { return frob() + *this; }

  friend Fe operator+(Fe a, Fe b) {
    auto* c = a.core_ ? a.core_ : b.core_;
    return c ? Fe(c, c->add(a.v_, b.v_)) : Fe();
  }
  friend Fe operator-(Fe a, Fe b) {
    auto* c = a.core_ ? a.core_ : b.core_;
    return c ? Fe(c, c->sub(a.v_, b.v_)) : Fe();
  }
  friend Fe operator*(Fe a, Fe b) {
    auto* c = a.core_ ? a.core_ : b.core_;
    return c ? Fe(c, c->mul(a.v_, b.v_)) : Fe();
  }
  friend Fe operator/(Fe a, Fe b) { return a * b.inv(); }
  Fe& operator+=(Fe b) { return *this = *this + b; }
  Fe& operator-=(Fe b) { return *this = *this - b; }
  Fe& operator*=(Fe b) { return *this = *this * b; }

  friend bool operator==(Fe a, Fe b) noexcept { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(Fe a, Fe b) noexcept { return a.v_ <=> b.v_; }

 private:
  const detail::FieldCore* core_ = nullptr;
  std::uint32_t v_ = 0;
};

/// s and i with F_{q^2} = F_q(i):
///   odd p: s a non-square of F_q, i^2 = s, i^q = -i;
///   p = 2: s of absolute trace 1, i^2 = i + s, i^q = i + 1.
struct QuadExtDescriptor {
  Fe s;
  Fe i;
};

class TowerField {
 public:
  /// Builds F_{p^{4e}}. Throws ConfigError for non-prime p, e < 1, or a
  /// field larger than opts.size_budget.
  static TowerField build(int p, int e, const TowerOptions& opts = {});

  int p() const noexcept { return core_->p(); }
  int e() const noexcept { return core_->e(); }
  int degree() const noexcept { return core_->degree(); }
  std::uint64_t q() const noexcept { return core_->q(); }
  std::uint64_t size() const noexcept { return core_->size(); }
  Kernel kernel() const noexcept { return core_->has_tables() ? Kernel::table : Kernel::reference; }
  const std::vector<std::uint32_t>& defining_polynomial() const noexcept { return core_->poly(); }
  const detail::FieldCore* core() const noexcept { return core_.get(); }

  Fe zero() const { return Fe(core_.get(), 0); }
  Fe one() const { return Fe(core_.get(), 1); }
  Fe from_int(std::int64_t k) const;
  Fe element(std::uint32_t index) const;
  /// Element with the given power-basis coefficients (low degree first).
  Fe from_coefficients(std::span<const std::int64_t> coeffs) const;
  /// The class of z in F_p[z]/(f).
  Fe generator() const;
  /// Generator of the multiplicative group.
  Fe primitive() const { return Fe(core_.get(), core_->primitive_index()); }

  /// x^{q^k}
  Fe frobenius(Fe x, int k = 1) const;
  Fe trace_q(Fe x) const { return x.trace(); }
  bool subfield_member(Fe x, Level level) const;
  /// All elements of F_{q^k} in index order.
  std::vector<Fe> subfield(Level level) const;
  /// Roots of x^q + x inside the selected subfield, in index order.
  std::vector<Fe> trace_zero_set(Level level = Level::Fq2) const;
  /// The unique gamma with gamma^q = c.
  Fe q_root(Fe c) const { return frobenius(c, 3); }
  QuadExtDescriptor quad_descriptor() const;

  friend bool operator==(const TowerField& a, const TowerField& b) noexcept {
    return a.core_ == b.core_;
  }

 private:
  explicit TowerField(std::shared_ptr<const detail::FieldCore> core) : core_(std::move(core)) {}
  std::shared_ptr<const detail::FieldCore> core_;
};

/// Coefficient-polynomial rendering in the tower generator z; prime-field
/// elements print as plain integers.
std::string to_string(Fe x);

}  // namespace asmc

template <>
struct std::hash<asmc::Fe> {
  std::size_t operator()(asmc::Fe x) const noexcept { return std::hash<std::uint32_t>{}(x.index()); }
};
