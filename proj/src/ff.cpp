#include "asmc/ff.hpp"

#include <algorithm>
#include <sstream>

namespace asmc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomials over F_p, low degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, b = a % p, k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r;
}

// Returns (quotient, remainder) of a / b, b nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  Poly quot;
  if (a.size() < b.size()) return {quot, a};
  quot.assign(a.size() - b.size() + 1, 0);
  std::uint64_t lead_inv = inv_mod_p(b.back(), p);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    std::uint64_t coef = a[k] * lead_inv % p;
    if (coef == 0) continue;
    std::size_t shift = k + 1 - b.size();
    quot[shift] = coef;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p * p - coef * b[j] % p) % p;
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  return divmod(poly_mul(a, b, p), m, p).second;
}

Poly powmod(Poly a, std::uint64_t k, const Poly& m, std::uint64_t p) {
  Poly r{1};
  a = divmod(a, m, p).second;
  while (k) {
    if (k & 1) r = mulmod(r, a, m, p);
    a = mulmod(a, a, m, p);
    k >>= 1;
  }
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin: f of degree n is irreducible iff z^{p^n} = z mod f and
// gcd(z^{p^{n/r}} - z, f) = 1 for every prime r | n.
bool rabin_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  const Poly z{0, 1};
  auto frob_iter = [&](std::size_t k) {
    Poly h = z;
    for (std::size_t i = 0; i < k; ++i) h = powmod(h, p, f, p);
    return h;
  };
  if (poly_sub(frob_iter(n), z, p).size() != 0) return false;
  for (std::uint64_t r : prime_factors(n)) {
    Poly g = gcd(f, poly_sub(frob_iter(n / r), z, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

namespace detail {

FieldCore::FieldCore(int p, int e, const TowerOptions& opts) : p_(p), e_(e), n_(4 * e) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw ConfigError("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw ConfigError("exponent e must be positive");
  size_ = checked_pow(p, n_, opts.size_budget);
  if (size_ > opts.size_budget)
    throw ConfigError("field of size " + std::to_string(p) + "^" + std::to_string(n_) +
                      " exceeds the size budget " + std::to_string(opts.size_budget));
  q_ = checked_pow(p, e, size_);
  order_ = static_cast<std::uint32_t>(size_ - 1);

  // Least monic irreducible in coefficient-index order.
  const std::uint64_t up = static_cast<std::uint64_t>(p);
  for (std::uint64_t idx = 0; idx < size_; ++idx) {
    Poly f(n_ + 1, 0);
    for (std::uint64_t i = 0, rest = idx; i < static_cast<std::uint64_t>(n_); ++i, rest /= up) f[i] = rest % up;
    f[n_] = 1;
    if (f[0] == 0) continue;  // divisible by z
    if (rabin_irreducible(f, up)) {
      poly_.assign(f.begin(), f.end());
      break;
    }
  }
  if (poly_.empty()) throw VerificationError("no irreducible polynomial found");

  // Least primitive element by index.
  const auto factors = prime_factors(order_);
  for (std::uint32_t g = 1; g < size_; ++g) {
    bool ok = true;
    for (std::uint64_t r : factors) {
      if (ref_pow(g, order_ / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = g;
      break;
    }
  }

  bool want_tables = opts.kernel == Kernel::table ||
                     (opts.kernel == Kernel::automatic && size_ <= opts.table_threshold);
  if (want_tables) build_tables();
}

void FieldCore::build_tables() {
  exp_.assign(2 * static_cast<std::size_t>(order_), 0);
  log_.assign(size_, kNoLog);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order_; ++i) {
    exp_[i] = x;
    exp_[i + order_] = x;
    log_[x] = i;
    x = ref_mul(x, primitive_);
  }
  if (x != 1) throw VerificationError("primitive element has wrong order");
  if (p_ != 2) {
    zech_.assign(order_, kNoLog);
    for (std::uint32_t k = 0; k < order_; ++k) {
      std::uint32_t s = ref_add(1, exp_[k]);
      zech_[k] = s == 0 ? kNoLog : log_[s];
    }
  }
}

std::uint32_t FieldCore::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (!has_tables()) return ref_inv(a);
  return exp_[order_ - log_[a]];
}

std::uint32_t FieldCore::pow(std::uint32_t a, std::uint64_t k) const {
  if (!has_tables()) return ref_pow(a, k);
  if (k == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t e = (static_cast<std::uint64_t>(log_[a]) * (k % order_)) % order_;
  return exp_[e];
}

std::vector<std::uint32_t> FieldCore::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> d(n_, 0);
  for (int i = 0; i < n_; ++i) {
    d[i] = a % static_cast<std::uint32_t>(p_);
    a /= static_cast<std::uint32_t>(p_);
  }
  return d;
}

std::uint32_t FieldCore::from_digits(std::span<const std::uint32_t> d) const {
  std::uint32_t r = 0;
  for (std::size_t i = d.size(); i-- > 0;) r = r * static_cast<std::uint32_t>(p_) + d[i];
  return r;
}

std::uint32_t FieldCore::ref_add(std::uint32_t a, std::uint32_t b) const {
  auto da = digits(a), db = digits(b);
  for (int i = 0; i < n_; ++i) da[i] = (da[i] + db[i]) % static_cast<std::uint32_t>(p_);
  return from_digits(da);
}

std::uint32_t FieldCore::ref_neg(std::uint32_t a) const {
  auto d = digits(a);
  for (auto& x : d) x = (static_cast<std::uint32_t>(p_) - x) % static_cast<std::uint32_t>(p_);
  return from_digits(d);
}

std::uint32_t FieldCore::ref_mul(std::uint32_t a, std::uint32_t b) const {
  const std::uint64_t p = static_cast<std::uint64_t>(p_);
  auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> r(2 * n_ - 1, 0);
  for (int i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < n_; ++j) r[i + j] = (r[i + j] + std::uint64_t{da[i]} * db[j]) % p;
  }
  for (int k = 2 * n_ - 2; k >= n_; --k) {
    std::uint64_t coef = r[k];
    if (coef == 0) continue;
    r[k] = 0;
    for (int j = 0; j < n_; ++j) r[k - n_ + j] = (r[k - n_ + j] + p * p - coef * poly_[j] % p) % p;
  }
  std::vector<std::uint32_t> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>(r[i]);
  return from_digits(out);
}

std::uint32_t FieldCore::ref_inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint64_t p = static_cast<std::uint64_t>(p_);
  Poly f(poly_.begin(), poly_.end());
  auto da = digits(a);
  Poly r1(da.begin(), da.end());
  trim(r1);
  Poly r0 = f, s0{}, s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly next = poly_sub(s0, poly_mul(quot, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r0 is a nonzero constant because f is irreducible.
  std::uint64_t scale = inv_mod_p(r0[0], p);
  s0 = divmod(poly_mul(s0, Poly{scale}, p), f, p).second;
  std::vector<std::uint32_t> out(n_, 0);
  for (std::size_t i = 0; i < s0.size(); ++i) out[i] = static_cast<std::uint32_t>(s0[i]);
  return from_digits(out);
}

std::uint32_t FieldCore::ref_pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t r = 1;
  while (k) {
    if (k & 1) r = ref_mul(r, a);
    a = ref_mul(a, a);
    k >>= 1;
  }
  return r;
}

}  // namespace detail

Fe Fe::inv() const {
  if (!core_) throw std::domain_error("inverse of zero");
  return Fe(core_, core_->inv(v_));
}

Fe Fe::pow(std::uint64_t k) const {
  if (!core_) {
    if (k == 0) throw std::domain_error("0^0 without a field");
    return *this;
  }
  return Fe(core_, core_->pow(v_, k));
}

Fe Fe::frob() const { return core_ ? Fe(core_, core_->pow(v_, core_->q())) : *this; }

TowerField TowerField::build(int p, int e, const TowerOptions& opts) {
  return TowerField(std::make_shared<const detail::FieldCore>(p, e, opts));
}

Fe TowerField::from_int(std::int64_t k) const {
  std::int64_t p = core_->p();
  return Fe(core_.get(), static_cast<std::uint32_t>(((k % p) + p) % p));
}

Fe TowerField::element(std::uint32_t index) const {
  if (index >= size()) throw std::out_of_range("element index outside the field");
  return Fe(core_.get(), index);
}

Fe TowerField::from_coefficients(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(degree()))
    throw ConfigError("coefficient list longer than the extension degree");
  std::vector<std::uint32_t> d(degree(), 0);
  std::int64_t p = core_->p();
  for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = static_cast<std::uint32_t>(((coeffs[i] % p) + p) % p);
  return Fe(core_.get(), core_->from_digits(d));
}

Fe TowerField::generator() const { return Fe(core_.get(), static_cast<std::uint32_t>(core_->p())); }

Fe TowerField::frobenius(Fe x, int k) const {
  for (int i = 0; i < k; ++i) x = x.frob();
  return x;
}

bool TowerField::subfield_member(Fe x, Level level) const {
  return frobenius(x, static_cast<int>(level)) == x;
}

std::vector<Fe> TowerField::subfield(Level level) const {
  std::vector<Fe> out;
  if (level == Level::Fq4) {
    out.reserve(size());
    for (std::uint64_t i = 0; i < size(); ++i) out.emplace_back(core_.get(), static_cast<std::uint32_t>(i));
    return out;
  }
  std::uint64_t sub_size = 1;
  for (int i = 0; i < static_cast<int>(level); ++i) sub_size *= q();
  const std::uint64_t step = (size() - 1) / (sub_size - 1);
  const Fe g = primitive().pow(step);
  out.reserve(sub_size);
  out.push_back(zero());
  Fe x = one();
  for (std::uint64_t j = 0; j + 1 < sub_size; ++j) {
    out.push_back(x);
    x *= g;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Fe> TowerField::trace_zero_set(Level level) const {
  std::vector<Fe> out;
  for (Fe x : subfield(level))
    if (x.trace().is_zero()) out.push_back(x);
  return out;
}

QuadExtDescriptor TowerField::quad_descriptor() const {
  const auto fq = subfield(Level::Fq);
  const auto fq2 = subfield(Level::Fq2);
  QuadExtDescriptor d;
  bool found = false;
  if (p() != 2) {
    for (Fe s : fq) {
      if (!s.is_zero() && !s.pow((q() - 1) / 2).is_one()) {
        d.s = s;
        found = true;
        break;
      }
    }
  } else {
    for (Fe s : fq) {
      Fe abs_trace = zero(), t = s;
      for (int j = 0; j < e(); ++j) {
        abs_trace += t;
        t = t * t;
      }
      if (abs_trace.is_one()) {
        d.s = s;
        found = true;
        break;
      }
    }
  }
  if (!found) throw VerificationError("no quadratic-extension constant in F_q");
  for (Fe x : fq2) {
    Fe lhs = x * x;
    Fe rhs = p() == 2 ? x + d.s : d.s;
    if (lhs == rhs) {
      d.i = x;
      return d;
    }
  }
  throw VerificationError("quadratic-extension generator not found in F_{q^2}");
}

std::string to_string(Fe x) {
  if (!x.core()) return "0";
  const auto d = x.core()->digits(x.index());
  bool prime_field = std::all_of(d.begin() + 1, d.end(), [](std::uint32_t c) { return c == 0; });
  if (prime_field) return std::to_string(d[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << d[i];
      continue;
    }
    if (d[i] != 1) os << d[i] << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace asmc
