#include "asmc/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace asmc {

namespace {

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  int da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return b < a;
}

MultiPoly::MultiPoly(TowerField field, std::vector<std::string> variables)
    : field_(std::move(field)), vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(TowerField field, std::vector<std::string> variables, Fe value) {
  MultiPoly r(std::move(field), std::move(variables));
  r.add_term(Exponents(r.nvars(), 0), value);
  return r;
}

MultiPoly MultiPoly::variable(TowerField field, std::vector<std::string> variables, std::size_t index) {
  MultiPoly r(std::move(field), std::move(variables));
  Exponents e(r.nvars(), 0);
  e.at(index) = 1;
  r.add_term(e, r.field_.one());
  return r;
}

MultiPoly MultiPoly::monomial(TowerField field, std::vector<std::string> variables, Exponents exps, Fe coeff) {
  MultiPoly r(std::move(field), std::move(variables));
  if (exps.size() != r.nvars()) throw std::invalid_argument("exponent vector has wrong length");
  r.add_term(exps, coeff);
  return r;
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : degree_of(terms_.begin()->first); }

int MultiPoly::min_degree() const { return terms_.empty() ? -1 : degree_of(terms_.rbegin()->first); }

bool MultiPoly::is_homogeneous() const { return total_degree() == min_degree(); }

Fe MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? field_.zero() : it->second;
}

void MultiPoly::add_term(const Exponents& exps, Fe coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a.field_, a.vars_);
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(Fe s, const MultiPoly& a) {
  MultiPoly r(a.field_, a.vars_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
  return r;
}

MultiPoly MultiPoly::pow(std::uint64_t k) const {
  MultiPoly result = constant(field_, vars_, field_.one());
  MultiPoly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, field_.from_int(e[var]) * c);
  }
  return r;
}

Fe MultiPoly::evaluate(std::span<const Fe> point) const {
  if (point.size() != nvars()) throw std::invalid_argument("evaluation point has wrong arity");
  Fe acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    Fe m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m *= point[i].pow(static_cast<std::uint64_t>(e[i]));
    acc += m;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != nvars()) throw std::invalid_argument("substitution has wrong arity");
  if (images.empty()) return *this;
  const auto& target_vars = images.front().variables();
  // Powers of each image, built on demand.
  std::vector<std::map<int, MultiPoly>> cache(nvars());
  auto power = [&](std::size_t v, int k) -> const MultiPoly& {
    auto it = cache[v].find(k);
    if (it != cache[v].end()) return it->second;
    return cache[v].emplace(k, images[v].pow(static_cast<std::uint64_t>(k))).first->second;
  };
  MultiPoly r(field_, target_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly m = constant(field_, target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m = m * power(i, e[i]);
    r += m;
  }
  return r;
}

MultiPoly MultiPoly::divide_by_power(std::size_t var, int k) const {
  MultiPoly r(field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < k) throw std::domain_error("polynomial not divisible by " + vars_[var] + "^" + std::to_string(k));
    Exponents d = e;
    d[var] -= k;
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
  MultiPoly r(field_, vars_);
  for (const auto& [e, c] : terms_)
    if (degree_of(e) == degree) r.terms_.emplace(e, c);
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_var = degree_of(e) > 0;
    if (!c.is_one() || !has_var) os << '(' << asmc::to_string(c) << ')';
    bool need_star = !c.is_one() || !has_var;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      need_star = true;
      os << vars_[i];
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

std::vector<Exponents> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponents> out;
  Exponents cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, d);
  return out;
}

}  // namespace asmc
