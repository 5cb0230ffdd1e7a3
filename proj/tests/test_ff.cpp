#include <algorithm>
#include <random>
#include <set>

#include "asmc/ff.hpp"
#include "doctest.h"

using namespace asmc;

namespace {

// Trial division over F_p, independent of the Rabin test used by the library.
bool divides(std::vector<int> f, const std::vector<int>& g, int p) {
  while (f.size() >= g.size()) {
    int c = f.back();  // g is monic
    std::size_t s = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[s + i] = ((f[s + i] - c * g[i]) % p + p) % p;
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return f.empty();
}

bool irreducible_by_trial(const std::vector<int>& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      std::vector<int> g(d + 1, 0);
      for (int i = 0, r = idx; i < d; ++i, r /= p) g[i] = r % p;
      g[d] = 1;
      if (divides(f, g, p)) return false;
    }
  }
  return true;
}

Fe find_square_root_of(const TowerField& f, Fe target, Level level) {
  for (Fe x : f.subfield(level))
    if (x * x == target) return x;
  FAIL("no square root found");
  return f.zero();
}

}  // namespace

TEST_CASE("build_tower sizes and subfields") {
  auto f = TowerField::build(2, 1);
  CHECK(f.size() == 16);
  CHECK(f.degree() == 4);
  CHECK(f.q() == 2);
  CHECK(f.subfield(Level::Fq).size() == 2);
  CHECK(f.subfield(Level::Fq2).size() == 4);
  CHECK(f.subfield(Level::Fq4).size() == 16);

  auto g = TowerField::build(3, 1);
  int fixed = 0;
  for (Fe a : g.subfield(Level::Fq4))
    if (a.pow(3) == a) ++fixed;
  CHECK(fixed == 3);
}

TEST_CASE("defining polynomial is the least irreducible quartic over F_3") {
  auto f = TowerField::build(3, 1);
  // Frozen from an exhaustive trial-division search: z^4 + z + 2.
  CHECK(f.defining_polynomial() == std::vector<std::uint32_t>{2, 1, 0, 0, 1});

  std::vector<int> poly(f.defining_polynomial().begin(), f.defining_polynomial().end());
  CHECK(irreducible_by_trial(poly, 3));
  int chosen = 0;
  for (int i = 3; i-- > 0;) chosen = chosen * 3 + poly[i];
  for (int idx = 0; idx < chosen; ++idx) {
    std::vector<int> cand(5, 0);
    for (int i = 0, r = idx; i < 4; ++i, r /= 3) cand[i] = r % 3;
    cand[4] = 1;
    CHECK_FALSE(irreducible_by_trial(cand, 3));
  }
}

TEST_CASE("defining polynomials agree with trial division across towers") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}, {5, 1}, {7, 1}}) {
    auto f = TowerField::build(p, e);
    std::vector<int> poly(f.defining_polynomial().begin(), f.defining_polynomial().end());
    CHECK(irreducible_by_trial(poly, p));
  }
}

TEST_CASE("build_tower rejects bad configurations") {
  CHECK_THROWS_AS(TowerField::build(4, 1), ConfigError);
  CHECK_THROWS_AS(TowerField::build(1, 1), ConfigError);
  CHECK_THROWS_AS(TowerField::build(3, 0), ConfigError);
  CHECK_THROWS_AS(TowerField::build(2, 6), ConfigError);  // 2^24 over the default budget
  TowerOptions small;
  small.size_budget = 80;
  CHECK_THROWS_AS(TowerField::build(3, 1, small), ConfigError);
}

TEST_CASE("trace_q examples") {
  auto f3 = TowerField::build(3, 1);
  CHECK(f3.trace_q(f3.zero()).is_zero());
  Fe i = find_square_root_of(f3, f3.from_int(-1), Level::Fq2);
  CHECK(f3.trace_q(i).is_zero());
  CHECK(i.pow(3) == -i);

  auto f2 = TowerField::build(2, 1);
  Fe omega = f2.zero();
  for (Fe x : f2.subfield(Level::Fq2))
    if (x * x == x + f2.one()) omega = x;
  REQUIRE_FALSE(omega.is_zero());
  CHECK(f2.trace_q(omega).is_one());
}

TEST_CASE("trace_zero_set examples") {
  auto f2 = TowerField::build(2, 1);
  CHECK(f2.trace_zero_set() == std::vector<Fe>{f2.zero(), f2.one()});

  auto f3 = TowerField::build(3, 1);
  Fe i = find_square_root_of(f3, f3.from_int(-1), Level::Fq2);
  std::vector<Fe> expected{f3.zero(), i, i + i};
  std::sort(expected.begin(), expected.end());
  CHECK(f3.trace_zero_set() == expected);

  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    auto f = TowerField::build(p, e);
    auto tz = f.trace_zero_set();
    CHECK(tz.size() == f.q());
    // Additive subgroup.
    std::set<Fe> members(tz.begin(), tz.end());
    for (Fe a : tz)
      for (Fe b : tz) CHECK(members.count(a - b) == 1);
    // Every trace-zero element of F_{q^4} already lies in F_{q^2}.
    CHECK(f.trace_zero_set(Level::Fq4) == tz);
  }
}

TEST_CASE("subfield_member examples") {
  auto f3 = TowerField::build(3, 1);
  CHECK(f3.subfield_member(f3.one(), Level::Fq));
  Fe i = find_square_root_of(f3, f3.from_int(-1), Level::Fq2);
  CHECK_FALSE(f3.subfield_member(i, Level::Fq));
  CHECK(f3.subfield_member(i, Level::Fq2));
  for (Fe x : f3.subfield(Level::Fq4)) CHECK(f3.subfield_member(x, Level::Fq4));

  auto f4 = TowerField::build(2, 2);
  for (Level lv : {Level::Fq, Level::Fq2}) {
    std::size_t count = 0;
    for (Fe x : f4.subfield(Level::Fq4)) count += f4.subfield_member(x, lv);
    CHECK(count == f4.subfield(lv).size());
  }
}

TEST_CASE("q_root") {
  auto f3 = TowerField::build(3, 1);
  CHECK(f3.q_root(f3.one()).is_one());
  CHECK(f3.q_root(f3.from_int(2)) == f3.from_int(2));
  CHECK(f3.q_root(f3.zero()).is_zero());
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = TowerField::build(p, e);
    for (Fe x : f.subfield(Level::Fq4)) {
      CHECK(f.q_root(x.frob()) == x);
      CHECK(f.q_root(x).frob() == x);
    }
    for (Fe x : f.subfield(Level::Fq)) CHECK(f.subfield_member(f.q_root(x), Level::Fq));
  }
}

TEST_CASE("trace is additive") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = TowerField::build(p, e);
    auto all = f.subfield(Level::Fq4);
    for (Fe x : all)
      for (Fe y : all) REQUIRE(f.trace_q(x + y) == f.trace_q(x) + f.trace_q(y));
  }
  std::mt19937_64 rng(42);
  for (auto [p, e] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    auto f = TowerField::build(p, e);
    for (int k = 0; k < 1000; ++k) {
      Fe x = f.element(static_cast<std::uint32_t>(rng() % f.size()));
      Fe y = f.element(static_cast<std::uint32_t>(rng() % f.size()));
      REQUIRE(f.trace_q(x + y) == f.trace_q(x) + f.trace_q(y));
    }
  }
}

TEST_CASE("trace of F_{q^2} lands in F_q") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = TowerField::build(p, e);
    for (Fe x : f.subfield(Level::Fq2)) CHECK(f.subfield_member(f.trace_q(x), Level::Fq));
  }
}

TEST_CASE("quadratic extension descriptor") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    auto f = TowerField::build(p, e);
    auto d = f.quad_descriptor();
    CAPTURE(p);
    CAPTURE(e);
    CHECK(f.subfield_member(d.s, Level::Fq));
    CHECK(f.subfield_member(d.i, Level::Fq2));
    CHECK_FALSE(f.subfield_member(d.i, Level::Fq));
    if (p != 2) {
      for (Fe x : f.subfield(Level::Fq)) CHECK(x * x != d.s);
      CHECK(d.i * d.i == d.s);
      CHECK(d.i.frob() == -d.i);
    } else {
      Fe t = f.zero(), s = d.s;
      for (int j = 0; j < e; ++j, s = s * s) t += s;
      CHECK(t.is_one());
      CHECK(d.i * d.i == d.i + d.s);
      CHECK(d.i.frob() == d.i + f.one());
      // i^q = i + s holds only when s = 1.
      CHECK((d.i.frob() == d.i + d.s) == d.s.is_one());
    }
  }
}

TEST_CASE("reference and table kernels agree") {
  TowerOptions ref;
  ref.kernel = Kernel::reference;
  TowerOptions tab;
  tab.kernel = Kernel::table;
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}}) {
    auto fr = TowerField::build(p, e, ref);
    auto ft = TowerField::build(p, e, tab);
    REQUIRE(fr.kernel() == Kernel::reference);
    REQUIRE(ft.kernel() == Kernel::table);
    auto* cr = fr.core();
    auto* ct = ft.core();
    for (std::uint32_t a = 0; a < fr.size(); ++a) {
      for (std::uint32_t b = 0; b < fr.size(); ++b) {
        REQUIRE(cr->add(a, b) == ct->add(a, b));
        REQUIRE(cr->mul(a, b) == ct->mul(a, b));
      }
      REQUIRE(cr->neg(a) == ct->neg(a));
      if (a) REQUIRE(cr->inv(a) == ct->inv(a));
      REQUIRE(cr->pow(a, 17) == ct->pow(a, 17));
    }
  }
  std::mt19937_64 rng(7);
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {5, 1}, {7, 1}, {2, 4}, {13, 1}}) {
    auto fr = TowerField::build(p, e, ref);
    auto ft = TowerField::build(p, e, tab);
    auto* cr = fr.core();
    auto* ct = ft.core();
    for (int k = 0; k < 2000; ++k) {
      auto a = static_cast<std::uint32_t>(rng() % fr.size());
      auto b = static_cast<std::uint32_t>(rng() % fr.size());
      REQUIRE(cr->add(a, b) == ct->add(a, b));
      REQUIRE(cr->sub(a, b) == ct->sub(a, b));
      REQUIRE(cr->mul(a, b) == ct->mul(a, b));
      if (a) REQUIRE(cr->inv(a) == ct->inv(a));
      std::uint64_t ex = rng() % 100000;
      REQUIRE(cr->pow(a, ex) == ct->pow(a, ex));
    }
  }
}

TEST_CASE("automatic kernel selection follows the table threshold") {
  CHECK(TowerField::build(3, 1).kernel() == Kernel::table);
  TowerOptions opts;
  opts.table_threshold = 10;
  CHECK(TowerField::build(3, 1, opts).kernel() == Kernel::reference);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(1);
  auto f = TowerField::build(3, 2);
  for (int k = 0; k < 500; ++k) {
    Fe a = f.element(static_cast<std::uint32_t>(rng() % f.size()));
    Fe b = f.element(static_cast<std::uint32_t>(rng() % f.size()));
    Fe c = f.element(static_cast<std::uint32_t>(rng() % f.size()));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    CHECK(a.pow(f.size()) == a);
  }
  CHECK_THROWS_AS(f.zero().inv(), std::domain_error);
}

TEST_CASE("coefficient constructors and rendering") {
  auto f = TowerField::build(3, 1);
  std::vector<std::int64_t> coeffs{1, 2};
  Fe x = f.from_coefficients(coeffs);
  CHECK(x == f.one() + f.from_int(2) * f.generator());
  CHECK(to_string(x) == "1+2*z");
  CHECK(to_string(f.from_int(-1)) == "2");
  std::vector<std::int64_t> too_long(5, 1);
  CHECK_THROWS_AS(f.from_coefficients(too_long), ConfigError);
}
