#include <algorithm>
#include <random>

#include "asmc/aut.hpp"
#include "asmc/errors.hpp"
#include "doctest.h"

using namespace asmc;

namespace {

const std::vector<std::pair<int, int>> kSmall{{2, 1}, {3, 1}, {2, 2}, {5, 1}};

}  // namespace

TEST_CASE("make_aut examples") {
  auto f = TowerField::build(2, 1);
  auto params = CurveParams::make(f);
  const auto id = make_aut(params, f.zero(), f.zero(), f.one(), false);
  CHECK(id.is_identity());
  Fe w;
  for (Fe x : f.subfield(Level::Fq2))
    if (x * x == x + f.one()) w = x;
  const auto xi = make_aut(params, f.zero(), f.zero(), f.one(), true);
  CHECK(xi.apply(AffinePoint{w, w * w}) == AffinePoint{w * w, w});
  CHECK_NOTHROW(make_aut(params, f.one(), f.one(), f.one(), false));
  CHECK_THROWS_AS(make_aut(params, w, f.zero(), f.one(), false), std::invalid_argument);
  CHECK_THROWS_AS(make_aut(params, f.zero(), w, f.one(), false), std::invalid_argument);
  CHECK_THROWS_AS(make_aut(params, f.zero(), f.zero(), w, false), std::invalid_argument);

  auto f5 = TowerField::build(5, 1);
  auto p5 = CurveParams::make(f5);
  const auto xi5 = make_aut(p5, f5.zero(), f5.zero(), f5.one(), true);
  const Fe l = f5.from_int(2);
  const auto phi = make_aut(p5, f5.zero(), f5.zero(), l, false);
  CHECK(compose(compose(xi5, phi), xi5) == make_aut(p5, f5.zero(), f5.zero(), l.inv(), false));
}

TEST_CASE("composition matches pointwise application") {
  for (auto [p, e] : kSmall) {
    auto f = TowerField::build(p, e);
    auto params = CurveParams::make(f);
    const auto G = group_closure(params);
    std::mt19937_64 rng(1);
    const auto pts = sample_points(params, 20, rng);
    const auto places = infinite_places(params);
    for (int k = 0; k < 200; ++k) {
      const auto& a = G[rng() % G.size()];
      const auto& b = G[rng() % G.size()];
      const auto ab = compose(a, b);
      for (const auto& P : pts) {
        CHECK(ab.apply(P) == a.apply(b.apply(P)));
        CHECK(inverse(a).apply(a.apply(P)) == P);
      }
      for (const auto& I : places) CHECK(ab.apply(I) == a.apply(b.apply(I)));
      CHECK(compose(a, inverse(a)).is_identity());
      CHECK(compose(inverse(a), a).is_identity());
    }
  }
}

TEST_CASE("symbolic invariance") {
  auto f = TowerField::build(3, 1);
  auto params = CurveParams::make(f);
  for (const auto& g : group_closure(params)) CHECK(symbolic_invariance(params, g));
  // Probe outside the group: Tr(alpha) != 0.
  const PlaneAut probe{f.one(), f.zero(), f.one(), false};
  CHECK_FALSE(symbolic_invariance(params, probe));
  // lambda outside F_q.
  const PlaneAut probe2{f.zero(), f.zero(), f.subfield(Level::Fq2).back(), false};
  CHECK_FALSE(symbolic_invariance(params, probe2));
}

TEST_CASE("group closure and structure") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    auto f = TowerField::build(p, e);
    auto params = CurveParams::make(f);
    const auto q = f.q();
    CAPTURE(q);
    const auto r = closure_and_structure(params);
    CHECK(r.order == 2 * q * q * (q - 1));
    CHECK(r.delta_order == q * q);
    CHECK(r.delta1_order == q);
    CHECK(r.delta2_order == q);
    CHECK(r.c_order == q - 1);
    CHECK(r.dihedral_order == 2 * (q - 1));
    CHECK(r.delta_normal);
    CHECK(r.delta_elementary_abelian);
    CHECK(r.c_cyclic);
    CHECK(r.dihedral_relations);
    CHECK(r.semidirect_verified);
    CHECK(r.all_invariant);
  }
}

TEST_CASE("closure budget") {
  auto f = TowerField::build(5, 1);
  CHECK_THROWS_AS(group_closure(CurveParams::make(f), 4), ConfigError);
}

TEST_CASE("orbits on rational places") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
    auto f = TowerField::build(p, e);
    auto params = CurveParams::make(f);
    const auto q = f.q();
    CAPTURE(q);
    const auto r = orbit_analysis(params);
    std::vector<std::size_t> expect{2 * q, (q - 1) * q * q};
    std::sort(expect.begin(), expect.end());
    CHECK(r.orbit_sizes == expect);
    CHECK(r.sigma_sharply_transitive);
    CHECK(r.sigma_exhaustive == (q <= 3));
    CHECK(r.xi_fixed_expected);
    CHECK(r.infinite_action_matches_matrix);
    if (q >= 3) CHECK(r.faithful);
  }
  auto f = TowerField::build(3, 1);
  auto r = orbit_analysis(CurveParams::make(f));
  CHECK(std::find(r.xi_fixed_points.begin(), r.xi_fixed_points.end(), AffinePoint{f.one(), f.one()}) !=
        r.xi_fixed_points.end());
  CHECK(r.pairs_checked == 18 * 18);
}

TEST_CASE("rational point decomposition") {
  auto f = TowerField::build(3, 1);
  auto params = CurveParams::make(f);
  const auto quad = f.quad_descriptor();
  const auto pts = enumerate_points(params, Level::Fq2);
  int with_u1 = 0;
  for (const auto& P : pts) {
    const auto r = rational_point_form(params, P, quad);
    CHECK(r.constraint_holds);
    CHECK(r.a1 + quad.i * r.b1 == P.u);
    CHECK(r.a2 + quad.i * r.b2 == P.v);
    if (P.u == f.one()) {
      ++with_u1;
      CHECK(r.a2 == f.one());
    }
  }
  CHECK(with_u1 == 3);

  auto f2 = TowerField::build(2, 1);
  auto p2 = CurveParams::make(f2);
  const auto q2 = f2.quad_descriptor();
  for (const auto& P : enumerate_points(p2, Level::Fq2)) {
    const auto r = rational_point_form(p2, P, q2);
    CHECK(r.constraint_holds);
    CHECK(r.b1.is_one());
    CHECK(r.b2.is_one());
  }
  std::mt19937_64 rng(3);
  for (const auto& P : sample_points(params, 20, rng))
    if (!f.subfield_member(P.u, Level::Fq2)) CHECK_THROWS_AS(rational_point_form(params, P, quad), std::invalid_argument);

  // Other c in F_q, both characteristics.
  for (auto [p, e] : std::vector<std::pair<int, int>>{{5, 1}, {2, 2}}) {
    auto g = TowerField::build(p, e);
    for (Fe c : g.subfield(Level::Fq)) {
      if (c.is_zero()) continue;
      auto pc = CurveParams::make(g, c);
      for (const auto& P : enumerate_points(pc, Level::Fq2)) CHECK(rational_point_form(pc, P, g.quad_descriptor()).constraint_holds);
    }
  }
}

TEST_CASE("linear automorphisms over F_{q^2}") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = TowerField::build(p, e);
    auto params = CurveParams::make(f);
    const auto q = f.q();
    const auto r = linear_automorphism_search(params);
    CHECK(r.found == 2 * q * q * (q - 1));
    CHECK(r.all_in_group);
  }
  CHECK_THROWS_AS(linear_automorphism_search(CurveParams::make(TowerField::build(5, 1))), ConfigError);
}
