#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laxlin/sphere.hpp"

using namespace laxlin;

namespace {

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

SimplexPoint pt(std::vector<Rational> c) { return SimplexPoint(std::move(c)); }

void require_pass(const std::vector<LawReport>& reports) {
  for (const auto& r : reports) {
    INFO(r.law << ": " << r.failures << "/" << r.checked << " failed, first " << r.witness);
    CHECK(r.pass());
  }
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(parse_rational("-3")) == "-3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("simplex points are validated") {
  CHECK_NOTHROW(pt({q(1, 3), q(2, 3)}));
  CHECK_THROWS_AS(pt({q(1, 2), q(1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(pt({Rational(0), Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(pt({}), std::invalid_argument);
  CHECK(SimplexPoint::barycenter(3) == pt({q(1, 3), q(1, 3), q(1, 3)}));
}

TEST_CASE("gamma on the worked examples") {
  const auto s = pt({q(1, 2), q(1, 2)});
  const auto t2 = pt({q(1, 3), q(2, 3)});
  const auto u = gamma(s, {SimplexPoint::unit(), t2});
  CHECK(u == pt({q(1, 2), q(1, 6), q(1, 3)}));
  CHECK(gamma(SimplexPoint::unit(), {t2}) == t2);
  CHECK(to_string(u) == "(1/2,1/6,1/3)");

  const SpherePoint inf;
  CHECK_FALSE(gamma(SpherePoint(s), {SpherePoint(t2), inf}));
  CHECK_FALSE(gamma(inf, {SpherePoint(t2), SpherePoint(t2)}));
  CHECK(to_string(inf) == "inf");
  CHECK_THROWS_AS(gamma(s, {t2}), SizeMismatch);
}

TEST_CASE("barycenters are not closed under gamma") {
  const auto g = gamma(SimplexPoint::barycenter(2), {SimplexPoint::unit(), SimplexPoint::barycenter(2)});
  CHECK(g == pt({q(1, 2), q(1, 4), q(1, 4)}));
  CHECK(g != SimplexPoint::barycenter(3));
}

TEST_CASE("gamma_inv inverts gamma") {
  const auto u = pt({q(1, 2), q(1, 6), q(1, 3)});
  const auto pre = gamma_inv(u, {1, 2});
  CHECK(pre.outer == pt({q(1, 2), q(1, 2)}));
  CHECK(pre.inner == std::vector<SimplexPoint>{SimplexPoint::unit(), pt({q(1, 3), q(2, 3)})});

  const auto whole = gamma_inv(u, {3});
  CHECK(whole.outer == SimplexPoint::unit());
  CHECK(whole.inner.front() == u);

  const auto singles = gamma_inv(u, {1, 1, 1});
  CHECK(singles.outer == u);
  for (const auto& t : singles.inner) CHECK(t == SimplexPoint::unit());

  CHECK_THROWS_AS(gamma_inv(u, {1, 1}), SizeMismatch);
}

TEST_CASE("permute moves coordinate i to position sigma(i)") {
  const auto p = pt({q(1, 3), q(2, 3)});
  CHECK(permute(Permutation({1, 0}), p) == pt({q(2, 3), q(1, 3)}));
  CHECK(permute(Permutation::identity(2), p) == p);
  CHECK_FALSE(permute(Permutation({1, 0}), SpherePoint{}));
  const auto r = pt({q(1, 2), q(1, 3), q(1, 6)});
  const Permutation a({1, 2, 0}), b({0, 2, 1});
  CHECK(permute(a * b, r) == permute(a, permute(b, r)));
  CHECK(permute(a, r) == pt({q(1, 6), q(1, 2), q(1, 3)}));
  CHECK_THROWS_AS(permute(a, p), SizeMismatch);
}

TEST_CASE("smash_gamma is factorwise gamma") {
  const auto s = pt({q(1, 2), q(1, 2)});
  const auto s2 = pt({q(1, 4), q(3, 4)});
  const auto t = pt({q(1, 3), q(2, 3)});
  const auto one = smash_gamma(std::vector{s}, {std::vector{SimplexPoint::unit()}, std::vector{t}});
  REQUIRE(one);
  CHECK(one->front() == gamma(s, {SimplexPoint::unit(), t}));

  const auto two = smash_gamma(std::vector{s, s2}, {std::vector{t, t}, std::vector{s, s2}});
  REQUIRE(two);
  CHECK((*two)[0] == gamma(s, {t, s}));
  CHECK((*two)[1] == gamma(s2, {t, s2}));

  CHECK_FALSE(smash_gamma(std::vector{s}, {std::nullopt, std::vector{t}}));
  CHECK_THROWS_AS(smash_gamma(std::vector{s}, {std::vector{t, t}, std::vector{t}}), SizeMismatch);

  const Permutation sw({1, 0, 3, 2});
  CHECK(permute(sw, two) == SmashSpherePoint(std::vector{permute(sw, (*two)[0]), permute(sw, (*two)[1])}));
}

TEST_CASE("coend_adjoint in dimension one is the identity") {
  for (const auto& x : interval_grid(9)) {
    const auto z = coend_adjoint(SimplexPoint::unit(), x);
    REQUIRE(z);
    CHECK(z->front() == x);
  }
  CHECK_FALSE(coend_adjoint(std::nullopt, q(1, 2)));
  CHECK_FALSE(coend_adjoint(SimplexPoint::unit(), std::nullopt));
  CHECK_THROWS_AS(coend_adjoint(SimplexPoint::unit(), Rational(1)), std::invalid_argument);
}

TEST_CASE("coend_adjoint: hand-computed values") {
  // y = (1/4, 1/4), centre 1/3, v = (-1/12, -1/12): corner gauge 3·max(1/12, -1/6) = 1/4, cube gauge 1/6,
  // so w = v·(3/2) = (-1/8, -1/8) and z = (3/8, 3/8).
  const auto z = coend_adjoint(SimplexPoint::barycenter(2), q(1, 2));
  REQUIRE(z);
  CHECK(*z == std::vector<Rational>{q(3, 8), q(3, 8)});
  // The centre of K goes to the centre of the cube.
  const auto c = coend_adjoint(SimplexPoint::barycenter(3), q(1, 1) - q(1, 4));
  REQUIRE(c);
  CHECK(*c == std::vector<Rational>{q(1, 2), q(1, 2), q(1, 2)});
  const auto back = coend_inverse({q(1, 2), q(1, 2), q(1, 2)});
  CHECK(back.s == SimplexPoint::barycenter(3));
  CHECK(back.x == q(3, 4));
}

TEST_CASE("coend laws on samples") { require_pass(check_coend(300, 17, 4)); }

TEST_CASE("sphere operad laws on samples and a small grid") { require_pass(check_sphere_operad(2000, 5, 4, 4)); }

TEST_CASE("cube structure map round trips") {
  SphereRng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_suspension(2, 3, rng);
    const auto z = to_cube(p);
    REQUIRE(z);
    CHECK(z->size() == 6);
    CHECK(from_cube(z, 2, 3) == p);
  }
  CHECK_FALSE(to_cube(SuspensionPoint::base()));
  CHECK(from_cube(std::nullopt, 2, 3).basepoint);
}

TEST_CASE("stabilization of the identity is the identity") {
  SphereRng rng(11);
  const auto f = MapDescriptor::stabilize(MapDescriptor::identity(2, 2), std::vector<int>{3, 1});
  CHECK(f.dom() == 4);
  for (int i = 0; i < 30; ++i) {
    const auto p = random_suspension(2, 4, rng);
    CHECK(f(p) == p);
  }
  CHECK(f(SuspensionPoint::base()).basepoint);
}

TEST_CASE("stabilized unit swap swaps the cube blocks") {
  SphereRng rng(12);
  const auto f = MapDescriptor::stabilize(MapDescriptor::permute_units(Permutation({1, 0}), 1), 2);
  for (int i = 0; i < 30; ++i) {
    const auto p = random_suspension(2, 2, rng);
    const auto in = *to_cube(p), out = *to_cube(f(p));
    CHECK(out == std::vector<Rational>{in[2], in[3], in[0], in[1]});
  }
}

TEST_CASE("stabilize_at evaluates at the slice") {
  const auto s = pt({q(1, 3), q(2, 3)});
  const auto f = stabilize_at(MapDescriptor::reflect({true}, 1), 2, {s});
  CHECK(f.dom() == 1);
  CHECK(f.cod() == 2);
  const SuspensionPoint p{false, {SimplexPoint::unit()}, {q(1, 5)}};
  CHECK(f(p) == SuspensionPoint{false, {s}, {q(4, 5)}});
  CHECK_THROWS_AS(f.permutation_part(), std::logic_error);
  CHECK_THROWS_AS(stabilize_at(MapDescriptor::identity(1, 1), 3, {s}), SizeMismatch);
}

TEST_CASE("descriptor typing errors") {
  using M = MapDescriptor;
  CHECK_THROWS_AS(M::compose(M::identity(1, 2), M::identity(1, 3)), SizeMismatch);
  CHECK_THROWS_AS(M::compose(M::identity(2, 2), M::identity(1, 2)), SizeMismatch);
  CHECK_THROWS_AS(M::stabilize(M::identity(1, 2), std::vector<int>{1}), SizeMismatch);
  CHECK_THROWS_AS(M::stabilize(M::constant(1, 1, 2), 2), SizeMismatch);
  SphereRng rng(1);
  CHECK_THROWS_AS(M::identity(1, 2)(random_suspension(1, 3, rng)), SizeMismatch);
}

TEST_CASE("permutation parts") {
  using M = MapDescriptor;
  const Permutation sw({1, 0});
  const auto f = M::compose(M::permute_slots(sw, 2), M::permute_units(sw, 2));
  CHECK(f.permutation_part() == std::pair{sw, sw});
  const auto g = M::stabilize(M::permute_slots(sw, 1), std::vector<int>{2, 1});
  CHECK(g.permutation_part().first == block_permutation(sw, {2, 1}));
}

TEST_CASE("stabilization laws on samples") { require_pass(check_stabilization(200, 23)); }

TEST_CASE("two-step tower equals the one-step stabilization") {
  const auto reports = reproduce_tower_example(5);
  REQUIRE(reports.size() == 5);
  require_pass(reports);
}
