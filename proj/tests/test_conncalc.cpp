#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laxlin/conncalc.hpp"

using namespace laxlin;

namespace {

std::vector<Connectivity> finite(std::initializer_list<long long> xs) {
  std::vector<Connectivity> out;
  for (long long x : xs) out.push_back(Connectivity::finite(x));
  return out;
}

}  // namespace

TEST_CASE("apply_T1 lowers both constants") {
  CHECK(apply_T1({5, 1}) == ExcisionHypothesis{4, 0});
  CHECK(apply_T1({0, 0}) == ExcisionHypothesis{-1, -1});
  for (long long c = -5; c <= 5; ++c)
    for (long long k = -5; k <= 5; ++k)
      for (int i = 0; i <= 100; ++i) REQUIRE(iterate_T1({c, k}, i) == ExcisionHypothesis{c - i, k - i});
  CHECK_THROWS_AS(iterate_T1({0, 0}, -1), std::invalid_argument);
}

TEST_CASE("t1_connectivity") {
  CHECK(t1_connectivity({2, 3}, 3) == 4);
  CHECK(t1_connectivity({2, -1}, 3) == 4);
  CHECK_FALSE(t1_connectivity({2, 4}, 3));
  CHECK(t1_connectivity({6, 0}, 3) == 0);
  for (long long c = -5; c <= 5; ++c)
    for (long long ell = -5; ell <= 5; ++ell) {
      CHECK(*t1_connectivity({c, -5}, ell + 1) - *t1_connectivity({c, -5}, ell) == 2);
      CHECK(*t1_connectivity({c, -5}, ell) - *t1_connectivity({c + 1, -5}, ell) == 1);
    }
}

TEST_CASE("iterate_profile") {
  const auto p = iterate_profile({5, 1}, 1, 10);
  REQUIRE(p.stages.size() == 11);
  for (int i = 0; i <= 10; ++i) CHECK(p.stages[static_cast<std::size_t>(i)] == Connectivity::finite(i - 3));
  const auto z = iterate_profile({0, 0}, 0, 4);
  CHECK(z.stages == finite({0, 1, 2, 3, 4}));
  CHECK_THROWS_AS(iterate_profile({0, 2}, 1, 4), HypothesisNotApplicable);
  for (long long c = -5; c <= 5; ++c)
    for (long long k = -5; k <= 5; ++k)
      for (long long ell = k; ell <= 5; ++ell) {
        const auto q = iterate_profile({c, k}, ell, 20);
        for (std::size_t i = 0; i + 1 < q.stages.size(); ++i) REQUIRE(q.stages[i + 1].value == q.stages[i].value + 1);
      }
}

TEST_CASE("verdict on stage profiles") {
  for (long long c = -5; c <= 5; ++c)
    for (long long k = -5; k <= 5; ++k)
      for (long long ell = k; ell <= 5; ++ell) {
        const auto v = bokstedt_verdict(iterate_profile({c, k}, ell, 10));
        REQUIRE(v.satisfied);
        CHECK(v.slope == Slope{1, 1});
      }
}

TEST_CASE("verdict rejects constant and decreasing profiles") {
  for (long long x = -3; x <= 3; ++x) {
    std::vector<Connectivity> v(12, Connectivity::finite(x));
    const auto r = bokstedt_verdict(v);
    CHECK_FALSE(r.satisfied);
    CHECK(r.window.first < r.window.second);
  }
  const auto d = bokstedt_verdict(finite({5, 4, 3, 2, 1}));
  CHECK_FALSE(d.satisfied);
  CHECK(d.reason == "decreases");
  CHECK_FALSE(bokstedt_verdict(finite({1})).satisfied);
  // A late jump is not enough: growth must start in the first half.
  CHECK_FALSE(bokstedt_verdict(finite({0, 0, 0, 0, 0, 0, 1})).satisfied);
}

TEST_CASE("verdict on multivariable and infinite profiles") {
  const auto m = MultiProfile::tabulate(3, 20, [](long long x) { return Connectivity::finite(x - 7); });
  const auto v = bokstedt_verdict(m);
  CHECK(v.satisfied);
  CHECK(v.slope == Slope{1, 1});

  const auto half = MultiProfile::tabulate(2, 20, [](long long x) { return Connectivity::finite(x / 2); });
  const auto h = bokstedt_verdict(half);
  CHECK(h.satisfied);
  CHECK(h.slope == Slope{1, 2});

  std::vector<Connectivity> inf(5, Connectivity::infinity());
  CHECK(bokstedt_verdict(inf).satisfied);
  auto tail = finite({0, 1, 2});
  tail.push_back(Connectivity::infinity());
  tail.push_back(Connectivity::infinity());
  CHECK(bokstedt_verdict(tail).satisfied);
}

TEST_CASE("verdict is stable under nondecreasing nonnegative increments") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long long> val(-6, 6), inc(0, 2);
  int satisfied = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t len = 2 + rng() % 10;
    std::vector<Connectivity> v, w;
    long long d = 0;
    for (std::size_t i = 0; i < len; ++i) {
      // Mostly increasing data so that many trials are satisfied.
      const long long x = static_cast<long long>(i) + (rng() % 4 == 0 ? val(rng) : 0);
      d += inc(rng);
      v.push_back(Connectivity::finite(x));
      w.push_back(Connectivity::finite(x + d));
    }
    if (bokstedt_verdict(v).satisfied) {
      ++satisfied;
      REQUIRE(bokstedt_verdict(w).satisfied);
    }
  }
  CHECK(satisfied > 500);
}

TEST_CASE("pointwise-larger alone can flip the verdict") {
  // (0, 1) grows, the pointwise-larger (1, 1) does not.
  CHECK(bokstedt_verdict(finite({0, 1})).satisfied);
  CHECK_FALSE(bokstedt_verdict(finite({1, 1})).satisfied);
}

TEST_CASE("example hypotheses are kept verbatim") {
  const auto ex = example_hypotheses();
  REQUIRE(ex.size() == 4);
  CHECK(ex[0].functor == "identity");
  CHECK(ex[0].note.find("Blakers-Massey") != std::string::npos);
  CHECK(ex[3].c == "2n");
  CHECK(ex[3].kappa == "-1");
  CHECK(ex[1].c == "0n");
  CHECK_THROWS_AS(example_hypotheses({-1}), std::invalid_argument);
}

TEST_CASE("connectivity ordering") {
  CHECK(Connectivity::finite(3) < Connectivity::infinity());
  CHECK_FALSE(Connectivity::infinity() < Connectivity::infinity());
  CHECK(Connectivity::infinity() == Connectivity::infinity());
  CHECK(to_string(Connectivity::finite(-1)) == "-1");
  CHECK(to_string(Connectivity::infinity()) == "inf");
}
