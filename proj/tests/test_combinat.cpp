#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "laxlin/combinat.hpp"
#include "oracles.hpp"

using namespace laxlin;

namespace {

// Spec examples are written with 1-based labels.
Injection inj1(int m, int n, std::vector<int> one_based) {
  for (auto& v : one_based) --v;
  return Injection(m, n, std::move(one_based));
}

Permutation perm1(std::vector<int> one_based) {
  for (auto& v : one_based) --v;
  return Permutation(std::move(one_based));
}

std::vector<Injection> all_injections_upto(int max) {
  std::vector<Injection> out;
  for (int m = 0; m <= max; ++m)
    for (int n = m; n <= max; ++n)
      for (auto& f : enumerate_injections(m, n)) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("injection construction rejects non-injective data") {
  CHECK_THROWS_AS(Injection(2, 3, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Injection(2, 3, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Injection(3, 2, {0, 1, 2}), std::invalid_argument);
  CHECK_NOTHROW(Injection(0, 0, {}));
}

TEST_CASE("compose_injections") {
  const auto f = inj1(1, 2, {2});
  const auto g = inj1(2, 3, {3, 1});
  CHECK(compose(f, g) == inj1(1, 3, {1}));

  const auto swap = inj1(2, 2, {2, 1});
  CHECK(compose(swap, swap) == Injection::identity(2));

  for (const auto& h : enumerate_injections(2, 3)) CHECK(compose(h, Injection::identity(3)) == h);

  CHECK_THROWS_AS(compose(g, f), CompositionError);
}

TEST_CASE("category laws hold for all objects of size <= 4") {
  const auto all = all_injections_upto(4);
  for (const auto& f : all) {
    CHECK(compose(Injection::identity(f.dom()), f) == f);
    CHECK(compose(f, Injection::identity(f.cod())) == f);
  }
  std::size_t triples = 0;
  for (const auto& f : all)
    for (const auto& g : all) {
      if (g.dom() != f.cod()) continue;
      const auto gf = compose(f, g);
      for (const auto& h : all) {
        if (h.dom() != g.cod()) continue;
        ++triples;
        REQUIRE(compose(gf, h) == compose(f, compose(g, h)));
      }
    }
  CHECK(triples > 0);
}

TEST_CASE("enumerate_injections agrees with brute force") {
  CHECK(enumerate_injections(2, 3).size() == 6);
  CHECK(enumerate_injections(0, 4).size() == 1);
  CHECK(enumerate_injections(0, 0).size() == 1);
  CHECK(enumerate_injections(3, 2).empty());
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 5; ++n) {
      const auto ours = enumerate_injections(m, n);
      const auto brute = oracle::injective_maps(m, n);
      REQUIRE(ours.size() == brute.size());
      for (std::size_t i = 0; i < ours.size(); ++i) CHECK(ours[i].image() == brute[i]);  // both lexicographic
    }
}

TEST_CASE("coproduct examples") {
  const auto f = inj1(1, 2, {2});
  const auto swap = inj1(2, 2, {2, 1});
  CHECK(coproduct(f, swap) == inj1(3, 4, {2, 4, 3}));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) CHECK(coproduct(Injection::identity(m), Injection::identity(n)) == Injection::identity(m + n));
}

TEST_CASE("coproduct is strictly associative, unital and functorial for sizes <= 3") {
  const auto all = all_injections_upto(3);
  const auto unit = Injection::identity(0);
  for (const auto& f : all) {
    CHECK(coproduct(f, unit) == f);
    CHECK(coproduct(unit, f) == f);
    for (const auto& g : all)
      for (const auto& h : all) REQUIRE(coproduct(coproduct(f, g), h) == coproduct(f, coproduct(g, h)));
  }
  // (g∘f) ⊔ (g'∘f') = (g ⊔ g') ∘ (f ⊔ f')
  for (const auto& f : all)
    for (const auto& g : all) {
      if (g.dom() != f.cod()) continue;
      for (const auto& f2 : all)
        for (const auto& g2 : all) {
          if (g2.dom() != f2.cod()) continue;
          REQUIRE(coproduct(compose(f, g), compose(f2, g2)) == compose(coproduct(f, f2), coproduct(g, g2)));
        }
    }
}

TEST_CASE("block_swap") {
  CHECK(block_swap(1, 2) == inj1(3, 3, {3, 1, 2}));
  for (int m = 0; m <= 4; ++m) CHECK(block_swap(m, 0) == Injection::identity(m));
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; m + n <= 6; ++n) CHECK(compose(block_swap(m, n), block_swap(n, m)) == Injection::identity(m + n));
}

TEST_CASE("block_swap naturality for sizes <= 3") {
  const auto all = all_injections_upto(3);
  for (const auto& f : all)
    for (const auto& g : all) {
      const auto lhs = compose(coproduct(f, g), block_swap(f.cod(), g.cod()));
      const auto rhs = compose(block_swap(f.dom(), g.dom()), coproduct(g, f));
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("standard inclusions form a subcategory closed under coproduct") {
  CHECK(is_standard_inclusion(inj1(2, 3, {1, 2})));
  CHECK_FALSE(is_standard_inclusion(inj1(2, 3, {1, 3})));
  for (int n = 0; n <= 4; ++n) CHECK(is_standard_inclusion(Injection::identity(n)));
  std::vector<Injection> std_incl;
  for (const auto& f : all_injections_upto(4))
    if (is_standard_inclusion(f)) std_incl.push_back(f);
  CHECK(std_incl.size() == 15);  // one per pair m <= n <= 4
  for (const auto& f : std_incl)
    for (const auto& g : std_incl) {
      CHECK(is_standard_inclusion(coproduct(f, g)) == (f.dom() == f.cod() || g.dom() == 0));
      if (g.dom() == f.cod()) CHECK(is_standard_inclusion(compose(f, g)));
    }
}

TEST_CASE("permutations") {
  for (int n = 0; n <= 5; ++n) {
    const auto all = all_permutations(n);
    CHECK(all.size() == factorial(n));
    for (std::size_t r = 0; r < all.size(); ++r) {
      CHECK(all[r].rank() == r);
      CHECK(Permutation::unrank(n, r) == all[r]);
      auto w = all[r].adjacent_word();
      auto p = Permutation::identity(n);
      for (int i : w) p = p * Permutation::adjacent(n, i);
      CHECK(p == all[r]);
      CHECK(all[r] * all[r].inverse() == Permutation::identity(n));
    }
  }
  CHECK_THROWS(Permutation({0, 0}));
}

TEST_CASE("block_permutation moves whole blocks") {
  // blocks of sizes (2,1) swapped: 0->1, 1->2, 2->0
  const auto p = block_permutation(perm1({2, 1}), {2, 1});
  CHECK(p == Permutation({1, 2, 0}));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      CHECK(block_permutation(perm1({2, 1}), {a, b}).as_injection() == block_swap(a, b));
}

TEST_CASE("enumerate_partitions counts match Bell and Stirling numbers") {
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(4, 2).size() == 7);
  const auto one = enumerate_partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].blocks() == std::vector<std::vector<int>>{{0}});
  for (int n = 1; n <= 8; ++n) {
    const auto ours = enumerate_partitions(n);
    CHECK(static_cast<std::int64_t>(ours.size()) == oracle::bell(n));
    std::set<oracle::SetPartition> as_sets;
    for (const auto& p : ours) {
      oracle::SetPartition s;
      for (const auto& b : p.blocks()) s.insert(std::set<int>(b.begin(), b.end()));
      as_sets.insert(s);
      for (int i = 1; i < p.num_blocks(); ++i) CHECK(p.block(i - 1).front() < p.block(i).front());
    }
    const auto brute = oracle::set_partitions(n);
    CHECK(as_sets == std::set<oracle::SetPartition>(brute.begin(), brute.end()));
    for (int k = 1; k <= n; ++k)
      CHECK(static_cast<std::int64_t>(enumerate_partitions(n, k).size()) == oracle::stirling2(n, k));
  }
}

TEST_CASE("partition validation") {
  CHECK_THROWS(UnorderedPartition(3, {{0, 1}}));
  CHECK_THROWS(UnorderedPartition(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS(UnorderedPartition(2, {{0, 1}, {}}));
  const UnorderedPartition p(3, {{2}, {1, 0}});
  CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("enumerate_compositions") {
  const auto c = enumerate_compositions(4, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0].parts == std::vector<int>{1, 3});
  CHECK(c[1].parts == std::vector<int>{2, 2});
  CHECK(c[2].parts == std::vector<int>{3, 1});
  CHECK(enumerate_compositions(5, 1).front().parts == std::vector<int>{5});
  CHECK(enumerate_compositions(3, 3).front().parts == std::vector<int>{1, 1, 1});
  CHECK(enumerate_compositions(2, 3).empty());
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto ours = enumerate_compositions(n, k);
      const auto brute = oracle::compositions(n, k);
      REQUIRE(ours.size() == brute.size());
      for (std::size_t i = 0; i < ours.size(); ++i) CHECK(ours[i].parts == brute[i]);
    }
}

TEST_CASE("induced_block_data examples") {
  {
    const auto d = induced_block_data(perm1({2, 3, 1}), UnorderedPartition(3, {{0, 1}, {2}}));
    CHECK(d.image == UnorderedPartition(3, {{0}, {1, 2}}));
    CHECK(d.tau == perm1({2, 1}));
    CHECK(d.rho[0] == Permutation::identity(2));
    CHECK(d.rho[1] == Permutation::identity(1));
  }
  {
    const UnorderedPartition p(3, {{0, 2}, {1}});
    const auto d = induced_block_data(Permutation::identity(3), p);
    CHECK(d.image == p);
    CHECK(d.tau.is_identity());
    for (const auto& r : d.rho) CHECK(r.is_identity());
  }
  {
    const auto d = induced_block_data(perm1({2, 1}), UnorderedPartition(2, {{0, 1}}));
    CHECK(d.image == UnorderedPartition(2, {{0, 1}}));
    CHECK(d.tau == Permutation::identity(1));
    CHECK(d.rho[0] == perm1({2, 1}));
  }
  CHECK_THROWS_AS(induced_block_data(Permutation::identity(2), UnorderedPartition(3, {{0, 1, 2}})), SizeMismatch);
}

TEST_CASE("induced_block_data is a group action for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& p : enumerate_partitions(n))
      for (const auto& s : perms) {
        const auto ds = induced_block_data(s, p);
        for (const auto& r : perms) {
          const auto dr = induced_block_data(r, ds.image);
          const auto drs = induced_block_data(r * s, p);
          REQUIRE(drs.image == dr.image);
          REQUIRE(drs.tau == dr.tau * ds.tau);
          for (int i = 0; i < p.num_blocks(); ++i)
            REQUIRE(drs.rho[static_cast<std::size_t>(i)] ==
                    dr.rho[static_cast<std::size_t>(ds.tau(i))] * ds.rho[static_cast<std::size_t>(i)]);
        }
      }
  }
}
